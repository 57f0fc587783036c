"""merodec command line.

Exit status: 0 success, 1 invalid code, 2 parse error, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .decoder import (
    analyze,
    conjecture_probe,
    css_split,
    dual_decoder_identity,
    mero_decoder,
    mero_decoder_multi,
    report_to_json,
)
from .exactnum import BOT, INF, format_scalar, parse_scalar
from .merofn import deriv, format_mero, mero_to_json
from .poly import format_poly
from .projective import format_mobius, octahedral_E7, same_orbit
from .stabcode import (
    InvalidCode,
    concat,
    dual_code,
    enumerate_group,
    format_code,
    format_enumerator,
    parse_code,
    weight_enumerator,
)
from .textparse import ParseError, parse_mero
from . import zxw

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, msg, status):
        super().__init__(msg)
        self.status = status


def default_threads() -> int:
    env = os.environ.get("MERODEC_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise CliError(f"MERODEC_THREADS must be an integer, got {env!r}", EXIT_PARSE) from None
        if n < 1:
            raise CliError("MERODEC_THREADS must be positive", EXIT_PARSE)
        return n
    return os.cpu_count() or 1


def load_code(path, validate=True):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_PARSE) from None
    try:
        code = parse_code(text)
    except InvalidCode:
        raise
    except ValueError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None
    return code.validate() if validate else code


def _parse_f(text):
    try:
        return parse_mero(text)
    except ValueError as exc:
        raise CliError(f"bad function {text!r}: {exc}", EXIT_PARSE) from None


def _emit(args, text, data):
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _multi_json(f):
    def terms(p):
        return [{"exp": list(e), "coeff": format_scalar(c)} for e, c in sorted(p.terms.items())]
    return {"num": terms(f.num), "den": terms(f.den)}


def cmd_decode(args):
    code = load_code(args.code)
    f = mero_decoder(code)
    lines = [f"f(z) = {format_mero(f)}"]
    data = {"n": code.n, "f": mero_to_json(f)}
    if args.multi:
        fm = mero_decoder_multi(code)
        names = ", ".join(f"z{j + 1}" for j in range(code.n))
        lines.append(f"f({names}) = {fm}")
        data["multi"] = _multi_json(fm)
    _emit(args, "\n".join(lines), data)


def _site_text(s):
    where = format_poly(s.where) if s.is_factor else format_scalar(s.where)
    out = f"  {where:<34} {s.kind:<10} order {s.order}"
    if s.witness is not None:
        out += f"  witness {format_mobius(s.witness)}"
    return out


def report_text(rep, probe=None, distance=None) -> str:
    lines = [
        f"f(z)  = {format_mero(rep.f)}",
        f"f'(z) = {format_mero(deriv(rep.f))}",
        f"r(z)  = {format_poly(rep.r)}",
        f"W(z)  = {format_poly(rep.wronskian)}",
        f"Riemann-Hurwitz: branching {rep.rh.lhs}, 2(deg - 1) = {rep.rh.rhs}, "
        + ("ok" if rep.rh.ok else "FAILED"),
        "fixed points:",
    ]
    lines += [_site_text(s) for s in rep.fixed_rational + rep.fixed_algebraic] or ["  none"]
    lines.append("coherently distilled (f(z) = z, f'(z) = 0):")
    lines += [_site_text(s) for s in rep.coherent] or ["  none"]
    lines.append("distilled up to a Clifford:")
    lines += [_site_text(s) for s in rep.clifford_distilled] or ["  none"]
    lines.append("branch divisor:")
    for g, e in rep.branch.finite:
        lines.append(f"  roots of {format_poly(g)}: {e}")
    if rep.branch.infinity_order:
        lines.append(f"  inf: {rep.branch.infinity_order}")
    if probe is not None:
        lines.append(f"stabilizer-state probe (d = {distance}):")
        for z0, (order, ok) in probe.items():
            lines.append(f"  {format_scalar(z0):<4} order {order}  {'pass' if ok else 'fail'}")
    return "\n".join(lines)


def _probe_or_none(code):
    try:
        return conjecture_probe(code)
    except ValueError:
        return None


def cmd_analyze(args):
    if args.function is not None:
        rep = analyze(_parse_f(args.function))
        probe, distance = None, None
    elif args.code is not None:
        code = load_code(args.code)
        rep = analyze(code)
        probe, distance = _probe_or_none(code), code.distance
    else:
        raise CliError("analyze needs a code file or --function", EXIT_PARSE)
    data = report_to_json(rep)
    if probe is not None:
        data["probe"] = {format_scalar(z): {"order": o, "pass": ok} for z, (o, ok) in probe.items()}
    _emit(args, report_text(rep, probe, distance), data)


def _write_or_print(args, text):
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise CliError(f"cannot write {args.out}: {exc.strerror}", EXIT_INTERNAL) from None
    else:
        sys.stdout.write(text)


def cmd_dual(args):
    code = load_code(args.code)
    holds = dual_decoder_identity(code)
    text = format_code(dual_code(code), "dual code: every qubit conjugated by H")
    if args.json:
        _emit(args, "", {"code": text, "identity_holds": holds})
    else:
        _write_or_print(args, text)


def cmd_concat(args):
    outer, inner = load_code(args.outer), load_code(args.inner)
    code = concat(outer, inner).validate()
    text = format_code(code, f"concatenation: outer {os.path.basename(args.outer)}, "
                             f"inner {os.path.basename(args.inner)}")
    if args.json:
        _emit(args, "", {"code": text, "f": mero_to_json(mero_decoder(code))})
    else:
        _write_or_print(args, text)


def cmd_wenum(args):
    code = load_code(args.code)
    if args.xtype:
        split = css_split(code)
        if split is None:
            raise CliError("--xtype needs a CSS code", EXIT_INVALID)
        ops = enumerate_group(split[0], code.n)
    else:
        ops = code.group()
    we = weight_enumerator(ops, code.n)
    _emit(args, format_enumerator(we), {"n": code.n, "counts": list(we.counts)})


def _scalar(text):
    try:
        return parse_scalar(text)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None


def cmd_orbit(args):
    w, z = _scalar(args.w), _scalar(args.z)
    if w is BOT or z is BOT:
        raise CliError("bot is not a point of the sphere", EXIT_PARSE)
    e7 = octahedral_E7()
    ew, ez = e7(w), e7(z)
    same = same_orbit(w, z)
    if same:
        text = f"same orbit: true (E7 = {format_scalar(ew)})"
    else:
        text = f"same orbit: false (E7 = {format_scalar(ew)} vs {format_scalar(ez)})"
    _emit(args, text, {"same_orbit": same, "e7": [format_scalar(ew), format_scalar(ez)]})


def _binding(text):
    name, sep, val = text.partition("=")
    if not sep or not name.strip():
        raise CliError(f"bad binding {text!r}, expected name=value", EXIT_PARSE)
    return name.strip(), _scalar(val)


def cmd_zxw(args):
    try:
        expr = zxw.parse(args.expr)
    except ParseError as exc:
        raise CliError(f"bad expression: {exc}", EXIT_PARSE) from None
    data = {"expr": zxw.format_expr(expr)}
    lines = []
    if args.symbolic:
        f = zxw.eval_symbolic(expr)
        names = zxw.variables(expr)
        lines.append(f"symbolic: {f}")
        if names != [f"z{j + 1}" for j in range(len(names))]:
            lines.append("variables: " + ", ".join(f"{v} -> z{j + 1}" for j, v in enumerate(names)))
        data["symbolic"] = _multi_json(f)
        data["variables"] = names
    if args.at or not args.symbolic:
        env = dict(_binding(b) for b in args.at)
        try:
            val = zxw.eval_pointwise(expr, env)
        except KeyError as exc:
            raise CliError(str(exc.args[0]), EXIT_PARSE) from None
        lines.append(f"value: {format_scalar(val)}")
        data["value"] = format_scalar(val)
    _emit(args, "\n".join(lines), data)


def cmd_render(args):
    from .render import MAX_SIZE, render

    if not 1 <= args.size <= MAX_SIZE:
        raise CliError(f"--size must be between 1 and {MAX_SIZE}", EXIT_PARSE)
    target = "e7" if args.target.strip().lower() == "e7" else _parse_f(args.target)
    data = render(target, args.size, args.through_e7, args.threads)
    try:
        with open(args.out, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc.strerror}", EXIT_INTERNAL) from None
    _emit(args, f"wrote {args.out} ({args.size}x{args.size})",
          {"out": args.out, "size": args.size})


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker threads (env MERODEC_THREADS)")

    p = argparse.ArgumentParser(prog="merodec", parents=[common],
                                description="Meromorphic decoders of stabilizer codes.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("decode", parents=[common], help="decoder of a code")
    s.add_argument("code")
    s.add_argument("--multi", action="store_true", help="also print the multivariate decoder")
    s.set_defaults(func=cmd_decode)

    s = sub.add_parser("analyze", parents=[common], help="distillation report")
    s.add_argument("code", nargs="?")
    s.add_argument("--function", "-f", help="analyze a rational function instead of a code")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("dual", parents=[common], help="H-conjugate code file")
    s.add_argument("code")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("concat", parents=[common], help="concatenated code file")
    s.add_argument("outer")
    s.add_argument("inner")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_concat)

    s = sub.add_parser("wenum", parents=[common], help="weight enumerator")
    s.add_argument("code")
    s.add_argument("--xtype", action="store_true", help="X-type stabilizers only")
    s.set_defaults(func=cmd_wenum)

    s = sub.add_parser("orbit", parents=[common], help="octahedral orbit test")
    s.add_argument("w")
    s.add_argument("z")
    s.set_defaults(func=cmd_orbit)

    s = sub.add_parser("zxw", parents=[common], help="spider expressions")
    zsub = s.add_subparsers(dest="zxw_command", required=True)
    e = zsub.add_parser("eval", parents=[common])
    e.add_argument("expr")
    e.add_argument("--at", action="append", default=[], metavar="NAME=VALUE")
    e.add_argument("--symbolic", action="store_true")
    e.set_defaults(func=cmd_zxw)

    s = sub.add_parser("render", parents=[common], help="sphere coloring as PPM")
    s.add_argument("target", help="'e7' or a rational function of z")
    s.add_argument("--out", default="render.ppm")
    s.add_argument("--size", type=int, default=512)
    s.add_argument("--through-e7", action="store_true", help="color by E7(f(z))")
    s.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    args.json = getattr(args, "json", False)
    try:
        if getattr(args, "threads", None) is None:
            args.threads = default_threads()
        elif args.threads < 1:
            raise CliError("--threads must be positive", EXIT_PARSE)
        args.func(args)
    except CliError as exc:
        print(f"merodec: {exc}", file=sys.stderr)
        return exc.status
    except InvalidCode as exc:
        print(f"merodec: invalid code: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as exc:  # noqa: BLE001
        print(f"merodec: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
