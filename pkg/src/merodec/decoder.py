"""Meromorphic decoders of stabilizer codes and their distillation analysis.

The decoder of a k = 1 code sends n copies of [z : 1] to
[<0_L|v> : <1_L|v>].  We never build an encoder or a 2^n projector.  With
G0 = <S, L_Z> and any basis state a,

    <a|0_L><0_L|v> ~ sum_{g in G0} <a|g|v>,
    <a|0_L><1_L|v> ~ sum_{g in G0} <a|g L_X|v>,

and <a|g|v> for g = i^lam X^x Z^u is a single signed monomial: qubit j
contributes z when a_j == x_j, else (-1)^u_j.  The unknown scalar
<a|0_L> cancels projectively, so any a with a nonzero pair will do.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .exactnum import BOT, INF, ZERO, GaussianRational, ext, format_scalar, gq, parse_scalar
from .merofn import (
    BranchDivisor,
    MeroFn,
    MultiMeroFn,
    RHAudit,
    branch_divisor,
    compose,
    evaluate,
    mero_from_json,
    mero_to_json,
    poly_from_json,
    poly_to_json,
    r_polynomial,
    ramification_index,
    rh_audit,
    wronskian,
)
from .poly import MultiPoly, UniPoly, rational_roots, squarefree_decomposition, uni_gcd
from .projective import (
    CATALOG,
    F_POLY,
    H_GATE,
    Mobius,
    classify_state,
    clifford_group,
    format_mobius,
    parse_mobius,
)
from .stabcode import (
    InvalidCode,
    PauliOp,
    StabCode,
    css_split,
    dual_code,
    enumerate_group,
    pauli_mul,
    weight_enumerator,
)

_PHASES = ((1, 0), (0, 1), (-1, 0), (0, -1))


def _popcount(v: int) -> int:
    return bin(v).count("1")


def _lex_states(n: int):
    """Basis states a as bitmasks (bit j = qubit j) in lexicographic order
    of the string a_0 a_1 ... a_(n-1)."""
    for t in range(1 << n):
        yield sum(((t >> (n - 1 - j)) & 1) << j for j in range(n))


def _groups(code: StabCode):
    code.validate()
    g0 = enumerate_group(list(code.generators) + [code.logical_z], code.n)
    g1 = [pauli_mul(g, code.logical_x) for g in g0]
    return g0, g1


def _uni_sum(ops, a: int, n: int) -> UniPoly:
    counts = [[0, 0, 0, 0] for _ in range(n + 1)]
    for g in ops:
        d = a ^ g.x
        counts[n - _popcount(d)][(g.lam + 2 * _popcount(g.u & d)) % 4] += 1
    return UniPoly(
        [GaussianRational(c[0] - c[2], c[1] - c[3]) for c in counts]
    )


def _multi_sum(ops, a: int, n: int) -> MultiPoly:
    full = (1 << n) - 1
    acc = {}
    for g in ops:
        d = a ^ g.x
        mask = ~d & full
        c = acc.setdefault(mask, [0, 0, 0, 0])
        c[(g.lam + 2 * _popcount(g.u & d)) % 4] += 1
    terms = {}
    for mask, c in acc.items():
        e = tuple((mask >> j) & 1 for j in range(n))
        terms[e] = GaussianRational(c[0] - c[2], c[1] - c[3])
    return MultiPoly(terms, n)


def _state_mask(code: StabCode, basis_state) -> int:
    if isinstance(basis_state, int):
        return basis_state
    bits = [int(ch) for ch in str(basis_state)] if isinstance(basis_state, str) else list(basis_state)
    if len(bits) != code.n:
        raise ValueError(f"basis state has {len(bits)} bits, code has {code.n} qubits")
    return sum(b << j for j, b in enumerate(bits))


def decoder_components(code: StabCode, basis_state=None):
    """(a, p_a, q_a): the unreduced decoder components for basis state a.

    Without ``basis_state`` the lexicographically first admissible a is used.
    """
    g0, g1 = _groups(code)
    n = code.n
    states = [_state_mask(code, basis_state)] if basis_state is not None else _lex_states(n)
    for a in states:
        p, q = _uni_sum(g0, a, n), _uni_sum(g1, a, n)
        if p or q:
            return a, p, q
    if basis_state is not None:
        raise ValueError("basis state is orthogonal to the code space")
    raise InvalidCode("every basis state gives a zero decoder")


def mero_decoder(code: StabCode, basis_state=None) -> MeroFn:
    _, p, q = decoder_components(code, basis_state)
    return MeroFn(p, q)


def mero_decoder_multi(code: StabCode, basis_state=None) -> MultiMeroFn:
    if code.n > 15:
        raise ValueError("multivariate decoders are limited to 15 qubits")
    g0, g1 = _groups(code)
    n = code.n
    states = [_state_mask(code, basis_state)] if basis_state is not None else _lex_states(n)
    for a in states:
        p, q = _multi_sum(g0, a, n), _multi_sum(g1, a, n)
        if p or q:
            return MultiMeroFn(p, q)
    raise InvalidCode("every basis state gives a zero decoder")


def _is_all(g: PauliOp, letter: str) -> bool:
    full = (1 << g.n) - 1
    if letter == "X":
        return g.lam == 0 and g.x == full and g.u == 0
    return g.lam == 0 and g.x == 0 and g.u == full


def x_stabilizer_enumerator(code: StabCode):
    split = css_split(code)
    if split is None:
        raise ValueError("code is not CSS")
    sx, _ = split
    return weight_enumerator(enumerate_group(sx, code.n), code.n)


def css_components(code: StabCode):
    """(W_<S_X>(z, 1), W_{L_X <S_X>}(z, 1)) as polynomials in z."""
    split = css_split(code)
    if split is None:
        raise ValueError("code is not CSS")
    sx, _ = split
    grp = enumerate_group(sx, code.n)
    n = code.n
    w1 = weight_enumerator(grp, n)
    w2 = weight_enumerator([pauli_mul(code.logical_x, g) for g in grp], n)
    p = UniPoly([w1.coeff(n - k) for k in range(n + 1)])
    q = UniPoly([w2.coeff(n - k) for k in range(n + 1)])
    return p, q


def css_decoder(code: StabCode, cross_check: bool = False) -> MeroFn:
    """W_<S_X>(z, 1) / W_<S_X>(1, z) for CSS codes with X^n / Z^n logicals.

    With ``cross_check`` the result is compared against the general
    decoder and a divergence raises ArithmeticError.
    """
    code.validate()
    if not (_is_all(code.logical_x, "X") and _is_all(code.logical_z, "Z")):
        raise ValueError("weight-enumerator decoder needs logicals X^n and Z^n")
    we = x_stabilizer_enumerator(code)
    n = code.n
    p = UniPoly([we.coeff(n - k) for k in range(n + 1)])
    q = UniPoly([we.coeff(k) for k in range(n + 1)])
    f = MeroFn(p, q)
    if cross_check:
        g = mero_decoder(code)
        if f != g:
            raise ArithmeticError(f"enumerator decoder {f} differs from general decoder {g}")
    return f


def dual_decoder_identity(code: StabCode) -> bool:
    """f = H o f_dual o H, with H(z) = (z + 1)/(z - 1)."""
    f = mero_decoder(code)
    ft = mero_decoder(dual_code(code))
    h = H_GATE.to_mero()
    return compose(h, compose(ft, h)) == f


# -- distillation analysis ---------------------------------------------------


@dataclass(frozen=True)
class Site:
    """A point (GaussianRational or INF) or a square-free factor, with its
    catalog class, suppression order m_z(f) and an optional Clifford witness.
    For factors the order is the minimum over the roots."""

    where: object
    kind: str
    order: int
    witness: Mobius | None = None

    @property
    def is_factor(self) -> bool:
        return isinstance(self.where, UniPoly)


@dataclass(frozen=True)
class DistillReport:
    f: MeroFn
    r: UniPoly
    wronskian: UniPoly
    rh: RHAudit
    fixed_rational: tuple
    fixed_algebraic: tuple
    coherent: tuple
    clifford_distilled: tuple
    branch: BranchDivisor

    def fixed_points(self):
        return [s.where for s in self.fixed_rational]


_ORDERED_CATALOG = [p for name in ("stabilizer", "H", "F") for p in CATALOG[name]]


def _split_by_catalog(mu: UniPoly):
    """Square-free mu split into gcds with the individual catalog
    polynomials, then the square-free leftovers."""
    out = []
    rest = mu
    for p in _ORDERED_CATALOG:
        g = uni_gcd(rest, p.with_var(mu.var))
        if not g.is_const():
            out.append(g)
            rest = rest.exact_div(g)
    if not rest.is_const():
        out.append(rest.monic())
    return out


def _fixed_sites(f: MeroFn, r: UniPoly):
    rational, algebraic = [], []
    if r.is_zero():
        return rational, algebraic
    rest = r
    for z0, mult in rational_roots(r, with_multiplicity=True):
        rational.append(Site(z0, classify_state(z0), ramification_index(f, z0)))
        rest = rest.exact_div(UniPoly([-z0, 1], r.var) ** mult)
    if evaluate(f, INF) is INF:
        rational.append(Site(INF, "stabilizer", ramification_index(f, INF)))
    if not rest.is_const():
        sqf = UniPoly([1], r.var)
        for g, _ in squarefree_decomposition(rest):
            sqf = sqf * g
        for part in _split_by_catalog(sqf):
            algebraic.append(Site(part, classify_state(part), ramification_index(f, part)))
    return rational, algebraic


def _coherent_sites(f: MeroFn, w: UniPoly, rational, algebraic):
    out = [s for s in rational if s.order >= 2]
    for s in algebraic:
        g = uni_gcd(s.where, w)
        if not g.is_const():
            out.append(Site(g, classify_state(g), ramification_index(f, g)))
    return out


def _e7_cross_mod(f: MeroFn, mu: UniPoly) -> UniPoly:
    """Numerator of E7(f(z)) - E7(z) reduced modulo mu."""
    def m(a):
        return a % mu

    p, q = m(f.num), m(f.den)
    z = UniPoly([0, 1], mu.var)
    p4, q4, z4 = m(p ** 4), m(q ** 4), m(z ** 4)
    num_f = m(m(m(p4 * q4) * m((p4 - q4) ** 4)).scale(108))
    den_f = m(m(p4 * p4 + (p4 * q4).scale(14) + q4 * q4) ** 3)
    num_z = m(m(z4 * m((z4 - 1) ** 4)).scale(108))
    den_z = m(m(z4 * z4 + z4.scale(14) + 1) ** 3)
    return m(num_f * den_z - num_z * den_f)


def _clifford_sites(f: MeroFn):
    out = []
    var = f.var
    group = clifford_group()
    for cat in _ORDERED_CATALOG:
        cat = cat.with_var(var)
        diff = _e7_cross_mod(f, cat)
        mu = cat if diff.is_zero() else uni_gcd(cat, diff)
        if mu.is_const():
            continue
        rest = mu
        for g in group:
            gnum = UniPoly([g.b, g.a], var)
            gden = UniPoly([g.d, g.c], var)
            cond = (f.num * gden - f.den * gnum) % rest
            h = rest if cond.is_zero() else uni_gcd(rest, cond)
            if h.is_const():
                continue
            out.append(Site(h, classify_state(h), ramification_index(f, h), g))
            rest = rest.exact_div(h)
            if rest.is_const():
                break
        if not rest.is_const():
            raise ArithmeticError(f"E7 matches on {rest} but no Clifford witness found")
    f_inf = evaluate(f, INF)
    for g in group:
        if g(INF) == f_inf:
            out.append(Site(INF, "stabilizer", ramification_index(f, INF), g))
            break
    return out


def analyze(target) -> DistillReport:
    """Full distillation report for a code or a rational function."""
    f = mero_decoder(target) if isinstance(target, StabCode) else target
    if f.is_const():
        raise ValueError("cannot analyze a constant function")
    r = r_polynomial(f)
    w = wronskian(f)
    rational, algebraic = _fixed_sites(f, r)
    coherent = _coherent_sites(f, w, rational, algebraic)
    return DistillReport(
        f=f,
        r=r,
        wronskian=w,
        rh=rh_audit(f),
        fixed_rational=tuple(rational),
        fixed_algebraic=tuple(algebraic),
        coherent=tuple(coherent),
        clifford_distilled=tuple(_clifford_sites(f)),
        branch=branch_divisor(f),
    )


STABILIZER_POINTS = (ZERO, GaussianRational(1), GaussianRational(-1), INF)
_STAB_VALUES = {ZERO, GaussianRational(1), GaussianRational(-1),
                GaussianRational(0, 1), GaussianRational(0, -1)}


def conjecture_probe(code: StabCode):
    """{z0: (order, pass)} at z0 in {0, 1, -1, inf} against the declared distance."""
    if code.distance is None:
        raise ValueError("conjecture probe needs a declared distance")
    if css_split(code.validate()) is None:
        raise ValueError("conjecture probe needs a CSS code")
    if not (_is_all(code.logical_x, "X") and _is_all(code.logical_z, "Z")):
        raise ValueError("conjecture probe needs logicals X^n and Z^n")
    f = mero_decoder(code)
    out = {}
    for z0 in STABILIZER_POINTS:
        order = ramification_index(f, z0)
        val = evaluate(f, z0)
        fixed = val is INF or val in _STAB_VALUES
        out[z0] = (order, order >= code.distance and fixed)
    return out


# -- JSON --------------------------------------------------------------------


def _where_to_json(where):
    if isinstance(where, UniPoly):
        return {"factor": poly_to_json(where)}
    return {"point": format_scalar(where)}


def _where_from_json(d, var="z"):
    if "factor" in d:
        return poly_from_json(d["factor"], var)
    return parse_scalar(d["point"])


def _site_to_json(s: Site):
    out = _where_to_json(s.where)
    out["class"] = s.kind
    out["order"] = s.order
    if s.witness is not None:
        out["witness"] = format_mobius(s.witness)
    return out


def _site_from_json(d, var="z") -> Site:
    wit = parse_mobius(d["witness"]) if "witness" in d else None
    return Site(_where_from_json(d, var), d["class"], int(d["order"]), wit)


def report_to_json(rep: DistillReport) -> dict:
    return {
        "f": mero_to_json(rep.f),
        "r": poly_to_json(rep.r),
        "wronskian": poly_to_json(rep.wronskian),
        "rh": {"lhs": rep.rh.lhs, "rhs": rep.rh.rhs, "ok": rep.rh.ok},
        "fixed": [_site_to_json(s) for s in rep.fixed_rational + rep.fixed_algebraic],
        "coherent": [_site_to_json(s) for s in rep.coherent],
        "clifford_distilled": [_site_to_json(s) for s in rep.clifford_distilled],
        "branch": {
            "finite": [{"factor": poly_to_json(g), "order": e} for g, e in rep.branch.finite],
            "infinity_order": rep.branch.infinity_order,
        },
    }


def report_from_json(d: dict, var="z") -> DistillReport:
    fixed = [_site_from_json(s, var) for s in d["fixed"]]
    return DistillReport(
        f=mero_from_json(d["f"], var),
        r=poly_from_json(d["r"], var),
        wronskian=poly_from_json(d["wronskian"], var),
        rh=RHAudit(int(d["rh"]["lhs"]), int(d["rh"]["rhs"])),
        fixed_rational=tuple(s for s in fixed if not s.is_factor),
        fixed_algebraic=tuple(s for s in fixed if s.is_factor),
        coherent=tuple(_site_from_json(s, var) for s in d["coherent"]),
        clifford_distilled=tuple(_site_from_json(s, var) for s in d["clifford_distilled"]),
        branch=BranchDivisor(
            tuple((poly_from_json(b["factor"], var), int(b["order"])) for b in d["branch"]["finite"]),
            int(d["branch"]["infinity_order"]),
        ),
    )
