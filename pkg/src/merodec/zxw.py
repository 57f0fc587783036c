"""Projective semantics of Z, X and W spiders.

A 2 -> 1 spider acts on pairs of points of the sphere through the Segre
embedding.  With |+Z>, |-Z> = (1, 0), (0, 1) and unnormalized
|+X>, |-X> = (1, 1), (1, -1) the three binary spiders give

    Z:  (w, z) -> w z                 unit 1
    X:  (w, z) -> (w z + 1)/(w + z)   unit inf
    W:  (w, z) -> w + z               unit 0

each undefined (bot) where the image vector vanishes.  Expressions such as
``r(z1, g(z2, 2), mobius([[1,0],[0,i]], z3))`` build trees of these.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product as cartesian

from .exactnum import BOT, INF, ONE, ZERO, GaussianRational, ext, ext_add, ext_mul, format_scalar, gq, parse_scalar
from .merofn import MultiMeroFn
from .poly import MultiPoly
from .projective import Matrix, Mobius, format_mobius, mobius_apply
from .textparse import ParseError

MAX_LEGS = 12
MAX_SYMBOLIC_VARS = 8


# -- spider matrices ---------------------------------------------------------


def _basis_kets(color):
    if color == "Z":
        return (ONE, ZERO), (ZERO, ONE)
    if color == "X":
        return (ONE, ONE), (ONE, -ONE)
    raise ValueError(f"unknown spider color {color!r}")


def _tensor_power(v, k):
    out = (ONE,)
    for _ in range(k):
        out = tuple(a * b for a in out for b in v)
    return out


_W_SHAPES = {
    (1, 2): [[0, 1, 1, 0], [0, 0, 0, 1]],
    (1, 0): [[0], [1]],
}


def spider_matrix(color: str, m: int, n: int, phase=1) -> Matrix:
    """The 2^m x 2^n matrix of a spider with m outputs and n inputs.

    Legs are ordered with the first leg most significant.  W spiders exist
    only in the shapes (1, 2) and (1, 0).
    """
    color = color.upper()
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError("a spider needs at least one leg")
    if m + n > MAX_LEGS:
        raise ValueError(f"{m + n} legs exceeds the limit of {MAX_LEGS}")
    if color == "W":
        if (m, n) not in _W_SHAPES:
            raise ValueError(f"no W spider with {m} outputs and {n} inputs")
        return Matrix(_W_SHAPES[(m, n)])
    phase = gq(phase)
    if not phase:
        raise ValueError("spider phase must be nonzero")
    plus, minus = _basis_kets(color)
    kp, km = _tensor_power(plus, m), _tensor_power(minus, m)
    bp, bm = _tensor_power(plus, n), _tensor_power(minus, n)
    return Matrix([[kp[r] * bp[c] + phase * km[r] * bm[c] for c in range(len(bp))]
                   for r in range(len(kp))])


def phase_mobius(color: str, phase) -> Mobius:
    """Action on the sphere of the one-in one-out spider with a phase."""
    return Mobius.from_matrix(spider_matrix(color, 1, 1, phase))


# -- pointed monoids ---------------------------------------------------------


def gmul(w, z):
    return ext_mul(w, z)


def wadd(w, z):
    return ext_add(w, z)


def rmid(w, z):
    w, z = ext(w), ext(z)
    if w is BOT or z is BOT:
        return BOT
    if w is INF:
        return z
    if z is INF:
        return w
    num, den = w * z + 1, w + z
    if not den:
        return BOT if not num else INF
    return num / den


OPS = {"g": gmul, "r": rmid, "w": wadd}
UNITS = {"g": ONE, "r": INF, "w": ZERO}
COLOR_OP = {"Z": "g", "X": "r", "W": "w"}


# -- expression trees --------------------------------------------------------


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: object


@dataclass(frozen=True)
class Spider:
    """n-ary spider node; op is 'g', 'r' or 'w'."""
    op: str
    children: tuple


@dataclass(frozen=True)
class MobiusNode:
    m: Mobius
    child: object


def GMul(*children):
    return Spider("g", tuple(children))


def RMid(*children):
    return Spider("r", tuple(children))


def WAdd(*children):
    return Spider("w", tuple(children))


def variables(e) -> list:
    """Variable names in order of first appearance."""
    out = []

    def walk(x):
        if isinstance(x, Var):
            if x.name not in out:
                out.append(x.name)
        elif isinstance(x, Spider):
            for c in x.children:
                walk(c)
        elif isinstance(x, MobiusNode):
            walk(x.child)

    walk(e)
    return out


def format_expr(e) -> str:
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Const):
        return format_scalar(e.value)
    if isinstance(e, Spider):
        return f"{e.op}({', '.join(format_expr(c) for c in e.children)})"
    if isinstance(e, MobiusNode):
        return f"mobius({format_mobius(e.m)}, {format_expr(e.child)})"
    raise TypeError(f"not an expression: {e!r}")


# -- parser ------------------------------------------------------------------

_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_LITERAL = re.compile(r"[0-9./+\-*i\s]+")
_LITERAL_WORDS = {"inf", "bot", "i"}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def literal(self):
        self.skip()
        start = self.pos
        m = _LITERAL.match(self.text, self.pos)
        if not m:
            raise ParseError("expected a number", start)
        chunk = m.group(0).rstrip()
        self.pos = start + len(chunk)
        try:
            return parse_scalar(chunk)
        except ValueError:
            raise ParseError(f"bad number {chunk!r}", start) from None

    def expr(self):
        self.skip()
        start = self.pos
        m = _IDENT.match(self.text, self.pos)
        if m:
            name = m.group(0)
            if name in ("inf", "bot"):
                self.pos = m.end()
                return Const(INF if name == "inf" else BOT)
            if name == "i":
                return Const(self.literal())
            self.pos = m.end()
            if self.peek() != "(":
                return Var(name)
            if name == "mobius":
                return self.mobius(start)
            if name not in OPS:
                raise ParseError(f"unknown function {name!r}", start)
            self.expect("(")
            children = []
            if self.peek() != ")":
                children.append(self.expr())
                while self.peek() == ",":
                    self.pos += 1
                    children.append(self.expr())
            self.expect(")")
            return Spider(name, tuple(children))
        if not self.peek():
            raise ParseError("unexpected end of input", self.pos)
        return Const(self.literal())

    def mobius(self, start):
        self.expect("(")
        rows = []
        self.expect("[")
        for r in range(2):
            if r:
                self.expect(",")
            self.expect("[")
            a = self.literal()
            self.expect(",")
            b = self.literal()
            self.expect("]")
            rows.append((a, b))
        self.expect("]")
        self.expect(",")
        child = self.expr()
        self.expect(")")
        vals = [v for row in rows for v in row]
        if any(v is INF or v is BOT for v in vals):
            raise ParseError("Mobius entries must be finite", start)
        try:
            m = Mobius(*vals)
        except ValueError as exc:
            raise ParseError(str(exc), start) from None
        return MobiusNode(m, child)


def parse(text: str):
    p = _Parser(text)
    e = p.expr()
    p.skip()
    if p.pos != len(text):
        raise ParseError(f"unexpected {text[p.pos]!r}", p.pos)
    return e


# -- evaluation --------------------------------------------------------------


def eval_pointwise(e, env: dict):
    if isinstance(e, Var):
        if e.name not in env:
            raise KeyError(f"unbound variable {e.name!r}")
        return ext(env[e.name])
    if isinstance(e, Const):
        return e.value
    if isinstance(e, Spider):
        acc = None
        op = OPS[e.op]
        for c in e.children:
            v = eval_pointwise(c, env)
            acc = v if acc is None else op(acc, v)
        return UNITS[e.op] if acc is None else acc
    if isinstance(e, MobiusNode):
        return mobius_apply(e.m, eval_pointwise(e.child, env))
    raise TypeError(f"not an expression: {e!r}")


def _sym_op(op, a, b):
    (p1, q1), (p2, q2) = a, b
    if op == "g":
        return p1 * p2, q1 * q2
    if op == "r":
        return p1 * p2 + q1 * q2, p1 * q2 + q1 * p2
    return p1 * q2 + p2 * q1, q1 * q2


def _tidy(pair):
    p, q = pair
    if p.is_zero() and q.is_zero():
        raise ValueError("expression is undefined everywhere")
    f = MultiMeroFn(p, q)
    return f.num, f.den


def eval_symbolic(e, names=None) -> MultiMeroFn:
    """The expression as a rational function of its variables, ordered as
    ``names`` (default: first appearance).

    The result does not record where the pointwise value is bot.
    """
    names = list(names) if names is not None else variables(e)
    k = len(names)
    if k > MAX_SYMBOLIC_VARS:
        raise ValueError(f"{k} variables exceeds the symbolic limit of {MAX_SYMBOLIC_VARS}")
    arity = max(k, 1)
    one = MultiPoly.const(1, arity)
    zero = MultiPoly.const(0, arity)

    def const(v):
        if v is BOT:
            raise ValueError("bot has no symbolic form")
        if v is INF:
            return one, zero
        return MultiPoly.const(v, arity), one

    def walk(x):
        if isinstance(x, Var):
            if x.name not in names:
                raise KeyError(f"variable {x.name!r} not in {names}")
            return MultiPoly.variable(names.index(x.name), arity), one
        if isinstance(x, Const):
            return const(x.value)
        if isinstance(x, Spider):
            acc = None
            for c in x.children:
                v = walk(c)
                acc = v if acc is None else _tidy(_sym_op(x.op, acc, v))
            return const(UNITS[x.op]) if acc is None else acc
        if isinstance(x, MobiusNode):
            p, q = walk(x.child)
            m = x.m
            return _tidy((p.scale(m.a) + q.scale(m.b), p.scale(m.c) + q.scale(m.d)))
        raise TypeError(f"not an expression: {x!r}")

    p, q = walk(e)
    return MultiMeroFn(p, q)


# -- monoid laws -------------------------------------------------------------

SPIDER_GRID = (
    ZERO, ONE, -ONE, GaussianRational(0, 1), GaussianRational(0, -1),
    GaussianRational(2), GaussianRational(-1, 2), INF, BOT,
)


@dataclass(frozen=True)
class MonoidCheck:
    ok: bool
    counterexample: tuple | None = None

    def __bool__(self):
        return self.ok


def verify_spider_monoid(color: str, samples=SPIDER_GRID) -> MonoidCheck:
    """Associativity and two-sided unit laws on every triple of samples."""
    key = COLOR_OP.get(color.upper(), color)
    op, unit = OPS[key], UNITS[key]
    samples = [ext(s) for s in samples]
    for x in samples:
        if op(unit, x) is not x and op(unit, x) != x:
            return MonoidCheck(False, ("left unit", x))
        if op(x, unit) is not x and op(x, unit) != x:
            return MonoidCheck(False, ("right unit", x))
    for a, b, c in cartesian(samples, repeat=3):
        lhs, rhs = op(op(a, b), c), op(a, op(b, c))
        if not (lhs is rhs or lhs == rhs):
            return MonoidCheck(False, ("associativity", a, b, c))
    return MonoidCheck(True)
