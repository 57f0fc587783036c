"""Pointed projective spaces, Mobius maps and the octahedral machinery.

Points of P^(d-1) are stored with the last nonzero coordinate scaled to 1,
so a qubit is [z : 1] or infinity = [1 : 0].  ``BOT`` stands for the
impossible outcome (image of the zero vector).
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Sequence

from .exactnum import (
    BOT,
    INF,
    ONE,
    ZERO,
    I,
    GaussianRational,
    ext,
    format_scalar,
    gq,
    parse_scalar,
    primitive_part,
)
from .merofn import MeroFn, evaluate, homogeneous_compose
from .poly import UniPoly, inverse_mod, is_squarefree, uni_gcd


class ProjPoint:
    """A point [v0 : ... : v(d-1)] of projective space (never the zero vector)."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        cs = [gq(c) for c in coords]
        last = None
        for c in reversed(cs):
            if c:
                last = c
                break
        if last is None:
            raise ValueError("the zero vector is not a projective point")
        inv = last.inv()
        self.coords = tuple(c * inv for c in cs)

    @property
    def dim(self) -> int:
        return len(self.coords)

    @classmethod
    def from_ext(cls, z) -> "ProjPoint":
        z = ext(z)
        if z is BOT:
            raise ValueError("bot is not a projective point")
        if z is INF:
            return cls([ONE, ZERO])
        return cls([z, ONE])

    def to_ext(self):
        if self.dim != 2:
            raise ValueError("only points of P^1 are extended scalars")
        x, y = self.coords
        return INF if not y else x / y

    def __eq__(self, other):
        if isinstance(other, ProjPoint):
            return self.coords == other.coords
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"ProjPoint({format_point(self)!r})"

    def __str__(self):
        return format_point(self)


def pointed(coords: Sequence):
    """ProjPoint for a nonzero vector, BOT for the zero vector."""
    if not any(gq(c) for c in coords):
        return BOT
    return ProjPoint(coords)


def format_point(x) -> str:
    if x is BOT:
        return "bot"
    return "[" + ":".join(format_scalar(c) for c in x.coords) + "]"


def parse_point(text: str):
    s = "".join(text.split())
    if s in ("bot", "⊥"):
        return BOT
    if s == "inf":
        return ProjPoint([1, 0])
    if s.startswith("[") and s.endswith("]"):
        parts = s[1:-1].split(":")
        vals = [parse_scalar(p) for p in parts]
        if any(v is INF or v is BOT for v in vals):
            raise ValueError(f"bad coordinate in {text!r}")
        return pointed(vals)
    return ProjPoint.from_ext(parse_scalar(s))


class Matrix:
    """Dense matrix over Q(i), row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = [tuple(gq(c) for c in row) for row in entries]
        if not rows or not rows[0]:
            raise ValueError("matrix must have positive dimensions")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        self.entries = tuple(rows)
        self.rows = len(rows)
        self.cols = len(rows[0])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "Matrix":
        return cls([[ZERO] * c for _ in range(r)])

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "Matrix([" + ", ".join(
            "[" + ", ".join(format_scalar(c) for c in row) + "]" for row in self.entries
        ) + "])"

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        for row in self.entries:
            out.append([
                sum((row[k] * other.entries[k][j] for k in range(self.cols) if row[k]), ZERO)
                for j in range(other.cols)
            ])
        return Matrix(out)

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise ValueError(f"dimension mismatch: {self.cols} columns, vector of length {len(v)}")
        return tuple(sum((a * b for a, b in zip(row, v) if a and b), ZERO) for row in self.entries)

    def kron(self, other: "Matrix") -> "Matrix":
        out = []
        for r1 in self.entries:
            for r2 in other.entries:
                out.append([a * b for a in r1 for b in r2])
        return Matrix(out)


def proj_apply(t: Matrix, x):
    """The pointed map P(T): [v] -> [Tv], or BOT when Tv = 0."""
    if x is BOT:
        return BOT
    if t.cols != x.dim:
        raise ValueError(f"dimension mismatch: {t.cols} columns, point in P^{x.dim - 1}")
    return pointed(t.apply(x.coords))


def kron_vec(u: Sequence, v: Sequence) -> tuple:
    return tuple(a * b for a in u for b in v)


def segre(points: Sequence):
    """Pointed Segre embedding; any BOT factor gives BOT, [] gives [1]."""
    coords = (ONE,)
    for x in points:
        if x is BOT:
            return BOT
        coords = kron_vec(coords, x.coords)
    return ProjPoint(coords)


# -- Mobius maps -------------------------------------------------------------


class Mobius:
    """z -> (az + b)/(cz + d), canonical up to scalar."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        vals = [gq(a), gq(b), gq(c), gq(d)]
        if not (vals[0] * vals[3] - vals[1] * vals[2]):
            raise ValueError("singular Mobius matrix")
        first = next(k for k, v in enumerate(vals) if v)
        vals, _ = primitive_part(vals, lead_index=first)
        self.a, self.b, self.c, self.d = vals

    @classmethod
    def from_matrix(cls, m) -> "Mobius":
        if isinstance(m, Matrix):
            (a, b), (c, d) = m.entries
        else:
            (a, b), (c, d) = m
        return cls(a, b, c, d)

    def matrix(self) -> Matrix:
        return Matrix([[self.a, self.b], [self.c, self.d]])

    def key(self):
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other):
        if isinstance(other, Mobius):
            return self.key() == other.key()
        return NotImplemented

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Mobius({format_mobius(self)})"

    def __str__(self):
        return format_mobius(self)

    def __call__(self, z):
        return mobius_apply(self, z)

    def __matmul__(self, other: "Mobius") -> "Mobius":
        return mobius_compose(self, other)

    def inverse(self) -> "Mobius":
        return mobius_inverse(self)

    def to_mero(self, var="z") -> MeroFn:
        return MeroFn(UniPoly([self.b, self.a], var), UniPoly([self.d, self.c], var))

    def is_identity(self) -> bool:
        return self == IDENTITY


def mobius_apply(m: Mobius, z):
    z = ext(z)
    if z is BOT:
        return BOT
    if z is INF:
        return INF if not m.c else m.a / m.c
    den = m.c * z + m.d
    num = m.a * z + m.b
    if not den:
        return INF
    return num / den


def mobius_compose(m1: Mobius, m2: Mobius) -> Mobius:
    """m1 o m2 (apply m2 first)."""
    return Mobius(
        m1.a * m2.a + m1.b * m2.c,
        m1.a * m2.b + m1.b * m2.d,
        m1.c * m2.a + m1.d * m2.c,
        m1.c * m2.b + m1.d * m2.d,
    )


def mobius_inverse(m: Mobius) -> Mobius:
    return Mobius(m.d, -m.b, -m.c, m.a)


def format_mobius(m: Mobius) -> str:
    f = format_scalar
    return f"[[{f(m.a)},{f(m.b)}],[{f(m.c)},{f(m.d)}]]"


_MOBIUS_RE = re.compile(r"^\[\[([^,\]]+),([^,\]]+)\],\[([^,\]]+),([^,\]]+)\]\]$")


def parse_mobius(text: str) -> Mobius:
    s = "".join(text.split())
    m = _MOBIUS_RE.match(s)
    if not m:
        raise ValueError(f"bad Mobius matrix {text!r}")
    vals = [parse_scalar(g) for g in m.groups()]
    if any(v is INF or v is BOT for v in vals):
        raise ValueError(f"bad Mobius entry in {text!r}")
    return Mobius(*vals)


IDENTITY = Mobius(1, 0, 0, 1)
S_GATE = Mobius(1, 0, 0, I)
H_GATE = Mobius(1, 1, 1, -1)
PAULI_X = Mobius(0, 1, 1, 0)
PAULI_Y = Mobius(0, -I, I, 0)
PAULI_Z = Mobius(1, 0, 0, -1)
F_GATE = mobius_compose(S_GATE, H_GATE)


def pauli_image():
    """The Klein four group {z, 1/z, -1/z, -z}."""
    return [IDENTITY, PAULI_X, PAULI_Y, PAULI_Z]


@lru_cache(maxsize=None)
def _clifford_tuple():
    seen = {IDENTITY: 0}
    order = [IDENTITY]
    k = 0
    while k < len(order):
        g = order[k]
        k += 1
        for gen in (S_GATE, H_GATE):
            h = mobius_compose(gen, g)
            if h not in seen:
                seen[h] = len(order)
                order.append(h)
                if len(order) > 48:
                    raise RuntimeError("Clifford closure exceeded 48 elements")
    return tuple(order)


def clifford_group():
    """The 24 rotations of the octahedron as Mobius maps, in BFS order
    from the identity (generators S then H)."""
    return list(_clifford_tuple())


# -- octahedral function and state catalogs ----------------------------------

Z = UniPoly([0, 1])
F_POLY = UniPoly([1, 0, 0, 0, 14, 0, 0, 0, 1])  # z^8 + 14 z^4 + 1
STABILIZER_POLYS = (Z, UniPoly([-1, 0, 1]), UniPoly([1, 0, 1]))
H_POLYS = (
    UniPoly([-1, -2, 1]),
    UniPoly([-1, 2, 1]),
    UniPoly([1, 0, 6, 0, 1]),
    UniPoly([1, 0, 0, 0, 1]),
)
F_POLYS = (F_POLY,)
CATALOG = {"stabilizer": STABILIZER_POLYS, "H": H_POLYS, "F": F_POLYS}


def _product(polys):
    p = UniPoly([1])
    for q in polys:
        p = p * q
    return p


CATALOG_PRODUCTS = {name: _product(ps) for name, ps in CATALOG.items()}


@lru_cache(maxsize=None)
def octahedral_E7() -> MeroFn:
    """108 z^4 (z^4 - 1)^4 / (z^8 + 14 z^4 + 1)^3."""
    z4m1 = UniPoly([-1, 0, 0, 0, 1])
    num = UniPoly.monomial(4, 108) * z4m1 ** 4
    return MeroFn(num, F_POLY ** 3)


def same_orbit(w, z) -> bool:
    """Exact Clifford-orbit test: E7(w) == E7(z)."""
    e7 = octahedral_E7()
    return evaluate(e7, w) == evaluate(e7, z)


def value_mod(f: MeroFn, mu: UniPoly):
    """The common value of f on all roots of square-free mu, if there is one.

    Returns a GaussianRational, ``INF``, or ``None`` when f is not constant
    on the roots of mu.  Exact: works modulo mu.
    """
    mu = mu.with_var(f.var)
    p, q = f.num % mu, f.den % mu
    if q.is_zero():
        return INF
    g = uni_gcd(q, mu)
    if not g.is_const():
        return None  # q vanishes on some roots only
    v = (p * inverse_mod(q, mu)) % mu
    if v.is_const():
        return v[0]
    return None


def mobius_image_poly(mu: UniPoly, m: Mobius) -> UniPoly:
    """Numerator of mu(m(z)), i.e. sum mu_k (az+b)^k (cz+d)^(deg - k)."""
    num, _ = homogeneous_compose(mu, UniPoly([1], mu.var), *_mobius_polys(m, mu.var))
    return num


def _mobius_polys(m: Mobius, var):
    return UniPoly([m.b, m.a], var), UniPoly([m.d, m.c], var)


def catalog_split(mu: UniPoly):
    """Split square-free mu into {category: part} with category in
    stabilizer/H/F/other; only nonconstant parts are returned."""
    rest = mu
    out = {}
    for name, prod in CATALOG_PRODUCTS.items():
        g = uni_gcd(rest, prod.with_var(mu.var))
        if not g.is_const():
            out[name] = g
            rest = rest.exact_div(g)
    if not rest.is_const():
        out["other"] = rest.monic()
    return out


def classify_state(mu) -> str:
    """stabilizer / H / F / other / mixed for a point or square-free polynomial."""
    if isinstance(mu, UniPoly):
        if mu.is_const():
            raise ValueError("cannot classify a constant polynomial")
        if not is_squarefree(mu):
            raise ValueError(f"{mu} is not square-free")
        parts = catalog_split(mu)
        if len(parts) == 1:
            return next(iter(parts))
        return "mixed"
    z = ext(mu)
    if z is BOT:
        raise ValueError("bot is not a state")
    if z is INF:
        return "stabilizer"
    return classify_state(UniPoly([-z, 1]))

