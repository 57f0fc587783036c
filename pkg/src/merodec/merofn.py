"""Rational functions on the Riemann sphere.

A :class:`MeroFn` is a reduced quotient p/q in canonical scaling.  Branching
is read off the Wronskian ``W = p'q - pq'``: the order of vanishing of W at
a finite point z0 is m_z0(f) - 1 whether z0 is a zero, a pole or an
ordinary point of f.  Near a point with q(z0) != 0 write f - f(z0) =
(z-z0)^m u with u(z0) != 0; then W = q^2 f' = q^2 (z-z0)^(m-1) (m u +
(z-z0) u').  At a pole swap p and q, which only negates W.  The point at
infinity is handled by the chart swap z -> 1/z.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import (
    BOT,
    INF,
    ONE,
    ZERO,
    GaussianRational,
    ext,
    gq,
    primitive_part,
)
from .poly import (
    MultiPoly,
    UniPoly,
    _multi_key,
    format_multi,
    format_poly,
    is_squarefree,
    multiplicity,
    squarefree_decomposition,
    uni_gcd,
)


class MeroFn:
    """Reduced p/q with canonical scaling (Gaussian-integer primitive,
    leading coefficient of q unit-normalized)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var: str | None = None):
        if not isinstance(num, UniPoly):
            num = UniPoly(num if isinstance(num, (list, tuple)) else [num], var or "z")
        if den is None:
            den = UniPoly([1], num.var)
        elif not isinstance(den, UniPoly):
            den = UniPoly(den if isinstance(den, (list, tuple)) else [den], num.var)
        p, q = _reduce_pair(num, den)
        self.num = p
        self.den = q

    @property
    def var(self) -> str:
        return self.num.var

    @classmethod
    def identity(cls, var="z"):
        return cls(UniPoly([0, 1], var))

    @classmethod
    def const(cls, c, var="z"):
        return cls(UniPoly([c], var))

    # equality is canonical-form equality; cross_equal is the slow oracle
    def __eq__(self, other):
        if isinstance(other, MeroFn):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == MeroFn.const(other, self.var)
        return NotImplemented

    def cross_equal(self, other: "MeroFn") -> bool:
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"MeroFn({format_mero(self)!r})"

    def __str__(self):
        return format_mero(self)

    @property
    def degree(self) -> int:
        return max(self.num.deg, self.den.deg, 0)

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def is_polynomial(self) -> bool:
        return self.den.is_const()

    # field operations
    def _wrap(self, other):
        if isinstance(other, MeroFn):
            return other
        if isinstance(other, UniPoly):
            return MeroFn(other)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return MeroFn.const(other, self.var)
        return None

    def __add__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return MeroFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return MeroFn(-self.num, self.den)

    def __sub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return MeroFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return MeroFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            if self.num.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return MeroFn(self.den ** (-k), self.num ** (-k))
        return MeroFn(self.num ** k, self.den ** k)

    def __call__(self, z):
        return evaluate(self, z)


def _reduce_pair(p: UniPoly, q: UniPoly):
    if q.var != p.var:
        q = q.with_var(p.var)
    if q.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    if p.is_zero():
        return p, UniPoly([1], p.var)
    g = uni_gcd(p, q)
    if not g.is_const():
        p, q = p.exact_div(g), q.exact_div(g)
    coeffs = list(p.coeffs) + list(q.coeffs)
    scaled, _ = primitive_part(coeffs, lead_index=len(coeffs) - 1)
    k = len(p.coeffs)
    return UniPoly(scaled[:k], p.var), UniPoly(scaled[k:], p.var)


def reduce(p: UniPoly, q: UniPoly) -> MeroFn:
    if p.is_zero() and q.is_zero():
        raise ValueError("0/0 is not a rational function")
    return MeroFn(p, q)


def degree(f: MeroFn) -> int:
    return f.degree


def evaluate(f: MeroFn, z):
    """Value of f at an extended scalar (``INF`` allowed, ``BOT`` passes)."""
    z = ext(z)
    if z is BOT:
        return BOT
    if z is INF:
        dp, dq = f.num.deg, f.den.deg
        if dp > dq:
            return INF
        if dp < dq:
            return ZERO
        return f.num.lc() / f.den.lc()
    qz = f.den(z)
    if not qz:
        return INF
    return f.num(z) / qz


def homogeneous_compose(p: UniPoly, q: UniPoly, gp: UniPoly, gq_: UniPoly):
    """Numerator/denominator of (p/q) o (gp/gq) before reduction.

    Uses P(x, y) = y**D p(x/y) with D = max(deg p, deg q).
    """
    d = max(p.deg, q.deg, 0)
    gpow = [UniPoly([1], gp.var)]
    hpow = [UniPoly([1], gp.var)]
    for _ in range(d):
        gpow.append(gpow[-1] * gp)
        hpow.append(hpow[-1] * gq_)
    num = UniPoly([], gp.var)
    den = UniPoly([], gp.var)
    for k in range(d + 1):
        t = gpow[k] * hpow[d - k]
        if p[k]:
            num = num + t.scale(p[k])
        if q[k]:
            den = den + t.scale(q[k])
    return num, den


def compose(f: MeroFn, g: MeroFn) -> MeroFn:
    """f o g."""
    num, den = homogeneous_compose(f.num, f.den, g.num, g.den)
    if num.is_zero() and den.is_zero():
        raise ArithmeticError("composition is identically 0/0")
    if den.is_zero():
        raise ZeroDivisionError("composition is identically infinite")
    return MeroFn(num, den)


def deriv(f: MeroFn) -> MeroFn:
    p, q = f.num, f.den
    return MeroFn(p.derivative() * q - p * q.derivative(), q * q)


def wronskian(f: MeroFn) -> UniPoly:
    """W = p'q - pq', content-normalized."""
    if f.is_const():
        raise ValueError("Wronskian of a constant function")
    p, q = f.num, f.den
    w = p.derivative() * q - p * q.derivative()
    return w.normalized()


def chart_swap(f: MeroFn) -> MeroFn:
    """z -> f(1/z): the germ of f at infinity moved to the origin."""
    d = f.degree
    return MeroFn(f.num.reverse(d), f.den.reverse(d))


def ramification_index(f: MeroFn, point) -> int:
    """m_z(f): 1 + order of vanishing of W at a finite exact point, by chart
    swap at infinity, or 1 + max{k : mu^k | W} for a square-free polynomial
    mu (the minimum of the index over the roots of mu)."""
    if f.is_const():
        raise ValueError("ramification of a constant function")
    if isinstance(point, UniPoly):
        if point.is_const():
            raise ValueError("ramification along a constant polynomial")
        if not is_squarefree(point):
            raise ValueError(f"{point} is not square-free")
        return 1 + multiplicity(wronskian(f), point.with_var(f.var))
    point = ext(point)
    if point is BOT:
        raise ValueError("ramification at bot")
    if point is INF:
        return ramification_index(chart_swap(f), ZERO)
    lin = UniPoly([-point, 1], f.var)
    return 1 + multiplicity(wronskian(f), lin)


@dataclass(frozen=True)
class BranchDivisor:
    finite: tuple  # ((square-free monic UniPoly, order e = m - 1), ...)
    infinity_order: int

    def total(self) -> int:
        return sum(f.deg * e for f, e in self.finite) + self.infinity_order


def branch_divisor(f: MeroFn) -> BranchDivisor:
    if f.is_const():
        raise ValueError("branch divisor of a constant function")
    w = wronskian(f)
    finite = tuple((g, m) for g, m in squarefree_decomposition(w))
    inf_order = ramification_index(f, INF) - 1
    return BranchDivisor(finite, inf_order)


@dataclass(frozen=True)
class RHAudit:
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def __iter__(self):
        return iter((self.lhs, self.rhs, self.ok))


def rh_audit(f: MeroFn) -> RHAudit:
    """Sum of (m_z - 1) over branch points against 2(deg f - 1)."""
    bd = branch_divisor(f)
    return RHAudit(bd.total(), 2 * (f.degree - 1))


def r_polynomial(f: MeroFn) -> UniPoly:
    """p - z q, content-normalized (zero for the identity)."""
    r = f.num - f.den.shift(1)
    return r.normalized()


def mobius_conjugate(f: MeroFn, m) -> MeroFn:
    """m^-1 o f o m for a Mobius map m."""
    mf = m.to_mero(f.var)
    minv = m.inverse().to_mero(f.var)
    return compose(minv, compose(f, mf))


def format_mero(f: MeroFn) -> str:
    if f.den == UniPoly([1], f.var):
        return format_poly(f.num)
    return f"({format_poly(f.num)})/({format_poly(f.den)})"


# -- multivariate ------------------------------------------------------------


class MultiMeroFn:
    """num/den of MultiPolys with monomial content cancelled.

    No canonical reduced form: equality is by cross-multiplication.  The
    constant infinity is represented as 1/0.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly):
        if num.arity != den.arity:
            raise ValueError("arity mismatch")
        if num.is_zero() and den.is_zero():
            raise ValueError("0/0 is not a rational function")
        if den.is_zero():
            num = MultiPoly.const(1, num.arity, num.prefix)
        elif num.is_zero():
            den = MultiPoly.const(1, num.arity, num.prefix)
        else:
            cn, cd = num.monomial_content(), den.monomial_content()
            common = [min(a, b) for a, b in zip(cn, cd)]
            if any(common):
                num, den = num.divide_monomial(common), den.divide_monomial(common)
            # scale so the last term of den (in print order) is normalized
            coeffs = [num.terms[e] for e in sorted(num.terms, key=_multi_key)]
            coeffs += [den.terms[e] for e in sorted(den.terms, key=_multi_key)]
            scaled, factor = primitive_part(coeffs, lead_index=len(coeffs) - 1)
            if factor != ONE:
                num, den = num.scale(factor), den.scale(factor)
        self.num = num
        self.den = den

    @property
    def arity(self) -> int:
        return self.num.arity

    @classmethod
    def from_scalar(cls, c, arity: int):
        c = ext(c)
        if c is BOT:
            raise ValueError("bot has no symbolic form")
        if c is INF:
            return cls(MultiPoly.const(1, arity), MultiPoly.const(0, arity))
        return cls(MultiPoly.const(c, arity), MultiPoly.const(1, arity))

    @classmethod
    def variable(cls, j: int, arity: int):
        return cls(MultiPoly.variable(j, arity), MultiPoly.const(1, arity))

    def is_infinite(self) -> bool:
        return self.den.is_zero()

    def __eq__(self, other):
        if isinstance(other, MultiMeroFn):
            return self.arity == other.arity and self.num * other.den == other.num * self.den
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"MultiMeroFn({format_multi_mero(self)!r})"

    def __str__(self):
        return format_multi_mero(self)

    def diagonal(self, var="z") -> MeroFn:
        return MeroFn(self.num.diagonal(var), self.den.diagonal(var))

    def evaluate(self, point):
        """Value at a point of extended scalars, or ``None`` when the
        symbolic form is 0/0 there."""
        pts = []
        for v in point:
            v = ext(v)
            if v is BOT:
                return BOT
            pts.append((ONE, ZERO) if v is INF else (v, ONE))
        degs = [max(a, b) for a, b in zip(self.num.degrees(), self.den.degrees())]
        p = self.num.homogeneous_eval(pts, degs)
        q = self.den.homogeneous_eval(pts, degs)
        if not p and not q:
            return None
        if not q:
            return INF
        return p / q


def format_multi_mero(f: MultiMeroFn) -> str:
    if f.is_infinite():
        return "inf"
    if f.den == MultiPoly.const(1, f.arity, f.den.prefix):
        return format_multi(f.num)
    return f"({format_multi(f.num)})/({format_multi(f.den)})"


# -- JSON --------------------------------------------------------------------


def poly_to_json(p: UniPoly):
    return [str(c) for c in p.coeffs]


def poly_from_json(data, var="z") -> UniPoly:
    return UniPoly([gq(c) for c in data], var)


def mero_to_json(f: MeroFn):
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def mero_from_json(data, var="z") -> MeroFn:
    return MeroFn(poly_from_json(data["num"], var), poly_from_json(data["den"], var))
