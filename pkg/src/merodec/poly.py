"""Exact polynomials over Q(i).

``UniPoly`` is dense (ascending coefficients), ``MultiPoly`` is sparse
(exponent tuple -> coefficient).  Both are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exactnum import (
    ONE,
    ZERO,
    GaussianRational,
    format_scalar,
    gi_divisors,
    gq,
    primitive_part,
    clear_denominators,
    UNITS,
)


def _convolve(a, b):
    """Product of coefficient lists, done over Gaussian integers."""
    ia, da = clear_denominators(a)
    ib, db = clear_denominators(b)
    n = len(ia) + len(ib) - 1
    re_, im_ = [0] * n, [0] * n
    real = not any(y for _, y in ia) and not any(y for _, y in ib)
    for i, (xr, xi) in enumerate(ia):
        if not xr and not xi:
            continue
        for j, (yr, yi) in enumerate(ib):
            if real:
                re_[i + j] += xr * yr
            else:
                re_[i + j] += xr * yr - xi * yi
                im_[i + j] += xr * yi + xi * yr
    d = da * db
    return [GaussianRational(Fraction(r, d), Fraction(m, d)) for r, m in zip(re_, im_)]


class UniPoly:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "z"):
        cs = [gq(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    # constructors
    @classmethod
    def const(cls, c, var="z"):
        return cls([c], var)

    @classmethod
    def monomial(cls, k: int, c=1, var="z"):
        return cls([0] * k + [c], var)

    @classmethod
    def from_roots(cls, roots, var="z"):
        p = cls([1], var)
        for r in roots:
            p = p * cls([-gq(r), 1], var)
        return p

    # basic queries
    @property
    def deg(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def lc(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __getitem__(self, k: int) -> GaussianRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"UniPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    # arithmetic
    def _wrap(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return UniPoly([other], self.var)
        return None

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __add__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return UniPoly(out, self.var)

    __radd__ = __add__

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
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly([], self.var)
        if len(b) == 1:
            c = b[0]
            return UniPoly([x * c for x in a], self.var)
        return UniPoly(_convolve(a, b), self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = UniPoly([1], self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "UniPoly":
        c = gq(c)
        return UniPoly([x * c for x in self.coeffs], self.var)

    def shift(self, k: int) -> "UniPoly":
        """Multiply by var**k."""
        if not self.coeffs:
            return self
        return UniPoly([ZERO] * k + list(self.coeffs), self.var)

    def divmod(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.deg
        if len(rem) - 1 < db:
            return UniPoly([], self.var), self
        inv_lc = other.lc().inv()
        quot = [ZERO] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            c = c * inv_lc
            quot[k - db] = c
            for j in range(db + 1):
                if bc[j]:
                    rem[k - db + j] = rem[k - db + j] - c * bc[j]
        return UniPoly(quot, self.var), UniPoly(rem[:db], self.var)

    def __divmod__(self, other):
        return self.divmod(other)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "UniPoly") -> bool:
        """True if self | other."""
        return other.divmod(self)[1].is_zero()

    # evaluation and calculus
    def __call__(self, z):
        z = gq(z)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def compose(self, g: "UniPoly") -> "UniPoly":
        acc = UniPoly([], g.var)
        for c in reversed(self.coeffs):
            acc = acc * g + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly([c * k for k, c in enumerate(self.coeffs)][1:], self.var)

    def reverse(self, d: int | None = None) -> "UniPoly":
        """var**d * self(1/var); d defaults to deg."""
        if d is None:
            d = self.deg
        if self.deg > d:
            raise ValueError("reverse degree below polynomial degree")
        cs = list(self.coeffs) + [ZERO] * (d + 1 - len(self.coeffs))
        return UniPoly(cs[::-1], self.var)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        return self.scale(self.lc().inv())

    def normalized(self) -> "UniPoly":
        """Content-normalized: primitive Gaussian-integer coefficients,
        leading coefficient unit-normalized."""
        if not self.coeffs:
            return self
        cs, _ = primitive_part(list(self.coeffs))
        return UniPoly(cs, self.var)

    def trailing_order(self) -> int:
        """Largest k with var**k | self (0 for the zero polynomial)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return 0

    def with_var(self, var: str) -> "UniPoly":
        return UniPoly(self.coeffs, var)


X = UniPoly([0, 1])


def var(name: str = "z") -> UniPoly:
    return UniPoly([0, 1], name)


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = a.monic(), b.monic()
    while b:
        a, b = b, (a % b).monic()
    return a


def uni_lcm(a: UniPoly, b: UniPoly) -> UniPoly:
    return (a * b).exact_div(uni_gcd(a, b)).monic()


def squarefree_decomposition(a: UniPoly):
    """Yun's algorithm: list of (monic square-free factor, multiplicity).

    ``a == a.lc() * prod(f**m)`` with the factors pairwise coprime.
    """
    if a.is_zero():
        raise ValueError("square-free decomposition of zero")
    if a.is_const():
        return []
    da = a.derivative()
    b = uni_gcd(a, da)
    c = a.exact_div(b)
    d = da.exact_div(b) - c.derivative()
    out = []
    k = 1
    while not c.is_const():
        f = uni_gcd(c, d)
        c = c.exact_div(f)
        d = d.exact_div(f) - c.derivative()
        if not f.is_const():
            out.append((f, k))
        k += 1
    return out


def squarefree_part(a: UniPoly) -> UniPoly:
    p = UniPoly([1], a.var)
    for f, _ in squarefree_decomposition(a):
        p = p * f
    return p


def is_squarefree(a: UniPoly) -> bool:
    if a.is_zero():
        return False
    return uni_gcd(a, a.derivative()).is_const()


def multiplicity(a: UniPoly, f: UniPoly) -> int:
    """Largest k with f**k | a (a nonzero, f nonconstant)."""
    if f.is_const():
        raise ValueError("multiplicity of a constant factor")
    if a.is_zero():
        raise ValueError("multiplicity in the zero polynomial")
    k = 0
    while True:
        q, r = a.divmod(f)
        if r:
            return k
        a, k = q, k + 1


def _root_key(z: GaussianRational):
    return (z.re, z.im)


def rational_roots(a: UniPoly, with_multiplicity: bool = False):
    """Roots of ``a`` lying in Q(i), sorted by (re, im).

    Candidates alpha/beta with alpha | constant and beta | leading
    coefficient (over Z[i]) are tested by exact evaluation.
    """
    if a.is_zero():
        raise ValueError("roots of the zero polynomial")
    roots = []
    sf = squarefree_part(a) if not a.is_const() else a
    if sf.is_const():
        return []
    k = sf.trailing_order()
    if k:
        roots.append(ZERO)
        sf = UniPoly(sf.coeffs[k:], sf.var)
    while not sf.is_const():
        ints, _ = clear_denominators(list(sf.coeffs))
        found = None
        for beta in gi_divisors(ints[-1]):
            for alpha in gi_divisors(ints[0]):
                base = GaussianRational(*alpha) / GaussianRational(*beta)
                for u in UNITS:
                    cand = base * u
                    if not sf(cand):
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        sf = sf.exact_div(UniPoly([-found, 1], sf.var))
    roots.sort(key=_root_key)
    if not with_multiplicity:
        return roots
    return [(r, multiplicity(a, UniPoly([-r, 1], a.var))) for r in roots]


# -- formatting --------------------------------------------------------------


def _coeff_term(c: GaussianRational, mono: str):
    """(sign, body) for coefficient c times monomial text ``mono``."""
    if c.im == 0:
        sign = "-" if c.re < 0 else "+"
        mag = abs(c.re)
        if not mono:
            return sign, format_scalar(mag)
        if mag == 1:
            return sign, mono
        return sign, f"{format_scalar(mag)}*{mono}"
    if c.re == 0:
        sign = "-" if c.im < 0 else "+"
        mag = abs(c.im)
        body = "i" if mag == 1 else f"{format_scalar(mag)}*i"
        return sign, body if not mono else f"{body}*{mono}"
    body = f"({format_scalar(c)})"
    return "+", body if not mono else f"{body}*{mono}"


def join_terms(terms) -> str:
    if not terms:
        return "0"
    out = []
    for k, (sign, body) in enumerate(terms):
        if k == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def format_poly(p: UniPoly) -> str:
    """Descending powers with explicit ``*``: ``z^9 + 3*z^3``."""
    terms = []
    for k in range(p.deg, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else (p.var if k == 1 else f"{p.var}^{k}")
        terms.append(_coeff_term(c, mono))
    return join_terms(terms)


# -- multivariate ------------------------------------------------------------


class MultiPoly:
    """Sparse polynomial in ``arity`` variables named prefix1..prefixN."""

    __slots__ = ("terms", "arity", "prefix")

    def __init__(self, terms: dict, arity: int, prefix: str = "z"):
        clean = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != arity:
                raise ValueError(f"exponent {e} has wrong arity (expected {arity})")
            c = gq(c)
            if c:
                clean[e] = c
        self.terms = clean
        self.arity = arity
        self.prefix = prefix

    @classmethod
    def const(cls, c, arity: int, prefix="z"):
        return cls({(0,) * arity: c}, arity, prefix)

    @classmethod
    def variable(cls, j: int, arity: int, prefix="z"):
        e = [0] * arity
        e[j] = 1
        return cls({tuple(e): ONE}, arity, prefix)

    def _check(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return MultiPoly.const(other, self.arity, self.prefix)
        if not isinstance(other, MultiPoly):
            return None
        if other.arity != self.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
        return other

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.arity == other.arity and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MultiPoly({format_multi(self)!r})"

    def __str__(self):
        return format_multi(self)

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()}, self.arity, self.prefix)

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, ZERO) + c
        return MultiPoly(out, self.arity, self.prefix)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        return MultiPoly(out, self.arity, self.prefix)

    __rmul__ = __mul__

    def __call__(self, point: Sequence):
        if len(point) != self.arity:
            raise ValueError(f"arity mismatch: {len(point)} values for {self.arity} variables")
        pt = [gq(v) for v in point]
        acc = ZERO
        for e, c in self.terms.items():
            t = c
            for v, k in zip(pt, e):
                if k:
                    t = t * v ** k
            acc = acc + t
        return acc

    def degrees(self):
        """Per-variable degree (0 for absent variables)."""
        d = [0] * self.arity
        for e in self.terms:
            for j, k in enumerate(e):
                if k > d[j]:
                    d[j] = k
        return d

    def monomial_content(self):
        """Per-variable minimum exponent over all terms."""
        if not self.terms:
            return [0] * self.arity
        it = iter(self.terms)
        m = list(next(it))
        for e in it:
            for j, k in enumerate(e):
                if k < m[j]:
                    m[j] = k
        return m

    def divide_monomial(self, mono) -> "MultiPoly":
        return MultiPoly(
            {tuple(a - b for a, b in zip(e, mono)): c for e, c in self.terms.items()},
            self.arity,
            self.prefix,
        )

    def scale(self, c) -> "MultiPoly":
        c = gq(c)
        return MultiPoly({e: v * c for e, v in self.terms.items()}, self.arity, self.prefix)

    def subst(self, images: Sequence[UniPoly]) -> UniPoly:
        """Substitute variable j by the univariate polynomial images[j]."""
        if len(images) != self.arity:
            raise ValueError("arity mismatch in substitution")
        acc = UniPoly([], images[0].var if images else "z")
        for e, c in self.terms.items():
            t = UniPoly([c], acc.var)
            for img, k in zip(images, e):
                if k:
                    t = t * img ** k
            acc = acc + t
        return acc

    def diagonal(self, var_name="z") -> UniPoly:
        """Set every variable equal to a single variable."""
        cs = {}
        for e, c in self.terms.items():
            s = sum(e)
            cs[s] = cs.get(s, ZERO) + c
        if not cs:
            return UniPoly([], var_name)
        top = max(cs)
        return UniPoly([cs.get(k, ZERO) for k in range(top + 1)], var_name)

    def homogeneous_eval(self, point, degrees):
        """Evaluate prod_j y_j**d_j * p(x/y) at projective coordinates.

        ``point[j]`` is a pair (x_j, y_j); ``degrees[j]`` >= degree in z_j.
        """
        acc = ZERO
        for e, c in self.terms.items():
            t = c
            for (x, y), k, d in zip(point, e, degrees):
                if k:
                    t = t * x ** k
                if d - k:
                    t = t * y ** (d - k)
                if not t:
                    break
            acc = acc + t
        return acc


def _multi_key(e):
    return (-sum(e), tuple(-k for k in e))


def format_multi(p: MultiPoly) -> str:
    terms = []
    for e in sorted(p.terms, key=_multi_key):
        mono = "*".join(
            f"{p.prefix}{j + 1}" if k == 1 else f"{p.prefix}{j + 1}^{k}"
            for j, k in enumerate(e)
            if k
        )
        terms.append(_coeff_term(p.terms[e], mono))
    return join_terms(terms)


def uni_xgcd(a: UniPoly, b: UniPoly):
    """(g, s, t) with s*a + t*b = g monic."""
    r0, r1 = a, b
    s0, s1 = UniPoly([1], a.var), UniPoly([], a.var)
    t0, t1 = UniPoly([], a.var), UniPoly([1], a.var)
    while r1:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = r0.lc().inv()
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def inverse_mod(a: UniPoly, m: UniPoly) -> UniPoly:
    g, s, _ = uni_xgcd(a % m, m)
    if not g.is_const():
        raise ZeroDivisionError(f"{a} is not invertible modulo {m}")
    return s % m
