"""Exact scalars: Gaussian rationals Q(i), the point at infinity and the
impossible element bot.

Plain field arithmetic on :class:`GaussianRational` raises on division by
zero.  The extended operations ``ext_mul``, ``ext_add`` and ``ext_inv``
are total on pointed scalars (finite values, ``INF`` and ``BOT``).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, isqrt


class GaussianRational:
    """An element re + im*i of Q(i), stored as two canonical Fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        if isinstance(x, str):
            return parse_scalar(x)
        return cls(x)

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational(a * c, 0)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inv(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussianRational(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _maybe(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))


def _maybe(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return None


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
UNITS = (ONE, I, -ONE, -I)


def gq(x) -> GaussianRational:
    return GaussianRational.coerce(x)


# -- extended values ---------------------------------------------------------


class _Infinity:
    __slots__ = ()

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return "INF"


class _Bottom:
    __slots__ = ()

    def __repr__(self):
        return "BOT"

    def __str__(self):
        return "bot"

    def __reduce__(self):
        return "BOT"


INF = _Infinity()
BOT = _Bottom()


def is_finite(z) -> bool:
    return isinstance(z, GaussianRational)


def ext(z):
    """Coerce to an extended scalar (``INF``, ``BOT`` or GaussianRational)."""
    if z is INF or z is BOT:
        return z
    return gq(z)


def ext_mul(w, z):
    w, z = ext(w), ext(z)
    if w is BOT or z is BOT:
        return BOT
    if w is INF or z is INF:
        other = z if w is INF else w
        if other is INF:
            return INF
        return BOT if not other else INF
    return w * z


def ext_add(w, z):
    w, z = ext(w), ext(z)
    if w is BOT or z is BOT:
        return BOT
    if w is INF and z is INF:
        return BOT
    if w is INF or z is INF:
        return INF
    return w + z


def ext_inv(z):
    z = ext(z)
    if z is BOT:
        return BOT
    if z is INF:
        return ZERO
    if not z:
        return INF
    return z.inv()


def ext_neg(z):
    z = ext(z)
    if z is BOT or z is INF:
        return z
    return -z


# -- Gaussian integers -------------------------------------------------------
# Pairs (a, b) of ints standing for a + b*i.  Used for content removal and
# divisor enumeration.


def gi_mul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def gi_norm(x) -> int:
    return x[0] * x[0] + x[1] * x[1]


def _round_div(n: int, d: int) -> int:
    # nearest integer to n/d, d > 0
    return (2 * n + d) // (2 * d)


def gi_divmod(x, y):
    n = gi_norm(y)
    if n == 0:
        raise ZeroDivisionError("Gaussian integer division by zero")
    num = gi_mul(x, (y[0], -y[1]))
    q = (_round_div(num[0], n), _round_div(num[1], n))
    qy = gi_mul(q, y)
    return q, (x[0] - qy[0], x[1] - qy[1])


def gi_gcd(x, y):
    while y != (0, 0):
        _, r = gi_divmod(x, y)
        x, y = y, r
    return gi_unit_normal(x)


def gi_unit_normal(x):
    """The associate of x with re > 0 and im >= 0 (0 stays 0)."""
    a, b = x
    for _ in range(4):
        if a > 0 and b >= 0:
            return (a, b)
        a, b = -b, a  # multiply by i
    return (a, b)


def unit_normalizer(c: GaussianRational) -> GaussianRational:
    """The unit u in {1, i, -1, -i} with u*c in the quadrant re > 0, im >= 0."""
    if not c:
        raise ZeroDivisionError("zero has no normalizing unit")
    for u in UNITS:
        v = u * c
        if v.re > 0 and v.im >= 0:
            return u
    raise AssertionError("unreachable")


def gi_divisors(x):
    """All Gaussian integers dividing x, one per associate class (normalized)."""
    if x == (0, 0):
        raise ValueError("zero has infinitely many divisors")
    n = gi_norm(x)
    out = []
    for k in _int_divisors(n):
        for a in range(0, isqrt(k) + 1):
            b2 = k - a * a
            b = isqrt(b2)
            if b * b != b2:
                continue
            for cand in {(a, b), (a, -b)}:
                if cand == (0, 0):
                    continue
                cand = gi_unit_normal(cand)
                _, r = gi_divmod(x, cand)
                if r == (0, 0) and cand not in out:
                    out.append(cand)
    return out


def _int_divisors(n: int):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def clear_denominators(coeffs):
    """Scale a list of GaussianRationals to Gaussian integers.

    Returns ``(ints, scale)`` with ``ints[k] == coeffs[k] * scale`` where
    scale is a positive integer.
    """
    den = 1
    for c in coeffs:
        for part in (c.re, c.im):
            den = den * part.denominator // gcd(den, part.denominator)
    ints = [(int(c.re * den), int(c.im * den)) for c in coeffs]
    return ints, den


def primitive_part(coeffs, lead_index=None):
    """Canonical Gaussian-integer representative of a coefficient vector.

    Clears denominators, divides by the Gaussian gcd of all entries and
    unit-normalizes the entry at ``lead_index`` (default: last nonzero).
    Returns ``(scaled_coeffs, factor)`` with scaled = factor * coeffs.
    """
    if not any(coeffs):
        return list(coeffs), ONE
    ints, den = clear_denominators(coeffs)
    g = (0, 0)
    for c in ints:
        if c != (0, 0):
            g = gi_gcd(g, c) if g != (0, 0) else gi_unit_normal(c)
            if g == (1, 0):
                break
    factor = GaussianRational(den) / GaussianRational(g[0], g[1])
    scaled = [c * factor for c in coeffs]
    if lead_index is None:
        lead_index = max(k for k, c in enumerate(scaled) if c)
    u = unit_normalizer(scaled[lead_index])
    return [c * u for c in scaled], factor * u


# -- text format -------------------------------------------------------------


def _format_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(z) -> str:
    """Text form: ``3/2``, ``-i``, ``1-2*i``, ``inf``, ``bot``."""
    if z is INF:
        return "inf"
    if z is BOT:
        return "bot"
    z = gq(z)
    re_, im_ = z.re, z.im
    if im_ == 0:
        return _format_fraction(re_)
    if im_ == 1:
        imag = "i"
    elif im_ == -1:
        imag = "-i"
    else:
        imag = f"{_format_fraction(im_)}*i"
    if re_ == 0:
        return imag
    sep = "" if imag.startswith("-") else "+"
    return f"{_format_fraction(re_)}{sep}{imag}"


_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:/\d+)?"
_TERM = re.compile(
    rf"([+-]?)(?:({_NUM})\*?i|i\*?({_NUM})|(i)|({_NUM}))"
)


def parse_scalar(text: str):
    """Parse the scalar text format (whitespace-insensitive).

    Returns a GaussianRational, ``INF`` or ``BOT``.
    """
    s = "".join(text.split())
    low = s.lower()
    if low in ("inf", "oo", "infinity"):
        return INF
    if low in ("bot", "⊥"):
        return BOT
    if not s:
        raise ValueError("empty scalar")
    if s.startswith("(") and s.endswith(")"):
        return parse_scalar(s[1:-1])
    re_, im_ = Fraction(0), Fraction(0)
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (pos > 0 and not m.group(1)):
            raise ValueError(f"bad scalar {text!r} at position {pos}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(2) is not None:
            im_ += sign * Fraction(m.group(2))
        elif m.group(3) is not None:
            im_ += sign * Fraction(m.group(3))
        elif m.group(4) is not None:
            im_ += sign
        else:
            re_ += sign * Fraction(m.group(5))
        pos = m.end()
    return GaussianRational(re_, im_)
