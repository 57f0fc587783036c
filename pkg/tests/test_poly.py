import pytest
from hypothesis import given, settings

from strategies import gaussian_ints, nonzero_polys, polys
from merodec.exactnum import GaussianRational, gq
from merodec.poly import (
    MultiPoly,
    UniPoly,
    format_multi,
    format_poly,
    inverse_mod,
    is_squarefree,
    multiplicity,
    rational_roots,
    squarefree_part,
    uni_gcd,
    uni_xgcd,
)

z = UniPoly([0, 1])
I = GaussianRational(0, 1)


def test_format():
    assert format_poly(z ** 9 + (z ** 3).scale(3)) == "z^9 + 3*z^3"
    assert format_poly(UniPoly([-1, 0, 5])) == "5*z^2 - 1"
    assert format_poly(UniPoly([-I, 1 + I, 1])) == "z^2 + (1+i)*z - i"
    assert format_poly(UniPoly()) == "0"


def test_divmod_and_exact_div():
    a = (z - 1) * (z + 2) * (z ** 2 + 1)
    assert a.exact_div(z ** 2 + 1) == (z - 1) * (z + 2)
    with pytest.raises(ArithmeticError):
        a.exact_div(z - 3)
    with pytest.raises(ZeroDivisionError):
        a.divmod(UniPoly())


def test_gcd_monic():
    a = (z - 1) ** 2 * (z + I)
    b = (z - 1) * (z + I).scale(3) * (z - 5)
    assert uni_gcd(a, b) == (z - 1) * (z + I)


def test_rational_roots_gaussian():
    p = (z - I) ** 2 * (z + gq("1/2")) * (z ** 2 + 2) * (z - (1 - I))
    assert rational_roots(p) == [gq("-1/2"), GaussianRational(0, 1), GaussianRational(1, -1)]
    assert dict(rational_roots(p, with_multiplicity=True))[I] == 2


def test_squarefree_helpers():
    p = (z - 1) ** 3 * (z + 1)
    assert squarefree_part(p) == (z - 1) * (z + 1)
    assert not is_squarefree(p)
    assert multiplicity(p, z - 1) == 3
    assert multiplicity(p, z - 2) == 0


def test_reverse_and_trailing():
    p = UniPoly([0, 0, 1, 2])
    assert p.trailing_order() == 2
    assert p.reverse() == UniPoly([2, 1])
    assert p.reverse(5) == UniPoly([0, 0, 2, 1])


@settings(max_examples=200)
@given(nonzero_polys, nonzero_polys)
def test_xgcd(a, b):
    g, s, t = uni_xgcd(a, b)
    assert s * a + t * b == g
    assert g == uni_gcd(a, b)


def test_inverse_mod():
    m = z ** 4 + 1
    inv = inverse_mod(z + 1, m)
    assert ((z + 1) * inv) % m == UniPoly([1])


@settings(max_examples=200)
@given(polys(3), polys(3), gaussian_ints)
def test_evaluation_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)
    assert a.compose(b)(x) == a(b(x))


def test_multipoly():
    z1, z2, z3 = (MultiPoly.variable(j, 3) for j in range(3))
    one = MultiPoly.const(1, 3)
    p = z1 * z2 * z3 + z1 + z2 + z3
    assert format_multi(p) == "z1*z2*z3 + z1 + z2 + z3"
    assert p.diagonal() == z ** 3 + z.scale(3)
    assert p([1, 2, 3]) == gq(12)
    q = (z1 * z2 + one) * z3
    assert q.monomial_content() == [0, 0, 1]
    assert q.divide_monomial((0, 0, 1)) == z1 * z2 + one
    assert p.subst([z, z, UniPoly([1])]) == z ** 2 + z.scale(2) + 1
