from fractions import Fraction

import pytest
from hypothesis import given, settings

from strategies import gaussians, pointed
from merodec.exactnum import (
    BOT,
    INF,
    ONE,
    ZERO,
    GaussianRational,
    ext_add,
    ext_inv,
    ext_mul,
    format_scalar,
    gi_divisors,
    gi_gcd,
    gq,
    parse_scalar,
    primitive_part,
    unit_normalizer,
)

I = GaussianRational(0, 1)


@pytest.mark.parametrize("value,text", [
    (GaussianRational(Fraction(3, 2)), "3/2"),
    (-I, "-i"),
    (GaussianRational(1, -2), "1-2*i"),
    (GaussianRational(Fraction(-1, 2), Fraction(1, 3)), "-1/2+1/3*i"),
    (ZERO, "0"),
    (INF, "inf"),
    (BOT, "bot"),
])
def test_format_examples(value, text):
    assert format_scalar(value) == text
    assert parse_scalar(text) == value or parse_scalar(text) is value


@pytest.mark.parametrize("text,value", [
    (" 1 + 2i ", GaussianRational(1, 2)),
    ("i*3", GaussianRational(0, 3)),
    ("2.5", GaussianRational(Fraction(5, 2))),
    ("(-i)", -I),
    ("oo", INF),
])
def test_parse_variants(text, value):
    assert parse_scalar(text) == value or parse_scalar(text) is value


@pytest.mark.parametrize("text", ["", "1+", "2**i", "ii"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_scalar(text)


@settings(max_examples=300)
@given(gaussians)
def test_format_round_trip(z):
    assert parse_scalar(format_scalar(z)) == z


def test_extended_tables():
    assert ext_mul(0, INF) is BOT
    assert ext_mul(INF, INF) is INF
    assert ext_mul(2, INF) is INF
    assert ext_add(INF, INF) is BOT
    assert ext_add(INF, 3) is INF
    assert ext_inv(0) is INF and ext_inv(INF) == ZERO
    assert ext_mul(BOT, 1) is BOT and ext_add(BOT, 0) is BOT


@settings(max_examples=300)
@given(pointed, pointed)
def test_extended_commutative(a, b):
    for op in (ext_mul, ext_add):
        x, y = op(a, b), op(b, a)
        assert x is y or x == y


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_gaussian_integers():
    assert gi_gcd((5, 0), (3, 4)) == (2, 1)  # 5 = (2+i)(2-i), 3+4i = (2+i)^2
    assert gi_gcd((0, 3), (6, 0)) == (3, 0)
    divs = gi_divisors((2, 0))
    assert (1, 0) in divs and (1, 1) in divs and (2, 0) in divs
    assert len(divs) == 3


def test_unit_normalizer_quadrant():
    for c in (GaussianRational(-2, 0), GaussianRational(0, 3), GaussianRational(-1, -1)):
        v = unit_normalizer(c) * c
        assert v.re > 0 and v.im >= 0


def test_primitive_part():
    coeffs = [gq("1/2"), gq("-3/2"), gq("-1")]
    scaled, factor = primitive_part(coeffs)
    assert scaled == [gq(-1), gq(3), gq(2)]
    assert [c * factor for c in coeffs] == scaled
    scaled, _ = primitive_part([GaussianRational(0, 2), GaussianRational(0, 4)])
    assert scaled == [ONE, GaussianRational(2)]
