import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import load
from merodec.stabcode import (
    InvalidCode,
    PauliOp,
    StabCode,
    commutes,
    concat,
    css_split,
    dual_code,
    enumerate_group,
    format_code,
    format_enumerator,
    is_css,
    make_code,
    parse_code,
    pauli_format,
    pauli_inverse,
    pauli_mul,
    pauli_parse,
    weight_enumerator,
)

NAMES = ["five13", "steane", "shor", "rep3x", "rep3z", "qrm15"]


def test_pauli_text():
    assert pauli_format(pauli_parse("-iXZ.Y"), dot=True) == "-iXZ.Y"
    assert pauli_format(pauli_parse("XIZ")) == "XIZ"
    assert pauli_parse("Y") == PauliOp(1, 1, 1, 1)
    for bad in ["XQ", "", "2X"]:
        with pytest.raises(ValueError):
            pauli_parse(bad)


def test_pauli_products():
    x, z, y = pauli_parse("X"), pauli_parse("Z"), pauli_parse("Y")
    assert pauli_mul(x, z) == pauli_parse("-iY")
    assert pauli_mul(z, x) == pauli_parse("iY")
    assert pauli_mul(y, y) == pauli_parse("I")
    assert not commutes(x, z) and commutes(pauli_parse("XX"), pauli_parse("ZZ"))
    assert pauli_parse("iY").is_hermitian() is False


paulis = st.builds(
    lambda lam, x, u: PauliOp(3, lam, x, u),
    st.integers(0, 3), st.integers(0, 7), st.integers(0, 7),
)


@settings(max_examples=300)
@given(paulis, paulis, paulis)
def test_pauli_group_laws(a, b, c):
    assert pauli_mul(pauli_mul(a, b), c) == pauli_mul(a, pauli_mul(b, c))
    assert pauli_mul(a, pauli_inverse(a)) == PauliOp.identity(3)
    ab, ba = pauli_mul(a, b), pauli_mul(b, a)
    assert (ab == ba) == commutes(a, b)


def test_group_enumeration():
    code = load("steane")
    group = enumerate_group(code.generators, code.n)
    assert len(group) == 64 and len(set(group)) == 64
    assert all(g.is_hermitian() for g in group)


@pytest.mark.parametrize("name", NAMES)
def test_corpus_is_valid(name):
    code = load(name).validate()
    assert code.k == 1
    assert parse_code(format_code(code)) == code


@pytest.mark.parametrize("text,msg", [
    ("[stabilizers]\nXX\nZZ\n[logical_x]\nX.\n[logical_z]\nZ.\n", "k ="),
    ("[stabilizers]\nX.\n[logical_x]\nX.\n[logical_z]\nZZ\n", "anticommutes"),
    ("[stabilizers]\nX..\nZ..\n[logical_x]\n.X.\n[logical_z]\n.Z.\n", "anticommute"),
    ("[stabilizers]\nXX.\nXX.\n[logical_x]\nXXX\n[logical_z]\nZZZ\n", "dependent"),
    ("[stabilizers]\niXX.\n.ZZ\n[logical_x]\nXXX\n[logical_z]\nZ.Z\n", "Hermitian"),
    ("[stabilizers]\nZZ.\n-ZZ.\n[logical_x]\nXXX\n[logical_z]\nZZZ\n", "dependent"),
])
def test_invalid_codes(text, msg):
    with pytest.raises(InvalidCode, match=msg):
        parse_code(text).validate()


@pytest.mark.parametrize("text", [
    "XX\n",
    "[stabilizers]\nXX\n[logical_x]\n[logical_z]\nZZ\n",
    "[bogus]\n",
    "[stabilizers]\nXX\n[logical_x]\nXXX\n[logical_z]\nZZ\n",
    "[stabilizers]\nXX\n[logical_x]\nX.\n[logical_z]\nZZ\n[distance] x\n",
])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_code(text)


def test_css_detection():
    assert is_css(load("steane")) and is_css(load("shor")) and is_css(load("qrm15"))
    assert not is_css(load("five13"))
    sx, sz = css_split(load("steane"))
    assert len(sx) == 3 and len(sz) == 3
    assert all(g.u == 0 for g in sx) and all(g.x == 0 for g in sz)


@pytest.mark.parametrize("name", NAMES)
def test_dual_involution(name):
    code = load(name)
    dual = dual_code(code).validate()
    assert dual_code(dual) == code
    assert is_css(dual) == is_css(code)


def test_weight_enumerators():
    steane = load("steane")
    sx, _ = css_split(steane)
    assert format_enumerator(weight_enumerator(enumerate_group(sx, 7), 7)) == "x^7 + 7*x^3*y^4"
    sx, _ = css_split(load("qrm15"))
    we = weight_enumerator(enumerate_group(sx, 15), 15)
    assert format_enumerator(we) == "x^15 + 15*x^7*y^8"
    assert weight_enumerator(load("five13").group(), 5).counts[4] == 15


def test_concat_shape():
    shor = concat(load("rep3x"), load("rep3z")).validate()
    assert shor.n == 9 and shor.m == 8
    assert shor == load("shor")
    triv = make_code([], "X", "Z")
    assert concat(triv, load("steane")) == load("steane")
