import pytest

from conftest import load
from merodec.decoder import (
    analyze,
    conjecture_probe,
    css_components,
    css_decoder,
    decoder_components,
    mero_decoder,
    mero_decoder_multi,
)
from merodec.exactnum import INF, ONE, ZERO, GaussianRational
from merodec.merofn import MeroFn, evaluate, ramification_index, rh_audit
from merodec.poly import MultiPoly, UniPoly, rational_roots
from merodec.stabcode import StabCode, InvalidCode, make_code, pauli_parse
from merodec.textparse import parse_mero

NAMES = ["five13", "steane", "shor", "rep3x", "rep3z", "qrm15"]


def test_multivariate_examples():
    z1, z2, z3 = (MultiPoly.variable(j, 3) for j in range(3))
    one = MultiPoly.const(1, 3)
    fx = mero_decoder_multi(load("rep3x"))
    assert fx.num == z1 * z2 * z3 + z1 + z2 + z3
    assert fx.den == one + z1 * z2 + z1 * z3 + z2 * z3
    fz = mero_decoder_multi(load("rep3z"))
    assert fz.num == z1 * z2 * z3 and fz.den == one


@pytest.mark.parametrize("name", ["five13", "steane", "shor", "rep3x", "rep3z"])
def test_multivariate_diagonal(name):
    code = load(name)
    assert mero_decoder_multi(code).diagonal() == mero_decoder(code)


@pytest.mark.parametrize("name", ["five13", "steane", "rep3x"])
def test_reference_state_independence(name):
    code = load(name)
    f = mero_decoder(code)
    seen = 0
    for a in range(1 << code.n):
        _, p, q = decoder_components(code, a) if _nonzero(code, a) else (None, None, None)
        if p is None:
            continue
        assert MeroFn(p, q) == f
        seen += 1
    assert seen > 1


def _nonzero(code, a):
    try:
        decoder_components(code, a)
        return True
    except ValueError:
        return False


def test_basis_state_as_bits():
    code = load("steane")
    a, _, _ = decoder_components(code, "0000000")
    assert a == 0
    with pytest.raises(ValueError):
        decoder_components(code, "01")


@pytest.mark.parametrize("name", ["steane", "shor", "qrm15", "rep3x", "rep3z"])
def test_enumerator_components_are_proportional(name):
    code = load(name)
    _, p, q = decoder_components(code)
    wp, wq = css_components(code)
    # (p, q) and (wp, wq) agree as vectors up to a common scalar
    assert p * wq == q * wp
    assert not (wp.is_zero() and wq.is_zero())
    k = p.lc() / wp.lc() if not p.is_zero() else q.lc() / wq.lc()
    assert p == wp.scale(k) and q == wq.scale(k)


def test_css_decoder_preconditions():
    with pytest.raises(ValueError):
        css_decoder(load("five13"))
    code = make_code(["ZZ.", ".ZZ"], "-XXX", "ZZZ")
    with pytest.raises(ValueError):
        css_decoder(code)


def test_repetition_edge_case_agrees():
    # S_X is empty for the Z-check repetition code; the enumerator formula
    # still matches the general decoder.
    code = load("rep3z")
    assert css_decoder(code, cross_check=True) == parse_mero("z^3")


@pytest.mark.parametrize("name", NAMES)
def test_fixed_points_are_roots_of_r(name):
    rep = analyze(load(name))
    assert rh_audit(rep.f).ok and rep.rh.ok
    finite = [s.where for s in rep.fixed_rational if s.where is not INF]
    assert finite == rational_roots(rep.r)
    for s in rep.fixed_rational:
        assert evaluate(rep.f, s.where) == s.where or evaluate(rep.f, s.where) is s.where
        assert s.order == ramification_index(rep.f, s.where)
    for s in rep.fixed_algebraic:
        assert (rep.r % s.where).is_zero()


def test_analyze_five13():
    rep = analyze(load("five13"))
    points = [s.where for s in rep.fixed_rational]
    assert points == [ZERO, INF]
    assert [str(s.where) for s in rep.fixed_algebraic] == ["z^4 + 1"]
    assert rep.fixed_algebraic[0].kind == "H"
    assert rep.coherent == ()


def test_analyze_steane_h_factors_not_stationary():
    rep = analyze(load("steane"))
    h = [s for s in rep.fixed_algebraic if s.kind == "H"]
    assert sorted(str(s.where) for s in h) == ["z^2 + 2*z - 1", "z^2 - 2*z - 1"]
    assert all(s.order == 1 for s in h)


def test_analyze_rejects_constants():
    with pytest.raises(ValueError):
        analyze(MeroFn(UniPoly([3])))


def test_analyze_identity():
    rep = analyze(parse_mero("z"))
    assert rep.fixed_rational == () and rep.rh.ok


def test_probe_qrm15():
    probe = conjecture_probe(load("qrm15"))
    assert probe[ZERO] == (7, True)
    assert all(ok for _, ok in probe.values())


def test_probe_requires_distance_and_css():
    code = load("steane")
    bare = StabCode(code.n, code.generators, code.logical_x, code.logical_z)
    with pytest.raises(ValueError):
        conjecture_probe(bare)
    with pytest.raises(ValueError):
        conjecture_probe(load("five13"))


def test_invalid_code_rejected():
    code = StabCode(2, (pauli_parse("XX"),), pauli_parse("X."), pauli_parse("Z."))
    with pytest.raises(InvalidCode):
        mero_decoder(code)
