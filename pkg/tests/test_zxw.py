import pytest

from merodec import zxw
from merodec.exactnum import BOT, INF, ONE, ZERO, GaussianRational, gq
from merodec.projective import Matrix, Mobius, ProjPoint, proj_apply, segre
from merodec.textparse import ParseError

GRID = zxw.SPIDER_GRID


def test_spider_matrices():
    assert zxw.spider_matrix("Z", 1, 2) == Matrix([[1, 0, 0, 0], [0, 0, 0, 1]])
    assert zxw.spider_matrix("X", 1, 2) == Matrix([[2, 0, 0, 2], [0, 2, 2, 0]])
    assert zxw.spider_matrix("W", 1, 2) == Matrix([[0, 1, 1, 0], [0, 0, 0, 1]])
    assert zxw.spider_matrix("W", 1, 0) == Matrix([[0], [1]])
    assert zxw.spider_matrix("Z", 2, 0, phase=-1) == Matrix([[1], [0], [0], [-1]])


@pytest.mark.parametrize("args", [("W", 2, 1), ("Z", 0, 0), ("Z", 7, 6), ("Z", 1, 1, 0), ("Q", 1, 1)])
def test_spider_matrix_errors(args):
    with pytest.raises(ValueError):
        zxw.spider_matrix(*args)


def _proj(x):
    return x if x is BOT else ProjPoint.from_ext(x)


def _ext(p):
    return p if p is BOT else p.to_ext()


@pytest.mark.parametrize("color", ["Z", "X", "W"])
def test_matrix_projectivization_matches_table(color):
    m = zxw.spider_matrix(color, 1, 2)
    op = zxw.OPS[zxw.COLOR_OP[color]]
    for w in GRID:
        for v in GRID:
            got = _ext(proj_apply(m, segre([_proj(w), _proj(v)])))
            want = op(w, v)
            assert got is want or got == want, (color, w, v)


def test_table_values():
    assert zxw.rmid(1, -1) is BOT and zxw.rmid(-1, 1) is BOT
    assert zxw.rmid(INF, 5) == gq(5)
    assert zxw.rmid(2, 3) == gq("7/5")
    assert zxw.rmid(INF, INF) is INF
    assert zxw.rmid(1, 1) == ONE and zxw.rmid(2, -2) is INF
    assert zxw.gmul(0, INF) is BOT and zxw.wadd(INF, INF) is BOT


def test_phase_spiders():
    a = gq(3)
    assert zxw.phase_mobius("Z", a)(gq(6)) == gq(2)  # z -> z / a
    m = zxw.phase_mobius("X", a)
    assert m == Mobius(1 + a, 1 - a, 1 - a, 1 + a)
    assert zxw.phase_mobius("X", -1)(INF) == ZERO


def test_parse_examples():
    assert zxw.parse("g(z1, z2, z3)") == zxw.GMul(zxw.Var("z1"), zxw.Var("z2"), zxw.Var("z3"))
    assert zxw.parse("r(z1, r(z2, z3))") == zxw.RMid(zxw.Var("z1"), zxw.RMid(zxw.Var("z2"), zxw.Var("z3")))
    assert zxw.eval_pointwise(zxw.parse("g()"), {}) == ONE
    assert zxw.eval_pointwise(zxw.parse("r()"), {}) is INF
    assert zxw.eval_pointwise(zxw.parse("w()"), {}) == ZERO
    e = zxw.parse("mobius([[1, 1], [1, -1]], w(a, -1/2, 1+2*i))")
    assert zxw.parse(zxw.format_expr(e)) == e


@pytest.mark.parametrize("text,pos", [
    ("g(z1,", 5), ("f(z1)", 0), ("g(z1 z2)", 5), ("g(1))", 4), ("mobius([[1,0],[0,0]], z)", 0), ("", 0),
])
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as err:
        zxw.parse(text)
    assert err.value.pos == pos


def test_pointwise_examples():
    ev = zxw.eval_pointwise
    assert ev(zxw.parse("r(1, -1)"), {}) is BOT
    assert ev(zxw.parse("w(inf, inf)"), {}) is BOT
    assert ev(zxw.parse("r(r(2, 3), 0)"), {}) == gq("5/7")
    assert ev(zxw.parse("g(bot, 1)"), {}) is BOT
    assert ev(zxw.parse("g(x)"), {"x": 4}) == gq(4)
    with pytest.raises(KeyError):
        ev(zxw.parse("g(x)"), {})


def test_symbolic_examples():
    f = zxw.eval_symbolic(zxw.parse("g(z1, z2, z3)"))
    assert str(f) == "z1*z2*z3"
    f = zxw.eval_symbolic(zxw.parse("w(z1, z2)"))
    assert str(f.diagonal()) == "2*z"
    f = zxw.eval_symbolic(zxw.parse("r(a, inf)"))
    assert str(f) == "z1"
    with pytest.raises(ValueError):
        zxw.eval_symbolic(zxw.parse("g(" + ", ".join(f"v{k}" for k in range(9)) + ")"))
    with pytest.raises(ValueError):
        zxw.eval_symbolic(zxw.parse("g(inf, 0)"))


def test_unary_nodes_are_identity():
    for op in "grw":
        e = zxw.parse(f"{op}(x)")
        for v in GRID:
            got = zxw.eval_pointwise(e, {"x": v})
            assert got is v or got == v


def test_monoid_failure_reports_counterexample():
    check = zxw.verify_spider_monoid("r", samples=[ZERO, ONE, -ONE, INF])
    assert check
    bad = zxw.MonoidCheck(False, ("associativity", 1, 2, 3))
    assert not bad and bad.counterexample[0] == "associativity"
