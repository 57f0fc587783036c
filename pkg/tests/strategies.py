from fractions import Fraction

from hypothesis import strategies as st

from merodec.exactnum import BOT, INF, GaussianRational
from merodec.poly import UniPoly

small_fracs = st.builds(
    Fraction,
    st.integers(-12, 12),
    st.integers(1, 6),
)
gaussians = st.builds(GaussianRational, small_fracs, small_fracs)
nonzero_gaussians = gaussians.filter(bool)
gaussian_ints = st.builds(GaussianRational, st.integers(-4, 4), st.integers(-4, 4))

extended = st.one_of(gaussians, st.just(INF))
pointed = st.one_of(gaussians, st.just(INF), st.just(BOT))


def polys(max_deg=4, coeffs=gaussian_ints):
    return st.lists(coeffs, min_size=0, max_size=max_deg + 1).map(UniPoly)


nonzero_polys = polys().filter(lambda p: not p.is_zero())
nonconst_polys = polys().filter(lambda p: p.deg >= 1)
