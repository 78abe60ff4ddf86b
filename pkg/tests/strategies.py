from fractions import Fraction

from hypothesis import strategies as st

from reccalc.exact_arith import XPoly, XRatFunc
from reccalc.tpoly import TPoly

rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))

xpolys = st.lists(rationals, max_size=4).map(XPoly)
nonzero_xpolys = xpolys.filter(lambda p: not p.is_zero())

ratfuncs = st.builds(XRatFunc, xpolys, nonzero_xpolys)
nonzero_ratfuncs = ratfuncs.filter(lambda r: not r.is_zero())

small_ratfuncs = st.builds(
    XRatFunc,
    st.lists(rationals, max_size=3).map(XPoly),
    st.lists(rationals, min_size=1, max_size=2).map(XPoly).filter(lambda p: not p.is_zero()),
)


@st.composite
def tpolys(draw, max_degree=3, monic=False):
    deg = draw(st.integers(0 if not monic else 1, max_degree))
    coeffs = [draw(small_ratfuncs) for _ in range(deg)]
    coeffs.append(XRatFunc(1) if monic else draw(small_ratfuncs.filter(lambda r: not r.is_zero())))
    return TPoly(coeffs)


@st.composite
def polynomial_monic_tpolys(draw, max_degree=3):
    deg = draw(st.integers(1, max_degree))
    coeffs = [XRatFunc(draw(st.lists(rationals, max_size=3).map(XPoly))) for _ in range(deg)]
    return TPoly(coeffs + [XRatFunc(1)])
