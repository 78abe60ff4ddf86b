from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from oracles import central_difference, naive_xgcd
from reccalc.errors import DivisionByZero, InvalidArgument
from reccalc.exact_arith import (
    RONE,
    RX,
    XPoly,
    XRatFunc,
    format_xpoly,
    ratfunc_arith,
    ratfunc_derivative,
    xpoly_derivative,
    xpoly_gcd,
)
from strategies import nonzero_ratfuncs, nonzero_xpolys, rationals, ratfuncs, xpolys

x = XPoly.x()


def P(*coeffs):
    return XPoly(coeffs)


class TestXPoly:
    def test_canonical_zero(self):
        assert P(0, 0, 0) == XPoly()
        assert XPoly().degree == -1
        assert XPoly().coeffs == ()

    def test_trailing_coefficient_nonzero(self):
        p = P(1, 2, 0)
        assert p.degree == 1
        assert p.coeffs[-1] != 0

    @pytest.mark.parametrize(
        "p, expected",
        [(x * x, 2 * x), (P(2, 0, 4), P(0, 8)), (XPoly(), XPoly())],
    )
    def test_derivative(self, p, expected):
        assert xpoly_derivative(p) == expected

    def test_derivative_drops_degree(self):
        assert P(1, 2, 3, 4).derivative().degree == 2

    def test_rational_coefficients(self):
        p = XPoly([Fraction(1, 2), Fraction(-2, 3)])
        assert p.coeffs == (Fraction(1, 2), Fraction(-2, 3))
        assert p * 6 == P(3, -4)

    def test_gcd_examples(self):
        assert xpoly_gcd(P(-1, 0, 1), P(-1, 1)) == P(-1, 1)
        assert xpoly_gcd(P(2, 4), XPoly()) == P(Fraction(1, 2), 1)
        # x^2 + x = 1*(x^2 - 1) + (x + 1);  x^2 - 1 = (x - 1)(x + 1)
        assert xpoly_gcd(P(0, 1, 1), P(-1, 0, 1)) == P(1, 1)

    def test_gcd_zero_zero(self):
        with pytest.raises(InvalidArgument):
            xpoly_gcd(XPoly(), XPoly())

    def test_exact_div(self):
        assert P(-1, 0, 1).exact_div(P(1, 1)) == P(-1, 1)
        assert P(Fraction(1, 3), Fraction(1, 3)).exact_div(P(2, 2)) == P(Fraction(1, 6))

    def test_format(self):
        assert format_xpoly(P(-1, 0, 4)) == "4*x^2 - 1"
        assert format_xpoly(P(0, -1)) == "-x"
        assert format_xpoly(P(Fraction(1, 2), 0, Fraction(-3, 2))) == "-3/2*x^2 + 1/2"
        assert format_xpoly(XPoly()) == "0"

    @given(xpolys, xpolys)
    def test_divmod_identity(self, a, b):
        assume(not b.is_zero())
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree

    @given(nonzero_xpolys, nonzero_xpolys, xpolys)
    def test_gcd_divides_and_is_monic(self, a, b, c):
        a, b = a * c if not c.is_zero() else a, b * c if not c.is_zero() else b
        g = xpoly_gcd(a, b)
        assert g.lc == 1
        assert (a % g).is_zero() and (b % g).is_zero()
        assert g == naive_xgcd(a, b)

    @given(xpolys, xpolys)
    def test_ring_axioms(self, a, b):
        assert a + b == b + a
        assert a * b == b * a
        assert (a - b) + b == a
        assert (a * b).derivative() == a.derivative() * b + a * b.derivative()

    @given(xpolys, rationals)
    def test_evaluation_homomorphism(self, a, v):
        assert (a * a)(v) == a(v) ** 2


class TestXRatFunc:
    def test_examples(self):
        assert 1 / (RX - 1) + 1 / (RX + 1) == XRatFunc(2 * x, x * x - 1)
        assert RX * (1 / RX) == RONE
        assert XRatFunc(x * x - 1, x + 1) == XRatFunc(x - 1)

    def test_canonical_form(self):
        r = XRatFunc(P(2, 2), P(4, 0, 4))
        assert r.den.lc == 1
        assert xpoly_gcd(r.num, r.den).degree == 0
        assert r == XRatFunc(P(1, 1), P(2, 0, 2))
        assert hash(r) == hash(XRatFunc(P(1, 1), P(2, 0, 2)))

    def test_derivative_examples(self):
        assert ratfunc_derivative(RX) == RONE
        assert ratfunc_derivative(1 / (RX - 1)) == XRatFunc(-1, (x - 1) ** 2)
        # (x^2+1)/x = x + 1/x  ->  1 - 1/x^2
        assert ratfunc_derivative((RX * RX + 1) / RX) == XRatFunc(x * x - 1, x * x)

    def test_division_by_zero(self):
        with pytest.raises(InvalidArgument):
            ratfunc_arith(RX, XRatFunc(0), "div")
        with pytest.raises(DivisionByZero):
            XRatFunc(1, 0)

    def test_ratfunc_arith_ops(self):
        a, b = RX + 1, RX - 1
        assert ratfunc_arith(a, b, "add") == 2 * RX
        assert ratfunc_arith(a, b, "sub") == XRatFunc(2)
        assert ratfunc_arith(a, b, "mul") == RX * RX - 1
        assert ratfunc_arith(a, b, "div") == XRatFunc(x + 1, x - 1)

    def test_format(self):
        assert str(XRatFunc(x + 1, x * x - 1)) == "1/(x - 1)"
        assert str(XRatFunc(x * x + 1, x)) == "(x^2 + 1)/x"

    @given(ratfuncs)
    def test_canonicalization_idempotent(self, a):
        again = XRatFunc(a.num, a.den)
        assert again.num == a.num and again.den == a.den
        assert a.den.lc == 1
        assert xpoly_gcd(a.num, a.den).degree <= 0 or a.num.is_zero()

    @given(ratfuncs, ratfuncs, ratfuncs)
    def test_field_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == XRatFunc(0)

    @given(nonzero_ratfuncs)
    def test_inverse(self, a):
        assert a * a.inverse() == RONE
        assert a / a == RONE

    @given(ratfuncs, ratfuncs)
    def test_leibniz(self, a, b):
        assert (a * b).derivative() == a.derivative() * b + a * b.derivative()

    @given(ratfuncs, st.integers(-20, 20))
    def test_derivative_matches_finite_difference(self, a, k):
        x0 = Fraction(k, 7)
        assume(a.den(x0) != 0)
        h = Fraction(1, 10**12)
        assume(a.den(x0 + h) != 0 and a.den(x0 - h) != 0)
        exact = a.derivative()(x0)
        approx = central_difference(a, x0, h)
        assert abs(exact - approx) <= Fraction(1, 10**6) * (1 + abs(exact))
