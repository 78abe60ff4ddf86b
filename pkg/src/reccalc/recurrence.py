"""Recurrences, characteristic polynomials and the rules that combine them.

A recurrence f_n = a_1 f_{n-1} + ... + a_k f_{n-k} corresponds to the monic
characteristic polynomial p(t) = t^k - a_1 t^(k-1) - ... - a_k.  Everything
here manipulates p directly; no roots are ever computed.

Derivative rule
    If the a_i depend on x, the termwise x-derivatives f'_n satisfy the
    recurrence with characteristic polynomial p^2 / gcd(p, p'), where p'
    differentiates each coefficient of p with respect to x.  The pair
    beta = -p'/q, gamma = p/q (q the gcd) certifies this through the identity
    beta*p + gamma*p' = 0, and gamma*p is the derived polynomial.

Sum rule
    Termwise sums satisfy p_a * p_b, or lcm(p_a, p_b) when sharpened.

Product rule
    Termwise products satisfy Res_z(p_a(z), z^l p_b(t/z)), whose roots are
    the pairwise products of roots; degree k*l.

None of these orders is claimed to be minimal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from reccalc.errors import ExactDivisionError, InvalidArgument
from reccalc.exact_arith import RONE, XRatFunc
from reccalc.tpoly import (
    ONE_T,
    TPoly,
    tpoly_exact_div,
    tpoly_gcd,
    tpoly_lcm,
    tpoly_resultant_z,
)


def _ratfuncs(values) -> tuple[XRatFunc, ...]:
    return tuple(XRatFunc.coerce(v) for v in values)


@dataclass(frozen=True)
class LinearRecurrence:
    """f_n = sum(coeffs[l-1] * f_{n-l} for l in 1..k) for n >= k.

    ``coeffs`` and ``initial_values`` accept anything XRatFunc.coerce does
    (ints, Fractions, XPoly, or expression strings such as ``"2*x"``).
    """

    coeffs: tuple[XRatFunc, ...]
    initial_values: Optional[tuple[XRatFunc, ...]] = None

    def __post_init__(self):
        coeffs = _ratfuncs(self.coeffs)
        if not coeffs:
            raise InvalidArgument("a recurrence needs order >= 1")
        if coeffs[-1].is_zero():
            raise InvalidArgument(
                f"coefficient of f[n-{len(coeffs)}] is zero, so the order is not {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)
        if self.initial_values is not None:
            init = _ratfuncs(self.initial_values)
            if len(init) != len(coeffs):
                raise InvalidArgument(
                    f"order {len(coeffs)} recurrence needs {len(coeffs)} initial values, got {len(init)}"
                )
            object.__setattr__(self, "initial_values", init)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def without_initial_values(self) -> LinearRecurrence:
        return LinearRecurrence(self.coeffs)

    def with_initial_values(self, values: Sequence) -> LinearRecurrence:
        return LinearRecurrence(self.coeffs, tuple(values))


@dataclass(frozen=True)
class CharPoly:
    poly: TPoly

    def __post_init__(self):
        if not isinstance(self.poly, TPoly):
            object.__setattr__(self, "poly", TPoly(self.poly))
        if self.poly.degree < 1 or not self.poly.is_monic():
            raise InvalidArgument(f"characteristic polynomial must be monic of degree >= 1: {self.poly}")

    @property
    def degree(self) -> int:
        return self.poly.degree

    def __str__(self) -> str:
        return str(self.poly)


@dataclass(frozen=True)
class Certificate:
    """beta*p + gamma*p' = 0, with gamma*p the derived polynomial."""

    beta: TPoly
    gamma: TPoly
    q: TPoly

    def check(self, p: TPoly) -> bool:
        return (self.beta * p + self.gamma * p.x_derivative()).is_zero()


@dataclass(frozen=True)
class DerivedRecurrence:
    charpoly: CharPoly
    recurrence: LinearRecurrence
    certificate: Certificate
    valid_from: int
    source: CharPoly = field(repr=False, default=None)

    @property
    def order(self) -> int:
        return self.recurrence.order

    @property
    def gcd(self) -> TPoly:
        return self.certificate.q


def char_poly_of(rec: LinearRecurrence) -> CharPoly:
    k = rec.order
    coeffs = [-a for a in reversed(rec.coeffs)] + [RONE]
    assert len(coeffs) == k + 1
    return CharPoly(TPoly(coeffs))


def recurrence_of(cp: CharPoly | TPoly) -> LinearRecurrence:
    p = cp.poly if isinstance(cp, CharPoly) else cp
    if not p.is_monic():
        raise InvalidArgument(f"not monic: {p}")
    k = p.degree
    return LinearRecurrence(tuple(-p.coeff(k - l) for l in range(1, k + 1)))


def derivative_rule(cp: CharPoly, valid_from: Optional[int] = None) -> DerivedRecurrence:
    """Recurrence for the termwise x-derivatives of any sequence with char. poly cp.

    Depends only on cp, never on initial values.  ``valid_from`` defaults to
    2k: the derived relation is guaranteed for n >= 2k when the source
    relation holds from n >= k.  Pass the source's own threshold plus k when
    chaining.
    """
    p = cp.poly
    k = p.degree
    dp = p.x_derivative()
    if dp.is_zero():
        # constant coefficients: gcd(p, 0) = p and derivatives obey p itself
        q = p
    else:
        q = tpoly_gcd(p, dp)
    try:
        beta = -tpoly_exact_div(dp, q)
        gamma = tpoly_exact_div(p, q)
    except ExactDivisionError as e:
        raise ExactDivisionError(f"gcd does not divide its arguments: {e}") from e
    derived = gamma * p
    cert = Certificate(beta=beta, gamma=gamma, q=q)
    if not cert.check(p):
        raise ExactDivisionError("certificate identity beta*p + gamma*p' = 0 failed")
    new_cp = CharPoly(derived)
    return DerivedRecurrence(
        charpoly=new_cp,
        recurrence=recurrence_of(new_cp),
        certificate=cert,
        valid_from=2 * k if valid_from is None else valid_from,
        source=cp,
    )


def derivative_chain(cp: CharPoly, m: int) -> list[DerivedRecurrence]:
    """Derivative rule applied m times; entry i covers the (i+1)-th derivative.

    Each step starts from the previous step's characteristic polynomial and
    recomputes its own gcd.  The validity threshold accumulates: the j-th step
    holds from (threshold of step j-1) + deg(step j-1 polynomial).
    """
    if m < 1:
        raise InvalidArgument("number of derivatives must be >= 1")
    chain = []
    cur = cp
    threshold = cp.degree
    for _ in range(m):
        threshold += cur.degree
        step = derivative_rule(cur, valid_from=threshold)
        chain.append(step)
        cur = step.charpoly
    return chain


def iterated_derivative_rule(cp: CharPoly, m: int) -> DerivedRecurrence:
    return derivative_chain(cp, m)[-1]


def sum_rule(a: CharPoly, b: CharPoly, sharpen: bool = True) -> CharPoly:
    if sharpen:
        return CharPoly(tpoly_lcm(a.poly, b.poly))
    return CharPoly(a.poly * b.poly)


def _split_t_power(p: TPoly) -> tuple[int, TPoly]:
    m = 0
    while p.coeff(m).is_zero():
        m += 1
    return m, TPoly(p.coeffs[m:])


def product_rule(a: CharPoly, b: CharPoly) -> CharPoly:
    """Characteristic polynomial of degree k*l for termwise products."""
    k, l = a.degree, b.degree
    ma, ra = _split_t_power(a.poly)
    mb, rb = _split_t_power(b.poly)
    # zero roots of either side only produce zero products
    zero_roots = ma * l + mb * k - ma * mb
    ka, lb = ra.degree, rb.degree
    if ka == 0 or lb == 0:
        core = ONE_T
    else:
        # a(z) with constant-in-t coefficients; z^l b(t/z) = sum_j b_j t^j z^(l-j)
        fz = [TPoly.constant(c) for c in ra.coeffs]
        gz = [TPoly.monomial(lb - i, rb.coeff(lb - i)) for i in range(lb + 1)]
        core = tpoly_resultant_z(fz, gz).monic()
    result = core.shift(zero_roots)
    if result.degree != k * l:
        raise ExactDivisionError(f"product rule produced degree {result.degree}, expected {k * l}")
    return CharPoly(result)
