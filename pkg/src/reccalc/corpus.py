"""Seeded random recurrences for property tests and survey scripts."""

from __future__ import annotations

import random
from fractions import Fraction

from reccalc.exact_arith import XPoly, XRatFunc
from reccalc.recurrence import CharPoly, LinearRecurrence, char_poly_of


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_xpoly(rng: random.Random, max_degree: int = 2, bound: int = 9, nonzero: bool = False) -> XPoly:
    while True:
        p = XPoly(random_rational(rng, bound) for _ in range(rng.randint(0, max_degree) + 1))
        if not (nonzero and p.is_zero()):
            return p


def random_ratfunc(
    rng: random.Random, max_degree: int = 2, bound: int = 9, polynomial: bool = False, nonzero: bool = False
) -> XRatFunc:
    num = random_xpoly(rng, max_degree, bound, nonzero=nonzero)
    if polynomial or rng.random() < 0.5:
        return XRatFunc(num)
    return XRatFunc(num, random_xpoly(rng, max_degree, bound, nonzero=True))


def random_recurrence(
    rng: random.Random,
    order: int,
    max_degree: int = 2,
    bound: int = 9,
    polynomial: bool = False,
    with_initial_values: bool = True,
) -> LinearRecurrence:
    """Coefficients in Q(x) (or Q[x]) with nonzero last coefficient.

    Initial values are random polynomials of degree <= max_degree.
    """
    coeffs = [random_ratfunc(rng, max_degree, bound, polynomial) for _ in range(order - 1)]
    coeffs.append(random_ratfunc(rng, max_degree, bound, polynomial, nonzero=True))
    init = None
    if with_initial_values:
        init = tuple(XRatFunc(random_xpoly(rng, max_degree, bound)) for _ in range(order))
    return LinearRecurrence(tuple(coeffs), init)


def random_charpoly(rng: random.Random, order: int, **kw) -> CharPoly:
    return char_poly_of(random_recurrence(rng, order, with_initial_values=False, **kw))
