"""Brute-force oracle: unroll recurrences into exact terms and check relations.

Nothing here uses characteristic polynomials.  Terms are computed by direct
unrolling, derivatives term by term, and a candidate recurrence is accepted
only if its residual f_n - sum(a_l f_{n-l}) is identically zero as a rational
function of x.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from reccalc.errors import InvalidArgument, NotFound
from reccalc.exact_arith import RZERO, XRatFunc
from reccalc.recurrence import LinearRecurrence

MAX_TERMS = 64


@dataclass(frozen=True)
class TermList:
    terms: tuple[XRatFunc, ...]
    source: str = ""

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, n: int) -> XRatFunc:
        return self.terms[n]


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    checked_range: tuple[int, int]
    first_failure: Optional[int] = None
    residual_at_failure: Optional[XRatFunc] = None

    def __post_init__(self):
        assert self.passed == (self.first_failure is None)


def generate_terms(
    rec: LinearRecurrence, count: int, max_terms: int = MAX_TERMS, source: str = ""
) -> TermList:
    if rec.initial_values is None:
        raise InvalidArgument("cannot generate terms without initial values")
    k = rec.order
    if count < k:
        raise InvalidArgument(f"count must be at least the order {k}")
    if count > max_terms:
        raise InvalidArgument(f"refusing to generate {count} terms (limit {max_terms}; raise max_terms)")
    terms = list(rec.initial_values)
    coeffs = rec.coeffs
    for n in range(k, count):
        acc = RZERO
        for l, a in enumerate(coeffs, start=1):
            if not a.is_zero():
                acc = acc + a * terms[n - l]
        terms.append(acc)
    return TermList(tuple(terms), source or "recurrence")


def differentiate_terms(tl: TermList, times: int = 1) -> TermList:
    if times < 0:
        raise InvalidArgument("times must be nonnegative")
    terms = tl.terms
    for _ in range(times):
        terms = tuple(t.derivative() for t in terms)
    return TermList(terms, f"d^{times}/dx^{times} {tl.source}" if times else tl.source)


def combine_terms(a: TermList, b: TermList, op: Callable, name: str) -> TermList:
    n = min(len(a), len(b))
    return TermList(tuple(op(a[i], b[i]) for i in range(n)), f"({a.source}) {name} ({b.source})")


def sum_terms(a: TermList, b: TermList) -> TermList:
    return combine_terms(a, b, lambda u, v: u + v, "+")


def product_terms(a: TermList, b: TermList) -> TermList:
    return combine_terms(a, b, lambda u, v: u * v, "*")


def residual(candidate: LinearRecurrence, tl: TermList, n: int) -> XRatFunc:
    """f_n - sum(a_l f_{n-l}); requires n >= order."""
    acc = tl[n]
    for l, a in enumerate(candidate.coeffs, start=1):
        if not a.is_zero():
            acc = acc - a * tl[n - l]
    return acc


def verify_recurrence(candidate: LinearRecurrence, tl: TermList, start: int, end: int) -> VerificationReport:
    """Check that the candidate annihilates tl[start..end] exactly."""
    if start < candidate.order:
        raise InvalidArgument(f"start {start} is below the candidate order {candidate.order}")
    if end >= len(tl):
        raise InvalidArgument(f"end {end} is beyond the {len(tl)} available terms")
    if end < start:
        raise InvalidArgument(f"empty range [{start}, {end}]")
    for n in range(start, end + 1):
        r = residual(candidate, tl, n)
        if not r.is_zero():
            return VerificationReport(False, (start, end), n, r)
    return VerificationReport(True, (start, end))


def holds_at(candidate: LinearRecurrence, tl: TermList, start: int, end: int) -> dict[int, bool]:
    """Per-index outcome, for reporting indices outside the guaranteed range."""
    start = max(start, candidate.order)
    return {n: residual(candidate, tl, n).is_zero() for n in range(start, end + 1)}


# --- named families ------------------------------------------------------------------

_CATALOG = {
    # T_0 = 1, T_1 = x
    "chebyshev-t": (["2*x", -1], [1, "x"]),
    # U_0 = 1, U_1 = 2x
    "chebyshev-u": (["2*x", -1], [1, "2*x"]),
    # F_1 = 1, F_2 = x
    "fibonacci-poly": (["x", 1], [1, "x"]),
    # P_1 = 1, P_2 = 2x
    "pell-poly": (["2*x", 1], [1, "2*x"]),
    "power-x": (["x"], [1]),
    # initial values are arbitrary; the derived relation does not depend on them
    "paper-ex3": (["x+1", "-x"], [1, "x"]),
}

CATALOG_NAMES = tuple(_CATALOG)


def catalog(name: str) -> LinearRecurrence:
    try:
        coeffs, init = _CATALOG[name]
    except KeyError:
        raise NotFound(f"unknown family {name!r}; known: {', '.join(CATALOG_NAMES)}") from None
    return LinearRecurrence(tuple(coeffs), tuple(init))
