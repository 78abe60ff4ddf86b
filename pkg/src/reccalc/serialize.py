"""JSON encoding of rational functions, t-polynomials and recurrences.

Rationals are strings (``"-3/2"``) so no integer width is assumed.  A TPoly is
``{"var": "t", "coeffs": [c_0, ..., c_deg]}`` with each coefficient
``{"num": [...], "den": [...]}`` listing x-coefficients in ascending order.
"""

from __future__ import annotations

from fractions import Fraction

from reccalc.errors import InvalidArgument
from reccalc.exact_arith import XPoly, XRatFunc
from reccalc.recurrence import LinearRecurrence
from reccalc.sequences import VerificationReport
from reccalc.tpoly import TPoly


def rational_to_json(q: Fraction) -> str:
    return str(q)


def xpoly_to_json(p: XPoly) -> list[str]:
    return [rational_to_json(c) for c in p.coeffs]


def ratfunc_to_json(r: XRatFunc) -> dict:
    return {"num": xpoly_to_json(r.num), "den": xpoly_to_json(r.den)}


def tpoly_to_json(p: TPoly) -> dict:
    return {"var": "t", "coeffs": [ratfunc_to_json(c) for c in p.coeffs]}


def recurrence_to_json(rec: LinearRecurrence) -> dict:
    return {
        "order": rec.order,
        "coeffs": [ratfunc_to_json(c) for c in rec.coeffs],
        "initial_values": None
        if rec.initial_values is None
        else [ratfunc_to_json(v) for v in rec.initial_values],
    }


def report_to_json(report: VerificationReport) -> dict:
    return {
        "passed": report.passed,
        "checked_range": list(report.checked_range),
        "first_failure": report.first_failure,
        "residual_at_failure": None
        if report.residual_at_failure is None
        else ratfunc_to_json(report.residual_at_failure),
    }


def ratfunc_from_json(obj: dict) -> XRatFunc:
    try:
        num = XPoly(Fraction(s) for s in obj["num"])
        den = XPoly(Fraction(s) for s in obj["den"])
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidArgument(f"bad rational function encoding: {obj!r}") from e
    r = XRatFunc(num, den)
    if r.num != num or r.den != den:
        raise InvalidArgument(f"rational function not in canonical form: {obj!r}")
    return r


def tpoly_from_json(obj: dict) -> TPoly:
    if obj.get("var") != "t":
        raise InvalidArgument(f"expected a polynomial in t: {obj!r}")
    return TPoly(ratfunc_from_json(c) for c in obj["coeffs"])


def recurrence_from_json(obj: dict) -> LinearRecurrence:
    coeffs = tuple(ratfunc_from_json(c) for c in obj["coeffs"])
    if len(coeffs) != obj.get("order"):
        raise InvalidArgument("order does not match the number of coefficients")
    init = obj.get("initial_values")
    return LinearRecurrence(coeffs, None if init is None else tuple(ratfunc_from_json(v) for v in init))
