"""Exact calculus of linear recurrences with rational-function coefficients.

Sequences f_n(x) defined by f_n = a_1 f_{n-1} + ... + a_k f_{n-k} are handled
through their characteristic polynomials in t over Q(x).  The package derives
recurrences for termwise derivatives, sums and products, and checks every
derived relation against explicitly unrolled terms.
"""

from reccalc.errors import (
    DivisionByZero,
    ExactDivisionError,
    InvalidArgument,
    NotFound,
    ParseError,
)
from reccalc.exact_arith import XPoly, XRatFunc
from reccalc.tpoly import TPoly
from reccalc.recurrence import (
    Certificate,
    CharPoly,
    DerivedRecurrence,
    LinearRecurrence,
    char_poly_of,
    derivative_chain,
    derivative_rule,
    iterated_derivative_rule,
    product_rule,
    recurrence_of,
    sum_rule,
)
from reccalc.sequences import (
    TermList,
    VerificationReport,
    catalog,
    differentiate_terms,
    generate_terms,
    verify_recurrence,
)

__all__ = [
    "Certificate",
    "CharPoly",
    "DerivedRecurrence",
    "DivisionByZero",
    "ExactDivisionError",
    "InvalidArgument",
    "LinearRecurrence",
    "NotFound",
    "ParseError",
    "TPoly",
    "TermList",
    "VerificationReport",
    "XPoly",
    "XRatFunc",
    "catalog",
    "char_poly_of",
    "derivative_chain",
    "derivative_rule",
    "differentiate_terms",
    "generate_terms",
    "iterated_derivative_rule",
    "product_rule",
    "recurrence_of",
    "sum_rule",
    "verify_recurrence",
]
