import random
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reccalc.corpus import random_recurrence
from reccalc.dsl import parse_expr, parse_spec, print_spec, read_spec
from reccalc.errors import ParseError
from reccalc.exact_arith import RX, XRatFunc
from reccalc.recurrence import LinearRecurrence
from reccalc.sequences import CATALOG_NAMES, catalog

BAD = Path(__file__).parent / "data" / "bad"
x = RX


class TestParse:
    def test_chebyshev(self):
        rec = parse_spec("f[n] = 2*x*f[n-1] - f[n-2]; f[0] = 1; f[1] = x")
        assert rec == catalog("chebyshev-t")

    def test_shared_constant_root_without_initial_values(self):
        rec = parse_spec("f[n] = (x+1)*f[n-1] - x*f[n-2]")
        assert rec.coeffs == (x + 1, -x)
        assert rec.initial_values is None

    def test_omitted_lag(self):
        rec = parse_spec("f[n] = f[n-2]")
        assert rec.order == 2
        assert rec.coeffs == (XRatFunc(0), XRatFunc(1))

    def test_flexible_forms(self):
        a = parse_spec("f[n] = f[n-1]*x + 3*(f[n-2] - x*f[n-1])/2")
        assert a.coeffs == (x - 3 * x / 2, XRatFunc.coerce("3/2"))
        b = parse_spec("# comment\nf[n] = (x^2 - 1)/(x + 1)*f[n-1]  # trailing\n\nf[0] = x^-1\n")
        assert b.coeffs == (x - 1,) and b.initial_values == (1 / x,)

    def test_multiline_inside_parentheses(self):
        rec = parse_spec("f[n] = (2*x\n  + 1)*f[n-1]")
        assert rec.coeffs == (2 * x + 1,)

    def test_parse_expr(self):
        assert parse_expr("-x^2 + 1/2") == XRatFunc.coerce(1) / 2 - x * x
        assert parse_expr("(x+1)^2/(x+1)") == x + 1

    @pytest.mark.parametrize(
        "name, line, col, fragment",
        [
            ("bad_utf8.rec", None, None, None),
            ("dangling_op.rec", 1, 20, "end of line"),
            ("div_zero.rec", 1, 14, "division by zero"),
            ("duplicate_init.rec", 3, 3, "duplicate initial value f[0]"),
            ("forward_lag.rec", 1, 13, "f[n-L]"),
            ("huge_exponent.rec", 1, 10, "exponent"),
            ("inhomogeneous.rec", 2, 1, "inhomogeneous"),
            ("init_beyond_order.rec", 3, 3, "not an initial value"),
            ("missing_init.rec", 2, 3, "missing initial value(s) f[0]"),
            ("n_dependent.rec", 1, 8, "depend on n"),
            ("no_recurrence.rec", 1, 1, "missing recurrence"),
            ("nonlinear.rec", 1, 16, "not linear"),
            ("order_mismatch.rec", 1, 17, "order is not 2"),
            ("two_recurrences.rec", 2, 3, "more than one"),
            ("unbalanced.rec", 1, 23, "expected ')'"),
            ("unknown_name.rec", 1, 8, "unknown name 'sin'"),
        ],
    )
    def test_malformed_corpus(self, name, line, col, fragment):
        data = (BAD / name).read_bytes()
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError:
            assert line is None
            return
        with pytest.raises(ParseError) as info:
            parse_spec(text)
        err = info.value
        assert (err.line, err.column) == (line, col)
        assert fragment in err.message
        lines = text.split("\n")
        assert 1 <= err.line <= len(lines)
        assert 1 <= err.column <= len(lines[err.line - 1]) + 1

    def test_read_spec_collects_diagnostic(self):
        src = read_spec("f[n] = f[n-1] +")
        assert src.parsed is None
        assert src.diagnostics and src.diagnostics[0][:2] == (1, 16)


class TestRoundTrip:
    @pytest.mark.parametrize("name", CATALOG_NAMES)
    def test_catalog(self, name):
        rec = catalog(name)
        assert parse_spec(print_spec(rec)) == rec

    def test_printed_form(self):
        assert print_spec(catalog("chebyshev-t")) == "f[n] = 2*x*f[n-1] - f[n-2]\nf[0] = 1\nf[1] = x\n"
        rec = LinearRecurrence(["1/(x-1)", 0, "-(x^2+1)/x"], [1, "x/3", "-1/2"])
        text = print_spec(rec)
        assert text == "f[n] = (1/(x - 1))*f[n-1] - ((x^2 + 1)/x)*f[n-3]\nf[0] = 1\nf[1] = 1/3*x\nf[2] = -1/2\n"
        assert parse_spec(text) == rec

    @given(st.integers(0, 10**6), st.integers(1, 4), st.booleans())
    def test_random(self, seed, k, with_init):
        rec = random_recurrence(random.Random(seed), k, with_initial_values=with_init)
        text = print_spec(rec)
        again = parse_spec(text)
        assert again == rec
        assert print_spec(again) == text


@given(st.text(alphabet="fnx0123456789+-*/^()[]=; \n#", max_size=40))
def test_token_soup_never_crashes(text):
    try:
        rec = parse_spec(text)
    except ParseError as e:
        assert e.line >= 1 and e.column >= 1
    else:
        assert isinstance(rec, LinearRecurrence)
