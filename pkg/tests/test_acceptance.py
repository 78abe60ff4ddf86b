"""Acceptance criteria, one test each; every comparison is exact.

Run alone with ``pytest tests/test_acceptance.py``; a PASS/FAIL line per
criterion is printed in the terminal summary.
"""

import io
import json
import random
import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

from oracles import naive_tgcd
from reccalc.cli import main
from reccalc.corpus import random_charpoly, random_recurrence
from reccalc.dsl import parse_spec, print_spec
from reccalc.exact_arith import RX, XPoly, XRatFunc
from reccalc.recurrence import (
    CharPoly,
    char_poly_of,
    derivative_rule,
    iterated_derivative_rule,
    product_rule,
    recurrence_of,
    sum_rule,
)
from reccalc.sequences import (
    CATALOG_NAMES,
    TermList,
    catalog,
    differentiate_terms,
    generate_terms,
    product_terms,
    sum_terms,
    verify_recurrence,
)
from reccalc.serialize import recurrence_from_json, tpoly_from_json
from reccalc.tpoly import ONE_T, TPoly, tpoly_exact_div, tpoly_gcd

RESULTS: list[str] = []

t = TPoly.t()
x = RX
CHEB = t * t - 2 * x * t + 1


@contextmanager
def criterion(number: int, title: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        RESULTS.append(f"FAIL  criterion {number}: {title}")
        raise
    RESULTS.append(f"PASS  criterion {number}: {title} ({time.perf_counter() - start:.2f} s)")


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_criterion_1_chebyshev_derivative_rule():
    with criterion(1, "Chebyshev derivative rule, verified on T' and U' for n = 4..16"):
        start = time.perf_counter()
        code, out, _ = run_cli("derive", "@chebyshev-t", "--verify", "16", "--json")
        assert code == 0
        step = json.loads(out)["steps"][0]
        p2 = t**4 - 4 * x * t**3 + (2 + 4 * x * x) * t**2 - 4 * x * t + 1
        assert tpoly_from_json(step["charpoly"]) == p2
        rec = recurrence_from_json(step["recurrence"])
        assert rec.coeffs == (4 * x, -(2 + 4 * x * x), 4 * x, XRatFunc(-1))
        for name in ("chebyshev-t", "chebyshev-u"):
            tl = differentiate_terms(generate_terms(catalog(name), 17))
            report = verify_recurrence(rec, tl, 4, 16)
            assert report.passed, (name, report)
        assert time.perf_counter() - start < 1.0


def test_criterion_2_gcd_sharpening():
    with criterion(2, "(x+1)f[n-1] - x f[n-2]: order 3 instead of 4, gcd(p,p') = t - 1"):
        rec = parse_spec("f[n] = (x+1)*f[n-1] - x*f[n-2]")
        d = derivative_rule(char_poly_of(rec))
        assert d.order == 3
        assert d.charpoly.poly == t**3 - (2 * x + 1) * t**2 + (x * x + 2 * x) * t - x * x
        assert d.gcd == t - 1
        code, out, _ = run_cli("derive", "@paper-ex3")
        assert code == 0
        assert "gcd(p,p'):  t - 1" in out
        assert "order:      3" in out


def test_criterion_3_power_chain():
    with criterion(3, "powers of x: (t-x)^2 then (t-x)^3, checked on n x^(n-1) and n(n-1) x^(n-2)"):
        p = CharPoly(t - x)
        first = derivative_rule(p)
        second = iterated_derivative_rule(p, 2)
        assert first.charpoly.poly == (t - x) ** 2
        assert second.charpoly.poly == (t - x) ** 3
        # closed forms, independent of unrolling
        d1 = TermList(tuple(XRatFunc(XPoly.monomial(n - 1, n)) if n else XRatFunc(0) for n in range(20)))
        d2 = TermList(tuple(XRatFunc(XPoly.monomial(n - 2, n * (n - 1))) if n > 1 else XRatFunc(0) for n in range(20)))
        powers = generate_terms(catalog("power-x"), 20)
        assert differentiate_terms(powers, 1).terms == d1.terms
        assert differentiate_terms(powers, 2).terms == d2.terms
        assert verify_recurrence(first.recurrence, d1, first.valid_from, 19).passed
        assert verify_recurrence(second.recurrence, d2, second.valid_from, 19).passed


def test_criterion_4_chebyshev_derivative_identities():
    with criterion(4, "T'_n = n U_(n-1) for n <= 12; U'_n identity over x^2 - 1 for n <= 10"):
        tt = generate_terms(catalog("chebyshev-t"), 14)
        uu = generate_terms(catalog("chebyshev-u"), 14)
        dt = differentiate_terms(tt)
        du = differentiate_terms(uu)
        for n in range(1, 13):
            assert (dt[n] - n * uu[n - 1]).is_zero(), n
        for n in range(1, 11):
            assert du[n] == ((n + 1) * tt[n + 1] - x * uu[n]) / (x * x - 1), n


def test_criterion_5_certificates():
    with criterion(5, "certificate identities on 200 random characteristic polynomials"):
        rng = random.Random(5)
        start = time.perf_counter()
        for _ in range(200):
            k = rng.randint(1, 3)
            cp = random_charpoly(rng, k, max_degree=2, bound=9)
            p = cp.poly
            d = derivative_rule(cp)
            c = d.certificate
            assert (c.beta * p + c.gamma * p.x_derivative()).is_zero()
            assert c.gamma * p == d.charpoly.poly
        assert time.perf_counter() - start < 30.0


def test_criterion_6_oracle_equivalence():
    with criterion(6, "derivative, sum and product rules agree with unrolled terms (100 recurrences)"):
        rng = random.Random(6)
        for i in range(100):
            k = rng.randint(1, 3)
            a = random_recurrence(rng, k)
            pa = char_poly_of(a)
            d = derivative_rule(pa)
            end = 2 * k + 12
            tl = differentiate_terms(generate_terms(a, end + 1))
            report = verify_recurrence(d.recurrence, tl, 2 * k, end)
            assert report.passed, (i, a, report)

            b = random_recurrence(rng, rng.randint(1, 3))
            pb = char_poly_of(b)
            ta, tb = generate_terms(a, 16), generate_terms(b, 16)
            sums = sum_terms(ta, tb)
            for sharpen in (False, True):
                rec = recurrence_of(sum_rule(pa, pb, sharpen))
                assert verify_recurrence(rec, sums, rec.order, 15).passed, (i, sharpen)
            prod = recurrence_of(product_rule(pa, pb))
            assert prod.order == a.order * b.order
            assert verify_recurrence(prod, product_terms(ta, tb), prod.order, 15).passed, i


def test_criterion_7_structural_invariants():
    with criterion(7, "gcd/cofactor, order formula, 3k bound and Gauss-lemma checks"):
        rng = random.Random(7)
        for _ in range(60):
            k = rng.randint(1, 3)
            cp = random_charpoly(rng, k)
            p, dp = cp.poly, cp.poly.x_derivative()
            d = derivative_rule(cp)
            if not dp.is_zero():
                g = tpoly_gcd(p, dp)
                assert g == d.gcd
                cofactor_p, cofactor_dp = tpoly_exact_div(p, g), tpoly_exact_div(dp, g)
                assert naive_tgcd(cofactor_p, cofactor_dp) == ONE_T
            assert d.order == 2 * k - d.gcd.degree
            assert iterated_derivative_rule(cp, 2).order <= 3 * k

            poly_cp = random_charpoly(rng, k, polynomial=True)
            q = poly_cp.poly
            if not q.x_derivative().is_zero():
                g = tpoly_gcd(q, q.x_derivative())
                assert g.has_polynomial_coeffs()
                assert tpoly_exact_div(q * q, g).has_polynomial_coeffs()
        # polynomial coefficients with a nontrivial gcd
        for q in ((t - x) ** 2 * (t + 1), (t - x) * (t - 1), (t - x * x) ** 3):
            g = tpoly_gcd(q, q.x_derivative())
            assert g.degree >= 1 and g.has_polynomial_coeffs()
            assert derivative_rule(CharPoly(q)).charpoly.poly.has_polynomial_coeffs()


def test_criterion_8_cli_and_dsl(tmp_path):
    with criterion(8, "golden files for every subcommand, round trip, 10^4-input parser fuzz"):
        import test_cli

        golden = Path(__file__).parent / "golden"
        commands = set()
        for name, argv in test_cli.CASES.items():
            code, out, _ = run_cli(*argv)
            assert f"exit: {code}\n{out}" == (golden / f"{name}.txt").read_text(), name
            commands.add(argv[0])
        assert commands == {"charpoly", "derive", "sum", "product", "terms", "verify", "catalog"}

        rng = random.Random(8)
        recs = [catalog(n) for n in CATALOG_NAMES]
        recs += [random_recurrence(rng, rng.randint(1, 4), with_initial_values=rng.random() < 0.5) for _ in range(50)]
        for rec in recs:
            assert parse_spec(print_spec(rec)) == rec

        path = tmp_path / "fuzz.rec"
        for _ in range(10_000):
            path.write_bytes(bytes(rng.randrange(256) for _ in range(rng.randint(0, 64))))
            code, _, _ = run_cli("charpoly", path)
            assert code in (0, 1)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
