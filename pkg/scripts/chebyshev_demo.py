"""Derive recurrences for T'_n and U'_n and check them against unrolled terms."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from reccalc import char_poly_of, derivative_rule
from reccalc.dsl import format_recurrence
from reccalc.sequences import catalog, differentiate_terms, generate_terms, verify_recurrence
from reccalc.tpoly import format_tpoly


@dataclass(frozen=True)
class DemoConfig:
    last_index: int = 16
    show_terms: int = 5


def run(cfg: DemoConfig) -> bool:
    d = derivative_rule(char_poly_of(catalog("chebyshev-t")))
    print(f"p^2/gcd(p,p') = {format_tpoly(d.charpoly.poly)}")
    print(f"recurrence:     {format_recurrence(d.recurrence)}")
    ok = True
    for name in ("chebyshev-t", "chebyshev-u"):
        tl = differentiate_terms(generate_terms(catalog(name), cfg.last_index + 1))
        report = verify_recurrence(d.recurrence, tl, d.valid_from, cfg.last_index)
        ok &= report.passed
        status = "ok" if report.passed else f"FAILED at n = {report.first_failure}"
        print(f"{name}': n = {d.valid_from}..{cfg.last_index} {status}")
        for n in range(cfg.show_terms):
            print(f"  d/dx f[{n}] = {tl[n]}")
    return ok


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--last-index", type=int, default=DemoConfig.last_index)
    ap.add_argument("--show-terms", type=int, default=DemoConfig.show_terms)
    args = ap.parse_args()
    raise SystemExit(0 if run(DemoConfig(args.last_index, args.show_terms)) else 1)
