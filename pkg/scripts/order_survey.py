"""Survey how often gcd(p, p') shortens the derived recurrence.

Draws random characteristic polynomials, applies the derivative rule m times,
and tabulates the resulting orders against the naive bound (m+1)k.
"""

from __future__ import annotations

import argparse
import json
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass

from reccalc.corpus import random_charpoly
from reccalc.recurrence import CharPoly, derivative_chain
from reccalc.tpoly import ONE_T


@dataclass(frozen=True)
class SurveyConfig:
    samples: int = 200
    max_order: int = 3
    max_degree: int = 2
    bound: int = 9
    times: int = 2
    polynomial: bool = False
    # forcing a repeated root makes the gcd nontrivial
    repeated_root_share: float = 0.25
    seed: int = 0


def survey(cfg: SurveyConfig) -> dict:
    rng = random.Random(cfg.seed)
    orders: Counter = Counter()
    shortened = 0
    start = time.perf_counter()
    for _ in range(cfg.samples):
        k = rng.randint(1, cfg.max_order)
        cp = random_charpoly(rng, k, max_degree=cfg.max_degree, bound=cfg.bound, polynomial=cfg.polynomial)
        if k > 1 and rng.random() < cfg.repeated_root_share:
            root = random_charpoly(rng, 1, max_degree=cfg.max_degree, bound=cfg.bound, polynomial=cfg.polynomial).poly
            rest = random_charpoly(rng, k - 2, polynomial=cfg.polynomial).poly if k > 2 else ONE_T
            cp = CharPoly(rest * root * root)
        chain = derivative_chain(cp, cfg.times)
        final = chain[-1].order
        orders[(k, final)] += 1
        shortened += final < (cfg.times + 1) * k
    return {
        "config": asdict(cfg),
        "elapsed_s": round(time.perf_counter() - start, 3),
        "shortened": shortened,
        "orders": {f"k={k} -> {o}": c for (k, o), c in sorted(orders.items())},
    }


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for field, default in asdict(SurveyConfig()).items():
        kind = (lambda s: s.lower() in ("1", "true", "yes")) if isinstance(default, bool) else type(default)
        ap.add_argument(f"--{field.replace('_', '-')}", type=kind, default=default)
    cfg = SurveyConfig(**vars(ap.parse_args()))
    print(json.dumps(survey(cfg), indent=2))
