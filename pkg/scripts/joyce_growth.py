"""Count distinct values of bounded-size terms in the free involutory medial quandle.

For each bound k the values are mapped into Z^(|X|-1) by (g, i) -> 2g + e_i
and checked for injectivity and for compatibility with a * b = 2a - b.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from freemedial.acceptance import joyce_values
from freemedial.free import joyce_isomorphism, joyce_model_star


@dataclass
class GrowthConfig:
    max_k: int = 6
    n_gens: int = 3


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=6)
    ap.add_argument("--gens", type=int, default=3)
    a = ap.parse_args()
    cfg = GrowthConfig(a.max_k, a.gens)
    gens = [f"x{i}" for i in range(cfg.n_gens)]
    print(f"{'k':>3} {'values':>8} {'pairs':>8} {'injective':>9} {'violations':>10} {'secs':>6}")
    for k in range(1, cfg.max_k + 1):
        start = time.perf_counter()
        _, values, pairs = joyce_values(k, gens)
        iso = {p: joyce_isomorphism(p) for p in values}
        injective = len(set(iso.values())) == len(iso)
        bad = sum(joyce_isomorphism(p * q) != joyce_model_star(iso[p], iso[q]) for p, q in pairs)
        print(f"{k:>3} {len(values):>8} {len(pairs):>8} {str(injective):>9} {bad:>10} "
              f"{time.perf_counter() - start:>6.2f}")


if __name__ == "__main__":
    main()
