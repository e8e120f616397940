"""Search small orders for non-medial quandles and report Dis for each witness."""

from __future__ import annotations

import argparse
from dataclasses import asdict, dataclass

from freemedial.finite import check_axioms, dis, lmlt, search_nonmedial


@dataclass
class SearchConfig:
    min_n: int = 3
    max_n: int = 6
    seeds: tuple[int, ...] = (0, 1, 2)
    budget: int = 200_000


def run(cfg: SearchConfig) -> list[dict]:
    rows = []
    for n in range(cfg.min_n, cfg.max_n + 1):
        for seed in cfg.seeds:
            res = search_nonmedial(max_n=n, min_n=n, seed=seed, budget=cfg.budget)
            row = {"n": n, "seed": seed, "nodes": res.nodes, "found": res.witness is not None}
            if res.witness is not None:
                Q = res.witness
                D = dis(Q)
                row.update(quandle=check_axioms(Q).is_quandle, lmlt=lmlt(Q).order,
                           dis=D.order, dis_abelian=D.is_abelian)
            rows.append(row)
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-n", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--budget", type=int, default=200_000)
    a = ap.parse_args()
    cfg = SearchConfig(a.min_n, a.max_n, tuple(a.seeds), a.budget)
    print(asdict(cfg))
    for row in run(cfg):
        print(row)


if __name__ == "__main__":
    main()
