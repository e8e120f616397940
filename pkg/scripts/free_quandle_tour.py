"""Print normal forms of a few classic identities in every supported variety,
and cross-check each verdict against the finite corpus."""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from freemedial.corpus import full_corpus, in_variety
from freemedial.terms import builtin_identities, decide_identity, find_counterexample, parse_variety


@dataclass
class TourConfig:
    varieties: list[str] = field(default_factory=lambda: [
        "medial", "sym:2", "sym:3", "sym:4", "red:2", "red:3", "sym:3+red:2", "mod:1-t+t^2",
    ])
    identities: list[str] = field(default_factory=lambda: [
        "commutativity", "involutory", "2-reductive", "symmetry-3", "symmetry-6", "reductive-3",
    ])


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--varieties", nargs="+")
    a = ap.parse_args()
    cfg = TourConfig() if not a.varieties else TourConfig(varieties=a.varieties)
    cat = {name: (lhs, rhs) for name, lhs, rhs in builtin_identities()}
    corpus = full_corpus()
    for vtext in cfg.varieties:
        V = parse_variety(vtext)
        members = [e for e in corpus if in_variety(e.table, V)]
        print(f"== {V}  ({len(members)} corpus members)")
        for name in cfg.identities:
            lhs, rhs = cat[name]
            v = decide_identity(lhs, rhs, V)
            refuter = next((e.name for e in members if find_counterexample(e.table, lhs, rhs)), None)
            note = f"refuted by {refuter}" if refuter else "no finite refuter"
            if v.valid:
                print(f"  {name:<14} valid")
            else:
                print(f"  {name:<14} invalid  {v.lhs_nf} vs {v.rhs_nf}  [{note}]")


if __name__ == "__main__":
    main()
