"""Classify R⋉M for every catalog base and a few modules; tabulate verdicts.

    python scripts/structure_sweep.py --max-edim 6
"""
import argparse
from collections import Counter

from idealization import classify, free_module, idealize
from idealization.models import complete_intersection_ring, hypersurface_ring, regular_ring, residue_field


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-edim", type=int, default=6)
    ap.add_argument("--degree", type=int, default=8)
    args = ap.parse_args()
    D = args.degree

    bases = [regular_ring(d, D) for d in range(args.max_edim + 1)]
    bases += [hypersurface_ring(e, D) for e in range(1, args.max_edim + 1)]
    bases += [complete_intersection_ring(e, c, D) for e in range(args.max_edim + 1) for c in range(2, e + 1)]

    tally = Counter()
    for base in bases:
        for m in (residue_field(base), free_module(1, base, D), free_module(3, base, D)):
            verdicts = classify(idealize(base, m, D))
            row = " ".join(f"{v.property[:4]}={v.verdict.value[0]}" for v in verdicts)
            print(f"{base.name:>18} ⋉ {m.name:<16} {row}")
            tally.update((v.property, v.verdict.value) for v in verdicts)
    print()
    for (prop, verdict), n in sorted(tally.items()):
        print(f"{prop:>22} {verdict:<12} {n}")


if __name__ == "__main__":
    main()
