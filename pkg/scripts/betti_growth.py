"""Growth of Betti numbers of free modules over R⋉k across the ring catalog.

Prints B_n for each base and whether the numeric regularity criterion fires
(a drop B_n <= B_{n-1} at some n >= 2).

    python scripts/betti_growth.py --degree 12
"""
import argparse

from idealization import free_module, zl_check
from idealization.idealize import b_sequence
from idealization.models import complete_intersection_ring, hypersurface_ring, regular_ring, residue_field


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--degree", type=int, default=12)
    ap.add_argument("--max-edim", type=int, default=4)
    args = ap.parse_args()
    D = args.degree

    bases = [regular_ring(d, D) for d in range(args.max_edim + 1)]
    bases += [hypersurface_ring(e, D) for e in range(1, args.max_edim + 1)]
    bases += [complete_intersection_ring(e, c, D) for e in range(2, args.max_edim + 1) for c in range(2, e + 1)]

    width = max(len(b.name) for b in bases)
    for base in bases:
        B = b_sequence(residue_field(base, D), D)
        rep = zl_check(free_module(1, base, D), base, D)
        print(f"{base.name:<{width}}  {rep.verdict.value:<12}  {' '.join(map(str, B))}")


if __name__ == "__main__":
    main()
