"""Equivariant resolutions and supernatural bundles on small examples.

Prints resolution shapes with Young diagrams, the Pieri chain for a
comparable pair, and a check of Bott's algorithm against supernatural
cohomology tables over random root sequences.
"""

import argparse
import random

from bscone.betti import degree_sequence
from bscone.equivariant import efw_shapes, eq_hom_witness, eq_supernatural_weight, supernatural_mismatches
from bscone.supernatural import RootSequence, table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d", default="0,2,3,6,7")
    ap.add_argument("--dp", default="1,2,5,6,10")
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--roots", type=int, default=200, help="random root sequences to check")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    d, dp = degree_sequence(args.d), degree_sequence(args.dp)
    print(efw_shapes(d).render())
    print()
    print(eq_hom_witness(d, dp, args.k).render())
    print()

    rng = random.Random(args.seed)
    bad = 0
    for _ in range(args.roots):
        n = rng.randint(2, 6)
        f = RootSequence(tuple(sorted(rng.sample(range(-15, 8), n - 1), reverse=True)))
        lo = f.finite[-1] - 4
        bad += bool(supernatural_mismatches(f, (lo, f.finite[0] + 4)))
    print(f"Bott vs supernatural tables: {args.roots} root sequences, {bad} with mismatches")

    f = RootSequence((-2, -4, -5))
    lam, twist = eq_supernatural_weight(f)
    print(f"\nS_{lam} Q (x) O({twist}) realizes type {f}; rank-s! table:")
    print(table(f).render())


if __name__ == "__main__":
    main()
