"""Twist tables, free modules and the nonzero component of nu for d=(0,2,4,5,6), d'=(1,2,4,7,inf)."""

import argparse

from bscone.betti import degree_sequence
from bscone.es_construction import es_setup, free_module, hom_witness, nu_factors, nu_matrix_by_enumeration


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d", default="0,2,4,5,6")
    ap.add_argument("--dp", default="1,2,4,7,inf")
    ap.add_argument("--j", type=int, default=2, help="touching index to expand")
    args = ap.parse_args()

    d, dp = degree_sequence(args.d), degree_sequence(args.dp)
    cert = hom_witness(d, dp, args.j)
    print(cert.render())
    print()
    print(cert.table.render(f"d = {d}"))
    print()
    print(cert.table_primed.render(f"d' = {dp}"))
    print()

    e = es_setup(d, dp)
    for side in ("unprimed", "primed"):
        seq = e.side(side)[0]
        ranks = [free_module(e, side, j).total_rank for j in range(seq.length + 1)]
        print(f"{side:9s} ranks {ranks}")

    fac = nu_factors(e, args.j)
    rows, cols = fac.shape
    print(f"\nnu_{args.j}: {rows} x {cols}, {fac.nnz} nonzero entries")
    if max(rows, cols) <= 10_000:
        direct = nu_matrix_by_enumeration(e, args.j)
        same = (fac.to_sparse() != direct).nnz == 0
        print(f"Kronecker form equals basis-by-basis construction: {same}")


if __name__ == "__main__":
    main()
