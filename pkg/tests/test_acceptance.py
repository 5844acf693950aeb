"""Acceptance suite: nine criteria, one PASS/FAIL line each.

Run ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
Each criterion returns (ok, detail) and is held to its time limit.
"""

import random
import sys
import time
from fractions import Fraction

import pytest

from bscone.betti import (
    BettiDiagram,
    DegreeSequence,
    decompose,
    deg_leq,
    degree_sequence,
    pure_diagram,
    shift_reduction,
)
from bscone.core import INF, NEG_INF
from bscone.equivariant import (
    efw_shapes,
    eq_hom_witness,
    eq_root_hom_exists,
    increment_chain,
    verify_supernatural_equivariant,
)
from bscone.errors import BSError
from bscone.es_construction import (
    es_setup,
    free_module,
    hom_witness,
    nu_apply,
    nu_factors,
    nu_matrix_by_enumeration,
    twist_table,
    witness_element,
)
from bscone.supernatural import RootSequence, hom_lower_bound, root_sequence, split_hom_dim

# materialize nu as a scipy matrix only below this size; larger ones are checked in factored form
MATERIALIZE = 20_000

D = degree_sequence("0,2,4,5,6")
DP = degree_sequence("1,2,4,7,inf")

TABLE_D = [
    (0, 0, 2, 6, 7), (-1, -1, 1, 5, 6), (-2, -2, 0, 4, 5), (-3, -3, -1, 3, 4), (-4, -4, -2, 2, 3),
    (-5, -5, -3, 1, 2), (-6, -6, -4, 0, 1), (-7, -7, -5, -1, 0), (-8, -8, -6, -2, -1),
]
TABLE_DP = [
    (0, -1, 2, 4, 5), (-1, -2, 1, 3, 4), (-2, -3, 0, 2, 3), (-3, -4, -1, 1, 2),
    (-4, -5, -2, 0, 1), (-5, -6, -3, -1, 0), (-6, -7, -4, -2, -1), (-7, -8, -5, -3, -2),
]


def rand_degree(rng, n, lo=-5, hi=12):
    ell = rng.randint(0, n)
    vals = sorted(rng.sample(range(lo, hi + 1), ell + 1))
    return DegreeSequence(tuple(vals) + (INF,) * (n - ell))


def rand_full_roots(rng, n, lo=-12, hi=6):
    return RootSequence(tuple(sorted(rng.sample(range(lo, hi + 1), n - 1), reverse=True)))


def c1_golden_setup():
    e = es_setup(D, DP)
    ok = (e.r, e.delta, e.a, e.deltap, e.ap, e.c) == (
        4, (1, 3, 7, 8), (0, 2, 6, 7), (0, 3, 5, 6), (-1, 2, 4, 5), (1, 0, 2, 2))
    t = twist_table(e, "unprimed").rows
    tp = twist_table(e, "primed").rows
    ok = ok and list(t) == TABLE_D and list(tp) == TABLE_DP
    return ok, f"r={e.r} c={e.c}, {len(t)}+{len(tp)} table rows"


def c2_golden_witness():
    e = es_setup(D, DP)
    w = witness_element(e, 2)
    img = nu_apply(e, 2, w)
    ok = (w.subset == (1, 2, 3, 4) and w.exps == ((-4, -1), (-1, -1), (0, 0), (1, 0))
          and img is not None and img.subset == (1, 2, 3, 4)
          and img.exps == ((-3, -1), (-1, -1), (2, 0), (3, 0)))
    return ok, f"{w} -> {img}"


def c3_hom_order_equivalence():
    rng = random.Random(3)
    succ = fail = materialized = factored = 0
    bad = []
    for _ in range(300):
        n = rng.randint(1, 4)
        d, dp = rand_degree(rng, n), rand_degree(rng, n)
        if rng.random() < 0.5:
            # bias half the sample toward comparable pairs
            try:
                dp = DegreeSequence(tuple(max(a, b) for a, b in zip(d, dp)))
            except BSError:
                pass
        leq = deg_leq(d, dp)
        try:
            _, dpp = shift_reduction(d, dp)
            cert = hom_witness(d, dpp)
        except BSError:
            fail += 1
            if leq:
                bad.append((str(d), str(dp)))
            continue
        succ += 1
        if not leq:
            bad.append((str(d), str(dp)))
            continue
        fac = nu_factors(cert.es, cert.j)
        if fac.is_zero():
            bad.append((str(d), str(dpp), "zero nu"))
        if max(fac.shape) <= MATERIALIZE:
            M = fac.to_sparse()
            materialized += 1
            if M.nnz != fac.nnz or M.nnz == 0:
                bad.append((str(d), str(dpp), "nnz"))
            if max(fac.shape) <= 2000 and (M != nu_matrix_by_enumeration(cert.es, cert.j)).nnz:
                bad.append((str(d), str(dpp), "routes differ"))
        else:
            factored += 1
    detail = f"{succ} witnesses, {fail} refusals, nu checked {materialized} assembled / {factored} factored"
    return not bad and succ > 50 and fail > 50, detail + (f"; bad {bad[:3]}" if bad else "")


def c4_rank_cross_validation():
    rng = random.Random(4)
    bad = 0
    for _ in range(100):
        d = rand_degree(rng, rng.randint(1, 4))
        e = es_setup(d, d)
        ranks = [free_module(e, "unprimed", j).total_rank for j in range(d.length + 1)]
        betti = pure_diagram(d).betti
        ratios = {Fraction(r, b) for r, b in zip(ranks, betti)}
        if len(ratios) != 1 or next(iter(ratios)).denominator != 1:
            bad += 1
    return bad == 0, f"100 sequences, {bad} mismatches"


def _chain(rng, n, length):
    vals = sorted(rng.sample(range(-5, 8), n + 1))
    chain = [DegreeSequence(tuple(vals))]
    while len(chain) < length and chain[-1].length > 0:
        cur = list(chain[-1].entries)
        for _ in range(rng.randint(1, 3)):
            ell = max(i for i, x in enumerate(cur) if x != INF)
            moves = [i for i in range(ell + 1) if cur[i] + 1 < (cur[i + 1] if i < n else INF)]
            if ell > 0 and (not moves or rng.random() < 0.2):
                cur[ell] = INF
            else:
                cur[rng.choice(moves)] += 1
        chain.append(DegreeSequence(tuple(cur)))
    return chain


def c5_decomposition_round_trip():
    rng = random.Random(5)
    bad = 0
    for _ in range(200):
        n = rng.randint(1, 4)
        chain = _chain(rng, n, rng.randint(1, 5))
        coeffs = [Fraction(rng.randint(1, 20), rng.randint(1, 7)) for _ in chain]
        B = BettiDiagram(n, {})
        for c, d in zip(coeffs, chain):
            B = B + pure_diagram(d).to_diagram(c)
        dec = decompose(B)
        if [(c, p.d) for c, p in dec.terms] != list(zip(coeffs, chain)):
            bad += 1
    return bad == 0, f"200 chains, {bad} mismatches"


def c6_equivariant_goldens():
    s = [w.parts for w in efw_shapes(degree_sequence("0,2,5,7,8")).shapes]
    ok = s[0] == (3, 1, 0, 0) and s[1] == (5, 1, 0, 0)
    ok = ok and [w.parts for w in efw_shapes(degree_sequence("0,2,4")).shapes] == [(1, 0), (3, 0), (3, 2)]
    ok = ok and [w.parts for w in efw_shapes(degree_sequence("0,3,4")).shapes] == [(0, 0), (3, 0), (3, 1)]
    d, dp = degree_sequence("0,2,3,6,7"), degree_sequence("1,2,5,6,10")
    chain = increment_chain(d, dp)
    ok = ok and degree_sequence("0,2,3,6,10") in chain and degree_sequence("0,2,5,6,10") in chain
    cert = eq_hom_witness(d, dp, k=3)
    ok = ok and cert.touching == 3 and cert.surjective_at(3)
    ok = ok and all(g.surjective[3] for g in cert.grouped)
    return ok, f"chain of {len(chain)} unit steps, surjective at k=3: {cert.surjective_at(3)}"


def c7_hom_bounds():
    fp = root_sequence("-1,-2,-3,-4")
    a = hom_lower_bound(root_sequence("-2,-3,-4,-5"), fp)
    b = hom_lower_bound(root_sequence("-2,-3,-4,-inf"), fp)
    c = split_hom_dim(root_sequence("-2,-3,-4,-5"), fp)
    return (a, b, c) == (16, 8, 2880), f"bounds {a}, {b}; split dim {c}"


def c8_bwb_supernatural():
    rng = random.Random(8)
    bad = []
    for _ in range(50):
        n = rng.randint(2, 5)
        f = rand_full_roots(rng, n)
        low, high = f.finite[-1] - 4, f.finite[0] - 6
        lo = rng.randint(min(low, high), max(low, high))
        if not verify_supernatural_equivariant(f, (lo, lo + 11)):
            bad.append(str(f))
    return not bad, f"50 root sequences, 12 columns each, {len(bad)} mismatches"


def c9_root_inequality():
    rng = random.Random(9)
    bad = 0
    for _ in range(100):
        n = rng.randint(2, 5)
        f = rand_full_roots(rng, n)
        fp = list(f.finite)
        for i in range(n - 1):
            room = 5 if i == 0 else fp[i - 1] - 1 - fp[i]
            fp[i] += rng.randint(0, min(room, 5))
        fp = RootSequence(tuple(fp))
        cert = eq_root_hom_exists(f, fp)
        if cert.slack != tuple(cert.N[n - i - 1] for i in range(1, n)) or not cert:
            bad += 1
    return bad == 0, f"100 comparable pairs, {bad} mismatches"


CRITERIA = [
    ("C1", "pushforward setup and twist tables", c1_golden_setup, 1.0),
    ("C2", "witness element and its image", c2_golden_witness, 1.0),
    ("C3", "Hom witness iff degree order", c3_hom_order_equivalence, 60.0),
    ("C4", "free module ranks vs pure diagram", c4_rank_cross_validation, 30.0),
    ("C5", "decomposition round trip", c5_decomposition_round_trip, 30.0),
    ("C6", "equivariant shapes and Pieri chain", c6_equivariant_goldens, 1.0),
    ("C7", "supernatural Hom bounds", c7_hom_bounds, 1.0),
    ("C8", "Bott vs supernatural tables", c8_bwb_supernatural, 60.0),
    ("C9", "equivariant root inequality", c9_root_inequality, 10.0),
]


def evaluate(func, limit):
    start = time.perf_counter()
    try:
        ok, detail = func()
    except Exception as exc:  # a crash is a failure, reported like one
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    if elapsed >= limit:
        ok = False
        detail += f"; over time limit {limit:g}s"
    return ok, elapsed, detail


def line(tag, title, ok, elapsed, detail):
    return f"{'PASS' if ok else 'FAIL'} {tag} {title} ({elapsed:.2f}s): {detail}"


@pytest.mark.parametrize("tag,title,func,limit", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(tag, title, func, limit, capsys):
    ok, elapsed, detail = evaluate(func, limit)
    with capsys.disabled():
        print("\n" + line(tag, title, ok, elapsed, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for tag, title, func, limit in CRITERIA:
        ok, elapsed, detail = evaluate(func, limit)
        print(line(tag, title, ok, elapsed, detail))
        results.append(ok)
    sys.exit(0 if all(results) else 1)
