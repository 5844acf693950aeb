from fractions import Fraction

import pytest
from hypothesis import assume, given, settings

from bscone.betti import degree_sequence, pure_diagram, shift_reduction, touching_indices
from bscone.errors import BasisTooLarge, DeltaSizeMismatch, NoTouchingIndex, NotComparable
from bscone.es_construction import (
    BasisElement,
    Factor,
    colex_subsets,
    enumerate_basis,
    es_setup,
    free_module,
    hom_witness,
    is_basis_element,
    nu_apply,
    nu_factors,
    nu_matrix,
    nu_matrix_by_enumeration,
    twist_table,
    witness_element,
)

from conftest import comparable_pairs, degree_sequences

D = degree_sequence("0,2,4,5,6")
DP = degree_sequence("1,2,4,7,inf")

TABLE_D = [
    (0, 0, 2, 6, 7),
    (-1, -1, 1, 5, 6),
    (-2, -2, 0, 4, 5),
    (-3, -3, -1, 3, 4),
    (-4, -4, -2, 2, 3),
    (-5, -5, -3, 1, 2),
    (-6, -6, -4, 0, 1),
    (-7, -7, -5, -1, 0),
    (-8, -8, -6, -2, -1),
]
TABLE_DP = [
    (0, -1, 2, 4, 5),
    (-1, -2, 1, 3, 4),
    (-2, -3, 0, 2, 3),
    (-3, -4, -1, 1, 2),
    (-4, -5, -2, 0, 1),
    (-5, -6, -3, -1, 0),
    (-6, -7, -4, -2, -1),
    (-7, -8, -5, -3, -2),
]


def test_setup_of_reference_pair():
    e = es_setup(D, DP)
    assert e.r == 4
    assert e.delta == (1, 3, 7, 8) and e.a == (0, 2, 6, 7)
    assert e.deltap == (0, 3, 5, 6) and e.ap == (-1, 2, 4, 5)
    assert e.c == (1, 0, 2, 2)


def test_twist_tables_of_reference_pair():
    e = es_setup(D, DP)
    assert list(twist_table(e, "unprimed").rows) == TABLE_D
    assert list(twist_table(e, "primed").rows) == TABLE_DP
    assert twist_table(e, "unprimed").ranks[4] == 70
    text = twist_table(e, "primed").render()
    assert "(0, [-1], 2, 4, 5)" in text


def test_free_modules_of_reference_pair():
    e = es_setup(D, DP)
    F2 = free_module(e, "unprimed", 2)
    F2p = free_module(e, "primed", 2)
    assert F2.twist == F2p.twist == 4
    assert [(f.kind, f.degree) for f in F2.factors] == [("H1", -4), ("H1", -2), ("H0", 2), ("H0", 3)]
    assert [(f.kind, f.degree) for f in F2p.factors] == [("H1", -5), ("H1", -2), ("H0", 0), ("H0", 1)]
    assert F2.koszul_rank == 70 and F2p.koszul_rank == 35
    assert F2.total_rank == 70 * 3 * 1 * 3 * 4
    assert F2p.total_rank == 35 * 4 * 1 * 1 * 2


def test_witness_of_reference_pair():
    e = es_setup(D, DP)
    w = witness_element(e, 2)
    assert w.subset == (1, 2, 3, 4)
    assert w.exps == ((-4, -1), (-1, -1), (0, 0), (1, 0))
    img = nu_apply(e, 2, w)
    assert img.subset == (1, 2, 3, 4)
    assert img.exps == ((-3, -1), (-1, -1), (2, 0), (3, 0))


def test_motivating_pair_setup():
    # pair whose textbook constructions live on different spaces; here r = 7
    e = es_setup(degree_sequence("0,2,3,5"), degree_sequence("0,3,9,10"))
    assert e.r == 7
    assert len(twist_table(e, "primed").rows) == 11


def test_nu_matrix_routes_agree_on_reference_pair():
    e = es_setup(D, DP)
    M = nu_matrix(e, 2)
    assert M.shape == (2520, 280)
    assert M.nnz == nu_factors(e, 2).nnz == 210
    assert (M != nu_matrix_by_enumeration(e, 2)).nnz == 0


@settings(max_examples=40, deadline=None)
@given(comparable_pairs(n=2))
def test_nu_matrix_routes_agree(pair):
    d, dp = pair
    _, dpp = shift_reduction(d, dp)
    e = es_setup(d, dpp)
    for j in touching_indices(d, dpp):
        fac = nu_factors(e, j)
        assume(max(fac.shape) <= 5000)
        M = fac.to_sparse()
        assert (M != nu_matrix_by_enumeration(e, j)).nnz == 0
        assert M.nnz == fac.nnz > 0


@settings(max_examples=60, deadline=None)
@given(degree_sequences())
def test_ranks_are_a_multiple_of_the_pure_diagram(d):
    e = es_setup(d, d)
    ranks = [free_module(e, "unprimed", j).total_rank for j in range(d.length + 1)]
    betti = pure_diagram(d).betti
    ratio = Fraction(ranks[0], betti[0])
    assert ratio.denominator == 1
    assert all(Fraction(r, b) == ratio for r, b in zip(ranks, betti))
    assert [free_module(e, "unprimed", j).twist for j in range(d.length + 1)] == list(d.finite)


@settings(max_examples=60, deadline=None)
@given(comparable_pairs())
def test_witness_exists_after_reduction(pair):
    d, dp = pair
    t, dpp = shift_reduction(d, dp)
    cert = hom_witness(d, dpp)
    assert is_basis_element(cert.source, cert.witness)
    assert is_basis_element(cert.target, cert.image)
    assert not nu_factors(cert.es, cert.j).is_zero()
    # primed ranks follow Herzog-Kuehl for d'' as well
    ranks = [free_module(cert.es, "primed", j).total_rank for j in range(dpp.length + 1)]
    betti = pure_diagram(dpp).betti
    assert len({Fraction(r, b) for r, b in zip(ranks, betti)}) == 1


def test_hom_witness_refusals():
    with pytest.raises(NotComparable):
        hom_witness(degree_sequence("0,2,4"), degree_sequence("0,1,5"))
    with pytest.raises(NoTouchingIndex):
        hom_witness(degree_sequence("0,2,4"), degree_sequence("1,3,5"))
    with pytest.raises(NoTouchingIndex):
        hom_witness(D, DP, j=0)
    assert hom_witness(D, DP).j == 1
    assert hom_witness(D, DP, j=2).image.exps == ((-3, -1), (-1, -1), (2, 0), (3, 0))


def test_delta_size_mismatch():
    # D' is anchored at d_0 of d, so d' cannot start below it
    with pytest.raises(DeltaSizeMismatch):
        es_setup(degree_sequence("0,1,5"), degree_sequence("-3,1,2"))


def test_basis_enumeration():
    assert colex_subsets(4, 2) == [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]
    assert Factor("H0", 2).monomials() == [(2, 0), (1, 1), (0, 2)]
    assert Factor("H1", -4).monomials() == [(-1, -3), (-2, -2), (-3, -1)]
    e = es_setup(D, DP)
    fm = free_module(e, "primed", 2)
    basis = enumerate_basis(fm)
    assert len(basis) == fm.total_rank == 280
    assert all(is_basis_element(fm, b) for b in basis[:50])
    assert not is_basis_element(fm, BasisElement((1, 2, 3, 3), basis[0].exps))
    with pytest.raises(BasisTooLarge):
        enumerate_basis(fm, cap=100)


def test_nu_apply_can_vanish():
    e = es_setup(D, DP)
    b = BasisElement((1, 2, 3, 5), ((-4, -1), (-1, -1), (0, 0), (1, 0)))
    # first column (-1, -4) moves to (0, -4), which is not an H^1 monomial
    out = nu_apply(e, 2, BasisElement((1, 2, 3, 4), ((-1, -4), (-1, -1), (0, 0), (1, 0))))
    assert out is None
    assert nu_apply(e, 2, b) is not None
