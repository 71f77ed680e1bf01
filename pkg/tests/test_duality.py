import dataclasses
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.algebra import IntMatrix
from src.tori import FactorType, RealTorus, canonical_factors, decompose, standard_torus
from src.gerbes import CASE_TAGS, AffineGerbeClass, PointGerbeClass, classify_affine_gerbes, standard_gerbe
from src.duality import ShiftLedger, dualize_classified, fm_degree_map, tdualize
from src.errors import GradedInput, InconsistentGerbeData, LedgerIncomplete, UnresolvedSignature

INDECOMPOSABLE = [FactorType.T1, FactorType.T2, FactorType.T3, FactorType.T4, FactorType.T5]


def dualize_standard(factors, twist=None):
    g = standard_gerbe(factors, twist)
    return tdualize(g.torus, g)


@pytest.mark.parametrize("factor", INDECOMPOSABLE)
def test_candidate_count_on_indecomposables(factor):
    d = dualize_standard([factor])
    expected = 2 if d.chern_nonzero and not d.dual_chern_nonzero else 1
    assert len(d.target_candidates) == expected
    assert len(d.target_candidates) == (2 if factor is FactorType.T2 else 1)


@pytest.mark.parametrize("p", range(0, 4, 2))
def test_candidate_count_with_point_twist(p):
    d = dualize_standard([FactorType.T2], PointGerbeClass.from_z4(p))
    assert len(d.target_candidates) == 2
    first, second = d.target_candidates
    assert second.point_twist == first.point_twist * PointGerbeClass(0, 1)


def test_chern_on_both_sides_gives_a_unique_dual():
    d = dualize_standard([FactorType.T2, FactorType.T4])
    assert d.chern_nonzero and d.dual_chern_nonzero
    assert len(d.target_candidates) == 1
    assert d.target_factors == (FactorType.T2, FactorType.T4)


@pytest.mark.parametrize("factor", INDECOMPOSABLE)
def test_dual_types(factor):
    d = dualize_standard([factor])
    assert d.target_factors == (factor.dual(),)
    assert d.target_torus.sigma == -d.source_torus.sigma.T


def test_dual_torus_carries_the_gerbe_as_translation():
    d = dualize_standard([FactorType.T4])
    assert d.target_torus.translation_lift == (Fraction(1, 2),)
    assert canonical_factors(d.target_torus) == (FactorType.T2,)
    assert d.target_candidates[0].lambda_part == (0,)


def test_dual_gerbe_lambda_is_the_chern_vector():
    d = dualize_standard([FactorType.T2])
    target = d.target_candidates[0]
    assert target.lambda_part == (1,)
    assert target.fixed_point_signatures == ((0, 1),)
    assert d.delta == IntMatrix.identity(1)


def test_double_dual_returns_the_source_type():
    for factor in INDECOMPOSABLE:
        d = dualize_standard([factor])
        dd = tdualize(d.target_torus, d.target_candidates[0])
        assert dd.target_factors == d.source_factors


def test_dualize_classified():
    assert dualize_classified(["T1", "T2", "T5"]) == (FactorType.T4, FactorType.T3, FactorType.T5)
    with pytest.raises(UnresolvedSignature):
        dualize_classified([FactorType.T3_PENDING])


def test_degree_maps():
    assert fm_degree_map(dualize_standard([FactorType.T2])) == tuple((j - 1) % 8 for j in range(8))
    assert fm_degree_map(dualize_standard([FactorType.T3])) == tuple((j + 1) % 8 for j in range(8))
    assert fm_degree_map(dualize_standard([FactorType.T5])) == tuple(range(8))
    d = dualize_standard([FactorType.T2])
    assert d.ledgers[1].target_shift == 4
    assert fm_degree_map(d, 1) == tuple((j - 5) % 8 for j in range(8))


def test_twisted_source_enters_the_ledger():
    d = dualize_standard([FactorType.T1], PointGerbeClass(0, 1))
    assert d.source_twist == PointGerbeClass(0, 1)
    assert d.shift_ledger.source_shift == 4
    assert d.shift_ledger.target_shift == 4
    assert fm_degree_map(d) == tuple((j - 1) % 8 for j in range(8))


def test_incomplete_ledger():
    d = dualize_standard([FactorType.T1])
    broken = dataclasses.replace(d, ledgers=(ShiftLedger(rank=1, b_minus=0),))
    with pytest.raises(LedgerIncomplete):
        fm_degree_map(broken)
    assert ShiftLedger(rank=1).missing() == ("b_minus", "source_shift", "target_shift")


def test_graded_gerbes_are_rejected():
    with pytest.raises(GradedInput):
        dualize_standard([FactorType.T1], PointGerbeClass.generator())


def test_missing_signatures_are_rejected():
    X = standard_torus([FactorType.T3])
    with pytest.raises(UnresolvedSignature):
        tdualize(X, AffineGerbeClass(torus=X, lambda_part=(0,)))


def test_inconsistent_gerbes_are_rejected():
    X = standard_torus([FactorType.T3])
    with pytest.raises(InconsistentGerbeData):
        tdualize(X, AffineGerbeClass(torus=X, lambda_part=(1,), fixed_point_signatures=((0, 0),)))
    with pytest.raises(InconsistentGerbeData):
        tdualize(RealTorus.from_matrix([[1]]), standard_gerbe([FactorType.T3]))


def test_signatures_must_match_lambda_on_each_circle():
    X = standard_torus([FactorType.T3, FactorType.T3])
    misplaced = AffineGerbeClass(torus=X, lambda_part=(1, 0), fixed_point_signatures=((0, 0), (0, 1)))
    with pytest.raises(InconsistentGerbeData):
        tdualize(X, misplaced)
    d = tdualize(X, AffineGerbeClass(torus=X, lambda_part=(1, 0), fixed_point_signatures=((0, 1), (0, 0))))
    assert d.target_torus.translation_lift == (Fraction(1, 2), Fraction(0))
    assert d.source_factors == (FactorType.T4, FactorType.T3)


@pytest.mark.parametrize("t, signatures", [(("1/2", "0"), ((0, 1), (0, 0))), (("0", "1/2"), ((0, 0), (0, 1)))])
def test_dual_signatures_follow_the_chern_vector(t, signatures):
    X = RealTorus.from_matrix([[1, 0], [0, 1]], t)
    d = tdualize(X, AffineGerbeClass(torus=X, lambda_part=(0, 0)))
    assert [c.fixed_point_signatures for c in d.target_candidates] == [signatures, signatures]
    dd = tdualize(d.target_torus, d.target_candidates[0])
    assert dd.target_torus.translation_lift == X.translation_lift


resolved_products = st.lists(st.sampled_from(INDECOMPOSABLE), min_size=1, max_size=3)
even_twists = st.sampled_from([PointGerbeClass.from_z4(0), PointGerbeClass.from_z4(2)])


@settings(max_examples=60, deadline=None)
@given(resolved_products, even_twists)
def test_candidate_count_follows_the_factors(factors, twist):
    d = dualize_standard(factors, twist)
    assert d.chern_nonzero == (FactorType.T2 in d.source_factors)
    assert d.dual_chern_nonzero == (FactorType.T4 in d.source_factors)
    two = FactorType.T2 in d.source_factors and FactorType.T4 not in d.source_factors
    assert len(d.target_candidates) == (2 if two else 1)


@settings(max_examples=60, deadline=None)
@given(resolved_products, even_twists)
def test_dual_torus_swaps_trivial_and_reflected_summands(factors, twist):
    d = dualize_standard(factors, twist)
    source = decompose(d.source_torus)
    target = decompose(d.target_torus)
    assert (target.a, target.b, target.r) == (source.b, source.a, source.r)
    assert target.chern_nonzero == d.dual_chern_nonzero


@settings(max_examples=60, deadline=None)
@given(resolved_products, even_twists)
def test_pairing_between_chern_vectors_and_lambda(factors, twist):
    d = dualize_standard(factors, twist)
    assert d.target_torus.chern_vector() == d.source_gerbe.lambda_part
    for candidate in d.target_candidates:
        assert candidate.lambda_part == d.source_torus.chern_vector()
        candidate.check_signatures()


@settings(max_examples=60, deadline=None)
@given(resolved_products, even_twists)
def test_double_dual_keeps_the_classified_invariants(factors, twist):
    d = dualize_standard(factors, twist)
    source_tags = classify_affine_gerbes(d.source_torus).case_tags
    dual_tags = classify_affine_gerbes(d.target_torus).case_tags
    assert sorted(dual_tags) == sorted(CASE_TAGS[f] for f in d.target_factors)
    for candidate in d.target_candidates:
        dd = tdualize(d.target_torus, candidate)
        assert dd.target_factors == d.source_factors
        assert (dd.chern_nonzero, dd.dual_chern_nonzero) == (d.dual_chern_nonzero, d.chern_nonzero)
        assert classify_affine_gerbes(dd.target_torus).case_tags == source_tags
