import dataclasses
import itertools

import pytest
from hypothesis import given, strategies as st

from src.algebra import FGAbelianGroup
from src.tori import FactorType
from src.gerbes import PointGerbeClass, degree_shift_of_twist, standard_gerbe
from src.duality import ShiftLedger, tdualize
from src.kr_theory import (
    POINT,
    GradedGroupZ8,
    PartialResult,
    RElement,
    fm_verify,
    kr_point,
    kr_table,
    kr_torus,
    r_mul,
    shift,
)
from src.errors import UnresolvedSignature, UnsupportedProduct

Z = FGAbelianGroup.free(1)
Z2 = FGAbelianGroup.cyclic(2)
ZERO = FGAbelianGroup.trivial()


def G(free_rank=0, *torsion):
    return FGAbelianGroup.from_invariants(free_rank, list(torsion))


GOLDEN_TABLES = {
    POINT: [Z, ZERO, ZERO, ZERO, Z, ZERO, Z2, Z2],
    FactorType.T1: [G(1, 2), Z, ZERO, ZERO, Z, Z, Z2, G(0, 2, 2)],
    FactorType.T2: [Z, Z, ZERO, Z2, Z, Z, ZERO, Z2],
    FactorType.T3: [Z, ZERO, ZERO, Z, Z, Z2, G(0, 2, 2), G(1, 2)],
    FactorType.T4: [Z, ZERO, Z2, Z, Z, ZERO, Z2, Z],
    FactorType.T5: [G(2), Z, ZERO, Z, G(2), Z, G(0, 2, 2), G(1, 2, 2)],
}

INDECOMPOSABLE = [FactorType.T1, FactorType.T2, FactorType.T3, FactorType.T4, FactorType.T5]

r_elements = st.builds(
    RElement,
    one=st.integers(-6, 6),
    h=st.integers(-6, 6),
    eta=st.integers(0, 1),
    eta2=st.integers(0, 1),
)


def test_coefficient_ring_relations():
    h = RElement.monomial("h")
    eta = RElement.monomial("η")
    assert h * h == RElement(one=4)
    assert eta * eta == RElement.monomial("η²")
    assert (eta * eta * eta).is_zero()
    assert (eta + eta).is_zero()
    assert r_mul(eta, h).is_zero()
    assert (RElement.unit() + h) * (RElement.unit() - h) == RElement(one=-3)
    assert [RElement.monomial(m).degree() for m in ("1", "h", "η", "η²")] == [0, 4, 7, 6]
    assert (RElement.unit() + h).degree() is None
    assert str(RElement(one=2, eta=1)) == "2 + η"


@given(r_elements, r_elements, r_elements)
def test_coefficient_ring_is_commutative_and_associative(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * RElement.unit() == x


def test_point_groups():
    assert [kr_point(j) for j in range(8)] == GOLDEN_TABLES[POINT]
    assert kr_point(-2) == kr_point(6)


@pytest.mark.parametrize("t", list(GOLDEN_TABLES))
def test_golden_tables(t):
    table = kr_table(t)
    assert [table[j] for j in range(8)] == GOLDEN_TABLES[t]


@pytest.mark.parametrize("t", list(GOLDEN_TABLES))
def test_generators_span_the_tables(t):
    table = kr_table(t)
    for j in range(8):
        orders = [g.order for g in table.generators_in_degree(j)]
        assert FGAbelianGroup.from_invariants(0, orders) == table[j]
    assert table.free_over_R == (t in (POINT, FactorType.T1, FactorType.T3))


def test_free_table_generator_names():
    names = {g.name for g in kr_table(FactorType.T1).generators}
    assert {"1", "τ", "hτ", "ητ", "η²τ"} <= names


def test_shift_convention():
    P = kr_table(POINT).graded
    assert shift(P, 1)[1] == Z
    assert shift(P, 8) == P
    assert P.shift(-2)[4] == Z2


@pytest.mark.parametrize("t", INDECOMPOSABLE)
def test_single_factor_products_are_the_tables(t):
    assert kr_torus([t]) == kr_table(t).graded


def test_products_with_free_factors():
    P = kr_table(POINT).graded
    assert kr_torus([]) == P
    assert kr_torus([FactorType.T1, FactorType.T1]) == kr_torus([FactorType.T1]) + shift(kr_torus([FactorType.T1]), 1)
    T2T3 = kr_torus([FactorType.T3, FactorType.T2])
    T2 = kr_table(FactorType.T2).graded
    assert T2T3 == T2 + shift(T2, -1)
    assert kr_torus([FactorType.T1] * 3).total_free_rank() == 2**3 * P.total_free_rank()


@pytest.mark.parametrize("p", range(4))
@pytest.mark.parametrize("factors", [[FactorType.T1], [FactorType.T4, FactorType.T3], [FactorType.T5]])
def test_point_twist_reads_shifted_degrees(factors, p):
    twist = PointGerbeClass.from_z4(p)
    s = degree_shift_of_twist(twist)
    untwisted = kr_torus(factors)
    twisted = kr_torus(factors, twist)
    assert all(twisted[j] == untwisted[(j + s) % 8] for j in range(8))


def test_two_non_free_factors_give_a_partial_result():
    result = kr_torus([FactorType.T5, FactorType.T2])
    assert isinstance(result, PartialResult)
    assert result.factors == (FactorType.T2, FactorType.T5)
    assert [t.type_tag for t in result.factor_tables] == [FactorType.T2, FactorType.T5]
    assert "non-free" in result.reason


def test_pending_factors_are_rejected():
    with pytest.raises(UnresolvedSignature):
        kr_torus([FactorType.T3_PENDING])


def test_graded_group_needs_eight_degrees():
    with pytest.raises(AssertionError):
        GradedGroupZ8((Z,) * 7)
    assert GradedGroupZ8.trivial().total_free_rank() == 0


def verify_standard(factors, twist=None, fallback=False):
    g = standard_gerbe(factors, twist)
    return fm_verify(tdualize(g.torus, g), factorwise_fallback=fallback)


@pytest.mark.parametrize("t", INDECOMPOSABLE)
def test_fourier_mukai_on_indecomposables(t):
    report = verify_standard([t])
    assert report.mode == "direct"
    assert report.passed
    assert len(report.candidates) == (2 if t is FactorType.T2 else 1)
    for candidate in report.candidates:
        assert len(candidate.degrees) == 8
        assert candidate.source_free_rank == candidate.target_free_rank


def test_fourier_mukai_degree_rows():
    report = verify_standard([FactorType.T2])
    rows = report.candidates[0].degrees
    assert [r.target_degree for r in rows] == [(j - 1) % 8 for j in range(8)]
    assert rows[3].as_dict()["source"] == Z2.as_dict()
    assert all(r.as_dict()["equal"] for r in rows)


@pytest.mark.parametrize("p", range(0, 4, 2))
@pytest.mark.parametrize("t", INDECOMPOSABLE)
def test_fourier_mukai_with_point_twists(t, p):
    assert verify_standard([t], PointGerbeClass.from_z4(p)).passed


@pytest.mark.parametrize("pair", list(itertools.product(INDECOMPOSABLE, repeat=2)))
def test_fourier_mukai_on_pairs(pair):
    report = verify_standard(list(pair), fallback=True)
    assert report.passed
    d = tdualize(standard_gerbe(pair).torus, standard_gerbe(pair))
    non_free = [f for f in d.source_factors if not f.is_free]
    if len(non_free) >= 2:
        assert report.mode == "factorwise"
        assert [f for f, _ in report.factor_reports] == list(d.source_factors)
        with pytest.raises(UnsupportedProduct):
            fm_verify(d)
    else:
        assert report.mode == "direct"


def test_equal_reflected_pairs_resolve_to_direct_verification():
    # two half shifts reduce to T2 x T1, two reflected circles with mixed signatures to T4 x T3
    assert verify_standard([FactorType.T2, FactorType.T2]).mode == "direct"
    assert verify_standard([FactorType.T4, FactorType.T4]).mode == "direct"


UNTWISTED_OFFSETS = {FactorType.T1: -1, FactorType.T2: -1, FactorType.T3: 1, FactorType.T4: 1, FactorType.T5: 0}


@pytest.mark.parametrize("p", range(0, 4, 2))
@pytest.mark.parametrize("t", INDECOMPOSABLE)
def test_untwisted_rows_read_the_golden_tables(t, p):
    report = verify_standard([t], PointGerbeClass.from_z4(p))
    offset = UNTWISTED_OFFSETS[t]
    for candidate in report.candidates:
        assert candidate.ledger_consistent
        for j, row in enumerate(candidate.untwisted_degrees):
            assert row.target_degree == (j + offset) % 8
            assert row.source == GOLDEN_TABLES[t][j]
            assert row.target == GOLDEN_TABLES[t.dual()][(j + offset) % 8]


def test_wrong_ledger_is_caught_on_periodic_tables():
    # the half shift circle and its dual repeat with period 4, so a ledger off by 4 still matches every row
    g = standard_gerbe([FactorType.T2])
    d = tdualize(g.torus, g)
    ledger = ShiftLedger(rank=1, b_minus=0, source_shift=4, target_shift=0)
    broken = dataclasses.replace(d, target_candidates=d.target_candidates[:1], ledgers=(ledger,))
    report = fm_verify(broken)
    candidate = report.candidates[0]
    assert all(row.equal for row in candidate.degrees)
    assert not candidate.ledger_consistent
    assert not report.passed
