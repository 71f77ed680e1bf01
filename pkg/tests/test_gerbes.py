import itertools

import pytest
from hypothesis import given, settings, strategies as st

from src.algebra import FGAbelianGroup
from src.tori import FactorType, RealTorus, standard_torus
from src.gerbes import (
    AffineGerbeClass,
    PointGerbeClass,
    classify_affine_gerbes,
    reflected_coordinates,
    degree_shift_of_twist,
    point_gerbe_inverse,
    point_gerbe_mul,
    point_gerbe_order,
    point_gerbe_power,
    reduce_mod_point_gerbes,
    standard_gerbe,
)
from src.errors import InconsistentGerbeData, UnresolvedSignature

U = PointGerbeClass.generator()
Z2 = FGAbelianGroup.cyclic(2)


def test_generator_has_order_four():
    assert U == PointGerbeClass(1, 0)
    assert point_gerbe_order(U) == 4
    assert point_gerbe_mul(U, U) == PointGerbeClass(0, 1)
    assert U * U * U * U == PointGerbeClass.identity()


def test_multiplication_table_is_cyclic_of_order_four():
    for p, q in itertools.product(range(4), repeat=2):
        product = point_gerbe_mul(PointGerbeClass.from_z4(p), PointGerbeClass.from_z4(q))
        assert product == PointGerbeClass.from_z4(p + q)
        assert product.to_z4() == (p + q) % 4


def test_orders_and_inverses():
    assert [point_gerbe_order(PointGerbeClass.from_z4(p)) for p in range(4)] == [1, 4, 2, 4]
    for p in range(4):
        g = PointGerbeClass.from_z4(p)
        assert point_gerbe_mul(g, point_gerbe_inverse(g)) == PointGerbeClass.identity()


@given(st.integers(-20, 20))
def test_powers_of_the_generator(p):
    assert point_gerbe_power(U, p) == PointGerbeClass.from_z4(p)


def test_degree_shifts_are_even():
    assert [degree_shift_of_twist(PointGerbeClass.from_z4(p)) for p in range(4)] == [0, 6, 4, 2]


@pytest.mark.parametrize(
    "factor, tag, group",
    [
        (FactorType.T1, 1, Z2),
        (FactorType.T2, 2, FGAbelianGroup.trivial()),
        (FactorType.T3, 3, FGAbelianGroup.from_invariants(0, [2, 2])),
        (FactorType.T5, 4, Z2),
    ],
)
def test_affine_gerbe_cases(factor, tag, group):
    result = classify_affine_gerbes(standard_torus([factor]))
    assert result.group == group
    assert result.case_tags == (tag,)
    assert result.whole_torus.group == group
    assert not result.whole_torus.derived


def test_affine_gerbes_on_a_product_are_factorwise():
    X = standard_torus([FactorType.T1, FactorType.T3])
    result = classify_affine_gerbes(X)
    assert result.factors == (FactorType.T1, FactorType.T3_PENDING)
    assert result.case_tags == (1, 3)
    assert result.group == FGAbelianGroup.from_invariants(0, [2, 2, 2])
    assert result.whole_torus.derived


def test_reduction_resolves_reflected_circles():
    g = standard_gerbe([FactorType.T4, FactorType.T4])
    assert g.fixed_point_signatures == ((0, 1), (0, 1))
    reduced = reduce_mod_point_gerbes(g)
    assert reduced.factors == (FactorType.T4, FactorType.T3)
    assert reduced.collapsed == 1
    assert reduced.residual_twist == PointGerbeClass.identity()


def test_reduction_moves_equal_restrictions_into_the_twist():
    X = standard_torus([FactorType.T3])
    g = AffineGerbeClass(torus=X, lambda_part=(0,), fixed_point_signatures=((1, 1),))
    reduced = reduce_mod_point_gerbes(g)
    assert reduced.factors == (FactorType.T3,)
    assert reduced.residual_twist == PointGerbeClass(0, 1)

    g = AffineGerbeClass(torus=X, lambda_part=(1,), fixed_point_signatures=((1, 0),))
    reduced = reduce_mod_point_gerbes(g)
    assert reduced.factors == (FactorType.T4,)
    assert reduced.residual_twist == PointGerbeClass(0, 1)


def test_missing_signatures():
    g = AffineGerbeClass(torus=standard_torus([FactorType.T3]), lambda_part=(0,))
    with pytest.raises(UnresolvedSignature):
        reduce_mod_point_gerbes(g)
    with pytest.raises(UnresolvedSignature):
        standard_gerbe([FactorType.T3_PENDING])


def test_gerbe_data_is_checked():
    X = RealTorus.from_matrix([[1]])
    with pytest.raises(InconsistentGerbeData):
        AffineGerbeClass(torus=X, lambda_part=(1,))
    with pytest.raises(InconsistentGerbeData):
        AffineGerbeClass(torus=X, lambda_part=(0, 0))
    with pytest.raises(InconsistentGerbeData):
        AffineGerbeClass(torus=standard_torus([FactorType.T3]), lambda_part=(0,), fixed_point_signatures=())


def test_standard_gerbe_lambda():
    g = standard_gerbe([FactorType.T5, FactorType.T4, FactorType.T2])
    assert g.lambda_part == (0, 1, 0, 0)
    assert g.lambda_nonzero()
    assert g.has_mixed_signature()
    assert not standard_gerbe([FactorType.T3]).lambda_nonzero()
    assert g.as_dict()["signatures"] == [[0, 1]]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from([FactorType.T1, FactorType.T2, FactorType.T3, FactorType.T5]), min_size=1, max_size=3))
def test_affine_gerbe_order_is_factorwise(factors):
    result = classify_affine_gerbes(standard_torus(factors))
    # extra half shifts are absorbed into trivial circles
    ones = factors.count(FactorType.T1) + factors.count(FactorType.T5) + max(factors.count(FactorType.T2) - 1, 0)
    assert result.group.order() == 2**ones * 4 ** factors.count(FactorType.T3)


def test_reflected_coordinates():
    assert reflected_coordinates(standard_torus([FactorType.T2, FactorType.T4, FactorType.T5])) == (1,)
    assert reflected_coordinates(standard_torus([FactorType.T3, FactorType.T3])) == (0, 1)
    assert reflected_coordinates(RealTorus.from_matrix([[0, 1], [1, 0]])) == ()
    # Z + Z_- with the reflected circle off the coordinate axes
    assert reflected_coordinates(RealTorus.from_matrix([[1, -2], [0, -1]])) is None


def test_signatures_are_checked_circle_by_circle():
    X = standard_torus([FactorType.T3, FactorType.T3])
    AffineGerbeClass(torus=X, lambda_part=(1, 0), fixed_point_signatures=((1, 0), (1, 1))).check_signatures()
    AffineGerbeClass(torus=X, lambda_part=(3, 2), fixed_point_signatures=((0, 1), (1, 1))).check_signatures()
    with pytest.raises(InconsistentGerbeData):
        AffineGerbeClass(torus=X, lambda_part=(1, 0), fixed_point_signatures=((0, 0), (0, 1))).check_signatures()
    with pytest.raises(InconsistentGerbeData):
        AffineGerbeClass(torus=X, lambda_part=(0, 0), fixed_point_signatures=((0, 1), (0, 0))).check_signatures()
