from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.algebra import IntMatrix
from src.algebra.random_lattices import random_affine_model
from src.cohomology import C2Module
from src.tori import (
    FactorType,
    RealTorus,
    canonical_factors,
    decompose,
    dual_torus,
    sort_factors,
    standard_torus,
)
from src.errors import NotAnInvolution


def test_classify_swap_torus():
    X = RealTorus.from_matrix([[0, 1], [1, 0]], ["0", "0"])
    inv = decompose(X)
    assert inv.as_dict() == {"a": 0, "b": 0, "r": 1, "chern": False}
    assert canonical_factors(X) == (FactorType.T5,)


def test_half_shift_circle():
    X = RealTorus.from_matrix([[1]], ["1/2"])
    assert X.chern_vector() == (1,)
    assert canonical_factors(X) == (FactorType.T2,)
    assert canonical_factors(RealTorus.from_matrix([[1]], ["3/2"])) == (FactorType.T2,)
    assert canonical_factors(RealTorus.from_matrix([[1]])) == (FactorType.T1,)


def test_reflected_circle_is_pending():
    X = RealTorus.from_matrix([[-1]], ["1/2"])
    assert X.chern_vector() == (0,)
    assert canonical_factors(X) == (FactorType.T3_PENDING,)


def test_two_half_shifts_collapse_to_one():
    X = standard_torus([FactorType.T2, FactorType.T2])
    assert decompose(X).chern_nonzero
    assert canonical_factors(X) == (FactorType.T2, FactorType.T1)


def test_upper_triangular_involution_is_regular():
    X = RealTorus.from_matrix([[1, 1], [0, -1]])
    assert decompose(X).as_dict() == {"a": 0, "b": 0, "r": 1, "chern": False}
    assert canonical_factors(X) == (FactorType.T5,)


def test_swap_translation_has_no_chern_class():
    # on the regular lattice every invariant vector is in im(1 + sigma)
    X = RealTorus.from_matrix([[0, 1], [1, 0]], ["1/2", "1/2"])
    assert X.chern_vector() == (1, 1)
    assert not decompose(X).chern_nonzero


def test_invalid_tori():
    with pytest.raises(NotAnInvolution):
        RealTorus.from_matrix([[1, 0]])
    with pytest.raises(NotAnInvolution):
        RealTorus.from_matrix([[3]])
    with pytest.raises(NotAnInvolution):
        RealTorus.from_matrix([[1]], ["1/3"])


def test_random_assemblies_decompose_to_their_blocks():
    rng = np.random.default_rng(12345)
    for _ in range(500):
        while True:
            a, b, r = (int(x) for x in rng.integers(0, 5, size=3))
            if 1 <= a + b + 2 * r <= 8:
                break
        chern = bool(a >= 1 and rng.random() < 0.5)
        sigma, t = random_affine_model(a, b, r, chern, rng)
        inv = decompose(RealTorus(C2Module.from_lattice(sigma), tuple(t)))
        assert (inv.a, inv.b, inv.r, inv.chern_nonzero) == (a, b, r, chern)


factor_lists = st.lists(st.sampled_from([FactorType.T1, FactorType.T2, FactorType.T5]), min_size=1, max_size=4)


@given(factor_lists)
def test_standard_torus_round_trips_through_classification(factors):
    X = standard_torus(factors)
    expected = list(factors)
    if expected.count(FactorType.T2) > 1:
        twos = expected.count(FactorType.T2)
        expected = [f for f in expected if f is not FactorType.T2] + [FactorType.T2] + [FactorType.T1] * (twos - 1)
    assert canonical_factors(X) == sort_factors(expected)


def test_standard_torus_blocks():
    X = standard_torus([FactorType.T2, FactorType.T3, FactorType.T5])
    assert X.rank == 4
    assert X.sigma == IntMatrix.from_rows([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    assert X.translation_lift == (Fraction(1, 2), Fraction(0), Fraction(0), Fraction(0))


def test_dual_torus():
    X = RealTorus.from_matrix([[1, 0], [0, -1]], ["1/2", "0"])
    D = dual_torus(X)
    assert D.sigma == IntMatrix.from_rows([[-1, 0], [0, 1]])
    assert canonical_factors(D) == (FactorType.T1, FactorType.T3_PENDING)
    assert canonical_factors(dual_torus(standard_torus([FactorType.T5]))) == (FactorType.T5,)


def test_factor_order_and_duals():
    assert sort_factors(["T5", "T3", "T1", "T2", "T4"]) == (
        FactorType.T2,
        FactorType.T1,
        FactorType.T4,
        FactorType.T3,
        FactorType.T5,
    )
    assert [f.dual() for f in (FactorType.T1, FactorType.T2, FactorType.T5)] == [
        FactorType.T3,
        FactorType.T4,
        FactorType.T5,
    ]
    assert str(FactorType.T3_PENDING) == "T3-pending"
