from fractions import Fraction

import numpy as np
import pytest

from src.algebra import FGAbelianGroup, IntMatrix
from src.algebra.random_lattices import block_involution, random_unimodular
from src.cohomology import (
    AffineCoefficient,
    C2Module,
    TorusCoefficient,
    affine_h2,
    cohomology,
    cohomology_oracle,
    cohomology_torus_coeff,
    lattice_multiplicities,
)
from src.errors import DegreeZeroUnsupported, NotAnInvolution

Z = FGAbelianGroup.free(1)
Z2 = FGAbelianGroup.cyclic(2)
ZERO = FGAbelianGroup.trivial()


def random_module(rng: np.random.Generator, sign_twist: bool) -> C2Module:
    """
    A random C2 module: a conjugated block involution, optionally divided by a sigma-stable sublattice.
    """

    while True:
        a, b, r = (int(x) for x in rng.integers(0, 3, size=3))
        n = a + b + 2 * r
        if 1 <= n <= 6:
            break
    U, U_inv = random_unimodular(n, rng, steps=n)
    sigma = U @ block_involution(a, b, r) @ U_inv
    columns = []
    for _ in range(int(rng.integers(0, 3))):
        v = [int(x) for x in rng.integers(-3, 4, size=n)]
        columns += [v, sigma.apply(v)]
    relations = IntMatrix.from_columns(columns, rows=n) if columns else IntMatrix.zeros(n, 0)
    return C2Module(relations=relations, sigma=sigma, sign_twist=sign_twist)


def test_point_cohomology_golden_values():
    assert cohomology(C2Module.trivial(), 2) == Z2
    assert cohomology(C2Module.cyclotomic(), 2) == ZERO
    assert cohomology(C2Module.regular(), 2) == ZERO
    assert cohomology(C2Module.cyclotomic(), 3) == Z2


def test_low_degrees():
    assert cohomology(C2Module.trivial(), 0) == Z
    assert cohomology(C2Module.trivial(), 1) == ZERO
    assert cohomology(C2Module.cyclotomic(), 0) == ZERO
    assert cohomology(C2Module.cyclotomic(), 1) == Z2
    assert cohomology(C2Module.regular(), 0) == Z
    assert cohomology(C2Module.regular(), 1) == ZERO


@pytest.mark.parametrize("k", range(1, 7))
def test_tate_periodicity(k):
    for M in (C2Module.trivial(), C2Module.cyclotomic(), C2Module.regular()):
        assert cohomology(M, k) == cohomology(M, k + 2)


def test_sign_twist_exchanges_trivial_and_cyclotomic():
    assert C2Module.trivial().twisted().effective_sigma == C2Module.cyclotomic().sigma
    for k in range(4):
        assert cohomology(C2Module.trivial().twisted(), k) == cohomology(C2Module.cyclotomic(), k)


def test_module_with_relations():
    # Z/4 with trivial action
    M = C2Module(relations=IntMatrix.from_rows([[4]]), sigma=IntMatrix.identity(1))
    assert cohomology(M, 0) == FGAbelianGroup.cyclic(4)
    assert cohomology(M, 1) == Z2
    assert cohomology(M, 2) == Z2
    # Z/3 has no cohomology in positive degrees
    M = C2Module(relations=IntMatrix.from_rows([[3]]), sigma=-IntMatrix.identity(1))
    assert cohomology(M, 1) == ZERO
    assert cohomology(M, 2) == ZERO


def test_direct_sum_is_additive():
    M = C2Module.trivial().direct_sum(C2Module.cyclotomic()).direct_sum(C2Module.regular())
    assert M.rank == 4
    for k in range(4):
        expected = cohomology(C2Module.trivial(), k) + cohomology(C2Module.cyclotomic(), k)
        expected = expected + cohomology(C2Module.regular(), k)
        assert cohomology(M, k) == expected


def test_not_an_involution():
    with pytest.raises(NotAnInvolution):
        C2Module.from_lattice(IntMatrix.from_rows([[2]]))
    with pytest.raises(NotAnInvolution):
        C2Module.from_lattice(IntMatrix.from_rows([[1, 1], [0, 1]]))
    # sigma must preserve the relation lattice
    with pytest.raises(NotAnInvolution):
        C2Module(relations=IntMatrix.from_rows([[1], [0]]), sigma=IntMatrix.from_rows([[0, 1], [1, 0]]))


def test_resolution_oracle_agrees_on_random_modules():
    rng = np.random.default_rng(2024)
    checked = 0
    for _ in range(100):
        for twist in (False, True):
            M = random_module(rng, twist)
            for k in range(6):
                assert cohomology_oracle(M, k) == cohomology(M, k), (M, k)
            checked += 1
    assert checked >= 200


def test_torus_coefficients():
    T = TorusCoefficient(C2Module.cyclotomic())
    assert cohomology_torus_coeff(T, 1) == cohomology(C2Module.cyclotomic(), 2)
    assert cohomology_torus_coeff(T, 2) == Z2
    with pytest.raises(DegreeZeroUnsupported):
        cohomology_torus_coeff(T, 0)


@pytest.mark.parametrize("k", range(1, 6))
def test_regular_module_is_acyclic(k):
    assert cohomology_oracle(C2Module.regular(), k) == ZERO
    assert cohomology(C2Module.regular(), k) == ZERO


def test_torus_coefficients_on_the_regular_lattice():
    assert cohomology_torus_coeff(TorusCoefficient(C2Module.regular()), 3) == ZERO


def test_lattice_multiplicities():
    rng = np.random.default_rng(7)
    for a, b, r in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 1, 1), (0, 2, 2), (3, 0, 1)]:
        n = a + b + 2 * r
        U, U_inv = random_unimodular(n, rng)
        M = C2Module.from_lattice(U @ block_involution(a, b, r) @ U_inv)
        assert lattice_multiplicities(M) == (a, b, r)


@pytest.mark.parametrize(
    "sigma, t, expected",
    [
        ([[1]], ["0"], Z2),
        ([[1]], ["1/2"], ZERO),
        ([[-1]], ["0"], FGAbelianGroup.from_invariants(0, [2, 2])),
        ([[0, 1], [1, 0]], ["0", "0"], Z2),
    ],
)
def test_affine_h2_indecomposable_cases(sigma, t, expected):
    A = AffineCoefficient(C2Module.from_lattice(IntMatrix.from_rows(sigma)), tuple(Fraction(x) for x in t))
    result = affine_h2(A)
    assert result.group == expected
    assert not result.derived
    assert len(result.representatives) == len(expected.torsion) + expected.free_rank


def test_affine_h2_representatives():
    A = AffineCoefficient(C2Module.cyclotomic(), (Fraction(0),))
    result = affine_h2(A)
    assert result.presentation.shape == (2, 2)
    for rep in result.representatives:
        assert rep.order == 2
        assert 0 <= rep.u < 1
        assert (2 * rep.u).denominator == 1


def test_affine_h2_of_decomposable_torus_is_flagged():
    A = AffineCoefficient(C2Module.trivial().direct_sum(C2Module.trivial()), (Fraction(0), Fraction(0)))
    result = affine_h2(A)
    assert result.derived
    assert result.group == Z2


def test_affine_coefficient_rejects_non_involutions():
    with pytest.raises(NotAnInvolution):
        AffineCoefficient(C2Module.trivial(), (Fraction(1, 3),))
    A = AffineCoefficient(C2Module.trivial(), (Fraction(1, 2),))
    assert A.chern_vector() == (1,)
