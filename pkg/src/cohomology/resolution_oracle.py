__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

"""
Independent computation of H^k(C2; M) from the periodic free resolution

    ... -> Z[C2] --(1+g)--> Z[C2] --(1-g)--> Z[C2] --> Z

A cochain in degree k is a Z-linear map f: Z[C2] -> M stored as the pair (f(1), f(g)) in M + M. Equivariance
and the coboundary are written out as explicit block matrices and the groups come out of subquotient."""

import logging

from src.algebra import IntMatrix, FGAbelianGroup, subquotient
from src.cohomology.c2_cohomology import preimage_of_relations
from src.cohomology.c2_modules import C2Module

logger = logging.getLogger(__name__)


def _block(a: IntMatrix, b: IntMatrix, c: IntMatrix, d: IntMatrix) -> IntMatrix:
    return a.hstack(b).vstack(c.hstack(d))


def equivariance_matrix(M: C2Module) -> IntMatrix:
    """
    E(f) = (sigma f(1) - f(g), sigma f(g) - f(1)); f is G-linear iff E(f) vanishes in M + M.
    """

    S = M.effective_sigma
    one = IntMatrix.identity(M.rank)
    return _block(S, -one, -one, S)


def coboundary_matrix(M: C2Module, k: int) -> IntMatrix:
    """
    d^k f = f o boundary_(k+1). The boundary of the basis element in degree k + 1 is (1 - g) when k + 1 is odd
    and (1 + g) when it is even, so (d^k f)(1) = f(1) + s f(g) and (d^k f)(g) = f(g) + s f(1).
    """

    s = -1 if k % 2 == 0 else 1
    one = IntMatrix.identity(M.rank)
    return _block(one, one.scale(s), one.scale(s), one)


def _doubled_relations(M: C2Module) -> IntMatrix:
    return IntMatrix.block_diagonal([M.relations, M.relations])


def _equivariant_cochains(M: C2Module) -> IntMatrix:
    return preimage_of_relations(equivariance_matrix(M), _doubled_relations(M))


def cohomology_oracle(M: C2Module, k: int) -> FGAbelianGroup:
    """
    H^k(C2; M) as cocycles over coboundaries of the Hom complex of the periodic resolution.

    Args:
        M (C2Module): coefficient module.
        k (int): degree, k >= 0.

    Returns:
        FGAbelianGroup: the cohomology group.
    """

    assert type(k) is int and k >= 0, "degree must be a non-negative integer"
    rel2 = _doubled_relations(M)
    # cocycles: equivariant cochains killed by d^k, both conditions modulo the relations
    conditions = coboundary_matrix(M, k).vstack(equivariance_matrix(M))
    cocycles = preimage_of_relations(conditions, IntMatrix.block_diagonal([rel2, rel2]))

    if k == 0:
        coboundaries = IntMatrix.zeros(2 * M.rank, 0)
    else:
        coboundaries = coboundary_matrix(M, k - 1) @ _equivariant_cochains(M)

    result = subquotient(cocycles.hstack(rel2), coboundaries.hstack(rel2))
    logger.debug("oracle H^%d of rank %d module: %s", k, M.rank, result)
    return result
