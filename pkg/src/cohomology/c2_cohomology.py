__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

"""
Group cohomology of the two element group, computed from the kernels and images of 1 - sigma and 1 + sigma.
In positive degrees the groups are 2-periodic."""

from typing import Tuple
import logging

from src.algebra import IntMatrix, FGAbelianGroup, kernel_basis, subquotient
from src.cohomology.c2_modules import C2Module, TorusCoefficient
from src.errors import DegreeZeroUnsupported

logger = logging.getLogger(__name__)


def preimage_of_relations(F: IntMatrix, relations: IntMatrix) -> IntMatrix:
    """
    Generators of {x in Z^n : F x in im(relations)}, i.e. the kernel of F on the module Z^n / im(relations),
    lifted to Z^n.

    Args:
        F (IntMatrix): k x n matrix.
        relations (IntMatrix): k x m matrix.

    Returns:
        IntMatrix: n x s matrix of generators.
    """

    K = kernel_basis(F.hstack(relations))
    return K.select_rows(range(F.cols))


def _quotient(num: IntMatrix, den: IntMatrix, relations: IntMatrix) -> FGAbelianGroup:
    return subquotient(num.hstack(relations), den.hstack(relations))


def cohomology(M: C2Module, k: int) -> FGAbelianGroup:
    """
    H^k(C2; M).

    Args:
        M (C2Module): coefficient module.
        k (int): degree, k >= 0.

    Returns:
        FGAbelianGroup: the cohomology group.
    """

    assert type(k) is int and k >= 0, "degree must be a non-negative integer"
    n = M.rank
    sigma = M.effective_sigma
    one = IntMatrix.identity(n)
    rel = M.relations

    if k == 0:
        fixed = preimage_of_relations(one - sigma, rel)
        result = _quotient(fixed, IntMatrix.zeros(n, 0), rel)
    elif k % 2 == 0:
        result = _quotient(preimage_of_relations(one - sigma, rel), one + sigma, rel)
    else:
        result = _quotient(preimage_of_relations(one + sigma, rel), one - sigma, rel)
    logger.debug("H^%d of rank %d module: %s", k, n, result)
    return result


def cohomology_torus_coeff(T: TorusCoefficient, k: int) -> FGAbelianGroup:
    """
    H^k(C2; V / Lambda) for k >= 1, which is H^(k+1)(C2; Lambda) since V is uniquely divisible.

    Raises:
        DegreeZeroUnsupported: for k = 0, where the fixed subtorus is not finitely generated.
    """

    if k == 0:
        raise DegreeZeroUnsupported("H^0 with torus coefficients is a compact group, not finitely generated")
    assert k >= 1, "degree must be positive"
    return cohomology(T.lattice, k + 1)


def lattice_multiplicities(M: C2Module) -> Tuple[int, int, int]:
    """
    Multiplicities (a, b, r) of the trivial, cyclotomic and regular summands of a Z[C2]-lattice.

    a is the 2-rank of H^2, b the 2-rank of H^1 and a + r the rank of the fixed sublattice.
    """

    assert M.is_lattice(), "multiplicities are defined for lattices"
    lattice = M.untwisted()
    a = cohomology(lattice, 2).two_rank()
    b = cohomology(lattice, 1).two_rank()
    fixed_rank = kernel_basis(IntMatrix.identity(lattice.rank) - lattice.sigma).cols
    return a, b, fixed_rank - a
