__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

"""
H^2(C2; A(X)_-) for a Real affine torus X, presented as

    {(lam, u) in Lambda* x R/Z : sigma* lam = -lam, 2u = -lam(t)} / {(alpha - sigma* alpha, -alpha(t))}

With kappa a basis of the anti-invariant dual vectors, the numerator is Z^p + Z/2: the coordinates c of
lam = kappa c, and a bit e choosing between the two solutions of 2u = -lam(t). Everything below is done on this
(p + 1)-dimensional presentation."""

from fractions import Fraction
from typing import List, Tuple
import dataclasses
import logging

from sympy import Matrix

from src.algebra import IntMatrix, FGAbelianGroup, kernel_basis, smith_normal_form, solve_in_lattice
from src.cohomology.c2_cohomology import lattice_multiplicities
from src.cohomology.c2_modules import AffineCoefficient

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class AffineClassRepresentative:
    """
    Args:
        lambda_part (tuple): anti-invariant dual lattice vector.
        u (Fraction): value in [0, 1) with 2u = -lambda(t) mod 1.
        order (int): order of the generator, 0 if it has infinite order.
    """

    lambda_part: Tuple[int, ...]
    u: Fraction
    order: int

    def as_dict(self) -> dict:
        return {"lambda": [str(x) for x in self.lambda_part], "u": str(self.u), "order": str(self.order)}


@dataclasses.dataclass(frozen=True)
class AffineH2Result:
    """
    Args:
        group (FGAbelianGroup): the cohomology group.
        representatives (tuple): one AffineClassRepresentative per invariant factor of the group.
        presentation (IntMatrix): the (p + 1) x (n + 1) relation matrix that was quotiented.
        derived (bool): True when the torus is decomposable, where the group follows from the general presentation
            rather than from the case-by-case classification of circles and the regular 2-torus.
    """

    group: FGAbelianGroup
    representatives: Tuple[AffineClassRepresentative, ...]
    presentation: IntMatrix
    derived: bool


def _u_basis(kappa: IntMatrix, t: Tuple[Fraction, ...]) -> List[Fraction]:
    # u_i = -kappa_i(t) / 2 mod 1
    return [(-sum((k * x for k, x in zip(kappa.column(i), t)), Fraction(0)) / 2) % 1 for i in range(kappa.cols)]


def _is_indecomposable(A: AffineCoefficient) -> bool:
    n = A.lattice.rank
    if n == 1:
        return True
    return n == 2 and lattice_multiplicities(A.lattice) == (0, 0, 1)


def affine_h2(A: AffineCoefficient) -> AffineH2Result:
    """
    Computes H^2(C2; A(X)_-) with one normalized representative per generator.

    Args:
        A (AffineCoefficient): lattice, involution and translation lift of the torus.

    Returns:
        AffineH2Result: group, representatives and presentation.
    """

    sigma = A.lattice.effective_sigma
    n = sigma.rows
    t = A.translation_lift
    sigma_dual = sigma.T
    one = IntMatrix.identity(n)

    kappa = kernel_basis(sigma_dual + one)
    p = kappa.cols
    u = _u_basis(kappa, t)

    columns = []
    for j in range(n):
        lam = (one - sigma_dual).column(j)
        c = solve_in_lattice(kappa, lam)
        assert c is not None, "alpha - sigma* alpha must be anti-invariant"
        twice = 2 * (-t[j] - sum((ci * ui for ci, ui in zip(c, u)), Fraction(0)))
        assert twice.denominator == 1, "the u-fibre bit must be an integer"
        columns.append(list(c) + [int(twice) % 2])
    columns.append([0] * p + [2])
    presentation = IntMatrix.from_columns(columns, rows=p + 1)

    snf = smith_normal_form(presentation)
    left_inv = Matrix(snf.left.to_rows()).inv()
    invariants = list(snf.d) + [0] * (p + 1 - len(snf.d))
    free_rank = 0
    torsion = []
    representatives = []
    for i, d in enumerate(invariants):
        if d == 1:
            continue
        if d == 0:
            free_rank += 1
        else:
            torsion.append(d)
        g = [int(x) for x in left_inv.col(i)]
        coords, bit = g[:p], g[p]
        lam = tuple(kappa.apply(coords))
        value = (sum((ci * ui for ci, ui in zip(coords, u)), Fraction(0)) + Fraction(bit, 2)) % 1
        representatives.append(AffineClassRepresentative(lambda_part=lam, u=value, order=d))

    group = FGAbelianGroup(free_rank=free_rank, torsion=tuple(torsion))
    derived = not _is_indecomposable(A)
    if derived:
        logger.warning("affine H^2 of a decomposable torus is derived from the general presentation")
    logger.debug("affine H^2 presentation %s -> %s", presentation, group)
    return AffineH2Result(
        group=group,
        representatives=tuple(representatives),
        presentation=presentation,
        derived=derived,
    )
