__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

from typing import Iterable, Tuple, Union
import dataclasses
import logging

from src.tori import FactorType, sort_factors
from src.gerbes import PointGerbeClass, degree_shift_of_twist
from src.kr_theory.graded_groups import GradedGroupZ8, shift
from src.kr_theory.tables import KRTable, POINT, kr_table
from src.errors import UnresolvedSignature

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class PartialResult:
    """
    Returned instead of a graded group when a product has two or more non-free factors.

    Args:
        factors (tuple): the requested factors.
        twist (PointGerbeClass): the requested point twist.
        factor_tables (tuple): KR tables of the individual factors.
        reason (str): why the product is not computed.
    """

    factors: Tuple[FactorType, ...]
    twist: PointGerbeClass
    factor_tables: Tuple[KRTable, ...]
    reason: str = "products with two or more non-free factors are not supported"


def kr_torus(
    factors: Iterable[FactorType], twist: PointGerbeClass = None
) -> Union[GradedGroupZ8, PartialResult]:
    """
    Twisted KR-theory of a product of indecomposable factors.

    Starting from the table of the unique non-free factor (or of the point), every T1 factor maps G to
    G + shift(G, 1) and every T3 factor maps G to G + shift(G, -1). A point twist with degree shift s then reads
    the untwisted groups at j + s.

    Args:
        factors (Iterable[FactorType]): resolved factors.
        twist (PointGerbeClass, optional): point twist. Defaults to the trivial class.

    Returns:
        GradedGroupZ8 or PartialResult: the groups, or a partial result for unsupported products.

    Raises:
        UnresolvedSignature: if a factor is still T3-pending.
    """

    factors = sort_factors(factors)
    twist = twist if twist is not None else PointGerbeClass.identity()
    if FactorType.T3_PENDING in factors:
        raise UnresolvedSignature("resolve reflected circles to T3 or T4 before computing KR groups")

    non_free = [f for f in factors if not f.is_free]
    if len(non_free) >= 2:
        logger.debug("kr_torus: %d non-free factors, returning a partial result", len(non_free))
        return PartialResult(factors, twist, tuple(kr_table(f) for f in factors))

    G = kr_table(non_free[0] if non_free else POINT).graded
    for f in factors:
        if f is FactorType.T1:
            G = G + shift(G, 1)
        elif f is FactorType.T3:
            G = G + shift(G, -1)
    return shift(G, -degree_shift_of_twist(twist))
