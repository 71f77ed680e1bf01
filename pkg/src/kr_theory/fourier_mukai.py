__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

"""
Group level verification of the Real Fourier-Mukai transform: for every degree j the source group KR^j is compared
with the target group in degree j' given by the shift ledger. Products that are out of reach of kr_torus can be
verified one indecomposable factor at a time, since the transform of a product of gerbes is the composite of the
transforms of the factors."""

from typing import Optional, Tuple
import dataclasses
import logging

from src.algebra import FGAbelianGroup
from src.duality import DualityDatum, fm_degree_map, tdualize
from src.gerbes import degree_shift_of_twist, standard_gerbe
from src.tori import FactorType
from src.kr_theory.torus_groups import PartialResult, kr_torus
from src.errors import UnsupportedProduct

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class DegreeComparison:
    source_degree: int
    target_degree: int
    source: FGAbelianGroup
    target: FGAbelianGroup

    @property
    def equal(self) -> bool:
        return self.source == self.target

    def as_dict(self) -> dict:
        return {
            "j": self.source_degree,
            "j_target": self.target_degree,
            "source": self.source.as_dict(),
            "target": self.target.as_dict(),
            "equal": self.equal,
        }


@dataclasses.dataclass(frozen=True)
class CandidateReport:
    """
    Args:
        candidate (int): index of the target candidate.
        degrees (tuple): the 8 degree comparisons of the twisted groups, along the ledger's degree map.
        untwisted_degrees (tuple): the 8 comparisons of the untwisted groups along j -> j + 2 b_- - n, with b_- and
            n read off the factor types.
        ledger_consistent (bool): whether the ledger's degree map equals the untwisted shift corrected by the
            degree shifts of the two point twists.
        source_free_rank (int): total free rank of the source over all degrees.
        target_free_rank (int): total free rank of the target over all degrees.
    """

    candidate: int
    degrees: Tuple[DegreeComparison, ...]
    untwisted_degrees: Tuple[DegreeComparison, ...]
    ledger_consistent: bool
    source_free_rank: int
    target_free_rank: int

    @property
    def passed(self) -> bool:
        return (
            all(d.equal for d in self.degrees)
            and all(d.equal for d in self.untwisted_degrees)
            and self.ledger_consistent
            and self.source_free_rank == self.target_free_rank
        )


@dataclasses.dataclass(frozen=True)
class FMReport:
    """
    Args:
        mode (str): "direct" or "factorwise".
        candidates (tuple): per-candidate reports, filled in direct mode.
        factor_reports (tuple): (factor, report) pairs, filled in factorwise mode.
    """

    mode: str
    candidates: Tuple[CandidateReport, ...] = ()
    factor_reports: Tuple[Tuple[FactorType, "FMReport"], ...] = ()

    @property
    def passed(self) -> bool:
        if self.mode == "factorwise":
            return all(r.passed for _, r in self.factor_reports)
        return all(c.passed for c in self.candidates)


def _untwisted_offset(factors: Tuple[FactorType, ...]) -> int:
    # every reflected coordinate contributes 2 b_-, every coordinate -n
    minus = sum(1 for f in factors if f.cyclotomic or f is FactorType.T5)
    return 2 * minus - sum(f.dimension for f in factors)


def _compare(d: DualityDatum, candidate: int) -> Optional[CandidateReport]:
    source = kr_torus(d.source_factors, d.source_twist)
    target = kr_torus(d.target_factors, d.target_twist(candidate))
    if isinstance(source, PartialResult) or isinstance(target, PartialResult):
        return None
    degree_map = fm_degree_map(d, candidate)
    rows = tuple(DegreeComparison(j, degree_map[j], source[j], target[degree_map[j]]) for j in range(8))

    plain_source = kr_torus(d.source_factors)
    plain_target = kr_torus(d.target_factors)
    offset = _untwisted_offset(d.source_factors)
    untwisted = tuple(
        DegreeComparison(j, (j + offset) % 8, plain_source[j], plain_target[(j + offset) % 8]) for j in range(8)
    )
    twists = degree_shift_of_twist(d.source_twist) - degree_shift_of_twist(d.target_twist(candidate))
    consistent = all(degree_map[j] == (j + offset + twists) % 8 for j in range(8))
    if not consistent:
        logger.warning("shift ledger of candidate %d disagrees with the factor types", candidate)
    return CandidateReport(
        candidate=candidate,
        degrees=rows,
        untwisted_degrees=untwisted,
        ledger_consistent=consistent,
        source_free_rank=source.total_free_rank(),
        target_free_rank=target.total_free_rank(),
    )


def _verify_factorwise(d: DualityDatum) -> FMReport:
    reports = []
    for f in d.source_factors:
        gerbe = standard_gerbe([f])
        reports.append((f, fm_verify(tdualize(gerbe.torus, gerbe))))
    logger.debug("factorwise verification over %s", [str(f) for f in d.source_factors])
    return FMReport(mode="factorwise", factor_reports=tuple(reports))


def fm_verify(d: DualityDatum, factorwise_fallback: bool = False) -> FMReport:
    """
    Compares source and target KR groups degree by degree for every target candidate.

    Args:
        d (DualityDatum): the dual pair.
        factorwise_fallback (bool): verify factor by factor when the products are out of reach.

    Returns:
        FMReport: the per-degree comparison.

    Raises:
        UnsupportedProduct: if source and target both have two or more non-free factors and no fallback is allowed.
    """

    candidates = []
    for c in range(len(d.target_candidates)):
        report = _compare(d, c)
        if report is None:
            if not factorwise_fallback:
                raise UnsupportedProduct(
                    f"KR groups of {[str(f) for f in d.source_factors]} and {[str(f) for f in d.target_factors]} "
                    "need a Kunneth formula with torsion factors"
                )
            logger.warning("falling back to factorwise Fourier-Mukai verification")
            return _verify_factorwise(d)
        candidates.append(report)
    return FMReport(mode="direct", candidates=tuple(candidates))
