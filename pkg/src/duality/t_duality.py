__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

"""
Real T-duality over a point at the level of classifying data.

The dual torus is the dual lattice with involution -sigma^T. With the identification delta fixed to the identity
in dual coordinates, the Chern class of the dual is the class of lambda(G) and the lambda-part of the dual gerbe is
the Chern vector c = t + sigma(t) of the source."""

from fractions import Fraction
from typing import Iterable, Optional, Tuple
import dataclasses
import logging

from src.algebra import IntMatrix, kernel_basis
from src.cohomology import C2Module
from src.tori import FactorType, RealTorus, canonical_factors, chern_class_nonzero, sort_factors
from src.gerbes import (
    AffineGerbeClass,
    PointGerbeClass,
    degree_shift_of_twist,
    point_gerbe_mul,
    reduce_mod_point_gerbes,
    reflected_coordinates,
)
from src.errors import GradedInput, InconsistentGerbeData, LedgerIncomplete, UnresolvedSignature

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ShiftLedger:
    """
    Degree bookkeeping of a Fourier-Mukai transform.

    Args:
        rank (int): fibre dimension n.
        b_minus (int): number of R_- summands of V, i.e. the rank of ker(sigma + 1).
        source_shift (int): degree shift of the source point twist.
        target_shift (int): degree shift of the target point twist.
    """

    rank: Optional[int] = None
    b_minus: Optional[int] = None
    source_shift: Optional[int] = None
    target_shift: Optional[int] = None

    def missing(self) -> Tuple[str, ...]:
        return tuple(f.name for f in dataclasses.fields(self) if getattr(self, f.name) is None)

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True)
class DualityDatum:
    """
    A classified Real T-dual pair over a point.

    Args:
        source_torus (RealTorus): X.
        source_gerbe (AffineGerbeClass): G, trivially graded.
        source_factors (tuple): resolved factor multiset of (X, G).
        source_twist (PointGerbeClass): residual point twist of G.
        target_torus (RealTorus): the dual torus with translation lift lambda(G) / 2.
        target_candidates (tuple): one or two dual gerbes, the second differing from the first by the point gerbe
            (0, 1).
        target_factors (tuple): resolved factor multiset of the dual.
        delta (IntMatrix): identification of the dual lattice with Lambda*_-, the identity here.
        chern_nonzero (bool): whether c is nonzero.
        dual_chern_nonzero (bool): whether the dual Chern class is nonzero.
        ledgers (tuple): one ShiftLedger per target candidate.
    """

    source_torus: RealTorus
    source_gerbe: AffineGerbeClass
    source_factors: Tuple[FactorType, ...]
    source_twist: PointGerbeClass
    target_torus: RealTorus
    target_candidates: Tuple[AffineGerbeClass, ...]
    target_factors: Tuple[FactorType, ...]
    delta: IntMatrix
    chern_nonzero: bool
    dual_chern_nonzero: bool
    ledgers: Tuple[ShiftLedger, ...]

    def __post_init__(self):
        assert len(self.target_candidates) in (1, 2), "a dual pair has one or two candidate gerbes"
        assert len(self.ledgers) == len(self.target_candidates), "one ledger per candidate"

    @property
    def shift_ledger(self) -> ShiftLedger:
        return self.ledgers[0]

    def target_twist(self, candidate: int = 0) -> PointGerbeClass:
        return self.target_candidates[candidate].point_twist


def _b_minus(torus: RealTorus) -> int:
    return kernel_basis(torus.sigma + IntMatrix.identity(torus.rank)).cols


def _target_signatures(
    target_torus: RealTorus, c: Tuple[int, ...], chern_nonzero: bool
) -> Optional[Tuple[Tuple[int, int], ...]]:
    slots = sum(1 for f in canonical_factors(target_torus) if f.cyclotomic)
    if not slots:
        return None
    coords = reflected_coordinates(target_torus)
    if coords is not None:
        return tuple((0, c[i] % 2) for i in coords)
    first = (0, 1) if chern_nonzero else (0, 0)
    return (first,) + ((0, 0),) * (slots - 1)


def tdualize(X: RealTorus, G: AffineGerbeClass) -> DualityDatum:
    """
    Constructs the Real T-dual of (X, G).

    The candidate set has two elements, differing by the point gerbe (0, 1), exactly when c is nonzero and the
    dual Chern class vanishes. Otherwise the dual gerbe is unique.

    Args:
        X (RealTorus): the torus.
        G (AffineGerbeClass): a trivially graded gerbe on X.

    Returns:
        DualityDatum: the classified dual pair.

    Raises:
        GradedInput: if G has a nontrivial grading.
        InconsistentGerbeData: if G lives on another torus, or lambda(G) and the fixed point signatures disagree.
        UnresolvedSignature: if X has reflected circles and G carries no signatures.
    """

    if G.torus != X:
        raise InconsistentGerbeData("the gerbe is attached to a different torus")
    if G.is_graded:
        raise GradedInput("strip the grading into the point twist ledger before dualizing")
    reduced = reduce_mod_point_gerbes(G)
    G.check_signatures()
    dual_chern = G.lambda_nonzero()

    c = X.chern_vector()
    chern = chern_class_nonzero(X.sigma, c)
    n = X.rank

    target_torus = RealTorus(
        C2Module.from_lattice(-X.sigma.T),
        tuple(Fraction(x, 2) for x in G.lambda_part),
    )
    first = AffineGerbeClass(
        torus=target_torus,
        lambda_part=c,
        point_twist=reduced.residual_twist,
        fixed_point_signatures=_target_signatures(target_torus, c, chern),
    )
    candidates = [first]
    if chern and not dual_chern:
        flipped = point_gerbe_mul(first.point_twist, PointGerbeClass(0, 1))
        candidates.append(dataclasses.replace(first, point_twist=flipped))

    source_shift = degree_shift_of_twist(reduced.residual_twist)
    ledgers = tuple(
        ShiftLedger(
            rank=n,
            b_minus=_b_minus(X),
            source_shift=source_shift,
            target_shift=degree_shift_of_twist(cand.point_twist),
        )
        for cand in candidates
    )
    target_factors = dualize_classified(reduced.factors)
    logger.debug(
        "dualized %s -> %s with %d candidate(s)",
        [str(f) for f in reduced.factors],
        [str(f) for f in target_factors],
        len(candidates),
    )
    return DualityDatum(
        source_torus=X,
        source_gerbe=G,
        source_factors=reduced.factors,
        source_twist=reduced.residual_twist,
        target_torus=target_torus,
        target_candidates=tuple(candidates),
        target_factors=target_factors,
        delta=IntMatrix.identity(n),
        chern_nonzero=chern,
        dual_chern_nonzero=dual_chern,
        ledgers=ledgers,
    )


def dualize_classified(factors: Iterable[FactorType]) -> Tuple[FactorType, ...]:
    """
    Factorwise exchange T1 <-> T3, T2 <-> T4, T5 <-> T5.

    Raises:
        UnresolvedSignature: if some factor is still T3-pending.
    """

    factors = [FactorType(f) for f in factors]
    if FactorType.T3_PENDING in factors:
        raise UnresolvedSignature("resolve reflected circles to T3 or T4 before dualizing")
    return sort_factors(f.dual() for f in factors)


def fm_degree_map(d: DualityDatum, candidate: int = 0) -> Tuple[int, ...]:
    """
    Target degree j' = j + 2 b_- - n + (source_shift - target_shift) mod 8 for every source degree j.

    Args:
        d (DualityDatum): the dual pair.
        candidate (int): index of the target candidate whose ledger is used.

    Returns:
        tuple: the 8 target degrees, indexed by the source degree.

    Raises:
        LedgerIncomplete: if the ledger is missing a field.
    """

    ledger = d.ledgers[candidate]
    missing = ledger.missing()
    if missing:
        raise LedgerIncomplete(f"shift ledger is missing {', '.join(missing)}")
    offset = 2 * ledger.b_minus - ledger.rank + ledger.source_shift - ledger.target_shift
    return tuple((j + offset) % 8 for j in range(8))
