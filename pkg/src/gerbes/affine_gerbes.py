__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

from typing import Iterable, Optional, Tuple
import dataclasses
import logging
import math

from src.algebra import FGAbelianGroup, IntMatrix, solve_in_lattice
from src.cohomology import affine_h2, AffineH2Result
from src.tori import FactorType, RealTorus, canonical_factors, standard_torus, sort_factors
from src.gerbes.point_gerbes import PointGerbeClass, point_gerbe_mul
from src.errors import InconsistentGerbeData, UnresolvedSignature

logger = logging.getLogger(__name__)

Signature = Tuple[int, int]

CASE_TAGS = {
    FactorType.T1: 1,
    FactorType.T2: 2,
    FactorType.T3_PENDING: 3,
    FactorType.T3: 3,
    FactorType.T4: 3,
    FactorType.T5: 4,
}

CASE_ORDERS = {1: 2, 2: 1, 3: 4, 4: 2}


def lambda_class_nonzero(torus: RealTorus, lambda_part: Iterable[int]) -> bool:
    """
    Whether lambda is nonzero in H^2(C2; Lambda*_-) = ker(1 + sigma^T) / im(1 - sigma^T).
    """

    one = IntMatrix.identity(torus.rank)
    return solve_in_lattice(one - torus.sigma.T, list(lambda_part)) is None


def reflected_coordinates(torus: RealTorus) -> Optional[Tuple[int, ...]]:
    """
    Coordinates i with sigma e_i = -e_i and e_i^T sigma = -e_i^T, in index order.

    Each one spans a reflected circle factor. Returns None unless they account for every reflected circle of the
    torus, in which case the k-th fixed point signature belongs to the k-th coordinate.
    """

    n = torus.rank
    sigma = torus.sigma
    coords = []
    for i in range(n):
        e = tuple(-1 if k == i else 0 for k in range(n))
        if sigma.row(i) == e and sigma.column(i) == e:
            coords.append(i)
    slots = sum(1 for f in canonical_factors(torus) if f.cyclotomic)
    return tuple(coords) if len(coords) == slots else None


@dataclasses.dataclass(frozen=True)
class AffineGerbeClass:
    """
    Classification data of a Real affine gerbe on a Real torus over a point.

    Args:
        torus (RealTorus): the torus carrying the gerbe.
        lambda_part (tuple): dual lattice vector with sigma^T lambda = -lambda, a representative of lambda(G).
        point_twist (PointGerbeClass): the part pulled back from the point, grading included.
        fixed_point_signatures (tuple, optional): for each reflected circle factor, the restrictions (in Z/2) of
            the gerbe to its two fixed points. None when the torus has no such factor or they are unknown.
    """

    torus: RealTorus
    lambda_part: Tuple[int, ...]
    point_twist: PointGerbeClass = dataclasses.field(default_factory=PointGerbeClass)
    fixed_point_signatures: Optional[Tuple[Signature, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "lambda_part", tuple(int(x) for x in self.lambda_part))
        if len(self.lambda_part) != self.torus.rank:
            raise InconsistentGerbeData("lambda has the wrong length for the torus")
        image = self.torus.sigma.T.apply(list(self.lambda_part))
        if any(x != -y for x, y in zip(image, self.lambda_part)):
            raise InconsistentGerbeData("lambda must satisfy sigma^T lambda = -lambda")
        if self.fixed_point_signatures is not None:
            signatures = tuple((int(s0) % 2, int(s1) % 2) for s0, s1 in self.fixed_point_signatures)
            object.__setattr__(self, "fixed_point_signatures", signatures)
            slots = sum(1 for f in canonical_factors(self.torus) if f.cyclotomic)
            if len(signatures) != slots:
                raise InconsistentGerbeData(f"expected {slots} fixed point signatures, got {len(signatures)}")

    @property
    def is_graded(self) -> bool:
        return self.point_twist.is_graded

    def lambda_nonzero(self) -> bool:
        return lambda_class_nonzero(self.torus, self.lambda_part)

    def has_mixed_signature(self) -> bool:
        return any(s0 != s1 for s0, s1 in self.fixed_point_signatures or ())

    def check_signatures(self) -> None:
        """
        Matches lambda(G) against the fixed point signatures.

        lambda(G) must be nonzero exactly when some reflected circle has unequal restrictions. When the reflected
        circles sit on coordinates, the parity of lambda on each of them must also equal s1 - s0 of its own slot.

        Raises:
            InconsistentGerbeData: on a mismatch.
        """

        if self.lambda_nonzero() != self.has_mixed_signature():
            raise InconsistentGerbeData(
                "lambda(G) is nonzero exactly when some reflected circle has unequal fixed point restrictions"
            )
        coords = reflected_coordinates(self.torus)
        if coords is None or self.fixed_point_signatures is None:
            return
        for slot, (i, (s0, s1)) in enumerate(zip(coords, self.fixed_point_signatures)):
            if (self.lambda_part[i] - s1 + s0) % 2:
                raise InconsistentGerbeData(
                    f"reflected circle {slot} has signature ({s0}, {s1}) but lambda is {self.lambda_part[i]} there"
                )

    def as_dict(self) -> dict:
        signatures = self.fixed_point_signatures
        return {
            "lambda": [str(x) for x in self.lambda_part],
            "point_twist": self.point_twist.as_dict(),
            "signatures": None if signatures is None else [list(s) for s in signatures],
        }


@dataclasses.dataclass(frozen=True)
class AffineGerbeClassification:
    """
    Args:
        group (FGAbelianGroup): direct sum over the factors of their groups of trivially graded affine gerbes.
        case_tags (tuple): case 1..4 of each factor, in factor order.
        factors (tuple): the factors of the torus.
        whole_torus (AffineH2Result): the group computed directly on the whole torus.
    """

    group: FGAbelianGroup
    case_tags: Tuple[int, ...]
    factors: Tuple[FactorType, ...]
    whole_torus: AffineH2Result


def classify_affine_gerbes(X: RealTorus) -> AffineGerbeClassification:
    """
    Groups of trivially graded affine gerbe classes, factor by factor.

    Args:
        X (RealTorus): the torus.

    Returns:
        AffineGerbeClassification: the factorwise group with case tags, and the whole-torus computation.
    """

    factors = canonical_factors(X)
    group = FGAbelianGroup.trivial()
    for f in factors:
        group = group + affine_h2(standard_torus([f]).affine_coefficient()).group
    tags = tuple(CASE_TAGS[f] for f in factors)
    expected = math.prod(CASE_ORDERS[tag] for tag in tags)
    assert group.order() == expected, f"factorwise gerbe group {group} should have order {expected}"
    logger.debug("affine gerbes on %s: %s with cases %s", [str(f) for f in factors], group, tags)
    return AffineGerbeClassification(
        group=group,
        case_tags=tags,
        factors=factors,
        whole_torus=affine_h2(X.affine_coefficient()),
    )


@dataclasses.dataclass(frozen=True)
class ReducedGerbe:
    """
    Args:
        factors (tuple): factor multiset with every reflected circle resolved to T3 or T4.
        residual_twist (PointGerbeClass): the point gerbe left over after normalizing every signature to (0, s).
        collapsed (int): number of mixed signatures beyond the first, absorbed by a lattice automorphism.
    """

    factors: Tuple[FactorType, ...]
    residual_twist: PointGerbeClass
    collapsed: int = 0


def reduce_mod_point_gerbes(g: AffineGerbeClass) -> ReducedGerbe:
    """
    Resolves the reflected circles of a gerbe into T3 (equal restrictions to the fixed points) or T4 (unequal)
    and extracts the residual point twist.

    Each signature (s0, s1) is normalized to (0, s1 - s0) by moving s0 into the twist. Any number of mixed
    signatures collapses to a single T4: on Z_- + Z_- the automorphism (x, y) -> (x + y, y) carries the pattern
    ((0, 1), (0, 1)) to ((0, 1), (0, 0)).

    Args:
        g (AffineGerbeClass): the gerbe.

    Returns:
        ReducedGerbe: resolved factors and residual twist.

    Raises:
        UnresolvedSignature: if the torus has reflected circles and no signatures were given.
    """

    factors = canonical_factors(g.torus)
    slots = sum(1 for f in factors if f is FactorType.T3_PENDING)
    signatures = g.fixed_point_signatures or ()
    if slots and g.fixed_point_signatures is None:
        raise UnresolvedSignature(f"{slots} reflected circle factor(s) need fixed point signatures")

    residual = g.point_twist
    mixed = 0
    for s0, s1 in signatures:
        residual = point_gerbe_mul(residual, PointGerbeClass(0, s0))
        mixed += (s1 - s0) % 2

    resolved = [f for f in factors if f is not FactorType.T3_PENDING]
    if mixed:
        resolved += [FactorType.T4] + [FactorType.T3] * (slots - 1)
    else:
        resolved += [FactorType.T3] * slots
    if mixed > 1:
        logger.debug("collapsed %d mixed signatures into one T4 factor", mixed)
    return ReducedGerbe(factors=sort_factors(resolved), residual_twist=residual, collapsed=max(mixed - 1, 0))


def standard_gerbe(factors: Iterable[FactorType], twist: PointGerbeClass = None) -> AffineGerbeClass:
    """
    The canonical gerbe on the split model of a resolved factor multiset: lambda = 1 on every T4 coordinate,
    signatures (0, 0) on T3 and (0, 1) on T4.

    Raises:
        UnresolvedSignature: if a factor is still T3-pending.
    """

    factors = sort_factors(factors)
    if FactorType.T3_PENDING in factors:
        raise UnresolvedSignature("a standard gerbe needs every reflected circle resolved to T3 or T4")
    torus = standard_torus(factors)
    lam = []
    signatures = []
    for f in factors:
        lam.extend([0, 0] if f is FactorType.T5 else [1 if f is FactorType.T4 else 0])
        if f.cyclotomic:
            signatures.append((0, 1) if f is FactorType.T4 else (0, 0))
    return AffineGerbeClass(
        torus=torus,
        lambda_part=tuple(lam),
        point_twist=twist if twist is not None else PointGerbeClass.identity(),
        fixed_point_signatures=tuple(signatures) if signatures else None,
    )
