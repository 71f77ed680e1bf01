__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

"""
Numeric consequences of a Real spin^c structure of type k on an n-manifold: the Real index lives in
KO^(2k - n)(pt), so its image under complexification constrains the integer index of the Dirac operator."""

from typing import Tuple
import dataclasses

from src.kr_theory import kr_point
from src.tori import FactorType, sort_factors
from src.errors import FixedPointFreeUnsupported

UNCONSTRAINED = "unconstrained"
EVEN = "even"
ZERO = "zero"

# index of the image of KO^m(pt) -> K^0(pt) = Z, 0 when the image is zero
COMPLEXIFICATION_IMAGE_INDEX = {0: 1, 4: 2}


@dataclasses.dataclass(frozen=True)
class RealSpinContext:
    """
    Args:
        n (int): dimension of the manifold.
        k (int): type of the Real spin^c structure, taken mod 4.
        b_plus (int): dimension of the +1 eigenspace of sigma^* on H^1.
        b_minus (int): dimension of the -1 eigenspace of sigma^* on H^1.
        has_fixed_point (bool): whether the involution has a fixed point.
    """

    n: int
    k: int
    b_plus: int = 0
    b_minus: int = 0
    has_fixed_point: bool = True

    def __post_init__(self):
        assert type(self.n) is int and self.n >= 0, "n must be a non-negative integer"
        assert type(self.k) is int, "k must be an integer"
        assert type(self.b_plus) is int and self.b_plus >= 0, "b_plus must be a non-negative integer"
        assert type(self.b_minus) is int and self.b_minus >= 0, "b_minus must be a non-negative integer"
        assert type(self.has_fixed_point) is bool, "has_fixed_point must be a boolean"

    @property
    def lift_degree(self) -> int:
        return (2 * self.k - self.n) % 8

    def require_fixed_point(self) -> None:
        if not self.has_fixed_point:
            raise FixedPointFreeUnsupported(
                "without a fixed point the Real index lives in a twisted KR group, which is not supported"
            )


@dataclasses.dataclass(frozen=True)
class IndexConstraint:
    """
    Args:
        verdict (str): "unconstrained", "even" or "zero".
        mod2_index_available (bool): whether KO^m(pt) carries a mod 2 index.
        lift_degree (int): m = 2k - n mod 8.
    """

    verdict: str
    mod2_index_available: bool
    lift_degree: int

    def __post_init__(self):
        assert self.verdict in (UNCONSTRAINED, EVEN, ZERO), "unknown verdict"
        if self.lift_degree in (2, 6):
            assert self.verdict == ZERO, "KO^2 and KO^6 have zero complexification"

    def as_dict(self) -> dict:
        return {"verdict": self.verdict, "mod2": self.mod2_index_available, "lift_degree": self.lift_degree}


def index_constraint(ctx: RealSpinContext) -> IndexConstraint:
    """
    Constraint on ind(D) from KO^m(pt) -> K^0(pt) with m = 2k - n: the index is zero when n is odd or the map has
    zero image, even when the image is 2Z, and unconstrained when it is all of Z.

    Args:
        ctx (RealSpinContext): dimension and type.

    Returns:
        IndexConstraint: the verdict.
    """

    ctx.require_fixed_point()
    m = ctx.lift_degree
    image_index = COMPLEXIFICATION_IMAGE_INDEX.get(m, 0)
    ko = kr_point(m)
    if ctx.n % 2 or ko.free_rank == 0 or image_index == 0:
        verdict = ZERO
    elif image_index == 2:
        verdict = EVEN
    else:
        verdict = UNCONSTRAINED
    # Z/2 in KO^6 and KO^7
    mod2 = ko.free_rank == 0 and ko.two_rank() > 0
    return IndexConstraint(verdict=verdict, mod2_index_available=mod2, lift_degree=m)


@dataclasses.dataclass(frozen=True)
class JacobianDegrees:
    """
    Args:
        albanese_push (int): degree shift of the pushforward along the Albanese map.
        fm_shift (int): degree shift of the Fourier-Mukai transform from the Albanese torus to the Jacobian.
        ind_degree (int): degree 2k - n of the Real families index.
    """

    albanese_push: int
    fm_shift: int
    ind_degree: int

    def __post_init__(self):
        assert (self.albanese_push + self.fm_shift - self.ind_degree) % 8 == 0, "shifts must compose to 2k - n"

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


def jacobian_degrees(ctx: RealSpinContext) -> JacobianDegrees:
    """
    Degree bookkeeping of ind_R(D) = Phi(a_*(1)) in KR^(2k - n) of the Jacobian.

    Raises:
        FixedPointFreeUnsupported: if the involution has no fixed point.
    """

    ctx.require_fixed_point()
    return JacobianDegrees(
        albanese_push=(-ctx.n + ctx.b_plus - ctx.b_minus + 2 * ctx.k) % 8,
        fm_shift=(-ctx.b_plus + ctx.b_minus) % 8,
        ind_degree=ctx.lift_degree,
    )


@dataclasses.dataclass(frozen=True)
class FamiliesIndexTori:
    """
    Args:
        albanese (tuple): factors of the Albanese torus A_X.
        jacobian (tuple): factors of the Jacobian torus T_X.
    """

    albanese: Tuple[FactorType, ...]
    jacobian: Tuple[FactorType, ...]


def families_index_tori(ctx: RealSpinContext, regular: int = 0) -> FamiliesIndexTori:
    """
    Factor types of the Albanese and Jacobian tori when H^1(X; Z) has the given number of regular summands.

    The Albanese torus carries sigma_* on H_1 and the Jacobian carries minus the pullback, so trivial and
    cyclotomic summands trade places between them.

    Args:
        ctx (RealSpinContext): the context.
        regular (int): number of regular summands of H^1(X; Z). At most min(b_plus, b_minus).

    Returns:
        FamiliesIndexTori: the two factor multisets.
    """

    assert 0 <= regular <= min(ctx.b_plus, ctx.b_minus), "regular summands need both eigenspaces"
    plus, minus = ctx.b_plus - regular, ctx.b_minus - regular
    albanese = [FactorType.T1] * plus + [FactorType.T3] * minus + [FactorType.T5] * regular
    jacobian = [FactorType.T3] * plus + [FactorType.T1] * minus + [FactorType.T5] * regular
    return FamiliesIndexTori(albanese=sort_factors(albanese), jacobian=sort_factors(jacobian))
