__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

from fractions import Fraction
from typing import Iterable, Sequence, Tuple
import dataclasses
import logging
import enum

from src.algebra import IntMatrix, solve_in_lattice
from src.cohomology import C2Module, AffineCoefficient, lattice_multiplicities
from src.errors import NotAnInvolution

logger = logging.getLogger(__name__)


class FactorType(str, enum.Enum):
    """
    The indecomposable Real affine tori over a point, modulo point gerbes.

    T1: circle with trivial involution. T2: circle with the half shift x -> x + 1/2.
    T3 and T4: circle with x -> -x and a gerbe that restricts to the two fixed points equally (T3) or not (T4).
    T5: the 2-torus with the coordinate swap. T3_PENDING marks a reflected circle whose gerbe is not known yet.
    """

    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T5 = "T5"
    T3_PENDING = "T3-pending"

    @property
    def is_free(self) -> bool:
        """
        Whether the KR-theory of the factor is a free module over KR(pt).
        """

        return self in (FactorType.T1, FactorType.T3)

    @property
    def dimension(self) -> int:
        return 2 if self is FactorType.T5 else 1

    @property
    def cyclotomic(self) -> bool:
        return self in (FactorType.T3, FactorType.T4, FactorType.T3_PENDING)

    def dual(self) -> "FactorType":
        return _DUAL_TYPES[self]

    def __str__(self) -> str:
        return self.value


_DUAL_TYPES = {
    FactorType.T1: FactorType.T3,
    FactorType.T3: FactorType.T1,
    FactorType.T2: FactorType.T4,
    FactorType.T4: FactorType.T2,
    FactorType.T5: FactorType.T5,
}

# Canonical listing order of a factor multiset.
FACTOR_ORDER = {
    FactorType.T2: 0,
    FactorType.T1: 1,
    FactorType.T4: 2,
    FactorType.T3: 3,
    FactorType.T3_PENDING: 4,
    FactorType.T5: 5,
}


def sort_factors(factors: Iterable[FactorType]) -> Tuple[FactorType, ...]:
    return tuple(sorted((FactorType(f) for f in factors), key=FACTOR_ORDER.__getitem__))


@dataclasses.dataclass(frozen=True)
class RealTorus:
    """
    The Real affine torus V / Lambda with involution x -> sigma_0(x) + t.

    Args:
        lattice (C2Module): the lattice Lambda = Z^n with linear part sigma_0.
        translation_lift (tuple): exact rational lift of t. t + sigma_0(t) must lie in Lambda.
    """

    lattice: C2Module
    translation_lift: Tuple[Fraction, ...]

    def __post_init__(self):
        assert self.lattice.is_lattice(), "the torus lattice must be given without relations"
        object.__setattr__(self, "translation_lift", tuple(Fraction(x) for x in self.translation_lift))
        assert len(self.translation_lift) == self.rank, "translation lift has the wrong length"
        # Raises NotAnInvolution when t + sigma_0(t) is not integral.
        AffineCoefficient(lattice=self.lattice, translation_lift=self.translation_lift)

    @classmethod
    def from_matrix(cls, sigma: Sequence[Sequence[int]], translation: Sequence = None) -> "RealTorus":
        """
        Args:
            sigma (Sequence[Sequence[int]]): linear part as a list of rows.
            translation (Sequence, optional): translation lift as ints, Fractions or "p/q" strings. Defaults to 0.

        Returns:
            RealTorus: the torus.

        Raises:
            NotAnInvolution: if sigma is not an involution of Z^n or t + sigma(t) is not integral.
        """

        matrix = IntMatrix.from_rows(sigma)
        if not matrix.is_square():
            raise NotAnInvolution(f"sigma must be square, got {matrix.rows}x{matrix.cols}")
        translation = [0] * matrix.rows if translation is None else translation
        return cls(C2Module.from_lattice(matrix), tuple(Fraction(x) for x in translation))

    @property
    def rank(self) -> int:
        return self.lattice.rank

    @property
    def sigma(self) -> IntMatrix:
        return self.lattice.effective_sigma

    def affine_coefficient(self) -> AffineCoefficient:
        return AffineCoefficient(lattice=self.lattice, translation_lift=self.translation_lift)

    def chern_vector(self) -> Tuple[int, ...]:
        """
        The integer vector c = t + sigma_0(t), a representative of the equivariant Chern class.
        """

        return self.affine_coefficient().chern_vector()

    def as_dict(self) -> dict:
        return {"sigma": self.sigma.as_strings(), "t": [str(x) for x in self.translation_lift]}


@dataclasses.dataclass(frozen=True)
class DecompositionInvariants:
    """
    Args:
        a (int): number of trivial summands Z.
        b (int): number of cyclotomic summands Z_-.
        r (int): number of regular summands.
        chern_nonzero (bool): whether the equivariant Chern class is nonzero.
    """

    a: int
    b: int
    r: int
    chern_nonzero: bool

    def __post_init__(self):
        assert min(self.a, self.b, self.r) >= 0, "multiplicities must be non-negative"
        assert not self.chern_nonzero or self.a >= 1, "a nonzero Chern class needs a trivial summand"

    @property
    def rank(self) -> int:
        return self.a + self.b + 2 * self.r

    def as_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "r": self.r, "chern": self.chern_nonzero}


def chern_class_nonzero(sigma: IntMatrix, c: Sequence[int]) -> bool:
    """
    Whether c, a sigma-invariant lattice vector, is nonzero in H^2(C2; Lambda) = ker(1 - sigma) / im(1 + sigma).
    """

    one = IntMatrix.identity(sigma.rows)
    return solve_in_lattice(one + sigma, list(c)) is None


def decompose(X: RealTorus) -> DecompositionInvariants:
    """
    Multiplicities of the indecomposable lattice summands and the Chern flag of a Real torus.

    Args:
        X (RealTorus): the torus.

    Returns:
        DecompositionInvariants: (a, b, r, chern_nonzero).
    """

    a, b, r = lattice_multiplicities(X.lattice)
    chern = chern_class_nonzero(X.sigma, X.chern_vector())
    assert a + b + 2 * r == X.rank, "multiplicities do not add up to the rank"
    logger.debug("decomposed rank %d torus into a=%d b=%d r=%d chern=%s", X.rank, a, b, r, chern)
    return DecompositionInvariants(a=a, b=b, r=r, chern_nonzero=chern)


def factors_from_invariants(inv: DecompositionInvariants) -> Tuple[FactorType, ...]:
    trivial = [FactorType.T2] + [FactorType.T1] * (inv.a - 1) if inv.chern_nonzero else [FactorType.T1] * inv.a
    return tuple(trivial + [FactorType.T3_PENDING] * inv.b + [FactorType.T5] * inv.r)


def canonical_factors(X: RealTorus) -> Tuple[FactorType, ...]:
    """
    The factor multiset of X. A nonzero Chern class is moved onto a single T2 factor, and reflected circles are
    reported as T3-pending until gerbe data distinguishes T3 from T4.
    """

    return factors_from_invariants(decompose(X))


def dual_torus(X: RealTorus) -> RealTorus:
    """
    The dual lattice Lambda* with involution -sigma_0^T. The translation lift is left at zero; the Chern class of
    the dual is determined by the gerbe during T-dualization.
    """

    return RealTorus(C2Module.from_lattice(-X.sigma.T), (Fraction(0),) * X.rank)


def standard_torus(factors: Iterable[FactorType]) -> RealTorus:
    """
    Split model of a factor multiset: one diagonal block per factor, in the given order.

    Args:
        factors (Iterable[FactorType]): the factors.

    Returns:
        RealTorus: the product torus.
    """

    blocks = []
    translation = []
    for f in (FactorType(f) for f in factors):
        if f in (FactorType.T1, FactorType.T2):
            blocks.append(IntMatrix.identity(1))
            translation.append(Fraction(1, 2) if f is FactorType.T2 else Fraction(0))
        elif f.cyclotomic:
            blocks.append(-IntMatrix.identity(1))
            translation.append(Fraction(0))
        else:
            blocks.append(IntMatrix.from_rows([[0, 1], [1, 0]]))
            translation.extend([Fraction(0), Fraction(0)])
    return RealTorus(C2Module.from_lattice(IntMatrix.block_diagonal(blocks)), tuple(translation))
