__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

from fractions import Fraction
from typing import Sequence, Tuple
import dataclasses

from src.algebra import IntMatrix, FGAbelianGroup, cokernel, solve_in_lattice
from src.errors import NotAnInvolution


@dataclasses.dataclass(frozen=True)
class C2Module:
    """
    Finitely presented abelian group Z^n / im(relations) with an involution induced by sigma.

    Args:
        relations (IntMatrix): n x m matrix whose columns generate the relations.
        sigma (IntMatrix): n x n matrix, the action of the generator of C2 on generators.
        sign_twist (bool): if True the module is M tensored with Z_-, i.e. the action is -sigma.
    """

    relations: IntMatrix
    sigma: IntMatrix
    sign_twist: bool = False

    def __post_init__(self):
        assert self.sigma.is_square(), "sigma must be square"
        assert self.relations.rows == self.sigma.rows, "relations must live in the generator lattice"
        assert type(self.sign_twist) is bool, "sign_twist must be a boolean"
        sr = self.sigma @ self.relations
        for j in range(sr.cols):
            if solve_in_lattice(self.relations, sr.column(j)) is None:
                raise NotAnInvolution("sigma does not preserve the relation lattice")
        defect = self.sigma @ self.sigma - IntMatrix.identity(self.rank)
        for j in range(defect.cols):
            if solve_in_lattice(self.relations, defect.column(j)) is None:
                raise NotAnInvolution("sigma does not square to the identity on the module")

    @classmethod
    def from_lattice(cls, sigma: IntMatrix, sign_twist: bool = False) -> "C2Module":
        """
        The lattice Z^n with involution sigma (no relations).
        """

        return cls(relations=IntMatrix.zeros(sigma.rows, 0), sigma=sigma, sign_twist=sign_twist)

    @classmethod
    def trivial(cls) -> "C2Module":
        return cls.from_lattice(IntMatrix.identity(1))

    @classmethod
    def cyclotomic(cls) -> "C2Module":
        return cls.from_lattice(-IntMatrix.identity(1))

    @classmethod
    def regular(cls) -> "C2Module":
        return cls.from_lattice(IntMatrix.from_rows([[0, 1], [1, 0]]))

    @property
    def rank(self) -> int:
        """
        Number of generators.
        """

        return self.sigma.rows

    @property
    def effective_sigma(self) -> IntMatrix:
        return -self.sigma if self.sign_twist else self.sigma

    def underlying(self) -> FGAbelianGroup:
        return cokernel(self.relations)

    def is_torsion_free(self) -> bool:
        return not self.underlying().torsion

    def is_lattice(self) -> bool:
        return self.relations.cols == 0

    def twisted(self) -> "C2Module":
        return dataclasses.replace(self, sign_twist=not self.sign_twist)

    def untwisted(self) -> "C2Module":
        """
        Same module with the sign twist folded into sigma.
        """

        return C2Module(relations=self.relations, sigma=self.effective_sigma, sign_twist=False)

    def direct_sum(self, other: "C2Module") -> "C2Module":
        if self.sign_twist == other.sign_twist:
            return C2Module(
                relations=IntMatrix.block_diagonal([self.relations, other.relations]),
                sigma=IntMatrix.block_diagonal([self.sigma, other.sigma]),
                sign_twist=self.sign_twist,
            )
        return self.untwisted().direct_sum(other.untwisted())


@dataclasses.dataclass(frozen=True)
class TorusCoefficient:
    """
    Coefficients in the torus T = V / Lambda for a torsion-free lattice Lambda.

    Args:
        lattice (C2Module): the lattice Lambda with its involution.
    """

    lattice: C2Module

    def __post_init__(self):
        assert self.lattice.is_torsion_free(), "torus coefficients need a torsion-free lattice"


@dataclasses.dataclass(frozen=True)
class AffineCoefficient:
    """
    Coefficients in the affine functions on the torus X = V / Lambda with affine involution x -> sigma(x) + t.

    Args:
        lattice (C2Module): the lattice Lambda, given without relations.
        translation_lift (tuple): exact rational lift of the translation t to V.
    """

    lattice: C2Module
    translation_lift: Tuple[Fraction, ...]

    def __post_init__(self):
        assert self.lattice.is_lattice(), "affine coefficients need a lattice without relations"
        object.__setattr__(self, "translation_lift", tuple(Fraction(x) for x in self.translation_lift))
        assert len(self.translation_lift) == self.lattice.rank, "translation lift has the wrong length"
        if any(x.denominator != 1 for x in self.chern_vector_rational()):
            raise NotAnInvolution("t + sigma(t) is not a lattice vector, so x -> sigma(x) + t is not an involution")

    def chern_vector_rational(self) -> Sequence[Fraction]:
        sigma = self.lattice.effective_sigma
        image = sigma.apply(list(self.translation_lift))
        return [t + s for t, s in zip(self.translation_lift, image)]

    def chern_vector(self) -> Tuple[int, ...]:
        """
        The integer vector t + sigma(t) representing the equivariant Chern class in H^2(pt; Lambda).
        """

        return tuple(int(x) for x in self.chern_vector_rational())
