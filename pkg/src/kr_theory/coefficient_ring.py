__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

"""
The coefficient ring R* = KR*(pt) = Z[eta, h] / (2 eta, eta^3, eta h, h^2 - 4), with deg eta = -1 and deg h = 4
taken mod 8."""

from typing import Optional, Tuple
import dataclasses

from src.algebra import FGAbelianGroup

# monomial -> degree mod 8
MONOMIAL_DEGREES = {"1": 0, "h": 4, "η": 7, "η²": 6}


@dataclasses.dataclass(frozen=True)
class RElement:
    """
    one + h * h + eta * η + eta2 * η², with the η coefficients in Z/2.

    Args:
        one (int): coefficient of 1.
        h (int): coefficient of h.
        eta (int): coefficient of η, reduced mod 2.
        eta2 (int): coefficient of η², reduced mod 2.
    """

    one: int = 0
    h: int = 0
    eta: int = 0
    eta2: int = 0

    def __post_init__(self):
        object.__setattr__(self, "eta", self.eta % 2)
        object.__setattr__(self, "eta2", self.eta2 % 2)

    @classmethod
    def unit(cls) -> "RElement":
        return cls(one=1)

    @classmethod
    def zero(cls) -> "RElement":
        return cls()

    @classmethod
    def monomial(cls, name: str) -> "RElement":
        return {
            "1": cls(one=1),
            "h": cls(h=1),
            "η": cls(eta=1),
            "η²": cls(eta2=1),
        }[name]

    def __add__(self, other: "RElement") -> "RElement":
        return RElement(self.one + other.one, self.h + other.h, self.eta + other.eta, self.eta2 + other.eta2)

    def __neg__(self) -> "RElement":
        return RElement(-self.one, -self.h, self.eta, self.eta2)

    def __sub__(self, other: "RElement") -> "RElement":
        return self + (-other)

    def __mul__(self, other: "RElement") -> "RElement":
        return r_mul(self, other)

    def is_zero(self) -> bool:
        return self == RElement.zero()

    def support(self) -> Tuple[str, ...]:
        coefficients = {"1": self.one, "h": self.h, "η": self.eta, "η²": self.eta2}
        return tuple(name for name, c in coefficients.items() if c)

    def degree(self) -> Optional[int]:
        """
        The degree mod 8 if the element is homogeneous and nonzero, None otherwise.
        """

        degrees = {MONOMIAL_DEGREES[m] for m in self.support()}
        return degrees.pop() if len(degrees) == 1 else None

    def __str__(self) -> str:
        terms = []
        for name, c in (("1", self.one), ("h", self.h), ("η", self.eta), ("η²", self.eta2)):
            if not c:
                continue
            if name == "1":
                terms.append(str(c))
            else:
                terms.append(name if c == 1 else f"{c}{name}")
        return " + ".join(terms) if terms else "0"


def r_mul(x: RElement, y: RElement) -> RElement:
    """
    Product in R*, using h^2 = 4, eta h = 0, eta^3 = 0 and 2 eta = 0.
    """

    return RElement(
        one=x.one * y.one + 4 * x.h * y.h,
        h=x.one * y.h + x.h * y.one,
        eta=x.one * y.eta + x.eta * y.one,
        eta2=x.one * y.eta2 + x.eta2 * y.one + x.eta * y.eta,
    )


def r_monomials() -> Tuple[Tuple[str, int], ...]:
    """
    Additive generators of R* with their degrees.
    """

    return tuple(MONOMIAL_DEGREES.items())


def kr_point(j: int) -> FGAbelianGroup:
    """
    KR^j(pt) = R^j: Z in degrees 0 and 4, Z/2 in degrees 6 and 7, zero otherwise.
    """

    j %= 8
    if j in (0, 4):
        return FGAbelianGroup.free(1)
    if j in (6, 7):
        return FGAbelianGroup.cyclic(2)
    return FGAbelianGroup.trivial()
