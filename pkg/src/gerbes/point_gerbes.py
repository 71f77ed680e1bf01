__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

"""
Graded Real gerbes over a point. A class is a pair (e, mu) of a grading bit and an ungraded Dixmier-Douady bit,
multiplied with the twisted law (e1 + e2, mu1 + mu2 + e1 e2). The group is cyclic of order 4 generated by the
graded class U = (1, 0)."""

import dataclasses

# U^p for p = 0, 1, 2, 3
_Z4_TO_PAIR = ((0, 0), (1, 0), (0, 1), (1, 1))


@dataclasses.dataclass(frozen=True)
class PointGerbeClass:
    """
    Args:
        e (int): grading class in Z/2.
        mu (int): ungraded Dixmier-Douady class in Z/2.
    """

    e: int = 0
    mu: int = 0

    def __post_init__(self):
        assert self.e in (0, 1), "e must be 0 or 1"
        assert self.mu in (0, 1), "mu must be 0 or 1"

    @classmethod
    def identity(cls) -> "PointGerbeClass":
        return cls(0, 0)

    @classmethod
    def generator(cls) -> "PointGerbeClass":
        return cls(1, 0)

    @classmethod
    def from_z4(cls, p: int) -> "PointGerbeClass":
        return cls(*_Z4_TO_PAIR[p % 4])

    def to_z4(self) -> int:
        """
        The exponent p in {0, 1, 2, 3} with self = U^p.
        """

        return _Z4_TO_PAIR.index((self.e, self.mu))

    @property
    def is_graded(self) -> bool:
        return self.e == 1

    def __mul__(self, other: "PointGerbeClass") -> "PointGerbeClass":
        return point_gerbe_mul(self, other)

    def as_dict(self) -> dict:
        return {"e": self.e, "mu": self.mu}

    def __str__(self) -> str:
        return f"({self.e},{self.mu})"


def point_gerbe_mul(g1: PointGerbeClass, g2: PointGerbeClass) -> PointGerbeClass:
    return PointGerbeClass((g1.e + g2.e) % 2, (g1.mu + g2.mu + g1.e * g2.e) % 2)


def point_gerbe_power(g: PointGerbeClass, p: int) -> PointGerbeClass:
    result = PointGerbeClass.identity()
    for _ in range(p % 4):
        result = point_gerbe_mul(result, g)
    return result


def point_gerbe_inverse(g: PointGerbeClass) -> PointGerbeClass:
    return point_gerbe_power(g, 3)


def point_gerbe_order(g: PointGerbeClass) -> int:
    """
    Order of g in the group of point gerbes.
    """

    power = g
    order = 1
    while power != PointGerbeClass.identity():
        power = point_gerbe_mul(power, g)
        order += 1
    return order


def degree_shift_of_twist(g: PointGerbeClass) -> int:
    """
    Writing g = U^p, the amount (-2p) mod 8 that is added to the KR degree when the twist by g is removed.
    """

    return (-2 * g.to_z4()) % 8
