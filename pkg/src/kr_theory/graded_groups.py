__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

from typing import Callable, Sequence, Tuple
import dataclasses

from src.algebra import FGAbelianGroup


@dataclasses.dataclass(frozen=True)
class GradedGroupZ8:
    """
    A Z/8-graded finitely generated abelian group.

    Args:
        groups (tuple): the 8 homogeneous pieces, indexed by degree.
    """

    groups: Tuple[FGAbelianGroup, ...]

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(self.groups))
        assert len(self.groups) == 8, "a Z/8-graded group needs all 8 degrees"
        assert all(isinstance(g, FGAbelianGroup) for g in self.groups), "degrees must hold FGAbelianGroups"

    @classmethod
    def from_function(cls, f: Callable[[int], FGAbelianGroup]) -> "GradedGroupZ8":
        return cls(tuple(f(j) for j in range(8)))

    @classmethod
    def trivial(cls) -> "GradedGroupZ8":
        return cls((FGAbelianGroup.trivial(),) * 8)

    def __getitem__(self, j: int) -> FGAbelianGroup:
        return self.groups[j % 8]

    def direct_sum(self, other: "GradedGroupZ8") -> "GradedGroupZ8":
        return GradedGroupZ8(tuple(a + b for a, b in zip(self.groups, other.groups)))

    def __add__(self, other: "GradedGroupZ8") -> "GradedGroupZ8":
        return self.direct_sum(other)

    def shift(self, s: int) -> "GradedGroupZ8":
        return shift(self, s)

    def total_free_rank(self) -> int:
        return sum(g.free_rank for g in self.groups)

    def as_list(self) -> list:
        return [g.as_dict() for g in self.groups]


def shift(G: GradedGroupZ8, s: int) -> GradedGroupZ8:
    """
    shift(G, s)[j] = G[j - s].
    """

    return GradedGroupZ8.from_function(lambda j: G[j - s])


def graded_from_factors(factors: Sequence[Sequence[int]]) -> GradedGroupZ8:
    """
    Builds a graded group from, per degree, the list of cyclic orders (0 for Z).
    """

    assert len(factors) == 8, "need one entry per degree"
    return GradedGroupZ8(tuple(FGAbelianGroup.from_invariants(0, f) for f in factors))
