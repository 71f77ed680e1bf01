__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

from typing import Dict, Iterable, List, Optional, Tuple
from sympy import factorint
import dataclasses


@dataclasses.dataclass(frozen=True)
class FGAbelianGroup:
    """
    Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_s in invariant factor form.

    Args:
        free_rank (int): rank of the free part.
        torsion (tuple): invariant factors, each > 1 and dividing the next.
    """

    free_rank: int = 0
    torsion: Tuple[int, ...] = dataclasses.field(default_factory=tuple)

    def __post_init__(self):
        assert type(self.free_rank) is int, "free_rank must be an integer"
        assert self.free_rank >= 0, "free_rank must be non-negative"
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        assert all(d > 1 for d in self.torsion), "torsion factors must be greater than 1"
        for d, e in zip(self.torsion, self.torsion[1:]):
            assert e % d == 0, "torsion factors must form a divisibility chain"

    @classmethod
    def from_invariants(cls, free_rank: int, factors: Iterable[int]) -> "FGAbelianGroup":
        """
        Builds the canonical form of Z^free_rank + sum of Z/f for arbitrary positive f.
        Zero factors are counted into the free rank and unit factors are dropped.

        Args:
            free_rank (int): rank of the free part.
            factors (Iterable[int]): orders of cyclic summands.

        Returns:
            FGAbelianGroup: the group in invariant factor form.
        """

        exponents: Dict[int, List[int]] = {}
        for f in factors:
            f = abs(int(f))
            if f == 0:
                free_rank += 1
                continue
            for p, e in factorint(f).items():
                exponents.setdefault(p, []).append(e)

        length = max((len(v) for v in exponents.values()), default=0)
        invariants = [1] * length
        for p, es in exponents.items():
            es = sorted(es, reverse=True)
            for k, e in enumerate(es):
                invariants[length - 1 - k] *= p**e
        return cls(free_rank=int(free_rank), torsion=tuple(d for d in invariants if d > 1))

    @classmethod
    def trivial(cls) -> "FGAbelianGroup":
        return cls()

    @classmethod
    def cyclic(cls, order: int) -> "FGAbelianGroup":
        """
        Z/order, with order 0 meaning Z.
        """

        return cls.from_invariants(0, [order])

    @classmethod
    def free(cls, rank: int) -> "FGAbelianGroup":
        return cls(free_rank=rank)

    def direct_sum(self, *others: "FGAbelianGroup") -> "FGAbelianGroup":
        free_rank = self.free_rank
        factors = list(self.torsion)
        for other in others:
            free_rank += other.free_rank
            factors.extend(other.torsion)
        return FGAbelianGroup.from_invariants(free_rank, factors)

    def __add__(self, other: "FGAbelianGroup") -> "FGAbelianGroup":
        return self.direct_sum(other)

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> Optional[int]:
        """
        Returns:
            int: the number of elements, or None when the group is infinite.
        """

        if self.free_rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def two_rank(self) -> int:
        """
        Dimension over F_2 of the 2-torsion subgroup, i.e. the number of even invariant factors.
        """

        return sum(1 for d in self.torsion if d % 2 == 0)

    def as_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": [str(d) for d in self.torsion], "text": str(self)}

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        run: List[Tuple[int, int]] = []
        for d in self.torsion:
            if run and run[-1][0] == d:
                run[-1] = (d, run[-1][1] + 1)
            else:
                run.append((d, 1))
        for d, mult in run:
            parts.append(f"Z/{d}" if mult == 1 else f"(Z/{d})^{mult}")
        return " + ".join(parts) if parts else "0"
