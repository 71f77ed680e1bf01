__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

"""
KR-theory of the five indecomposable Real affine tori (with their gerbes) and of the point.

T1 and T3 are free R*-modules on 1 and a class of degree 1 (T1, tau) or -1 (T3, tau_-), so their tables are
expanded from R*. The other three are given by explicit generators per degree."""

from typing import Dict, List, Tuple, Union
import dataclasses
import functools

from src.algebra import FGAbelianGroup
from src.kr_theory.coefficient_ring import kr_point, r_monomials
from src.kr_theory.graded_groups import GradedGroupZ8
from src.tori import FactorType

POINT = "point"

# (name, degree, order) with order 0 for Z
_EXPLICIT_GENERATORS: Dict[FactorType, Tuple[Tuple[str, int, int], ...]] = {
    FactorType.T2: (
        ("1", 0, 0),
        ("ω", 1, 0),
        ("ηq", 3, 2),
        ("q", 4, 0),
        ("qω", 5, 0),
        ("η", 7, 2),
    ),
    FactorType.T4: (
        ("χ₀", 0, 0),
        ("ηχ₃", 2, 2),
        ("χ₃", 3, 0),
        ("χ₄", 4, 0),
        ("ηχ₇", 6, 2),
        ("χ₇", 7, 0),
    ),
    FactorType.T5: (
        ("1", 0, 0),
        ("τ", 0, 0),
        ("μ₁", 1, 0),
        ("μ₃", 3, 0),
        ("h", 4, 0),
        ("hτ", 4, 0),
        ("μ₅", 5, 0),
        ("η²", 6, 2),
        ("η²τ", 6, 2),
        ("η", 7, 2),
        ("ητ", 7, 2),
        ("μ₇", 7, 0),
    ),
}

# basis of the free tables: (name, degree)
_FREE_BASES = {
    FactorType.T1: (("1", 0), ("τ", 1)),
    FactorType.T3: (("1", 0), ("τ₋", 7)),
}


@dataclasses.dataclass(frozen=True)
class Generator:
    """
    Args:
        name (str): symbol of the generator.
        degree (int): degree mod 8.
        order (int): additive order, 0 for infinite.
    """

    name: str
    degree: int
    order: int

    def as_dict(self) -> dict:
        return {"name": self.name, "degree": self.degree, "order": self.order}


@dataclasses.dataclass(frozen=True)
class KRTable:
    """
    Args:
        type_tag (FactorType or str): the factor type, or "point".
        graded (GradedGroupZ8): the groups KR^j for j in Z/8.
        generators (tuple): additive generators with degree and order.
        free_over_R (bool): whether the table is a free R*-module.
    """

    type_tag: Union[FactorType, str]
    graded: GradedGroupZ8
    generators: Tuple[Generator, ...]
    free_over_R: bool

    def __post_init__(self):
        for j in range(8):
            orders = [g.order for g in self.generators if g.degree == j]
            assert FGAbelianGroup.from_invariants(0, orders) == self.graded[j], f"generators disagree in degree {j}"

    def __getitem__(self, j: int) -> FGAbelianGroup:
        return self.graded[j]

    def generators_in_degree(self, j: int) -> List[Generator]:
        return [g for g in self.generators if g.degree == j % 8]


def _point_generators() -> Tuple[Generator, ...]:
    return tuple(
        Generator(name, degree, 0 if name in ("1", "h") else 2) for name, degree in r_monomials()
    )


def _free_generators(basis: Tuple[Tuple[str, int], ...]) -> Tuple[Generator, ...]:
    out = []
    for basis_name, basis_degree in basis:
        for g in _point_generators():
            if basis_name == "1":
                name = g.name
            else:
                name = basis_name if g.name == "1" else g.name + basis_name
            out.append(Generator(name, (g.degree + basis_degree) % 8, g.order))
    return tuple(sorted(out, key=lambda g: g.degree))


@functools.lru_cache(maxsize=None)
def kr_table(t: Union[FactorType, str]) -> KRTable:
    """
    The KR table of an indecomposable type, or of the point.

    Args:
        t (FactorType or str): T1 to T5, or "point".

    Returns:
        KRTable: the table.
    """

    if t == POINT:
        generators = _point_generators()
        return KRTable(POINT, GradedGroupZ8.from_function(kr_point), generators, True)

    t = FactorType(t)
    assert t is not FactorType.T3_PENDING, "T3-pending has no KR table until its gerbe is resolved"
    if t in _FREE_BASES:
        basis = _FREE_BASES[t]
        graded = GradedGroupZ8.from_function(lambda j: kr_point(j) + kr_point(j - basis[1][1]))
        return KRTable(t, graded, _free_generators(basis), True)

    generators = tuple(Generator(*g) for g in _EXPLICIT_GENERATORS[t])
    graded = GradedGroupZ8.from_function(
        lambda j: FGAbelianGroup.from_invariants(0, [g.order for g in generators if g.degree == j])
    )
    return KRTable(t, graded, generators, False)
