__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

"""
Algebra
Exact integer linear algebra. Every cohomology and classification computation in the package goes through
the Smith normal form implemented here."""

from src.algebra.int_matrix import IntMatrix
from src.algebra.abelian_groups import FGAbelianGroup
from src.algebra.smith_normal_form import (
    SNFResult,
    smith_normal_form,
    cokernel,
    kernel_basis,
    subquotient,
    solve_in_lattice,
)
