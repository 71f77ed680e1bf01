__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

from src.dirac.index_constraints import (
    RealSpinContext,
    IndexConstraint,
    JacobianDegrees,
    FamiliesIndexTori,
    index_constraint,
    jacobian_degrees,
    families_index_tori,
    COMPLEXIFICATION_IMAGE_INDEX,
    UNCONSTRAINED,
    EVEN,
    ZERO,
)
