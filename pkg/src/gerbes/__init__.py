__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

from src.gerbes.point_gerbes import (
    PointGerbeClass,
    point_gerbe_mul,
    point_gerbe_power,
    point_gerbe_inverse,
    point_gerbe_order,
    degree_shift_of_twist,
)
from src.gerbes.affine_gerbes import (
    AffineGerbeClass,
    AffineGerbeClassification,
    ReducedGerbe,
    CASE_ORDERS,
    CASE_TAGS,
    classify_affine_gerbes,
    lambda_class_nonzero,
    reflected_coordinates,
    reduce_mod_point_gerbes,
    standard_gerbe,
)
