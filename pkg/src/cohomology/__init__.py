__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

from src.cohomology.c2_modules import C2Module, TorusCoefficient, AffineCoefficient
from src.cohomology.c2_cohomology import (
    cohomology,
    cohomology_torus_coeff,
    lattice_multiplicities,
    preimage_of_relations,
)
from src.cohomology.resolution_oracle import cohomology_oracle
from src.cohomology.affine_coefficients import affine_h2, AffineH2Result, AffineClassRepresentative
