__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

from src.kr_theory.coefficient_ring import RElement, r_mul, r_monomials, kr_point, MONOMIAL_DEGREES
from src.kr_theory.graded_groups import GradedGroupZ8, shift, graded_from_factors
from src.kr_theory.tables import KRTable, Generator, POINT, kr_table
from src.kr_theory.torus_groups import PartialResult, kr_torus
from src.kr_theory.fourier_mukai import DegreeComparison, CandidateReport, FMReport, fm_verify
