__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

import dataclasses


@dataclasses.dataclass
class VerificationConf:
    """
    Args:
        factorwise_fallback (bool): verify Fourier-Mukai factor by factor when a product is out of reach.
        cross_check_oracle (bool): recompute cohomology with the resolution oracle and report agreement.
    """

    factorwise_fallback: bool = False
    cross_check_oracle: bool = False

    def __post_init__(self):
        assert type(self.factorwise_fallback) is bool, "factorwise_fallback must be a boolean"
        assert type(self.cross_check_oracle) is bool, "cross_check_oracle must be a boolean"
