__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

"""
Errors
All the exceptions raised by the engine live here so that the command line can map them onto exit codes.

SchemaError means the request document is malformed. Everything deriving from MathDomainError means the request
was well formed but asks for something the mathematics does not allow (or that the engine declares unsupported)."""

from typing import Optional


class KRTorusError(Exception):
    """
    Root of every exception raised by krtorus.
    """

    code = "KRTorusError"


class SchemaError(KRTorusError, ValueError):
    """
    Raised when a request does not validate against its published schema.
    """

    code = "SchemaError"

    def __init__(self, message: str, pointer: Optional[str] = None) -> None:
        """
        Args:
            message (str): human readable description.
            pointer (str, optional): JSON pointer to the offending field. Defaults to the document root.
        """

        super().__init__(message)
        self.pointer = pointer if pointer is not None else ""


class MathDomainError(KRTorusError):
    code = "MathDomainError"


class NotAnInvolution(MathDomainError, ValueError):
    """
    The linear part does not square to the identity, or t + sigma(t) is not a lattice vector.
    """

    code = "NotAnInvolution"


class DenominatorNotContained(MathDomainError, ValueError):
    code = "DenominatorNotContained"


class DegreeZeroUnsupported(MathDomainError, ValueError):
    code = "DegreeZeroUnsupported"


class UnresolvedSignature(MathDomainError, ValueError):
    """
    A cyclotomic circle factor is missing the restrictions of the gerbe to its two fixed points.
    """

    code = "UnresolvedSignature"


class GradedInput(MathDomainError, ValueError):
    code = "GradedInput"


class InconsistentGerbeData(MathDomainError, ValueError):
    code = "InconsistentGerbeData"


class LedgerIncomplete(MathDomainError, ValueError):
    code = "LedgerIncomplete"


class UnsupportedProduct(MathDomainError, NotImplementedError):
    """
    Both sides of a duality datum contain two or more non-free factors and no factorwise route was allowed.
    """

    code = "UnsupportedProduct"


class FixedPointFreeUnsupported(MathDomainError, NotImplementedError):
    code = "FixedPointFreeUnsupported"
