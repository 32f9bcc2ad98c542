"""Exception hierarchy.

Every error raised by the library derives from :class:`CDLatticeError`.
Errors that point at a concrete offending input carry it in ``witness``.
"""

from __future__ import annotations

from typing import Any


class CDLatticeError(Exception):
    def __init__(self, message: str, witness: Any = None) -> None:
        super().__init__(message)
        self.witness = witness


class InvalidTable(CDLatticeError):
    """Base class for Cayley table validation failures."""


class NotSquare(InvalidTable):
    pass


class NoIdentityAtZero(InvalidTable):
    pass


class NotLatinSquare(InvalidTable):
    pass


class NotAssociative(InvalidTable):
    pass


class PermutationError(CDLatticeError):
    pass


class PointOutOfRange(PermutationError):
    pass


class MalformedCycle(PermutationError):
    pass


class LimitExceeded(CDLatticeError):
    """A configured size limit was hit. The CLI maps these to exit code 2."""


class OrderCapExceeded(LimitExceeded):
    pass


class EnumerationBudgetExceeded(LimitExceeded):
    pass


class UnknownCatalogName(CDLatticeError):
    pass


class IndexOutOfRange(CDLatticeError):
    pass


class ParentMismatch(CDLatticeError):
    pass


class NotASubgroup(CDLatticeError):
    pass


class NotNested(CDLatticeError):
    pass


class NotHomomorphism(CDLatticeError):
    pass


class NotIsomorphism(NotHomomorphism):
    pass


class NotCentral(CDLatticeError):
    pass


class NotCentralDecomposition(CDLatticeError):
    pass


class PreconditionFailed(CDLatticeError):
    pass


class InternalLatticeError(CDLatticeError):
    """Raised when a computed lattice breaks a structural guarantee.

    These indicate a bug in this library, never bad user input.
    """


class GradednessViolation(InternalLatticeError):
    pass


class InvalidInput(CDLatticeError):
    """Malformed JSON input (group file or central-product spec)."""
