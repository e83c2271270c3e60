"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class DomainError(ValueError):
    """A mathematical precondition of an operation is violated."""


class CapacityError(DomainError):
    """The requested enumeration exceeds the configured budget."""


class ClosureError(DomainError):
    """A binary code pair is not closed under the element-wise product.

    ``witness`` holds the offending pair of C1 basis row indices, or ``None``
    when the failure is plain non-containment of C1 in C2 (then the index of
    the C1 row missing from C2 is stored in ``row``).
    """

    def __init__(self, message: str, witness: tuple[int, int] | None = None, row: int | None = None):
        super().__init__(message)
        self.witness = witness
        self.row = row


class ParseError(ValueError):
    """Malformed text input (code files, enumerator files)."""
