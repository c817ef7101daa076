"""Exception types shared across the package."""


class BernspecError(Exception):
    """Base class for all package errors."""


class DomainError(BernspecError):
    """Invalid parameter domain (e.g. digit count below 2)."""


class NotCoprimeError(BernspecError):
    """An operation requiring coprime arguments received a shared factor."""


class NotPrimeError(BernspecError):
    """An argument required to be prime is composite (or 1)."""


class FactorizationLimitError(BernspecError):
    """Factoring budget exhausted before a full factorization was found."""


class ResourceLimitError(BernspecError):
    """A configured search budget (lattice nodes, iterations) was exceeded.

    Raised instead of guessing: the caller sees a structured limit, never a
    silently downgraded verdict.
    """

    def __init__(self, message: str, *, budget: int | None = None, needed: int | None = None):
        super().__init__(message)
        self.budget = budget
        self.needed = needed


class LevelTooLargeError(BernspecError):
    """Requested spectrum truncation level would enumerate too many pairs."""
