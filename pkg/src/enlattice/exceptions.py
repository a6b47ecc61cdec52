"""Exceptions raised by enlattice."""


class EnlatticeError(Exception):
    """Base exception for enlattice."""

    pass


class DomainError(EnlatticeError):
    """Raised when an input lies outside the domain of an operation."""

    pass


class BudgetExceededError(EnlatticeError):
    """Raised when a search would exceed its budget.

    Searches never return a silent partial answer; the caller must raise the
    budget or narrow the query.
    """

    pass


class ConstructionError(EnlatticeError):
    """Raised when an internal construction fails its own self-check."""

    pass


class ClassParseError(EnlatticeError):
    """Raised when a divisor class cannot be parsed from JSON."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")
