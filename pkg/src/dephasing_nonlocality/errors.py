"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain where a formula is defined."""


class NumericalError(ArithmeticError):
    """A numerical routine failed to converge or produced an inconsistent result."""
