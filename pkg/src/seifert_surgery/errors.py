class DomainError(ValueError):
    """Input outside the domain of an operation (gcd, positivity, zero polynomial, ...)."""


class InvariantViolation(AssertionError):
    """Two independent computations of the same quantity disagreed."""
