"""Exception hierarchy shared by every module."""


class CollatzError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(CollatzError, ValueError):
    """Input lies outside the positive integers (or another required subset)."""


class DomainExcluded(DomainError):
    """Input is a power of two where powers of two are excluded."""


class BudgetExhausted(CollatzError):
    """An orbit did not reach 1 within the allotted number of steps."""

    def __init__(self, n: int, max_steps: int):
        super().__init__(f"trajectory of {n} did not reach 1 within {max_steps} steps")
        self.n = n
        self.max_steps = max_steps


class RepresentationError(CollatzError, ValueError):
    """Base class for invalid exponent sequences."""


class NotMonotone(RepresentationError):
    pass


class TooShort(RepresentationError):
    pass


class NotDivisible(RepresentationError):
    pass


class NonPositive(RepresentationError):
    pass


class NotApplicable(RepresentationError):
    """Odd-inverse transform requested for a value not congruent to 2 mod 3."""


class NotFound(CollatzError, LookupError):
    """No iterate within the search bound matched the predicted target."""
