"""Exception hierarchy shared by the library and the CLI."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


class InvalidAutomorphism(DomainError):
    """``gcd(r, n) != 1``, so ``a_{n,r,t}`` is not an automorphism."""


class SquareFreeRequired(DomainError):
    pass


class HypothesisViolated(DomainError):
    """The census theorem needs ``n > 2`` odd and square-free."""


class NotApplicable(DomainError):
    """The D_{6p} closed form needs a prime ``p >= 5``."""


class TooLarge(DomainError):
    """Subset enumeration would exceed the configured mask width."""


class InvariantViolation(RuntimeError):
    """An internal identity failed, e.g. a division that must be exact was not.

    This always indicates a bug, never bad input.
    """
