"""Exception types shared across the package."""


class ConductorMismatchError(ValueError):
    """Raised when two elements of different conductors are combined."""


class NotIntegralError(ValueError):
    """Raised when an operation requires integer power-basis coordinates."""


class IrregularPrimeError(ValueError):
    """Raised by the regularity-gated search when the prime is irregular.

    Carries the offending irregular pairs in ``pairs``.
    """

    def __init__(self, p, pairs):
        self.p = p
        self.pairs = tuple(pairs)
        listed = ", ".join(f"({q}, {k})" for q, k in self.pairs)
        super().__init__(f"{p} is irregular: pairs {listed}")


class InternalInvariantError(RuntimeError):
    """A verified postcondition failed; indicates a bug, not bad input."""
