"""Exception types raised across the package."""


class NotHermitian(ValueError):
    pass


class NoConvergence(ArithmeticError):
    pass


class NegativeEigenvalue(ValueError):
    pass


class BadSubset(ValueError):
    pass


class BadSite(ValueError):
    pass


class BadIndex(IndexError):
    pass


class DimensionMismatch(ValueError):
    pass


class InvalidState(ValueError):
    """Input is not a valid density matrix within tolerance."""


class DomainError(ValueError):
    """Argument lies outside the function's domain beyond the clamping window."""


class FrozenLine(ValueError):
    """Time-solved loci requested at alpha = -1, where the phase never advances."""
