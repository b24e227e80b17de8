"""Exception and warning types shared across the package."""


class ChiropticsError(Exception):
    """Base class for all package errors."""


class ValidationError(ChiropticsError, ValueError):
    """Input violates a stated invariant or precondition."""


class RegimeError(ChiropticsError, ValueError):
    """Inputs are well formed but outside the regime where a formula holds."""


class ResonanceError(RegimeError):
    """A denominator vanishes (or nearly so) at a resonance."""


class ResolutionError(RegimeError):
    """A sampled grid is too coarse for the requested quadrature."""


class RegimeWarning(UserWarning):
    """Result computed, but an approximation is being stretched."""
