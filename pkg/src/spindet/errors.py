"""Exception hierarchy.

Every evaluator either meets its requested precision or raises; no routine
returns a silently degraded value.
"""


class SpindetError(Exception):
    """Base class for all library errors."""


class ResourceLimitError(SpindetError):
    """An exact table (Bernoulli, Stirling) was requested beyond its cap."""


class PoleError(SpindetError):
    """Evaluation requested at a pole (e.g. Hurwitz zeta at s = 1)."""


class ConvergenceError(SpindetError):
    """The achievable error estimate exceeds the requested target."""

    def __init__(self, message: str, value: float | None = None,
                 abs_error: float | None = None):
        super().__init__(message)
        self.value = value
        self.abs_error = abs_error


class PrecisionExhaustedError(ConvergenceError):
    """A scanned quantity fell below the resolvable precision floor."""


class RouteDisagreementError(SpindetError):
    """Two independent evaluation routes differ beyond combined tolerance."""


class ExtrapolationInstabilityError(SpindetError):
    """Successive Richardson orders disagree beyond tolerance."""
