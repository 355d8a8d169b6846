"""Precision control and result records shared by all evaluators."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

# Routes a result can come from.  Every EvalResult carries one of these tags.
ROUTE_CLOSED_FORM = "closed-form"
ROUTE_MODE_SUM = "mode-sum-continuation"
ROUTE_QUADRATURE = "quadrature"
ROUTE_EXACT_RATIONAL = "exact-rational"

_ROUTES = (ROUTE_CLOSED_FORM, ROUTE_MODE_SUM, ROUTE_QUADRATURE,
           ROUTE_EXACT_RATIONAL)


@dataclass(frozen=True)
class PrecisionContext:
    """Target precision and series/quadrature control parameters.

    target_rel_error is the acceptance threshold: evaluators push to the
    best precision the arithmetic backend supports and raise
    ConvergenceError if the propagated estimate still exceeds the target.

    euler_maclaurin_cutoff is the base partial-sum length of the
    Euler-Maclaurin evaluator; the adaptive driver may shift less when the
    argument is already large, or escalate above it on retry.
    correction_order is the minimum number of B_{2j} tail-correction terms
    attempted before the series is allowed to stop.
    """

    target_rel_error: float = 1e-12
    euler_maclaurin_cutoff: int = 24
    correction_order: int = 12
    quadrature_order: int = 16

    def __post_init__(self):
        if not (0.0 < self.target_rel_error <= 1e-6):
            raise ValueError("target_rel_error must lie in (0, 1e-6]")
        if self.euler_maclaurin_cutoff < 8:
            raise ValueError("euler_maclaurin_cutoff must be >= 8")
        if self.correction_order < 2:
            raise ValueError("correction_order must be >= 2")
        if self.quadrature_order < 2:
            raise ValueError("quadrature_order must be >= 2")


DEFAULT_CONTEXT = PrecisionContext()


@dataclass(frozen=True)
class EvalResult:
    """A computed value with its error estimate and provenance.

    ``exact`` is populated when the value itself is an exact rational
    (exact-rational routes); ``value`` is then its float image.
    """

    value: float
    abs_error_estimate: float
    route: str
    exact: Fraction | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.route not in _ROUTES:
            raise ValueError(f"unknown route tag {self.route!r}")
        if not (self.abs_error_estimate >= 0.0):
            raise ValueError("abs_error_estimate must be finite and >= 0")
