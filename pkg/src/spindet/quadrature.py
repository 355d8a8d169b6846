"""Gauss-Legendre quadrature with order doubling.

Integrands in this artifact are smooth (polynomials and gamma quotients on
[0, 1/2]), so successive-order agreement is a reliable error estimate.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

import numpy as np

from .context import DEFAULT_CONTEXT, PrecisionContext
from .errors import ConvergenceError

_MAX_DOUBLINGS = 7


@lru_cache(maxsize=None)
def _nodes(order: int):
    x, w = np.polynomial.legendre.leggauss(order)
    return x, w


def gauss_legendre(f: Callable[[float], float], lo: float, hi: float,
                   ctx: PrecisionContext = DEFAULT_CONTEXT,
                   abs_floor: float = 0.0) -> tuple[float, float]:
    """Integrate f on [lo, hi]; returns (value, error_estimate).

    Doubles the order until two successive values agree to the context
    target (or the absolute floor); raises ConvergenceError otherwise.
    """
    if hi == lo:
        return 0.0, 0.0
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    order = ctx.quadrature_order
    prev = None
    for _ in range(_MAX_DOUBLINGS):
        x, w = _nodes(order)
        val = half * float(np.dot(w, [f(mid + half * xi) for xi in x]))
        if prev is not None:
            err = abs(val - prev)
            if err <= max(ctx.target_rel_error * abs(val), abs_floor):
                return val, err
        prev = val
        order *= 2
    raise ConvergenceError(
        f"quadrature failed to converge on [{lo}, {hi}] "
        f"at order {order // 2}", value=prev)
