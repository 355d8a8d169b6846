"""Exact combinatorial primitives: Bernoulli, Stirling, Pochhammer.

Everything here is integer/rational arithmetic; floating point enters only
in the convenience wrappers.  Memo tables are filled idempotently, so
concurrent readers are safe regardless of interleaving.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

BERNOULLI_CAP = 256

__all__ = [
    "bernoulli",
    "bernoulli_poly_coeffs",
    "bernoulli_poly",
    "stirling_first",
    "pochhammer",
    "pochhammer_exact",
    "harmonic",
]


@lru_cache(maxsize=None)
def _bernoulli_row(kmax: int) -> tuple[Fraction, ...]:
    # Recurrence sum_{j=0}^{k} C(k+1, j) B_j = 0, seeded with B_0 = 1.
    # This pins the generating-function convention t/(e^t - 1), i.e. B_1 = -1/2.
    row = [Fraction(1)]
    for k in range(1, kmax + 1):
        acc = Fraction(0)
        for j in range(k):
            acc += math.comb(k + 1, j) * row[j]
        row.append(-acc / (k + 1))
    return tuple(row)


def bernoulli(k: int) -> Fraction:
    """Bernoulli number B_k in the t/(e^t - 1) convention (B_1 = -1/2)."""
    if k < 0:
        raise ValueError("Bernoulli index must be >= 0")
    if k > BERNOULLI_CAP:
        from .errors import ResourceLimitError
        raise ResourceLimitError(
            f"Bernoulli numbers are tabulated up to k = {BERNOULLI_CAP}")
    if k > 1 and k % 2 == 1:
        return Fraction(0)
    return _bernoulli_row(k)[k]


@lru_cache(maxsize=None)
def bernoulli_poly_coeffs(n: int) -> tuple[Fraction, ...]:
    """Coefficients of B_n(x), ascending powers of x."""
    if n < 0:
        raise ValueError("Bernoulli polynomial degree must be >= 0")
    # B_n(x) = sum_k C(n,k) B_{n-k} x^k
    return tuple(math.comb(n, k) * bernoulli(n - k) for k in range(n + 1))


def bernoulli_poly(n: int, x: Fraction | float) -> Fraction:
    """Exact B_n(x) for rational x (floats are taken at their binary value)."""
    xq = x if isinstance(x, Fraction) else Fraction(x)
    acc = Fraction(0)
    for c in reversed(bernoulli_poly_coeffs(n)):
        acc = acc * xq + c
    return acc


@lru_cache(maxsize=None)
def _stirling_row(n: int) -> tuple[int, ...]:
    # Signed Stirling numbers of the first kind, s(n, 1..n), via
    # s(n+1, k) = s(n, k-1) - n * s(n, k).
    if n == 1:
        return (1,)
    prev = _stirling_row(n - 1)
    row = []
    for k in range(1, n + 1):
        left = prev[k - 2] if 2 <= k <= n else 0
        right = prev[k - 1] if k <= n - 1 else 0
        row.append(left - (n - 1) * right)
    return tuple(row)


def stirling_first(n: int, j: int) -> int:
    """Signed Stirling number of the first kind s(n, j); 0 outside 1 <= j <= n."""
    if n < 1:
        raise ValueError("Stirling row index must be >= 1")
    if j < 1 or j > n:
        return 0
    return _stirling_row(n)[j - 1]


def pochhammer(x: float, k: int) -> float:
    """Rising factorial x (x+1) ... (x+k-1); empty product for k = 0."""
    if k < 0:
        raise ValueError("Pochhammer order must be >= 0")
    acc = 1.0
    for j in range(k):
        acc *= x + j
    return acc


def pochhammer_exact(x: Fraction | int, k: int) -> Fraction:
    """Rising factorial in exact rational arithmetic."""
    if k < 0:
        raise ValueError("Pochhammer order must be >= 0")
    xq = Fraction(x)
    acc = Fraction(1)
    for j in range(k):
        acc *= xq + j
    return acc


def harmonic(m: int) -> Fraction:
    """Harmonic number H_m = sum_{i=1}^{m} 1/i (H_0 = 0), exact."""
    if m < 0:
        raise ValueError("harmonic index must be >= 0")
    acc = Fraction(0)
    for i in range(1, m + 1):
        acc += Fraction(1, i)
    return acc
