"""Barnes multiple gamma Gamma_n(z), normalized so Gamma_1(z) = Gamma(z)/sqrt(2 pi).

log Gamma_n(z) = sum_{k=0}^{n-1} b_{n,k}(z) zeta'(-k, z), where the
coefficient polynomials carry signed Stirling numbers of the first kind:

    b_{n,k}(z) = (-1)^{n-1-k}/(n-1)! sum_{j=k}^{n-1} C(j,k) s(n,j+1) z^{j-k}.

Stirling numbers grow factorially and the b values at interesting
arguments (z near n/2) are tiny differences of huge coefficients, so the
polynomials are assembled and evaluated in exact rational arithmetic; the
result is converted to working precision only for the final multiply
against the zeta derivatives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import ddmath as dd
from .context import DEFAULT_CONTEXT, PrecisionContext
from .errors import ConvergenceError
from .exact import bernoulli, stirling_first
from .hurwitz import (_half_shift_sderiv_dd, _hurwitz_sderiv_dd,
                      _riemann_sderiv_neg_dd)

MAX_ORDER = 30

__all__ = [
    "BarnesPoint",
    "BPolynomial",
    "b_poly",
    "log_barnes_gamma",
    "ladder_check",
    "pascal_expand",
    "special_value_one",
    "special_value_one_via_stirling",
    "special_value_half",
]


@dataclass(frozen=True)
class BarnesPoint:
    """Evaluation point of Gamma_n: order n >= 1 and argument z > 0.

    Documented working range: n <= 30, z <= n + 5.
    """

    n: int
    z: float

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("Barnes order n must be >= 1")
        if self.n > MAX_ORDER:
            raise ValueError(f"Barnes order n must be <= {MAX_ORDER}")
        if not (self.z > 0.0):
            raise ValueError("argument z must be > 0")
        if self.z > self.n + 5:
            raise ValueError("argument z outside documented range z <= n + 5")


@dataclass(frozen=True)
class BPolynomial:
    """Exact coefficient polynomial b_{n,k}; coefficients ascend in z."""

    n: int
    k: int
    coefficients: tuple[Fraction, ...]

    def __call__(self, z: Fraction | float) -> Fraction:
        zq = z if isinstance(z, Fraction) else Fraction(z)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * zq + c
        return acc


@lru_cache(maxsize=None)
def b_poly(n: int, k: int) -> BPolynomial:
    """Coefficient polynomial b_{n,k}(z), exact."""
    if n < 1:
        raise ValueError("order n must be >= 1")
    if not 0 <= k <= n - 1:
        raise IndexError(f"index k must lie in [0, {n - 1}] for order {n}")
    sign = -1 if (n - 1 - k) % 2 else 1
    fac = Fraction(sign, math.factorial(n - 1))
    coeffs = tuple(fac * math.comb(j, k) * stirling_first(n, j + 1)
                   for j in range(k, n))
    return BPolynomial(n, k, coeffs)


@lru_cache(maxsize=None)
def _b_values_dd(n: int, z: float) -> tuple:
    """All b_{n,k}(z) for k = 0..n-1, evaluated exactly, as dd pairs."""
    zq = Fraction(z)
    return tuple(dd.from_fraction(b_poly(n, k)(zq)) for k in range(n))


def _log_barnes_dd(n: int, z: float, ctx: PrecisionContext):
    """Internal evaluator: (dd value, abs error) of log Gamma_n(z)."""
    bvals = _b_values_dd(n, z)
    total = dd.ZERO
    err = 0.0
    mag = 0.0
    for k in range(n):
        zd, zd_err = _hurwitz_sderiv_dd(k, z, ctx)
        term = dd.mul(bvals[k], zd)
        total = dd.add(total, term)
        err += abs(dd.to_float(bvals[k])) * zd_err
        mag += abs(term[0])
    err += 8.0 * dd.DD_EPS * mag
    return total, err


def _check_contract(value, err, n, ctx, what):
    # post: relative error <= n * target, with a roundoff floor for values
    # that cancel to ~0 at working precision
    scale = max(abs(dd.to_float(value)), 1e-300)
    if err > n * ctx.target_rel_error * scale and err > 1e-24:
        raise ConvergenceError(
            f"{what}: propagated error {err:.3e} exceeds contract "
            f"{n} * {ctx.target_rel_error:.1e} (value ~ {dd.to_float(value):.6e})",
            value=dd.to_float(value), abs_error=err)


def log_barnes_gamma(point: BarnesPoint,
                     ctx: PrecisionContext = DEFAULT_CONTEXT) -> float:
    """log Gamma_n(z) via the Hurwitz-zeta derivative sum."""
    value, err = _log_barnes_dd(point.n, point.z, ctx)
    _check_contract(value, err, point.n, ctx,
                    f"log_barnes_gamma(n={point.n}, z={point.z})")
    return dd.to_float(value)


def ladder_check(n: int, z: float,
                 ctx: PrecisionContext = DEFAULT_CONTEXT) -> float:
    """Defect of Gamma_{n+1}(1+z) = Gamma_{n+1}(z)/Gamma_n(z), in logs.

    Contract: |defect| <= 20 (n+1) target_rel_error max(1, |log Gamma_{n+1}(z)|).
    """
    up, _ = _log_barnes_dd(n + 1, 1.0 + z, ctx)
    base, _ = _log_barnes_dd(n + 1, z, ctx)
    low, _ = _log_barnes_dd(n, z, ctx)
    return dd.to_float(dd.add(dd.sub(up, base), low))


def pascal_expand(n: int, m: int, z: float,
                  ctx: PrecisionContext = DEFAULT_CONTEXT) -> float:
    """log Gamma_n(m+z) by m-fold ladder descent:

    log Gamma_n(m+z) = sum_{l=0}^{m} (-1)^l C(m,l) log Gamma_{n-l}(z),
    valid for 0 <= m <= n-1.
    """
    if not 0 <= m <= n - 1:
        raise IndexError(f"shift m must lie in [0, {n - 1}] for order {n}")
    total = dd.ZERO
    for l in range(m + 1):
        term, _ = _log_barnes_dd(n - l, z, ctx)
        coeff = float(math.comb(m, l) * (-1) ** l)
        total = dd.add(total, dd.mul_d(term, coeff))
    return dd.to_float(total)


def special_value_one(n: int,
                      ctx: PrecisionContext = DEFAULT_CONTEXT) -> float:
    """log Gamma_n(1) = sum_k b_{n,k}(1) zeta'(-k).

    The Riemann derivatives come from the closed functional-equation
    routes, making this an independent path from log_barnes_gamma(n, 1).
    """
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order n must lie in [1, {MAX_ORDER}]")
    bvals = _b_values_dd(n, 1.0)
    total = dd.ZERO
    for k in range(n):
        zd, _ = _riemann_sderiv_neg_dd(k, ctx)
        total = dd.add(total, dd.mul(bvals[k], zd))
    return dd.to_float(total)


def special_value_one_via_stirling(n: int,
                                   ctx: PrecisionContext = DEFAULT_CONTEXT
                                   ) -> float:
    """Compact form log Gamma_n(1) = sum_{k=1}^{n-1} |s(n-1,k)| zeta'(-k)/(n-1)!.

    Requires n >= 2: the form relies on b_{n,0}(1) = 0, which fails at n = 1.
    """
    if not 2 <= n <= MAX_ORDER:
        raise ValueError(f"order n must lie in [2, {MAX_ORDER}]")
    total = dd.ZERO
    fac = math.factorial(n - 1)
    for k in range(1, n):
        zd, _ = _riemann_sderiv_neg_dd(k, ctx)
        coeff = dd.from_fraction(Fraction(abs(stirling_first(n - 1, k)), fac))
        total = dd.add(total, dd.mul(coeff, zd))
    return dd.to_float(total)


def special_value_half(n: int,
                       ctx: PrecisionContext = DEFAULT_CONTEXT) -> float:
    """log Gamma_n(1/2) from half-integer zeta identities:

    sum_k b_{n,k}(1/2) (2^{-k} - 1) zeta'(-k)
      - log2 sum_k b_{n,k}(1/2) 2^{-k} B_{k+1}(1)/(k+1).

    The Bernoulli factor is B_{k+1} evaluated at 1, i.e. (-1)^{k+1} B_{k+1}
    (only the k = 0 term differs between the two sign conventions); this is
    forced by matching the n = 1 value -log(2)/2.
    """
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order n must lie in [1, {MAX_ORDER}]")
    half = Fraction(1, 2)
    zeta_sum = dd.ZERO
    log2_sum = Fraction(0)
    for k in range(n):
        bval = b_poly(n, k)(half)
        zd, _ = _riemann_sderiv_neg_dd(k, ctx)
        coeff = dd.from_fraction(bval * (Fraction(1, 2 ** k) - 1))
        zeta_sum = dd.add(zeta_sum, dd.mul(coeff, zd))
        b_at_one = bernoulli(k + 1) * (-1 if k % 2 == 0 else 1)
        log2_sum += bval * Fraction(1, 2 ** k) * b_at_one / (k + 1)
    correction = dd.mul(dd.LN2, dd.from_fraction(log2_sum))
    return dd.to_float(dd.sub(zeta_sum, correction))
