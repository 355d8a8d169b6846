"""Sphere spectra, determinants, anomaly coefficients, and the dimension scan.

Conventions.  The deformation parameter nu lives in the mass window
(0, 1/2]; the scaling dimensions are lambda_pm = n/2 +- nu.  Determinants
are zeta-regularized through eigenvalue magnitudes: half of the two-point
eigenvalues are negative, but the regularized sum of a constant phase
vanishes, so only magnitudes enter.  All boundary determinants are the
bare Barnes quotients; scheme-dependent polynomial/log ambiguities are
deliberately not modeled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import ddmath as dd
from .barnes import BarnesPoint, MAX_ORDER, _log_barnes_dd, b_poly
from .context import (DEFAULT_CONTEXT, ROUTE_CLOSED_FORM,
                      ROUTE_EXACT_RATIONAL, EvalResult, PrecisionContext)
from .errors import PrecisionExhaustedError, RouteDisagreementError
from .exact import bernoulli, pochhammer_exact
from .hurwitz import _riemann_sderiv_neg_dd
from .quadrature import gauss_legendre

__all__ = [
    "SpectralConfig",
    "ModeLevel",
    "mode_level",
    "boundary_eigenvalue",
    "degeneracy",
    "boundary_log_det",
    "bulk_log_det_ratio",
    "anomaly_integrated",
    "bulk_anomaly_lagrangian",
    "type_a_coefficient",
    "type_a_exact_coefficient",
    "dirac_det_log",
    "f_coefficient",
    "bar_schopka_scan",
    "ScanEntry",
    "ScanResult",
]


@dataclass(frozen=True)
class SpectralConfig:
    """Boundary dimension n and deformation parameter nu in (0, 1/2]."""

    n: int
    nu: float

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("boundary dimension n must be >= 1")
        if not (0.0 < self.nu <= 0.5):
            raise ValueError("nu must lie in the mass window (0, 1/2]")

    @property
    def lambda_plus(self) -> float:
        return 0.5 * self.n + self.nu

    @property
    def lambda_minus(self) -> float:
        return 0.5 * self.n - self.nu


@dataclass(frozen=True)
class ModeLevel:
    l: int
    eigenvalue_magnitude: float
    degeneracy: int


def boundary_eigenvalue(l: int, cfg: SpectralConfig) -> float:
    """Magnitude of the +- eigenvalue pair at angular level l:

    Gamma(l + n/2 + nu + 1/2) / Gamma(l + n/2 - nu + 1/2).

    At nu = 1/2 the quotient telescopes to n/2 + l exactly; that branch
    avoids 0*inf ambiguity in floating gammas at the window endpoint.
    """
    if l < 0:
        raise ValueError("angular level l must be >= 0")
    if cfg.nu == 0.5:
        return 0.5 * cfg.n + l
    x = l + 0.5 * cfg.n + 0.5
    return math.exp(math.lgamma(x + cfg.nu) - math.lgamma(x - cfg.nu))


def degeneracy(l: int, n: int) -> int:
    """Exact spinor degeneracy 2^{floor(n/2)} (l+n-1)! / (l! (n-1)!)."""
    if l < 0 or n < 1:
        raise ValueError("need l >= 0 and n >= 1")
    return (2 ** (n // 2)) * math.comb(l + n - 1, n - 1)


def mode_level(l: int, cfg: SpectralConfig) -> ModeLevel:
    return ModeLevel(l, boundary_eigenvalue(l, cfg), degeneracy(l, cfg.n))


def _barnes_quotient_dd(n: int, nu: float, ctx: PrecisionContext):
    """2^{1+floor(n/2)} log[G_{n+1}(x+)/G_{n+1}(x-)], x+- = (n+1)/2 +- nu."""
    x = 0.5 * (n + 1)
    hi, err_hi = _log_barnes_dd(n + 1, x + nu, ctx)
    lo, err_lo = _log_barnes_dd(n + 1, x - nu, ctx)
    pref = float(2 ** (1 + n // 2))
    value = dd.mul_d(dd.sub(hi, lo), pref)
    return value, pref * (err_hi + err_lo)


def boundary_log_det(cfg: SpectralConfig,
                     ctx: PrecisionContext = DEFAULT_CONTEXT) -> EvalResult:
    """log det of the boundary two-point kernel on S^n, closed Barnes form."""
    if cfg.n + 1 > MAX_ORDER:
        raise ValueError(f"boundary dimension limited to n <= {MAX_ORDER - 1}")
    value, err = _barnes_quotient_dd(cfg.n, cfg.nu, ctx)
    return EvalResult(dd.to_float(value), err, ROUTE_CLOSED_FORM)


def _log_barnes_pascal_dd(order: int, x: float, ctx: PrecisionContext):
    """log Gamma_order(x) assembled through the ladder/Pascal descent.

    Splits x = m + z with integer m and z in (0, 1]; a genuinely different
    call path from the direct coefficient sum at x.
    """
    m = math.ceil(x) - 1
    z = x - m
    if m <= 0:
        return _log_barnes_dd(order, x, ctx)
    total = dd.ZERO
    err = 0.0
    for l in range(m + 1):
        term, term_err = _log_barnes_dd(order - l, z, ctx)
        coeff = float(math.comb(m, l) * (-1) ** l)
        total = dd.add(total, dd.mul_d(term, coeff))
        err += abs(coeff) * term_err
    return total, err


def bulk_log_det_ratio(cfg: SpectralConfig,
                       ctx: PrecisionContext = DEFAULT_CONTEXT) -> EvalResult:
    """log(det_+/det_-) of the bulk operator on hyperbolic space:

    -2^{1+floor(n/2)} log[G_{n+1}((n+1)/2 + m)/G_{n+1}((n+1)/2 - m)],

    assembled through the Pascal descent so that the partition-function
    identity bulk + boundary = 0 compares two distinct call paths.
    """
    if cfg.n + 1 > MAX_ORDER:
        raise ValueError(f"boundary dimension limited to n <= {MAX_ORDER - 1}")
    x = 0.5 * (cfg.n + 1)
    hi, err_hi = _log_barnes_pascal_dd(cfg.n + 1, x + cfg.nu, ctx)
    lo, err_lo = _log_barnes_pascal_dd(cfg.n + 1, x - cfg.nu, ctx)
    pref = -float(2 ** (1 + cfg.n // 2))
    value = dd.mul_d(dd.sub(hi, lo), pref)
    return EvalResult(dd.to_float(value), abs(pref) * (err_hi + err_lo),
                      ROUTE_CLOSED_FORM)


@dataclass(frozen=True)
class _EvenPoly:
    """Even polynomial in mu: coefficients of mu^{2i}, exact."""

    coeffs: tuple[Fraction, ...]

    def integral_to(self, nu: Fraction) -> Fraction:
        # integral of c_i mu^{2i} from 0 to nu
        acc = Fraction(0)
        for i, c in enumerate(self.coeffs):
            acc += c * nu ** (2 * i + 1) / (2 * i + 1)
        return acc

    def eval_float(self, mu: float) -> float:
        acc = 0.0
        m2 = mu * mu
        for c in reversed(self.coeffs):
            acc = acc * m2 + float(c)
        return acc


def _pochhammer_product_poly(h: int) -> _EvenPoly:
    """(1/2 + mu)_h (1/2 - mu)_h = prod_{i<h} ((i+1/2)^2 - mu^2), exact."""
    coeffs = [Fraction(1)]
    for i in range(h):
        r2 = Fraction(2 * i + 1, 2) ** 2
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for p, c in enumerate(coeffs):
            nxt[p] += c * r2
            nxt[p + 1] -= c
        coeffs = nxt
    return _EvenPoly(tuple(coeffs))


def _require_even(n: int) -> int:
    if n < 2 or n % 2:
        raise ValueError("n must be a positive even integer")
    return n // 2


def _check_quadrature(exact_value: float, poly: _EvenPoly, pref: float,
                      nu: float, ctx: PrecisionContext, what: str) -> float:
    quad, quad_err = gauss_legendre(poly.eval_float, 0.0, nu, ctx,
                                    abs_floor=1e-15)
    quad *= pref
    quad_err = abs(pref) * quad_err + 1e-15 * abs(quad)
    tol = max(10.0 * ctx.target_rel_error * abs(exact_value),
              4.0 * quad_err, 1e-14)
    if abs(quad - exact_value) > tol:
        raise RouteDisagreementError(
            f"{what}: exact-rational route {exact_value!r} vs quadrature "
            f"{quad!r} differ beyond {tol:.2e}")
    return quad_err


def anomaly_integrated(n: int, nu: float,
                       ctx: PrecisionContext = DEFAULT_CONTEXT) -> EvalResult:
    """Integrated conformal anomaly for even n:

    (2^{2 + floor(n/2)} (-1)^{n/2} / n!) * integral_0^nu (1/2+mu)_{n/2} (1/2-mu)_{n/2} dmu,

    integrated exactly in rational arithmetic and cross-checked by
    Gauss-Legendre quadrature.
    """
    h = _require_even(n)
    if not (0.0 <= nu <= 0.5):
        raise ValueError("nu must lie in [0, 1/2]")
    poly = _pochhammer_product_poly(h)
    pref = Fraction((-1) ** h * 2 ** (2 + h), math.factorial(n))
    exact = pref * poly.integral_to(Fraction(nu))
    value = float(exact)
    _check_quadrature(value, poly, float(pref), nu, ctx,
                      f"anomaly_integrated(n={n}, nu={nu})")
    return EvalResult(value, abs(value) * 2.0 ** -52,
                      ROUTE_EXACT_RATIONAL, exact=exact)


def bulk_anomaly_lagrangian(n: int, m: float,
                            ctx: PrecisionContext = DEFAULT_CONTEXT
                            ) -> EvalResult:
    """Bulk effective-Lagrangian route to the same anomaly:

    [2/(2 pi)^{n/2} * integral_0^m (1/2+mu)_{n/2}(1/2-mu)_{n/2}/(1/2)_{n/2} dmu]
      * L_{n+1},   L_{n+1} = 2 (-pi)^{n/2} / Gamma(1 + n/2).

    The pi powers cancel, leaving an exact rational.
    """
    h = _require_even(n)
    if not (0.0 <= m <= 0.5):
        raise ValueError("m must lie in [0, 1/2]")
    poly = _pochhammer_product_poly(h)
    integral = poly.integral_to(Fraction(m))
    half_poch = pochhammer_exact(Fraction(1, 2), h)
    exact = 4 * (-1) ** h * integral / (2 ** h * half_poch
                                        * math.factorial(h))
    return EvalResult(float(exact), abs(float(exact)) * 2.0 ** -52,
                      ROUTE_EXACT_RATIONAL, exact=exact)


def type_a_exact_coefficient(n: int) -> Fraction:
    """Rational r with c^{(n)} = r * pi^{-n/2}."""
    h = _require_even(n)
    poly = _pochhammer_product_poly(h)
    integral = poly.integral_to(Fraction(1, 2))
    half_poch = pochhammer_exact(Fraction(1, 2), h)
    c_h = Fraction((-1) ** h,
                   2 ** (2 * h) * math.factorial(h) * math.factorial(h - 1))
    return 4 * c_h * integral / (2 ** h * half_poch)


def type_a_coefficient(n: int,
                       ctx: PrecisionContext = DEFAULT_CONTEXT) -> EvalResult:
    """Type-A anomaly coefficient c^{(n)} = r * pi^{-n/2}, exact r."""
    h = _require_even(n)
    r = type_a_exact_coefficient(n)
    value_dd = dd.div(dd.from_fraction(r), dd.powi(dd.PI, h))
    value = dd.to_float(value_dd)
    # independent check: quadrature of the full integrand
    poly = _pochhammer_product_poly(h)
    pref = float(4 * Fraction((-1) ** h, 2 ** (2 * h) * math.factorial(h)
                              * math.factorial(h - 1))
                 / pochhammer_exact(Fraction(1, 2), h)) \
        / (2.0 * math.pi) ** h
    _check_quadrature(value, poly, pref, 0.5, ctx,
                      f"type_a_coefficient(n={n})")
    return EvalResult(value, abs(value) * 2.0 ** -50, ROUTE_EXACT_RATIONAL)


def dirac_det_log(n: int,
                  ctx: PrecisionContext = DEFAULT_CONTEXT) -> EvalResult:
    """-log det D^2 on S^n = 4 * 2^{floor(n/2)} log Gamma_n(n/2)."""
    point = BarnesPoint(n, 0.5 * n)
    value, err = _log_barnes_dd(point.n, point.z, ctx)
    pref = float(4 * 2 ** (n // 2))
    return EvalResult(pref * dd.to_float(value), pref * err,
                      ROUTE_CLOSED_FORM)


def _f_coefficient_decomposed(n: int, ctx: PrecisionContext):
    """Route (b): exact expansion of 2^{1+floor(n/2)} log Gamma_n(n/2)
    over the basis {log 2, zeta'(-k)} via the Pascal descent to half-integer
    arguments, with zeta'(-2p) taken from the zeta(1+2p) relation.

    Returns (value_dd, err, odd_coeffs_vanish).
    """
    m = (n - 1) // 2
    pref = 2 * 2 ** (n // 2)
    # coefficients of zeta'(-k) and of log2 over exact rationals
    zcoeff = [Fraction(0)] * n
    log2_coeff = Fraction(0)
    half = Fraction(1, 2)
    for l in range(m + 1):
        order = n - l
        sign = Fraction((-1) ** l * math.comb(m, l))
        for k in range(order):
            bval = b_poly(order, k)(half)
            zcoeff[k] += sign * bval * (Fraction(1, 2 ** k) - 1)
            b_at_one = (-1 if k % 2 == 0 else 1) * bernoulli(k + 1)
            log2_coeff += sign * bval * Fraction(1, 2 ** k) * b_at_one / (k + 1)
    value = dd.mul(dd.LN2, dd.from_fraction(-pref * log2_coeff))
    err = 4.0 * dd.DD_EPS * abs(value[0])
    odd_vanish = True
    for k in range(1, n):
        c = pref * zcoeff[k]
        if c == 0:
            continue
        if k % 2 == 1:
            odd_vanish = False
        zd, zd_err = _riemann_sderiv_neg_dd(k, ctx)
        term = dd.mul(dd.from_fraction(c), zd)
        value = dd.add(value, term)
        err += abs(float(c)) * zd_err + 4.0 * dd.DD_EPS * abs(term[0])
    return value, err, odd_vanish


def f_coefficient(n: int,
                  ctx: PrecisionContext = DEFAULT_CONTEXT) -> EvalResult:
    """Sphere free energy F = 2 * 2^{floor(n/2)} log Gamma_n(n/2), n odd.

    Computed by the generic Barnes evaluator and by the half-integer
    decomposition; the two must agree to the combined tolerance.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("F-coefficient is defined for odd n")
    if n > MAX_ORDER:
        raise ValueError(f"order n must be <= {MAX_ORDER}")
    direct, err_a = _log_barnes_dd(n, 0.5 * n, ctx)
    pref = float(2 * 2 ** (n // 2))
    value_a = dd.mul_d(direct, pref)
    err_a *= pref
    value_b, err_b, odd_vanish = _f_coefficient_decomposed(n, ctx)
    if not odd_vanish:
        raise RouteDisagreementError(
            f"f_coefficient(n={n}): odd zeta'-coefficients failed to cancel")
    diff = abs(dd.to_float(dd.sub(value_a, value_b)))
    tol = max(err_a + err_b,
              10.0 * ctx.target_rel_error * abs(dd.to_float(value_a)))
    if diff > tol:
        raise RouteDisagreementError(
            f"f_coefficient(n={n}): generic route {dd.to_float(value_a)!r} "
            f"vs decomposition {dd.to_float(value_b)!r} differ by {diff:.3e}")
    return EvalResult(dd.to_float(value_a), err_a + diff, ROUTE_CLOSED_FORM)


@dataclass(frozen=True)
class ScanEntry:
    n: int
    det_value: float
    log_det: float
    abs_error: float


@dataclass(frozen=True)
class ScanResult:
    """Determinant scan det D^2(S^n) for n = 1..n_max with a tail report.

    tail_monotone records strict decrease of |log det| along each parity
    class (n -> n+2) over the tail n in [5, n_max]; consecutive-n values
    interleave and are not monotone.
    """

    entries: tuple[ScanEntry, ...]
    tail_monotone: bool
    final_abs_log_det: float


def bar_schopka_scan(n_max: int,
                     ctx: PrecisionContext = DEFAULT_CONTEXT) -> ScanResult:
    """det D^2(S^n) for n = 1..n_max; determinants tend to 1."""
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    if n_max > MAX_ORDER:
        raise ValueError(f"n_max must be <= {MAX_ORDER}")
    entries = []
    for n in range(1, n_max + 1):
        res = dirac_det_log(n, ctx)
        log_det = -res.value
        if res.abs_error_estimate >= max(abs(log_det), 1e-300):
            raise PrecisionExhaustedError(
                f"bar_schopka_scan: |log det| at n={n} is below the "
                f"resolvable precision ({res.abs_error_estimate:.2e})")
        entries.append(ScanEntry(n, math.exp(log_det), log_det,
                                 res.abs_error_estimate))
    monotone = True
    for e in entries:
        if 5 <= e.n and e.n + 2 <= n_max:
            nxt = entries[e.n + 1]  # index n+2-1
            if not abs(nxt.log_det) < abs(e.log_det):
                monotone = False
    return ScanResult(tuple(entries), monotone,
                      abs(entries[-1].log_det))
