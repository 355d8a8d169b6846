"""Hurwitz zeta and its s-derivatives at non-positive integers.

The workhorse is an adaptive driver around the Euler-Maclaurin kernel: it
chooses the shift M so that N = M + a balances the truncation of the
asymptotic Bernoulli tail against the rounding amplification of the
partial sum (which grows like N^{k+1} for s = -k), retries a few times,
and raises ConvergenceError when the best achievable estimate misses the
requested target.  Results are double-double internally; the public
functions return floats.

Closed special routes for the Riemann values zeta'(-k) (functional
equation, and the zeta'(-2p) <-> zeta(1+2p) relation) serve both as
public operations and as the independent path used by route-agreement
checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import ddmath as dd
from ._backend import em_hurwitz
from .context import DEFAULT_CONTEXT, PrecisionContext
from .errors import ConvergenceError, PoleError
from .exact import bernoulli, bernoulli_poly, harmonic

MAX_SDERIV_ORDER = 64


@dataclass(frozen=True)
class ZetaDerivRequest:
    """Validated request for zeta'(-k, a).

    k <= 64 is the documented working range; full target precision is
    guaranteed for the library's own usage patterns (k < 30, or a not
    far below k/4, or a in {1/2, 1} where closed routes exist) and a
    ConvergenceError is raised honestly otherwise.
    """

    k: int
    a: float

    def __post_init__(self):
        if self.k < 0 or self.k > MAX_SDERIV_ORDER:
            raise ValueError(
                f"derivative order k must lie in [0, {MAX_SDERIV_ORDER}]")
        if not (self.a > 0.0):
            raise ValueError("Hurwitz shift a must be > 0")

    def evaluate(self, ctx: PrecisionContext = DEFAULT_CONTEXT) -> float:
        return hurwitz_zeta_sderiv(self.k, self.a, ctx)

# B_{2j}/(2j)! as dd pairs, j = 1..64; enough for tails up to ~128 terms.
_C2J_COUNT = 64
_C2J = tuple(
    dd.from_fraction(bernoulli(2 * j) / Fraction(math.factorial(2 * j)))
    for j in range(1, _C2J_COUNT + 1)
)

# Per-term rounding coefficient of the dd kernel; must dominate the
# observed error (it does, by a 20-600x margin on the stress grid).
_ROUND_COEF = 4e-30
# j-loop smallness threshold: push the tail to the dd floor.
_EPS_STOP = 1e-33

_MAX_ATTEMPTS = 6


class _EmResult:
    __slots__ = ("value", "dvalue", "err_v", "err_d", "acc_v", "acc_d",
                 "trunc_v", "trunc_d")

    def __init__(self, out: tuple):
        v_hi, v_lo, d_hi, d_lo, trunc_v, trunc_d, acc_v, acc_d = out
        self.value = (v_hi, v_lo)
        self.dvalue = (d_hi, d_lo)
        self.acc_v = acc_v
        self.acc_d = acc_d
        self.trunc_v = trunc_v
        self.trunc_d = trunc_d
        self.err_v = 2.0 * trunc_v + _ROUND_COEF * acc_v
        self.err_d = 2.0 * trunc_d + _ROUND_COEF * acc_d

    def trunc_part(self) -> float:
        return 2.0 * (self.trunc_v + self.trunc_d)

    def round_part(self) -> float:
        return _ROUND_COEF * (self.acc_v + self.acc_d)


def _initial_target_n(s: float, ctx: PrecisionContext) -> float:
    k_eff = max(0.0, -s)
    base = 12.0 + k_eff / 8.0 if k_eff > 12.0 else 12.0
    return min(base, float(4 * ctx.euler_maclaurin_cutoff))


def _ok_value(res: _EmResult, ctx: PrecisionContext) -> bool:
    scale = max(abs(dd.to_float(res.value)), 1e-300)
    return res.err_v <= ctx.target_rel_error * scale


def _ok_deriv(res: _EmResult, ctx: PrecisionContext) -> bool:
    # relative acceptance only: "value within the noise band" must never
    # be taken as success, since a better-conditioned shift may exist
    # (and the adaptive loop will find it or raise honestly)
    scale = max(abs(dd.to_float(res.dvalue)), 1e-300)
    return res.err_d <= ctx.target_rel_error * scale


def _em_adaptive(s: float, a: float, ctx: PrecisionContext,
                 need_value: bool, need_deriv: bool) -> _EmResult:
    """Adaptive Euler-Maclaurin evaluation; returns the best attempt."""
    target_n = max(a, _initial_target_n(s, ctx))
    best: _EmResult | None = None
    for _ in range(_MAX_ATTEMPTS):
        m_shift = max(0, math.ceil(target_n - a))
        res = _EmResult(em_hurwitz(s, a, m_shift, ctx.correction_order,
                                   _C2J_COUNT, _EPS_STOP, _C2J))
        key = (res.err_v if need_value else 0.0) + \
              (res.err_d if need_deriv else 0.0)
        best_key = ((best.err_v if need_value else 0.0) +
                    (best.err_d if need_deriv else 0.0)) if best else math.inf
        if best is None or key < best_key:
            best = res
        good = ((not need_value or _ok_value(res, ctx))
                and (not need_deriv or _ok_deriv(res, ctx)))
        if good:
            return res
        if res.trunc_part() >= res.round_part():
            target_n *= 1.5
        else:
            if m_shift == 0:
                break  # cannot shrink N below the argument itself
            target_n = max(a, target_n / 1.4)
    assert best is not None
    return best


def _raise_unconverged(what: str, value: tuple, err: float,
                       ctx: PrecisionContext):
    raise ConvergenceError(
        f"{what}: best error estimate {err:.3e} exceeds target "
        f"{ctx.target_rel_error:.1e} (value ~ {dd.to_float(value):.6e})",
        value=dd.to_float(value), abs_error=err)


def _hurwitz_zeta_dd(s: float, a: float,
                     ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Internal: zeta(s, a) as (dd, abs_error)."""
    if a <= 0.0:
        raise ValueError("Hurwitz shift a must be > 0")
    if s == 1.0:
        raise PoleError("Hurwitz zeta has a pole at s = 1")
    if s <= 0.0 and s == int(s):
        # exact polynomial value: zeta(-k, a) = -B_{k+1}(a)/(k+1); always
        # preferable to Euler-Maclaurin, whose partial sums cancel badly
        # when the value is small
        k = int(-s)
        value = dd.from_fraction(-bernoulli_poly(k + 1, Fraction(a))
                                 / (k + 1))
        return value, 4.0 * dd.DD_EPS * abs(value[0])
    res = _em_adaptive(s, a, ctx, need_value=True, need_deriv=False)
    if not _ok_value(res, ctx):
        _raise_unconverged(f"hurwitz_zeta(s={s}, a={a})", res.value,
                           res.err_v, ctx)
    return res.value, res.err_v


def _hurwitz_sderiv_dd(k: int, a: float,
                       ctx: PrecisionContext = DEFAULT_CONTEXT):
    """Internal: d/ds zeta(s, a) at s = -k, as (dd, abs_error)."""
    if a <= 0.0:
        raise ValueError("Hurwitz shift a must be > 0")
    if k < 0:
        raise ValueError("derivative order k must be >= 0")
    if k > MAX_SDERIV_ORDER:
        raise ValueError(f"derivative order k must be <= {MAX_SDERIV_ORDER}")
    res = _em_adaptive(-float(k), a, ctx, need_value=False, need_deriv=True)
    if _ok_deriv(res, ctx):
        return res.dvalue, res.err_d
    # closed functional-equation routes rescue the small-a / large-k corner
    # for the two shifts that actually occur there
    if a == 1.0:
        return _riemann_sderiv_neg_dd(k, ctx)
    if a == 0.5:
        return _half_shift_sderiv_dd(k, ctx)
    _raise_unconverged(f"hurwitz_zeta_sderiv(k={k}, a={a})", res.dvalue,
                       res.err_d, ctx)


def hurwitz_zeta(s: float, a: float,
                 ctx: PrecisionContext = DEFAULT_CONTEXT) -> float:
    """zeta(s, a) = sum_{m>=0} (m+a)^{-s}, continued to all real s != 1."""
    value, _ = _hurwitz_zeta_dd(s, a, ctx)
    return dd.to_float(value)


def hurwitz_zeta_sderiv(k: int, a: float,
                        ctx: PrecisionContext = DEFAULT_CONTEXT) -> float:
    """d/ds zeta(s, a) evaluated at s = -k (k a non-negative integer)."""
    value, _ = _hurwitz_sderiv_dd(k, a, ctx)
    return dd.to_float(value)


def _riemann_zeta_dd(s: float, ctx: PrecisionContext = DEFAULT_CONTEXT):
    return _hurwitz_zeta_dd(s, 1.0, ctx)


def _zeta_neg_int_exact(k: int) -> Fraction:
    # zeta(-k) = -B_{k+1}(1)/(k+1); B_{k+1}(1) = (-1)^{k+1} B_{k+1}
    b = bernoulli(k + 1) * (-1 if k % 2 == 0 else 1)
    return -b / (k + 1)


def _riemann_sderiv_neg_dd(k: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """zeta'(-k) by the closed routes off the functional equation.

    Even k = 2p (p >= 1):  zeta'(-2p) = (-1)^p (2p)! / (2^{1+2p} pi^{2p})
    * zeta(1+2p).  Odd k:  zeta'(-k) = zeta(-k) [log 2pi - psi(k+1)
    - zeta'(k+1)/zeta(k+1)], with psi(k+1) = H_k - gamma.  k = 0 is the
    Lerch value -log(2pi)/2.
    """
    if k == 0:
        return dd.mul_pwr2(dd.neg(dd.LOG_2PI), 0.5), 4.0 * dd.DD_EPS
    if k % 2 == 0:
        p = k // 2
        fact = dd.from_fraction(
            Fraction(math.factorial(2 * p) * (-1) ** p, 2 ** (1 + 2 * p)))
        pref = dd.div(fact, dd.powi(dd.PI, 2 * p))
        z, err_z = _riemann_zeta_dd(float(2 * p + 1), ctx)
        value = dd.mul(pref, z)
        err = abs(dd.to_float(pref)) * err_z + 8.0 * dd.DD_EPS * abs(value[0])
        return value, err
    # odd k: needs zeta and zeta' at k+1, both cancellation-free
    res = _em_adaptive(float(k + 1), 1.0, ctx, need_value=True,
                       need_deriv=True)
    psi = dd.sub(dd.from_fraction(harmonic(k)), dd.EULER_GAMMA)
    bracket = dd.sub(dd.sub(dd.LOG_2PI, psi), dd.div(res.dvalue, res.value))
    zneg = dd.from_fraction(_zeta_neg_int_exact(k))
    value = dd.mul(zneg, bracket)
    # |zeta(k+1)| >= 1, so quotient error <= err_d + |zeta'| err_v
    quot_err = res.err_d + abs(dd.to_float(res.dvalue)) * res.err_v
    err = abs(dd.to_float(zneg)) * (quot_err + 16.0 * dd.DD_EPS) \
        + 8.0 * dd.DD_EPS * abs(value[0])
    return value, err


def _half_shift_sderiv_dd(k: int, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """zeta'(-k, 1/2) = 2^{-k} log2 zeta(-k) + (2^{-k} - 1) zeta'(-k)."""
    zneg = dd.from_fraction(_zeta_neg_int_exact(k))
    zderiv, err = _riemann_sderiv_neg_dd(k, ctx)
    twok = 2.0 ** (-k)
    first = dd.mul_d(dd.mul(dd.LN2, zneg), twok)
    second = dd.mul_d(zderiv, twok - 1.0)
    value = dd.add(first, second)
    err_total = abs(twok - 1.0) * err + 8.0 * dd.DD_EPS * (
        abs(first[0]) + abs(second[0]))
    return value, err_total


def riemann_zeta_deriv_neg_even(p: int,
                                ctx: PrecisionContext = DEFAULT_CONTEXT
                                ) -> float:
    """zeta'(-2p) = (-1)^p (2p)!/(2^{1+2p} pi^{2p}) zeta(1+2p), p >= 1."""
    if p < 1:
        raise ValueError("p must be >= 1")
    if 2 * p > MAX_SDERIV_ORDER:
        raise ValueError(f"2p must be <= {MAX_SDERIV_ORDER}")
    value, _ = _riemann_sderiv_neg_dd(2 * p, ctx)
    return dd.to_float(value)
