"""Invariant suite behind the CLI selftest.

Each check raises AssertionError on failure; the runner reports one
pass/fail line per invariant and stops the exit status on the first
failure.  Identity-style tolerances scale with the context target (the
"scaling subset" documented in the README); exact-arithmetic checks do
not relax.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import exact
from .barnes import (BarnesPoint, ladder_check, log_barnes_gamma,
                     pascal_expand, special_value_half, special_value_one,
                     special_value_one_via_stirling)
from .context import DEFAULT_CONTEXT, PrecisionContext
from .dimreg import dimreg_continuation
from .hurwitz import (hurwitz_zeta, hurwitz_zeta_sderiv,
                      riemann_zeta_deriv_neg_even)
from .spectral import (SpectralConfig, anomaly_integrated, bar_schopka_scan,
                       boundary_eigenvalue, boundary_log_det,
                       bulk_anomaly_lagrangian, bulk_log_det_ratio,
                       degeneracy, dirac_det_log, f_coefficient,
                       type_a_exact_coefficient)

# frozen from the first scan run: |log det D^2(S^25)| measured 7.7437e-5
SCAN_TAIL_THRESHOLD = 8.0e-5

_A_GRID = (0.25, 0.5, 1.0, 1.5, 2.5)
_S_GRID = (-3.0, -2.0, -1.0, -0.5, 0.5, 2.0, 3.0)
_Z_GRID = (0.25, 0.5, 1.0, 1.5, 2.0, 2.75)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _scaled(ctx: PrecisionContext, mult: float) -> float:
    return mult * ctx.target_rel_error


def _check_bernoulli_recurrence(ctx: PrecisionContext) -> None:
    for k in range(1, 31):
        acc = Fraction(0)
        for j in range(k + 1):
            acc += math.comb(k + 1, j) * exact.bernoulli(j)
        assert acc == 0, f"recurrence violated at k={k}: {acc}"


def _check_bernoulli_odd(ctx: PrecisionContext) -> None:
    for k in range(3, 65, 2):
        assert exact.bernoulli(k) == 0, f"B_{k} nonzero"


def _check_stirling_generating(ctx: PrecisionContext) -> None:
    for n in range(1, 13):
        # prod_{i=0}^{n-1} (x - i) assembled by convolution
        coeffs = [Fraction(1)]
        for i in range(n):
            nxt = [Fraction(0)] * (len(coeffs) + 1)
            for p, c in enumerate(coeffs):
                nxt[p] -= c * i
                nxt[p + 1] += c
            coeffs = nxt
        for j in range(n + 1):
            want = coeffs[j]
            got = exact.stirling_first(n, j) if j >= 1 else (
                Fraction(0) if n >= 1 else Fraction(1))
            assert got == want, f"s({n},{j}) = {got}, expected {want}"


def _check_hurwitz_shift(ctx: PrecisionContext) -> None:
    tol = _scaled(ctx, 10.0)
    for s in _S_GRID:
        for a in _A_GRID:
            lhs = hurwitz_zeta(s, a, ctx)
            rhs = hurwitz_zeta(s, a + 1.0, ctx) + a ** (-s)
            bound = tol * max(abs(lhs), 1.0)
            assert abs(lhs - rhs) <= bound, \
                f"shift identity s={s} a={a}: {lhs} vs {rhs}"


def _check_derivative_shift(ctx: PrecisionContext) -> None:
    tol = _scaled(ctx, 10.0)
    for k in range(4):
        for a in _A_GRID:
            lhs = hurwitz_zeta_sderiv(k, a, ctx)
            rhs = hurwitz_zeta_sderiv(k, a + 1.0, ctx) - a ** k * math.log(a)
            bound = tol * max(abs(lhs), 1.0)
            assert abs(lhs - rhs) <= bound, \
                f"derivative shift k={k} a={a}: {lhs} vs {rhs}"


def _check_bernoulli_polynomial_values(ctx: PrecisionContext) -> None:
    tol = _scaled(ctx, 10.0)
    for k in range(7):
        for a in _A_GRID:
            want = float(-exact.bernoulli_poly(k + 1, Fraction(a))
                         / (k + 1))
            got = hurwitz_zeta(-float(k), a, ctx)
            assert abs(got - want) <= tol * max(abs(want), 1.0), \
                f"zeta(-{k},{a}) = {got}, Bernoulli value {want}"


def _check_lerch_value(ctx: PrecisionContext) -> None:
    tol = _scaled(ctx, 10.0)
    for a in (1.0, 0.5, 1.5, 2.5, 0.25):
        want = math.lgamma(a) - 0.5 * math.log(2.0 * math.pi)
        got = hurwitz_zeta_sderiv(0, a, ctx)
        assert abs(got - want) <= tol * max(abs(want), 1.0), \
            f"zeta'(0,{a}) = {got}, Lerch value {want}"


def _check_riemann_deriv_cross_route(ctx: PrecisionContext) -> None:
    tol = _scaled(ctx, 10.0)
    for p in (1, 2, 3):
        closed = riemann_zeta_deriv_neg_even(p, ctx)
        em = hurwitz_zeta_sderiv(2 * p, 1.0, ctx)
        assert abs(closed - em) <= tol * abs(closed), \
            f"zeta'(-{2 * p}) routes: {closed} vs {em}"


def _check_barnes_anchor(ctx: PrecisionContext) -> None:
    tol = max(1e-10, _scaled(ctx, 100.0))
    root = math.sqrt(2.0 * math.pi)
    for i in range(1, 21):
        z = 0.25 * i
        got = math.exp(log_barnes_gamma(BarnesPoint(1, z), ctx)) * root
        want = math.gamma(z)
        assert abs(got - want) <= tol * want, \
            f"normalization anchor at z={z}: {got} vs {want}"


def _check_ladder(ctx: PrecisionContext) -> None:
    for n in range(1, 9):
        for z in _Z_GRID:
            defect = ladder_check(n, z, ctx)
            scale = max(1.0, abs(log_barnes_gamma(BarnesPoint(n + 1, z), ctx)))
            bound = 20.0 * (n + 1) * ctx.target_rel_error * scale
            assert abs(defect) <= bound, \
                f"ladder defect n={n} z={z}: {defect}"


def _check_pascal(ctx: PrecisionContext) -> None:
    for n in range(2, 7):
        for m in range(1, n):
            for z in (0.5, 1.0, 1.25):
                via = pascal_expand(n, m, z, ctx)
                direct = log_barnes_gamma(BarnesPoint(n, m + z), ctx)
                bound = 40.0 * n * ctx.target_rel_error * max(1.0, abs(direct))
                assert abs(via - direct) <= bound, \
                    f"pascal n={n} m={m} z={z}: {via} vs {direct}"


def _check_special_values(ctx: PrecisionContext) -> None:
    for n in range(1, 11):
        direct = log_barnes_gamma(BarnesPoint(n, 1.0), ctx)
        via = special_value_one(n, ctx)
        bound = 20.0 * n * ctx.target_rel_error * max(1.0, abs(direct))
        assert abs(direct - via) <= bound, f"Gamma_{n}(1) routes differ"
        direct_h = log_barnes_gamma(BarnesPoint(n, 0.5), ctx)
        via_h = special_value_half(n, ctx)
        assert abs(direct_h - via_h) <= bound, f"Gamma_{n}(1/2) routes differ"


def _check_stirling_compact(ctx: PrecisionContext) -> None:
    for n in range(2, 9):
        a = special_value_one(n, ctx)
        b = special_value_one_via_stirling(n, ctx)
        bound = 20.0 * n * ctx.target_rel_error * max(1.0, abs(a))
        assert abs(a - b) <= bound, f"compact Gamma_{n}(1) form differs"


def _check_eigenvalue_endpoint(ctx: PrecisionContext) -> None:
    for n in range(1, 9):
        cfg = SpectralConfig(n, 0.5)
        for l in (0, 1, 5, 40):
            assert boundary_eigenvalue(l, cfg) == 0.5 * n + l, \
                f"endpoint eigenvalue n={n} l={l} not telescoped"


def _check_degeneracy(ctx: PrecisionContext) -> None:
    for n in range(1, 13):
        for l in range(200):
            lhs = degeneracy(l + 1, n) * (l + 1)
            rhs = degeneracy(l, n) * (l + n)
            assert lhs == rhs, f"degeneracy ratio fails at l={l}, n={n}"


def _check_holographic_identity(ctx: PrecisionContext) -> None:
    for n in range(1, 11):
        for nu in (0.1, 0.25, 0.5):
            cfg = SpectralConfig(n, nu)
            b = boundary_log_det(cfg, ctx).value
            k = bulk_log_det_ratio(cfg, ctx).value
            bound = max(1e-12, _scaled(ctx, 1.0)) * max(abs(b), 1.0)
            assert abs(b + k) <= bound, \
                f"holographic identity n={n} nu={nu}: {b} + {k}"


def _check_anomaly_routes(ctx: PrecisionContext) -> None:
    for n in (2, 4, 6, 8):
        for m in (0.1, 0.25, 0.5):
            a = anomaly_integrated(n, m, ctx).exact
            b = bulk_anomaly_lagrangian(n, m, ctx).exact
            assert a == b, f"anomaly routes differ exactly: n={n} m={m}"
    pinned = anomaly_integrated(2, 0.5, ctx).exact
    assert pinned == Fraction(-1, 3), f"anomaly(2, 1/2) = {pinned}"


def _check_type_a(ctx: PrecisionContext) -> None:
    assert type_a_exact_coefficient(2) == Fraction(-1, 12)
    assert type_a_exact_coefficient(4) == Fraction(11, 1440)
    for n in (2, 4, 6, 8):
        r = type_a_exact_coefficient(n)
        assert (r > 0) == ((n // 2) % 2 == 0), f"sign of c^({n})"


def _check_s1_oracle(ctx: PrecisionContext) -> None:
    # brute spectral zeta: zeta_{D^2}(s) = 2 zeta(2s, 1/2), so
    # -log det = zeta'_{D^2}(0) = 4 zeta'(0, 1/2)
    oracle = 4.0 * hurwitz_zeta_sderiv(0, 0.5, ctx)
    closed = dirac_det_log(1, ctx).value
    bound = max(1e-12, _scaled(ctx, 1.0)) * max(abs(closed), 1.0)
    assert abs(oracle - closed) <= bound, f"S^1 oracle {oracle} vs {closed}"
    assert abs(math.exp(-closed) - 4.0) <= 4.0 * bound + 1e-12


def _check_f_routes(ctx: PrecisionContext) -> None:
    # f_coefficient raises RouteDisagreementError internally on mismatch
    for n in (1, 3, 5, 7, 9):
        f_coefficient(n, ctx)


def _check_dimreg_odd(ctx: PrecisionContext) -> None:
    for n, nu in ((1, 0.25), (3, 0.5)):
        rep = dimreg_continuation(n, nu, ctx)
        closed = boundary_log_det(SpectralConfig(n, nu), ctx).value
        assert abs(rep.finite_part - closed) <= 1e-6, \
            f"dimreg finite part n={n} nu={nu}: {rep.finite_part} vs {closed}"


def _check_dimreg_even(ctx: PrecisionContext) -> None:
    rep = dimreg_continuation(2, 0.5, ctx)
    want = anomaly_integrated(2, 0.5, ctx).value
    assert abs(rep.residue - want) <= 1e-6, \
        f"dimreg residue n=2: {rep.residue} vs {want}"


def _check_scan_tail(ctx: PrecisionContext) -> None:
    scan = bar_schopka_scan(25, ctx)
    assert scan.entries[0].det_value == 4.0 or \
        abs(scan.entries[0].det_value - 4.0) <= 1e-10
    assert scan.tail_monotone, "parity-wise tail monotonicity failed"
    assert scan.final_abs_log_det < SCAN_TAIL_THRESHOLD, \
        f"|log det(S^25)| = {scan.final_abs_log_det} above frozen threshold"


CHECKS: tuple[tuple[str, Callable[[PrecisionContext], None]], ...] = (
    ("bernoulli-recurrence", _check_bernoulli_recurrence),
    ("bernoulli-odd-vanish", _check_bernoulli_odd),
    ("stirling-generating-identity", _check_stirling_generating),
    ("hurwitz-shift-identity", _check_hurwitz_shift),
    ("hurwitz-derivative-shift", _check_derivative_shift),
    ("hurwitz-bernoulli-values", _check_bernoulli_polynomial_values),
    ("hurwitz-lerch-value", _check_lerch_value),
    ("riemann-deriv-cross-route", _check_riemann_deriv_cross_route),
    ("barnes-normalization-anchor", _check_barnes_anchor),
    ("barnes-ladder", _check_ladder),
    ("barnes-pascal-consistency", _check_pascal),
    ("barnes-special-values", _check_special_values),
    ("barnes-stirling-compact-form", _check_stirling_compact),
    ("eigenvalue-endpoint-telescoping", _check_eigenvalue_endpoint),
    ("degeneracy-ratio", _check_degeneracy),
    ("holographic-identity", _check_holographic_identity),
    ("anomaly-cross-route", _check_anomaly_routes),
    ("type-a-coefficients", _check_type_a),
    ("s1-dirac-oracle", _check_s1_oracle),
    ("f-route-equivalence", _check_f_routes),
    ("dimreg-odd-finite-part", _check_dimreg_odd),
    ("dimreg-even-residue", _check_dimreg_even),
    ("bar-schopka-tail", _check_scan_tail),
)


def run_selftest(ctx: PrecisionContext = DEFAULT_CONTEXT,
                 corrupt_bernoulli: bool = False,
                 report: Callable[[str], None] | None = None
                 ) -> list[CheckResult]:
    """Run every invariant; returns per-check results in order.

    corrupt_bernoulli is a fault-injection hook: it patches the Bernoulli
    table with a wrong B_12 for the duration of the run, which the leading
    recurrence check must catch.
    """
    results: list[CheckResult] = []
    original = exact.bernoulli
    if corrupt_bernoulli:
        def corrupted(k: int):
            if k == 12:
                return original(k) + Fraction(1, 691)
            return original(k)
        exact.bernoulli = corrupted
    try:
        for name, fn in CHECKS:
            try:
                fn(ctx)
                results.append(CheckResult(name, True))
            except Exception as e:  # noqa: BLE001 - report every failure mode
                results.append(CheckResult(name, False, str(e)))
            if report is not None:
                last = results[-1]
                status = "pass" if last.ok else f"FAIL ({last.detail})"
                report(f"{last.name}: {status}")
    finally:
        exact.bernoulli = original
    return results
