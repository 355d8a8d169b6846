"""Pure-Python Euler-Maclaurin kernel for Hurwitz zeta and its s-derivative.

This is the fallback twin of the compiled kernel in ``_ddem``; both expose
``em_hurwitz`` with the same contract and the same double-double algorithm:

    zeta(s, a) = sum_{m<M} (m+a)^{-s}
               + N^{1-s}/(s-1) + N^{-s}/2
               + sum_{j>=1} B_{2j}/(2j)! * (s)_{2j-1} * N^{-s-2j+1},
    N = M + a,

with every term differentiated analytically in s.  The rising factorial
(s)_{2j-1} and its s-derivative are advanced incrementally, so at
non-positive integer s the value series terminates exactly (P hits an
exact zero) while the derivative series keeps its nonzero terms.

The correction sum is asymptotic: terms are added while they shrink and
the first omitted (or first growing) term is reported as the truncation
bound.  Accumulated absolute magnitudes are returned so the driver can
attach a rounding-error estimate.
"""

from __future__ import annotations

import math

from . import ddmath as dd

BACKEND = "python"


def em_hurwitz(s: float, a: float, n_partial: int, jmin: int, jmax: int,
               eps_stop: float, c2j: tuple) -> tuple:
    """One Euler-Maclaurin evaluation of (zeta(s,a), d/ds zeta(s,a)).

    c2j holds dd pairs B_{2j}/(2j)! for j = 1..len(c2j).  Returns
    (v_hi, v_lo, d_hi, d_lo, trunc_v, trunc_d, acc_v, acc_d).
    """
    val = dd.ZERO
    dval = dd.ZERO
    acc_v = 0.0
    acc_d = 0.0

    for m in range(n_partial):
        u = dd.two_sum(float(m), a)
        lu = dd.log(u)
        w = dd.exp(dd.mul_d(lu, -s))
        val = dd.add(val, w)
        t = dd.mul(lu, w)
        dval = dd.sub(dval, t)
        acc_v += abs(w[0])
        acc_d += abs(t[0])

    big_n = dd.two_sum(float(n_partial), a)
    ln_n = dd.log(big_n)

    # scalar combinations of s are kept as exact dd pairs: rounding
    # (1 - s) or (s - 1) in double contaminates the huge boundary terms
    # whenever s is not representable together with the integer
    one_minus_s = dd.two_sum(1.0, -s)
    s_minus_one = dd.two_sum(s, -1.0)

    # tail integral N^{1-s}/(s-1) and its s-derivative
    t1 = dd.div(dd.exp(dd.mul(ln_n, one_minus_s)), s_minus_one)
    val = dd.add(val, t1)
    u1 = dd.mul(t1, ln_n)
    u2 = dd.div(t1, s_minus_one)
    dval = dd.sub(dval, dd.add(u1, u2))
    acc_v += abs(t1[0])
    acc_d += abs(u1[0]) + abs(u2[0])

    # midpoint term N^{-s}/2
    b = dd.exp(dd.mul_d(ln_n, -s))
    half_b = dd.mul_pwr2(b, 0.5)
    val = dd.add(val, half_b)
    t = dd.mul_pwr2(dd.mul(b, ln_n), 0.5)
    dval = dd.sub(dval, t)
    acc_v += abs(half_b[0])
    acc_d += abs(t[0])

    # Bernoulli corrections; P = (s)_{2j-1}, D = dP/ds, W = N^{-s-2j+1}
    p = (s, 0.0)
    d = dd.ONE
    w = dd.exp(dd.mul(ln_n, dd.two_sum(-1.0, -s)))
    inv_n2 = dd.recip(dd.sqr(big_n))

    trunc_v = 0.0
    trunc_d = 0.0
    prev = math.inf
    j_added = 0
    jstop = min(jmax, len(c2j))
    for j in range(1, jstop + 1):
        c = c2j[j - 1]
        cw = dd.mul(c, w)
        term_v = dd.mul(cw, p)
        term_d = dd.mul(cw, dd.sub(d, dd.mul(p, ln_n)))
        cur = max(abs(term_v[0]), abs(term_d[0]))
        if j >= 3 and cur > prev:
            # asymptotic divergence: stop before adding
            trunc_v = abs(term_v[0])
            trunc_d = abs(term_d[0])
            break
        val = dd.add(val, term_v)
        dval = dd.add(dval, term_d)
        acc_v += abs(term_v[0])
        acc_d += abs(term_d[0])
        trunc_v = abs(term_v[0])
        trunc_d = abs(term_d[0])
        j_added = j
        if (j > jmin
                and abs(term_v[0]) <= eps_stop * abs(val[0])
                and abs(term_d[0]) <= eps_stop * abs(dval[0])):
            break
        prev = cur
        f1 = s + (2.0 * j - 1.0)
        f2 = s + 2.0 * j
        f12 = dd.mul_d(dd.mul_d(p, f1), f2)
        d = dd.add(dd.mul_d(dd.mul_d(d, f1), f2), dd.mul_d(p, f1 + f2))
        p = f12
        w = dd.mul(w, inv_n2)
    terminated = p[0] == 0.0 and p[1] == 0.0
    if s + 2.0 * j_added + 1.0 <= 0.0 and not terminated:
        # the first-omitted-term remainder bound only holds once
        # s + 2j + 1 > 0; stopping earlier cannot be certified
        trunc_v = math.inf
        trunc_d = math.inf
    elif terminated:
        # value series terminated exactly (s at a non-positive integer)
        trunc_v = 0.0

    return (val[0], val[1], dval[0], dval[1], trunc_v, trunc_d, acc_v, acc_d)
