# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Euler-Maclaurin kernel: the hot twin of ``_ddem_py``.

Same double-double algorithm, same contract; see the pure-Python module
for the formula documentation.  Built without value-changing FP
optimizations: two_sum/two_prod require strict IEEE-754 semantics
(-ffp-contract=off is set by the build, and two_prod uses an explicit
fma so no splitting tricks are needed).
"""

from libc.math cimport fma, fabs, floor, ldexp
from libc.math cimport log as c_log, exp as c_exp

cdef double INF = float("inf")

BACKEND = "compiled"

cdef struct DD:
    double hi
    double lo

cdef inline DD dd_new(double h, double l) noexcept nogil:
    cdef DD r
    r.hi = h
    r.lo = l
    return r

cdef inline DD two_sum(double a, double b) noexcept nogil:
    cdef double s = a + b
    cdef double bb = s - a
    return dd_new(s, (a - (s - bb)) + (b - bb))

cdef inline DD quick_two_sum(double a, double b) noexcept nogil:
    cdef double s = a + b
    return dd_new(s, b - (s - a))

cdef inline DD two_prod(double a, double b) noexcept nogil:
    cdef double p = a * b
    return dd_new(p, fma(a, b, -p))

cdef inline DD dd_add(DD a, DD b) noexcept nogil:
    cdef DD s = two_sum(a.hi, b.hi)
    cdef DD t = two_sum(a.lo, b.lo)
    cdef double s2 = s.lo + t.hi
    cdef DD q = quick_two_sum(s.hi, s2)
    return quick_two_sum(q.hi, q.lo + t.lo)

cdef inline DD dd_add_d(DD a, double b) noexcept nogil:
    cdef DD s = two_sum(a.hi, b)
    return quick_two_sum(s.hi, s.lo + a.lo)

cdef inline DD dd_neg(DD a) noexcept nogil:
    return dd_new(-a.hi, -a.lo)

cdef inline DD dd_sub(DD a, DD b) noexcept nogil:
    return dd_add(a, dd_neg(b))

cdef inline DD dd_mul(DD a, DD b) noexcept nogil:
    # grouping matches the pure-Python twin so results stay bit-identical
    cdef DD p = two_prod(a.hi, b.hi)
    return quick_two_sum(p.hi, p.lo + (a.hi * b.lo + a.lo * b.hi))

cdef inline DD dd_mul_d(DD a, double b) noexcept nogil:
    cdef DD p = two_prod(a.hi, b)
    return quick_two_sum(p.hi, p.lo + a.lo * b)

cdef inline DD dd_sqr(DD a) noexcept nogil:
    cdef DD p = two_prod(a.hi, a.hi)
    return quick_two_sum(p.hi, p.lo + 2.0 * a.hi * a.lo)

cdef inline DD dd_mul_pwr2(DD a, double b) noexcept nogil:
    return dd_new(a.hi * b, a.lo * b)

cdef inline DD dd_div(DD a, DD b) noexcept nogil:
    cdef double q1 = a.hi / b.hi
    cdef DD r = dd_add(a, dd_neg(dd_mul_d(b, q1)))
    cdef double q2 = r.hi / b.hi
    r = dd_add(r, dd_neg(dd_mul_d(b, q2)))
    cdef double q3 = r.hi / b.hi
    cdef DD s = quick_two_sum(q1, q2)
    return dd_add_d(s, q3)

cdef double LN2_HI = 0.6931471805599453
cdef double LN2_LO = 2.3190468138462996e-17

# 1/k! for k = 3..17
cdef double[15] INV_FACT_HI
cdef double[15] INV_FACT_LO
INV_FACT_HI[0] = 0.16666666666666666; INV_FACT_LO[0] = 9.25185853854297e-18
INV_FACT_HI[1] = 0.041666666666666664; INV_FACT_LO[1] = 2.3129646346357427e-18
INV_FACT_HI[2] = 0.008333333333333333; INV_FACT_LO[2] = 1.1564823173178714e-19
INV_FACT_HI[3] = 0.001388888888888889; INV_FACT_LO[3] = -5.300543954373577e-20
INV_FACT_HI[4] = 0.0001984126984126984; INV_FACT_LO[4] = 1.7209558293420705e-22
INV_FACT_HI[5] = 2.48015873015873e-05; INV_FACT_LO[5] = 2.1511947866775882e-23
INV_FACT_HI[6] = 2.7557319223985893e-06; INV_FACT_LO[6] = -1.858393274046472e-22
INV_FACT_HI[7] = 2.755731922398589e-07; INV_FACT_LO[7] = 2.3767714622250297e-23
INV_FACT_HI[8] = 2.505210838544172e-08; INV_FACT_LO[8] = -1.448814070935912e-24
INV_FACT_HI[9] = 2.08767569878681e-09; INV_FACT_LO[9] = -1.20734505911326e-25
INV_FACT_HI[10] = 1.6059043836821613e-10; INV_FACT_LO[10] = 1.2585294588752098e-26
INV_FACT_HI[11] = 1.1470745597729725e-11; INV_FACT_LO[11] = 2.0655512752830745e-28
INV_FACT_HI[12] = 7.647163731819816e-13; INV_FACT_LO[12] = 7.03872877733453e-30
INV_FACT_HI[13] = 4.779477332387385e-14; INV_FACT_LO[13] = 4.399205485834081e-31
INV_FACT_HI[14] = 2.8114572543455206e-15; INV_FACT_LO[14] = 1.6508842730861433e-31

cdef DD dd_exp(DD a) noexcept nogil:
    cdef double m
    cdef DD r, p, s, t
    cdef int i
    if a.hi <= -709.0:
        return dd_new(0.0, 0.0)
    if a.hi >= 709.0:
        return dd_new(INF, 0.0)
    if a.hi == 0.0 and a.lo == 0.0:
        return dd_new(1.0, 0.0)
    m = floor(a.hi / LN2_HI + 0.5)
    r = dd_mul_pwr2(dd_sub(a, dd_mul_d(dd_new(LN2_HI, LN2_LO), m)),
                    1.0 / 512.0)
    p = dd_sqr(r)
    s = dd_add(r, dd_mul_pwr2(p, 0.5))
    p = dd_mul(p, r)
    t = dd_mul(p, dd_new(INV_FACT_HI[0], INV_FACT_LO[0]))
    i = 1
    while True:
        s = dd_add(s, t)
        p = dd_mul(p, r)
        if i >= 15 or fabs(t.hi) <= 1.2e-32 / 512.0:
            break
        t = dd_mul(p, dd_new(INV_FACT_HI[i], INV_FACT_LO[i]))
        i += 1
    for i in range(9):
        s = dd_add(dd_mul_pwr2(s, 2.0), dd_sqr(s))
    s = dd_add_d(s, 1.0)
    return dd_new(ldexp(s.hi, <int> m), ldexp(s.lo, <int> m))

cdef DD dd_log(DD a) noexcept nogil:
    # caller guarantees a > 0
    cdef double x
    cdef DD e, t
    if a.hi == 1.0 and a.lo == 0.0:
        return dd_new(0.0, 0.0)
    x = c_log(a.hi)
    e = dd_exp(dd_new(-x, 0.0))
    t = dd_mul(a, e)
    t = dd_add_d(t, -1.0)
    return dd_add_d(t, x)


def em_hurwitz(double s, double a, int n_partial, int jmin, int jmax,
               double eps_stop, tuple c2j):
    """One Euler-Maclaurin evaluation of (zeta(s,a), d/ds zeta(s,a)).

    Same contract as the pure-Python twin: returns
    (v_hi, v_lo, d_hi, d_lo, trunc_v, trunc_d, acc_v, acc_d).
    """
    cdef DD val = dd_new(0.0, 0.0)
    cdef DD dval = dd_new(0.0, 0.0)
    cdef double acc_v = 0.0, acc_d = 0.0
    cdef double trunc_v = 0.0, trunc_d = 0.0
    cdef DD u, lu, w, big_n, ln_n, t1, u1, u2, b, half_b, t
    cdef DD p, d, inv_n2, c, cw, term_v, term_d, f12
    cdef double prev, cur, f1, f2
    cdef int m, j, jstop
    cdef int nc = len(c2j)

    # flatten the Bernoulli/(2j)! table into C arrays
    cdef double[128] chi
    cdef double[128] clo
    if nc > 128:
        nc = 128
    for j in range(nc):
        chi[j] = c2j[j][0]
        clo[j] = c2j[j][1]

    for m in range(n_partial):
        u = two_sum(<double> m, a)
        lu = dd_log(u)
        w = dd_exp(dd_mul_d(lu, -s))
        val = dd_add(val, w)
        t = dd_mul(lu, w)
        dval = dd_sub(dval, t)
        acc_v += fabs(w.hi)
        acc_d += fabs(t.hi)

    big_n = two_sum(<double> n_partial, a)
    ln_n = dd_log(big_n)

    # scalar combinations of s are kept as exact dd pairs: rounding
    # (1 - s) or (s - 1) in double contaminates the huge boundary terms
    # whenever s is not representable together with the integer
    cdef DD one_minus_s = two_sum(1.0, -s)
    cdef DD s_minus_one = two_sum(s, -1.0)

    t1 = dd_div(dd_exp(dd_mul(ln_n, one_minus_s)), s_minus_one)
    val = dd_add(val, t1)
    u1 = dd_mul(t1, ln_n)
    u2 = dd_div(t1, s_minus_one)
    dval = dd_sub(dval, dd_add(u1, u2))
    acc_v += fabs(t1.hi)
    acc_d += fabs(u1.hi) + fabs(u2.hi)

    b = dd_exp(dd_mul_d(ln_n, -s))
    half_b = dd_mul_pwr2(b, 0.5)
    val = dd_add(val, half_b)
    t = dd_mul_pwr2(dd_mul(b, ln_n), 0.5)
    dval = dd_sub(dval, t)
    acc_v += fabs(half_b.hi)
    acc_d += fabs(t.hi)

    p = dd_new(s, 0.0)
    d = dd_new(1.0, 0.0)
    w = dd_exp(dd_mul(ln_n, two_sum(-1.0, -s)))
    inv_n2 = dd_div(dd_new(1.0, 0.0), dd_sqr(big_n))

    prev = INF
    cdef int j_added = 0
    cdef bint terminated
    jstop = jmax if jmax < nc else nc
    for j in range(1, jstop + 1):
        c = dd_new(chi[j - 1], clo[j - 1])
        cw = dd_mul(c, w)
        term_v = dd_mul(cw, p)
        term_d = dd_mul(cw, dd_sub(d, dd_mul(p, ln_n)))
        cur = max(fabs(term_v.hi), fabs(term_d.hi))
        if j >= 3 and cur > prev:
            trunc_v = fabs(term_v.hi)
            trunc_d = fabs(term_d.hi)
            break
        val = dd_add(val, term_v)
        dval = dd_add(dval, term_d)
        acc_v += fabs(term_v.hi)
        acc_d += fabs(term_d.hi)
        trunc_v = fabs(term_v.hi)
        trunc_d = fabs(term_d.hi)
        j_added = j
        if (j > jmin
                and fabs(term_v.hi) <= eps_stop * fabs(val.hi)
                and fabs(term_d.hi) <= eps_stop * fabs(dval.hi)):
            break
        prev = cur
        f1 = s + (2.0 * j - 1.0)
        f2 = s + 2.0 * j
        f12 = dd_mul_d(dd_mul_d(p, f1), f2)
        d = dd_add(dd_mul_d(dd_mul_d(d, f1), f2), dd_mul_d(p, f1 + f2))
        p = f12
        w = dd_mul(w, inv_n2)
    terminated = p.hi == 0.0 and p.lo == 0.0
    if s + 2.0 * j_added + 1.0 <= 0.0 and not terminated:
        # the first-omitted-term remainder bound only holds once
        # s + 2j + 1 > 0; stopping earlier cannot be certified
        trunc_v = INF
        trunc_d = INF
    elif terminated:
        trunc_v = 0.0

    return (val.hi, val.lo, dval.hi, dval.lo, trunc_v, trunc_d, acc_v, acc_d)
