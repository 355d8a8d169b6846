"""Double-double arithmetic: ~106-bit floats as unevaluated (hi, lo) pairs.

Algorithms follow the classic error-free transformations (two_sum, Dekker
two_prod) and the QD-library style exp/log.  All routines assume strict
IEEE-754 double semantics; they must never be run under value-changing
fast-math optimization.

A value is a plain tuple (hi, lo) with |lo| <= ulp(hi)/2.  This module is
the arithmetic backend used by the pure-Python kernels and by assembly
code in the drivers; the compiled kernel reimplements the same algorithms
in C.
"""

from __future__ import annotations

import math
from fractions import Fraction

DD = tuple  # alias for readability in signatures

ZERO = (0.0, 0.0)
ONE = (1.0, 0.0)

# Ulp-level relative rounding bound of a single dd operation; 2^-104 padded.
DD_EPS = 4.93e-32

_LN2 = (0.6931471805599453, 2.3190468138462996e-17)
PI = (3.141592653589793, 1.2246467991473532e-16)
TWO_PI = (6.283185307179586, 2.4492935982947064e-16)
LOG_2PI = (1.8378770664093456, -7.756588316134483e-17)
EULER_GAMMA = (0.5772156649015329, -4.942915152430645e-18)
LN2 = _LN2

# 1/k! for k = 3..17, used by the exp Taylor tail.
_INV_FACT = (
    (0.16666666666666666, 9.25185853854297e-18),
    (0.041666666666666664, 2.3129646346357427e-18),
    (0.008333333333333333, 1.1564823173178714e-19),
    (0.001388888888888889, -5.300543954373577e-20),
    (0.0001984126984126984, 1.7209558293420705e-22),
    (2.48015873015873e-05, 2.1511947866775882e-23),
    (2.7557319223985893e-06, -1.858393274046472e-22),
    (2.755731922398589e-07, 2.3767714622250297e-23),
    (2.505210838544172e-08, -1.448814070935912e-24),
    (2.08767569878681e-09, -1.20734505911326e-25),
    (1.6059043836821613e-10, 1.2585294588752098e-26),
    (1.1470745597729725e-11, 2.0655512752830745e-28),
    (7.647163731819816e-13, 7.03872877733453e-30),
    (4.779477332387385e-14, 4.399205485834081e-31),
    (2.8114572543455206e-15, 1.6508842730861433e-31),
)

_SPLITTER = 134217729.0  # 2^27 + 1, Dekker splitting constant


def two_sum(a: float, b: float) -> DD:
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a: float, b: float) -> DD:
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _split(a: float) -> DD:
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> DD:
    p = a * b
    ahi, alo = _split(a)
    bhi, blo = _split(b)
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


def add(a: DD, b: DD) -> DD:
    s1, s2 = two_sum(a[0], b[0])
    t1, t2 = two_sum(a[1], b[1])
    s2 += t1
    s1, s2 = quick_two_sum(s1, s2)
    s2 += t2
    return quick_two_sum(s1, s2)


def add_d(a: DD, b: float) -> DD:
    s1, s2 = two_sum(a[0], b)
    s2 += a[1]
    return quick_two_sum(s1, s2)


def neg(a: DD) -> DD:
    return -a[0], -a[1]


def sub(a: DD, b: DD) -> DD:
    return add(a, (-b[0], -b[1]))


def mul(a: DD, b: DD) -> DD:
    p1, p2 = two_prod(a[0], b[0])
    p2 += a[0] * b[1] + a[1] * b[0]
    return quick_two_sum(p1, p2)


def mul_d(a: DD, b: float) -> DD:
    p1, p2 = two_prod(a[0], b)
    p2 += a[1] * b
    return quick_two_sum(p1, p2)


def sqr(a: DD) -> DD:
    p1, p2 = two_prod(a[0], a[0])
    p2 += 2.0 * a[0] * a[1]
    return quick_two_sum(p1, p2)


def mul_pwr2(a: DD, b: float) -> DD:
    # b must be a power of two; exact.
    return a[0] * b, a[1] * b


def div(a: DD, b: DD) -> DD:
    q1 = a[0] / b[0]
    r = add(a, neg(mul_d(b, q1)))
    q2 = r[0] / b[0]
    r = add(r, neg(mul_d(b, q2)))
    q3 = r[0] / b[0]
    s1, s2 = quick_two_sum(q1, q2)
    return add_d((s1, s2), q3)


def div_d(a: DD, b: float) -> DD:
    return div(a, (b, 0.0))


def recip(a: DD) -> DD:
    return div(ONE, a)


def from_int(n: int) -> DD:
    hi = float(n)
    return hi, float(n - int(hi))


def from_fraction(f: Fraction) -> DD:
    hi = float(f)
    lo = float(f - Fraction(hi))
    return hi, lo


def to_float(a: DD) -> float:
    return a[0] + a[1]


def exp(a: DD) -> DD:
    """e^a via 512-fold argument reduction + Taylor + repeated squaring."""
    if a[0] <= -709.0:
        return ZERO
    if a[0] >= 709.0:
        return math.inf, 0.0
    if a[0] == 0.0 and a[1] == 0.0:
        return ONE

    m = math.floor(a[0] / _LN2[0] + 0.5)
    r = mul_pwr2(add(a, neg(mul_d(_LN2, m))), 1.0 / 512.0)

    p = sqr(r)
    s = add(r, mul_pwr2(p, 0.5))
    p = mul(p, r)
    t = mul(p, _INV_FACT[0])
    thresh = 1.2e-32 / 512.0
    i = 1
    while True:
        s = add(s, t)
        p = mul(p, r)
        if i >= len(_INV_FACT) or abs(t[0]) <= thresh:
            break
        t = mul(p, _INV_FACT[i])
        i += 1

    for _ in range(9):
        s = add(mul_pwr2(s, 2.0), sqr(s))
    s = add_d(s, 1.0)
    return math.ldexp(s[0], m), math.ldexp(s[1], m)


def log(a: DD) -> DD:
    """Natural log; one Newton refinement of the double-precision seed."""
    if a[0] <= 0.0:
        raise ValueError("dd log of non-positive value")
    if a[0] == 1.0 and a[1] == 0.0:
        return ZERO
    x = math.log(a[0])
    # Newton step for f(y) = exp(y) - a:  y <- y + a*exp(-y) - 1
    e = exp((-x, 0.0))
    t = mul(a, e)
    t = add_d(t, -1.0)
    return add_d(t, x)


def powi(a: DD, n: int) -> DD:
    """Integer power by binary exponentiation."""
    if n == 0:
        return ONE
    if n < 0:
        return recip(powi(a, -n))
    acc = ONE
    base = a
    while n:
        if n & 1:
            acc = mul(acc, base)
        base = sqr(base)
        n >>= 1
    return acc
