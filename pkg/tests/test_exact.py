"""Exact combinatorial tables: Bernoulli, Stirling, Pochhammer."""

import math
from fractions import Fraction

import pytest

from spindet.errors import ResourceLimitError
from spindet.exact import (bernoulli, bernoulli_poly, harmonic, pochhammer,
                           pochhammer_exact, stirling_first)


def test_bernoulli_base_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)  # t/(e^t - 1) convention
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(3) == 0


def test_bernoulli_odd_vanish():
    for k in range(3, 101, 2):
        assert bernoulli(k) == 0


def test_bernoulli_recurrence_exact():
    # sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1
    for k in range(1, 31):
        total = sum(math.comb(k + 1, j) * bernoulli(j) for j in range(k + 1))
        assert total == 0


def test_bernoulli_cap():
    bernoulli(256)
    with pytest.raises(ResourceLimitError):
        bernoulli(257)
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_stirling_examples():
    assert stirling_first(1, 1) == 1
    assert stirling_first(3, 2) == -3
    assert stirling_first(4, 1) == -6
    assert stirling_first(5, 0) == 0
    assert stirling_first(5, 6) == 0


def _falling_factorial_coeffs(n):
    # prod_{i=0}^{n-1} (x - i) by convolution; independent of the recurrence
    coeffs = [Fraction(1)]
    for i in range(n):
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for p, c in enumerate(coeffs):
            nxt[p] -= c * i
            nxt[p + 1] += c
        coeffs = nxt
    return coeffs


@pytest.mark.parametrize("n", range(1, 13))
def test_stirling_generating_identity(n):
    coeffs = _falling_factorial_coeffs(n)
    for j in range(1, n + 1):
        assert stirling_first(n, j) == coeffs[j]


def test_stirling_sign_pattern():
    # sign(s(n, j)) = (-1)^{n-j} when nonzero
    for n in range(1, 10):
        for j in range(1, n + 1):
            s = stirling_first(n, j)
            assert s != 0
            assert (s > 0) == ((n - j) % 2 == 0)


def test_pochhammer():
    assert pochhammer(3.7, 0) == 1.0
    assert pochhammer(0.5, 1) == 0.5
    assert pochhammer(1.5, 2) == pytest.approx(15 / 4, rel=1e-15)
    assert pochhammer_exact(Fraction(3, 2), 2) == Fraction(15, 4)
    assert pochhammer_exact(Fraction(-2), 4) == 0  # zeros allowed


def test_bernoulli_polynomials():
    # B_2(x) = x^2 - x + 1/6
    assert bernoulli_poly(2, Fraction(1, 3)) == \
        Fraction(1, 9) - Fraction(1, 3) + Fraction(1, 6)
    # B_n(1) = (-1)^n B_n
    for n in range(9):
        assert bernoulli_poly(n, 1) == (-1) ** n * bernoulli(n)


def test_harmonic():
    assert harmonic(0) == 0
    assert harmonic(4) == Fraction(25, 12)
