"""Bernoulli, Genocchi, tangent and median Genocchi numbers.

Each sequence is produced by a primary route and pinned to an independent
one: Genocchi values must come out integral and positive, tangent values
integral, and median Genocchi values are read off a matrix inverse and then
re-checked against the Genocchi numbers.  All functions are pure; the
internal caches only memoize deterministic values.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .trimat import TriMatrix

_bernoulli: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """n-th Bernoulli number, with B(1) = -1/2."""
    if n < 0:
        raise ValueError("index must be >= 0")
    while len(_bernoulli) <= n:
        m = len(_bernoulli)
        acc = sum(comb(m + 1, k) * _bernoulli[k] for k in range(m))
        _bernoulli.append(-acc / (m + 1))
    return _bernoulli[n]


def bernoulli_b(n: int) -> Fraction:
    """Bernoulli variant with the sign of the index-1 term flipped to +1/2."""
    if n == 1:
        return Fraction(1, 2)
    return bernoulli(n)


def genocchi(n: int) -> int:
    """Positive Genocchi number with even index 2n, for n >= 1.

    Derived from the Bernoulli numbers; integrality and positivity are
    consequences, so a violation signals an arithmetic bug and raises.
    """
    if n < 1:
        raise ValueError("index must be >= 1")
    value = (-1) ** n * 2 * (1 - Fraction(4) ** n) * bernoulli(2 * n)
    if value.denominator != 1 or value <= 0:
        raise ArithmeticError(f"genocchi({n}) came out as {value}, expected a positive integer")
    return int(value)


def genocchi_signed(n: int) -> Fraction:
    """Signed Genocchi number with index n >= 1.

    The first value is 1, odd indices above 1 vanish, and even indices 2k
    carry the sign (-1)**k.
    """
    if n < 1:
        raise ValueError("index must be >= 1")
    if n == 1:
        return Fraction(1)
    if n % 2 == 1:
        return Fraction(0)
    k = n // 2
    return Fraction((-1) ** k * genocchi(k))


def tangent(k: int) -> int:
    """Tangent number with odd index 2k+1, for k >= 0."""
    if k < 0:
        raise ValueError("index must be >= 0")
    value = Fraction(2 ** (2 * k + 1) * genocchi(k + 1), 2 * k + 2)
    if value.denominator != 1 or value <= 0:
        raise ArithmeticError(f"tangent({k}) came out as {value}, expected a positive integer")
    return int(value)


_medians: list[int] = []


def _extend_medians(count: int) -> None:
    inv = TriMatrix.from_rule(lambda i, j: comb(2 * i - j, j), count).inverse()
    values = []
    for i in range(count):
        v = (-1) ** i * inv[i, 0]
        if v.denominator != 1 or v <= 0:
            raise ArithmeticError(f"median genocchi {i} came out as {v}")
        values.append(int(v))
    _medians[:] = values


def median_genocchi(n: int) -> int:
    """Median Genocchi number with odd index 2n+1, for n >= 0.

    Computed as (-1)**n times the first-column entry of the inverse of the
    binomial matrix whose rows hold the odd-index Fibonacci polynomial
    coefficients.  Each value is cross-checked against the Genocchi numbers
    through the alternating binomial sum they generate; a mismatch raises.
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    if n >= len(_medians):
        _extend_medians(max(n + 1, 8))
    check = sum(
        (-1) ** (n - j) * comb(2 * n + 1 - j, j) * _medians[j] for j in range(n + 1)
    )
    if check != genocchi(n + 1):
        raise ArithmeticError(
            f"median genocchi cross-check failed at n={n}: {check} != {genocchi(n + 1)}"
        )
    return _medians[n]
