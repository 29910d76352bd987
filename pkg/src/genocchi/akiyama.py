"""Row-difference-and-scale matrix engine and the summation-identity suite.

The engine fills a rectangular array downward from a seeded top row using
m(i, j) = w(j) * (m(i-1, j) - m(i-1, j+1)).  Each step consumes one column,
so the top row is allocated with rows + cols entries; the requested window
is then exact, never silently truncated.  The first column realizes the
alternating diagonal-conjugation sums, which is what the identity suite
checks against factorials, Genocchi, tangent and Bernoulli values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, Tuple

from . import numbers
from .reports import IdentityReport, UnknownIdentityError
from .stirling import WeightSpec, preset, shift_weight, stirling1, stirling2

_SQUARES_FROM_1 = shift_weight(preset("central-factorial"))  # (n+1)**2
_SQUARES_FROM_2 = shift_weight(_SQUARES_FROM_1)  # (n+2)**2


@dataclass(frozen=True)
class ATSpec:
    """Weights, seed and extents for one engine run."""

    weights: WeightSpec
    seed: Callable[[int], Fraction]
    rows: int
    cols: int


def at_matrix(spec: ATSpec) -> Tuple[Tuple[Fraction, ...], ...]:
    """Fill the array and return the requested rows x cols window."""
    if spec.rows < 1 or spec.cols < 1:
        raise ValueError("extents must be >= 1")
    width = spec.cols + spec.rows
    row = [Fraction(spec.seed(j)) for j in range(width)]
    out = [tuple(row[: spec.cols])]
    for _ in range(1, spec.rows):
        width -= 1
        nxt = []
        for j in range(width):
            wj = spec.weights(j)
            if wj == 0:
                raise ValueError(f"zero weight w({j}) encountered")
            nxt.append(wj * (row[j] - row[j + 1]))
        row = nxt
        out.append(tuple(row[: spec.cols]))
    return tuple(out)


def at_first_column(weights: WeightSpec, seed: Callable[[int], Fraction], count: int):
    """First column of an engine run with `count` rows."""
    matrix = at_matrix(ATSpec(weights, seed, rows=count, cols=1))
    return tuple(r[0] for r in matrix)


def conjugation_first_column(
    weights: WeightSpec, diag: Callable[[int], Fraction], count: int
) -> Tuple[Fraction, ...]:
    """First column of the triangle-diagonal-inverse conjugation product.

    Computed directly from the alternating sum over the second-kind
    triangle; the engine's first column must reproduce it.
    """
    tri = stirling2(weights, count)
    out = []
    for n in range(count):
        prod = Fraction(1)
        acc = Fraction(0)
        for j in range(n + 1):
            acc += (-1) ** j * tri[n, j] * Fraction(diag(j)) * prod
            prod *= weights(j)
        out.append(acc)
    return tuple(out)


def odd_double_factorial(k: int) -> int:
    """Product of the first k odd numbers; empty product is 1."""
    result = 1
    for i in range(1, k + 1):
        result *= 2 * i - 1
    return result


def _pair_66(n: int) -> Tuple[Fraction, Fraction]:
    tri = stirling2(preset("stirling-shift"), n + 1)
    lhs = sum(
        (tri[n, j] * (-1) ** j * Fraction(factorial(j), j + 1) for j in range(n + 1)),
        Fraction(0),
    )
    return (lhs, numbers.bernoulli_b(n))


def _pair_67(n: int) -> Tuple[Fraction, Fraction]:
    tri = stirling1(preset("stirling-shift"), n + 1)
    lhs = sum((tri[n, j] * numbers.bernoulli_b(j) for j in range(n + 1)), Fraction(0))
    return (lhs, Fraction((-1) ** n * factorial(n), n + 1))


def _pair_68(n: int) -> Tuple[Fraction, Fraction]:
    tri = stirling2(preset("central-factorial"), n + 1)
    lhs = sum(
        ((-1) ** (k - 1) * tri[n, k] * k * factorial(k - 1) ** 2 for k in range(1, n + 1)),
        Fraction(0),
    )
    return (lhs, Fraction((-1) ** (n - 1) * numbers.genocchi(n)))


def _pair_69(n: int) -> Tuple[Fraction, Fraction]:
    tri = stirling1(preset("central-factorial"), n + 1)
    lhs = sum(
        ((-1) ** (n - k) * tri[n, k] * numbers.genocchi(k) for k in range(1, n + 1)),
        Fraction(0),
    )
    return (lhs, Fraction(factorial(n) * factorial(n - 1)))


def _pair_610(n: int) -> Tuple[Fraction, Fraction]:
    tri = stirling2(preset("central-factorial"), n + 1)
    lhs = sum(
        ((-1) ** (k - 1) * tri[n, k] * factorial(k) ** 2 for k in range(1, n + 1)),
        Fraction(0),
    )
    return (lhs, Fraction((-1) ** (n - 1) * numbers.genocchi(n + 1)))


def _pair_611(n: int) -> Tuple[Fraction, Fraction]:
    tri = stirling1(preset("central-factorial"), n + 1)
    lhs = sum(
        ((-1) ** (n - k) * tri[n, k] * numbers.genocchi(k + 1) for k in range(n + 1)),
        Fraction(0),
    )
    return (lhs, Fraction(factorial(n) ** 2))


def _pair_612(n: int) -> Tuple[Fraction, Fraction]:
    tri = stirling2(preset("legendre-stirling"), n + 2)
    lhs = sum(
        (
            (-1) ** (n - k) * tri[n + 1, k + 1] * factorial(k + 1) ** 2
            for k in range(n + 1)
        ),
        Fraction(0),
    )
    return (lhs, Fraction(numbers.median_genocchi(n + 1)))


def _pair_613(n: int) -> Tuple[Fraction, Fraction]:
    tri = stirling2(_SQUARES_FROM_2, n + 1)
    lhs = sum(
        (
            (-1) ** (n - k) * tri[n, k] * factorial(k + 1) * factorial(k + 2)
            for k in range(n + 1)
        ),
        Fraction(0),
    )
    return (lhs, Fraction(numbers.genocchi(n + 1) + numbers.genocchi(n + 2)))


def _pair_614(n: int) -> Tuple[Fraction, Fraction]:
    tri = stirling1(_SQUARES_FROM_2, n + 1)
    lhs = sum(
        (
            (-1) ** (n - k)
            * tri[n, k]
            * (numbers.genocchi(k + 1) + numbers.genocchi(k + 2))
            for k in range(n + 1)
        ),
        Fraction(0),
    )
    return (lhs, Fraction(factorial(n + 1) * factorial(n + 2)))


def _pair_615(n: int) -> Tuple[Fraction, Fraction]:
    tri = stirling2(preset("central-factorial"), n + 2)
    lhs = sum(
        (
            (-1) ** j * Fraction(factorial(j) ** 2, j + 1) * tri[n + 1, j + 1]
            for j in range(n + 1)
        ),
        Fraction(0),
    )
    return (lhs, (2 * n + 1) * numbers.bernoulli(2 * n))


def _pair_616(n: int) -> Tuple[Fraction, Fraction]:
    tri = stirling2(preset("u-half-odd"), n + 1)
    lhs = sum(
        (
            (-1) ** (n - k)
            * 4 ** (n - k)
            * tri[n, k]
            * (2 * k + 1)
            * odd_double_factorial(k) ** 2
            for k in range(n + 1)
        ),
        Fraction(0),
    )
    return (lhs, Fraction(numbers.tangent(n)))


def _pair_617(n: int) -> Tuple[Fraction, Fraction]:
    tri = stirling2(preset("u-half-odd"), n + 1)
    lhs = sum(
        (
            (-1) ** k
            * tri[n, k]
            * Fraction(odd_double_factorial(k) ** 2, (2 * k + 1) * 4**k)
            for k in range(n + 1)
        ),
        Fraction(0),
    )
    return (lhs, numbers.bernoulli(2 * n))


# Each entry: (pair function, smallest meaningful n).
_SUM_IDENTITIES: Dict[str, Tuple[Callable[[int], Tuple[Fraction, Fraction]], int]] = {
    "6.6": (_pair_66, 0),
    "6.7": (_pair_67, 0),
    "6.8": (_pair_68, 1),
    "6.9": (_pair_69, 1),
    "6.10": (_pair_610, 1),
    "6.11": (_pair_611, 0),
    "6.12": (_pair_612, 0),
    "6.13": (_pair_613, 0),
    "6.14": (_pair_614, 0),
    "6.15": (_pair_615, 0),
    "6.16": (_pair_616, 0),
    "6.17": (_pair_617, 0),
}

SUM_IDENTITY_IDS: Tuple[str, ...] = tuple(_SUM_IDENTITIES)


def verify_sum_identity(ident: str, depth: int) -> IdentityReport:
    """Evaluate both sides of a catalog sum exactly for all n up to depth."""
    if ident not in _SUM_IDENTITIES:
        raise UnknownIdentityError(ident, SUM_IDENTITY_IDS)
    pair, start = _SUM_IDENTITIES[ident]
    for n in range(start, depth + 1):
        lhs, rhs = pair(n)
        if lhs != rhs:
            return IdentityReport(ident, depth, False, (f"n={n}", str(lhs), str(rhs)))
    return IdentityReport(ident, depth, True)
