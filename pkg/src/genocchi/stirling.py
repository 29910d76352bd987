"""Generalized Stirling triangles driven by rational weight sequences.

A weight sequence w maps every index n >= 0 to a rational number.  The
second-kind triangle follows S(n, k) = S(n-1, k-1) + w(k) * S(n-1, k) and
the first-kind triangle follows s(n, k) = s(n-1, k-1) - w(n-1) * s(n-1, k);
as matrices the two are mutual inverses.  Weights may be negative or
fractional: one of the named presets starts at -1/4, so no positivity or
monotonicity is enforced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .polyalg import Poly
from .trimat import TriMatrix


@dataclass(frozen=True)
class WeightSpec:
    """A named total weight sequence n -> w(n)."""

    name: str
    w: Callable[[int], Fraction]

    def __call__(self, n: int) -> Fraction:
        return Fraction(self.w(n))


PRESETS: dict[str, WeightSpec] = {
    "stirling": WeightSpec("stirling", lambda n: Fraction(n)),
    "stirling-shift": WeightSpec("stirling-shift", lambda n: Fraction(n + 1)),
    "central-factorial": WeightSpec("central-factorial", lambda n: Fraction(n * n)),
    "legendre-stirling": WeightSpec("legendre-stirling", lambda n: Fraction(n * (n + 1))),
    "u-half-odd": WeightSpec("u-half-odd", lambda n: Fraction((2 * n + 1) ** 2, 4)),
    "v-product-quarter": WeightSpec(
        "v-product-quarter", lambda n: Fraction((2 * n - 1) * (2 * n + 1), 4)
    ),
}


def preset(name: str) -> WeightSpec:
    """Look up a named weight preset."""
    try:
        return PRESETS[name]
    except KeyError:
        raise ValueError(
            f"unknown weight preset {name!r}; valid presets: {', '.join(PRESETS)}"
        ) from None


def shift_weight(spec: WeightSpec) -> WeightSpec:
    """Weight sequence advanced by one position."""
    inner = spec.w
    return WeightSpec(f"{spec.name}-shifted", lambda n: Fraction(inner(n + 1)))


def stirling2(spec: WeightSpec, order: int) -> TriMatrix:
    """Second-kind triangle for the given weights, as an order-N matrix."""
    if order < 1:
        raise ValueError("order must be >= 1")
    rows: list[list[Fraction]] = [[Fraction(1)]]
    for n in range(1, order):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            above = prev[k] if k < len(prev) else Fraction(0)
            left = prev[k - 1] if k >= 1 else Fraction(0)
            row.append(left + spec(k) * above)
        rows.append(row)
    return TriMatrix(rows)


def stirling1(spec: WeightSpec, order: int) -> TriMatrix:
    """First-kind triangle for the given weights; inverse of stirling2."""
    if order < 1:
        raise ValueError("order must be >= 1")
    rows: list[list[Fraction]] = [[Fraction(1)]]
    for n in range(1, order):
        prev = rows[-1]
        wn = spec(n - 1)
        row = []
        for k in range(n + 1):
            above = prev[k] if k < len(prev) else Fraction(0)
            left = prev[k - 1] if k >= 1 else Fraction(0)
            row.append(left - wn * above)
        rows.append(row)
    return TriMatrix(rows)


def stirling2_shifted(spec: WeightSpec, order: int) -> TriMatrix:
    """Index-shifted second-kind triangle: entry (i, j) is S(i+1, j+1)."""
    return stirling2(spec, order + 1).drop_leading()


def stirling1_shifted(spec: WeightSpec, order: int) -> TriMatrix:
    """Index-shifted first-kind triangle: entry (i, j) is s(i+1, j+1)."""
    return stirling1(spec, order + 1).drop_leading()


def row_poly_check(spec: WeightSpec, n: int) -> bool:
    """Check row n of both triangles against their polynomial expansions.

    Row n of the first-kind triangle must match the expanded product of the
    linear factors (x - w(0)) ... (x - w(n-1)), and the second-kind row must
    reassemble the monomial x**n from those factor prefixes.
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    prefix = [Poly.one()]
    for j in range(n):
        prefix.append(prefix[-1] * Poly([-spec(j), 1]))
    first = stirling1(spec, n + 1)
    if Poly(first.rows[n]) != prefix[n]:
        return False
    second = stirling2(spec, n + 1)
    recombined = Poly()
    for k in range(n + 1):
        recombined = recombined + second.rows[n][k] * prefix[k]
    return recombined == Poly.monomial(n)


def ogf_check(spec: WeightSpec, k: int, order: int) -> bool:
    """Check column k of the second-kind triangle as a power series.

    The column's ordinary generating function times the product of the
    factors (1 - w(j) x) for j <= k must reduce to the single monomial x**k,
    working modulo x**order throughout.
    """
    if k < 0 or order < 1:
        raise ValueError("column must be >= 0 and order >= 1")
    second = stirling2(spec, order)
    column = Poly(second[n, k] for n in range(order))
    denom = Poly.one()
    for j in range(k + 1):
        denom = (denom * Poly([1, -spec(j)])).truncate(order)
    target = Poly.monomial(k) if k < order else Poly.zero()
    return (column * denom).truncate(order) == target
