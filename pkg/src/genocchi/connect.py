"""Connection matrices between polynomial bases and their identity catalogs.

The central object is the triangular matrix that rewrites the odd-index
Fibonacci basis as the even-index one; its entries are scaled Genocchi
numbers, its eigenvalues are 1, 2, 3, ... with central-factorial columns as
eigenvectors, and its inverse carries scaled Bernoulli numbers.  The Lucas
analogue does the same with tangent numbers and half-odd eigenvalues.

Two verification entry points cover everything here: verify_factorization
compares whole-matrix builds entrywise, verify_connection expands both
sides of a polynomial or scalar identity for every index up to a bound.
Catalog labels are fixed strings such as "3.9" or "5.10" and form part of
the command line contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Dict, Tuple

from . import numbers
from .polyalg import Poly, basis_matrix, fib_poly, lucas_poly
from .reports import FactorizationCheck, IdentityReport, UnknownIdentityError
from .stirling import (
    WeightSpec,
    preset,
    stirling1,
    stirling1_shifted,
    stirling2,
    stirling2_shifted,
)
from .trimat import TriMatrix

# Weights (n+2)**2, the once-shifted version of (n+1)**2.
_SQUARES_FROM_2 = WeightSpec("squares-from-2", lambda n: Fraction((n + 2) ** 2))


# ----------------------------------------------------------------------
# matrix builders


def genocchi_matrix(order: int) -> TriMatrix:
    """Matrix taking the odd Fibonacci basis to the even one."""

    def rule(n: int, k: int) -> Fraction:
        return Fraction(
            (-1) ** (n - k) * comb(2 * n + 2, 2 * k) * numbers.genocchi(n - k + 1),
            2 * k + 1,
        )

    return TriMatrix.from_rule(rule, order)


def genocchi_matrix_squared(order: int) -> TriMatrix:
    """Closed form for the square of the Genocchi matrix."""

    def rule(n: int, k: int) -> Fraction:
        return Fraction(
            (-1) ** (n - k) * comb(2 * n + 2, 2 * k) * (n + k + 2) * numbers.genocchi(n - k + 2),
            (2 * k + 1) * (n + 2 - k),
        )

    return TriMatrix.from_rule(rule, order)


def genocchi_matrix_inverse(order: int) -> TriMatrix:
    """Closed form for the inverse of the Genocchi matrix."""

    def rule(j: int, k: int) -> Fraction:
        return comb(2 * j + 1, 2 * k + 1) * numbers.bernoulli(2 * j - 2 * k) / (k + 1)

    return TriMatrix.from_rule(rule, order)


def tangent_matrix(order: int) -> TriMatrix:
    """Matrix taking the even Lucas basis to the odd one."""

    def rule(i: int, j: int) -> Fraction:
        return Fraction(
            (-1) ** (i - j) * numbers.tangent(i - j) * comb(2 * i + 1, 2 * j),
            2 ** (2 * (i - j) + 1),
        )

    return TriMatrix.from_rule(rule, order)


def tangent_matrix_inverse(order: int) -> TriMatrix:
    """Closed form for the inverse of the tangent matrix.

    Carries a leading factor 2; the variant without it is kept below as a
    regression fixture because it is a near miss that already fails at
    order 1.
    """

    def rule(i: int, j: int) -> Fraction:
        return 2 * comb(2 * i, 2 * j) * numbers.bernoulli(2 * i - 2 * j) / (2 * j + 1)

    return TriMatrix.from_rule(rule, order)


def tangent_matrix_inverse_printed(order: int) -> TriMatrix:
    """The same closed form without the factor 2; wrong on purpose."""

    def rule(i: int, j: int) -> Fraction:
        return comb(2 * i, 2 * j) * numbers.bernoulli(2 * i - 2 * j) / (2 * j + 1)

    return TriMatrix.from_rule(rule, order)


def a1_matrix(order: int) -> TriMatrix:
    """Partial row sums of the Genocchi matrix."""
    a = genocchi_matrix(order)
    return TriMatrix(
        [[sum(a.rows[n][: k + 1], Fraction(0)) for k in range(n + 1)] for n in range(order)]
    )


def a2_matrix(order: int) -> TriMatrix:
    """Difference of consecutive rows of the partial-sum matrix."""
    a1 = a1_matrix(order + 1)
    return TriMatrix(
        [[a1[n, k] - a1[n + 1, k] for k in range(n + 1)] for n in range(order)]
    )


def z_matrix(order: int) -> TriMatrix:
    """Inverse of the row-difference matrix, in closed form.

    Entry (n, k) sums the first k+1 column-wise differences of consecutive
    rows of the inverse Genocchi matrix.
    """
    w = genocchi_matrix_inverse(order + 1)
    return TriMatrix(
        [
            [
                sum((w[n, j] - w[n + 1, j] for j in range(k + 1)), Fraction(0))
                for k in range(n + 1)
            ]
            for n in range(order)
        ]
    )


def c_matrix(order: int) -> TriMatrix:
    """Signed augmented Pascal matrix: entry (i, j) is (-1)**(i-j) C(i+1, j)."""
    return TriMatrix.from_rule(lambda i, j: (-1) ** (i - j) * comb(i + 1, j), order)


def c_matrix_inverse(order: int) -> TriMatrix:
    """Closed-form inverse of the signed augmented Pascal matrix."""
    return TriMatrix.from_rule(
        lambda i, j: comb(i, j) * numbers.bernoulli_b(i - j) / (j + 1), order
    )


def pascal_matrix(order: int) -> TriMatrix:
    return TriMatrix.from_rule(lambda i, j: comb(i, j), order)


def pascal_plus_matrix(order: int) -> TriMatrix:
    return TriMatrix.from_rule(lambda i, j: comb(i + 1, j), order)


def choose_even_matrix(order: int) -> TriMatrix:
    """Entry (i, j) is C(i+1, 2i-2j)."""
    return TriMatrix.from_rule(lambda i, j: comb(i + 1, 2 * i - 2 * j), order)


def choose_odd_matrix(order: int) -> TriMatrix:
    """Entry (i, j) is C(i+1, 2i-2j+1)."""
    return TriMatrix.from_rule(lambda i, j: comb(i + 1, 2 * i - 2 * j + 1), order)


def _diag(order: int, value: Callable[[int], Fraction | int]) -> TriMatrix:
    return TriMatrix.diagonal([value(j) for j in range(order)])


def _nat_diag(order: int) -> TriMatrix:
    return _diag(order, lambda j: j + 1)


# ----------------------------------------------------------------------
# linear functionals


@dataclass(frozen=True)
class LinearFunctional:
    """Linear functional on polynomials, stored by its monomial moments."""

    name: str
    moments: Tuple[Fraction, ...]


def functional_apply(f: LinearFunctional, p: Poly) -> Fraction:
    """Dot product of the coefficients of p with the stored moments."""
    if p.degree >= len(f.moments):
        raise ValueError(
            f"functional {f.name} has {len(f.moments)} moments, "
            f"cannot evaluate degree {p.degree}"
        )
    return sum((c * m for c, m in zip(p.coeffs, f.moments)), Fraction(0))


def lambda_functional(depth: int) -> LinearFunctional:
    """Functional that is 1 on the first odd Fibonacci polynomial, else 0.

    Its monomial moments are the signed median Genocchi numbers.
    """
    return LinearFunctional(
        "lambda",
        tuple(Fraction((-1) ** n * numbers.median_genocchi(n)) for n in range(depth)),
    )


def lambda_star_functional(depth: int) -> LinearFunctional:
    """Composition of the lambda functional with multiplication by -s."""
    return LinearFunctional(
        "lambda-star",
        tuple(Fraction((-1) ** n * numbers.median_genocchi(n + 1)) for n in range(depth)),
    )


def mu_functional(depth: int) -> LinearFunctional:
    """Functional that is 1 on the first even Fibonacci polynomial, else 0.

    The moments are obtained operationally, by expanding monomials in the
    even-index basis, so the even-basis values are definitional while the
    odd-basis values are a theorem pinned down in the tests.
    """
    inv = basis_matrix("F_even", depth).inverse()
    return LinearFunctional("mu", inv.column(0))


def phi_functional(k: int, depth: int) -> LinearFunctional:
    """Functional whose odd-Fibonacci values form a central-factorial column.

    Indexing starts at k = 1; the monomial moments are a column of the
    Legendre-Stirling triangle.
    """
    if k < 1:
        raise ValueError("functional index must be >= 1")
    ls = stirling2(preset("legendre-stirling"), max(depth, k))
    return LinearFunctional(f"phi_{k}", tuple(ls[n, k - 1] for n in range(depth)))


# ----------------------------------------------------------------------
# factorization catalog

_T = lambda n: stirling2(preset("central-factorial"), n)  # noqa: E731
_LS = lambda n: stirling2(preset("legendre-stirling"), n)  # noqa: E731
_Tsh = lambda n: stirling2_shifted(preset("central-factorial"), n)  # noqa: E731
_tsh = lambda n: stirling1_shifted(preset("central-factorial"), n)  # noqa: E731
_LSsh = lambda n: stirling2_shifted(preset("legendre-stirling"), n)  # noqa: E731
_Ssh = lambda n: stirling2_shifted(preset("stirling"), n)  # noqa: E731
_ssh = lambda n: stirling1_shifted(preset("stirling"), n)  # noqa: E731
_S = lambda n: stirling2(preset("stirling"), n)  # noqa: E731
_s = lambda n: stirling1(preset("stirling"), n)  # noqa: E731
_U = lambda n: stirling2(preset("u-half-odd"), n)  # noqa: E731
_u = lambda n: stirling1(preset("u-half-odd"), n)  # noqa: E731
_Fodd = lambda n: basis_matrix("F_odd", n)  # noqa: E731
_Feven = lambda n: basis_matrix("F_even", n)  # noqa: E731
_Leven = lambda n: basis_matrix("L_even", n)  # noqa: E731
_Lodd = lambda n: basis_matrix("L_odd", n)  # noqa: E731

_FACTORIZATIONS: Dict[str, Callable[[int], Tuple[TriMatrix, ...]]] = {
    "2.15/2.16-inverse": lambda n: (
        TriMatrix.identity(n),
        c_matrix(n) @ c_matrix_inverse(n),
    ),
    "3.9": lambda n: (
        c_matrix(n),
        pascal_plus_matrix(n) @ pascal_matrix(n).inverse(),
        _Ssh(n) @ _nat_diag(n) @ _ssh(n),
    ),
    "3.10": lambda n: (pascal_plus_matrix(n), c_matrix(n) @ pascal_matrix(n)),
    "3.11": lambda n: (_Ssh(n), pascal_matrix(n) @ _S(n)),
    "3.12": lambda n: (_Ssh(n) @ _nat_diag(n), pascal_plus_matrix(n) @ _S(n)),
    "3.13": lambda n: (
        pascal_matrix(n).inverse() @ pascal_plus_matrix(n),
        _S(n) @ _nat_diag(n) @ _s(n),
    ),
    "3.16": lambda n: (_Tsh(n), _Fodd(n) @ _LS(n)),
    "3.17": lambda n: (_Tsh(n) @ _nat_diag(n), _Feven(n) @ _LS(n)),
    "3.18": lambda n: (
        _Feven(n) @ _Fodd(n).inverse(),
        _Tsh(n) @ _nat_diag(n) @ _Tsh(n).inverse(),
    ),
    "3.19": lambda n: (
        _Fodd(n).inverse() @ _Feven(n),
        _LS(n) @ _nat_diag(n) @ _LS(n).inverse(),
    ),
    "3.22": lambda n: (_LSsh(n), choose_even_matrix(n) @ _Tsh(n)),
    "3.23": lambda n: (_LSsh(n) @ _nat_diag(n), choose_odd_matrix(n) @ _Tsh(n)),
    "3.24": lambda n: (
        choose_even_matrix(n).inverse() @ choose_odd_matrix(n),
        _Tsh(n) @ _nat_diag(n) @ _Tsh(n).inverse(),
    ),
    "3.25": lambda n: (
        choose_odd_matrix(n) @ choose_even_matrix(n).inverse(),
        _LSsh(n) @ _nat_diag(n) @ _LSsh(n).inverse(),
    ),
    "3.26": lambda n: (
        _Feven(n) @ _Fodd(n).inverse(),
        choose_even_matrix(n).inverse() @ choose_odd_matrix(n),
    ),
    "3.27": lambda n: (
        choose_even_matrix(n) @ _Feven(n),
        choose_odd_matrix(n) @ _Fodd(n),
        _LSsh(n) @ _nat_diag(n) @ _LS(n).inverse(),
    ),
    "4.11": lambda n: (genocchi_matrix(n), _Feven(n) @ _Fodd(n).inverse()),
    "4.12": lambda n: (
        genocchi_matrix(n),
        _Tsh(n) @ _nat_diag(n) @ _Tsh(n).inverse(),
    ),
    "4.13": lambda n: (
        genocchi_matrix(n),
        choose_even_matrix(n).inverse() @ choose_odd_matrix(n),
    ),
    "4.14": lambda n: (genocchi_matrix(n), _Feven(n) @ _Fodd(n).inverse()),
    "4.15": lambda n: (
        genocchi_matrix(n),
        choose_even_matrix(n).inverse() @ choose_odd_matrix(n),
    ),
    "4.16": lambda n: (genocchi_matrix(n), _Tsh(n) @ _nat_diag(n) @ _tsh(n)),
    "4.21": lambda n: (
        (_Fodd(n + 1).inverse() @ _Feven(n + 1)).drop_leading(),
        _LSsh(n) @ _diag(n, lambda j: j + 2) @ _LSsh(n).inverse(),
    ),
    "4.43": lambda n: (
        a2_matrix(n),
        stirling2(_SQUARES_FROM_2, n)
        @ _diag(n, lambda j: j + 2)
        @ stirling1(_SQUARES_FROM_2, n),
    ),
    "4.49": lambda n: (
        genocchi_matrix_inverse(n),
        _Tsh(n) @ _diag(n, lambda j: Fraction(1, j + 1)) @ _tsh(n),
    ),
    "5.7": lambda n: (tangent_matrix(n), _Lodd(n) @ _Leven(n).inverse()),
    "5.10": lambda n: (
        tangent_matrix(n),
        _U(n) @ _diag(n, lambda j: Fraction(2 * j + 1, 2)) @ _u(n),
    ),
}

FACTORIZATION_IDS: Tuple[str, ...] = tuple(_FACTORIZATIONS)


def verify_factorization(ident: str, order: int) -> FactorizationCheck:
    """Build every side of a catalog factorization and compare entrywise."""
    if ident not in _FACTORIZATIONS:
        raise UnknownIdentityError(ident, FACTORIZATION_IDS)
    sides = _FACTORIZATIONS[ident](order)
    reference = sides[0]
    for other in sides[1:]:
        if other != reference:
            return FactorizationCheck(ident, order, reference, other)
    return FactorizationCheck(ident, order, reference, sides[1])


# ----------------------------------------------------------------------
# connection-constant catalog

PairFn = Callable[[int], Tuple[Poly, ...]]


def _poly_21(depth: int) -> PairFn:
    def at(n: int) -> Tuple[Poly, ...]:
        rhs = Poly()
        for k in range(n + 1):
            coeff = Fraction(
                (-1) ** (n - k) * numbers.genocchi(n - k + 1) * comb(2 * n + 2, 2 * k),
                2 * k + 1,
            )
            rhs = rhs + coeff * fib_poly(2 * k + 1)
        return (fib_poly(2 * n + 2), rhs)

    return at


def _poly_22(depth: int) -> PairFn:
    def at(n: int) -> Tuple[Poly, ...]:
        rhs = Poly()
        for k in range(n + 1):
            coeff = comb(2 * n + 1, 2 * k + 1) * numbers.bernoulli(2 * n - 2 * k) / (k + 1)
            rhs = rhs + coeff * fib_poly(2 * k + 2)
        return (fib_poly(2 * n + 1), rhs)

    return at


def _poly_23(depth: int) -> PairFn:
    def at(n: int) -> Tuple[Poly, ...]:
        via_tangent = Poly()
        via_genocchi = Poly()
        for k in range(n + 1):
            d = n - k
            base = (-1) ** d * comb(2 * n + 1, 2 * k)
            via_tangent = via_tangent + (
                Fraction(base * numbers.tangent(d), 2 ** (2 * d + 1)) * lucas_poly(2 * k)
            )
            via_genocchi = via_genocchi + (
                Fraction(base * numbers.genocchi(d + 1), 2 * d + 2) * lucas_poly(2 * k)
            )
        return (lucas_poly(2 * n + 1), via_tangent, via_genocchi)

    return at


def _poly_24(depth: int) -> PairFn:
    def at(n: int) -> Tuple[Poly, ...]:
        rhs = Poly()
        for j in range(n + 1):
            coeff = comb(2 * n, 2 * j) * numbers.bernoulli(2 * n - 2 * j) / (2 * j + 1)
            rhs = rhs + coeff * lucas_poly(2 * j + 1)
        return (lucas_poly(2 * n), 2 * rhs)

    return at


def _poly_46(depth: int) -> PairFn:
    a = genocchi_matrix(depth + 1)

    def at(n: int) -> Tuple[Poly, ...]:
        rhs = Poly()
        for k in range(n + 1):
            rhs = rhs + a[n, k] * fib_poly(2 * k + 1)
        return (fib_poly(2 * n + 2), rhs)

    return at


def _poly_440(depth: int) -> PairFn:
    a1 = a1_matrix(depth + 1)

    def at(n: int) -> Tuple[Poly, ...]:
        rhs = Poly()
        for k in range(n + 1):
            rhs = rhs + a1[n, k] * (fib_poly(2 * k) + fib_poly(2 * k + 1))
        return (fib_poly(2 * n + 1), rhs)

    return at


def _poly_442(depth: int) -> PairFn:
    a2 = a2_matrix(depth + 1)

    def at(n: int) -> Tuple[Poly, ...]:
        rhs = Poly()
        for k in range(n + 1):
            rhs = rhs + a2[n, k] * (fib_poly(2 * k) + fib_poly(2 * k + 1))
        return (fib_poly(2 * n + 1) + fib_poly(2 * n + 2), rhs)

    return at


def _poly_450(depth: int) -> PairFn:
    z = z_matrix(depth + 1)

    def at(n: int) -> Tuple[Poly, ...]:
        rhs = Poly()
        for k in range(n + 1):
            rhs = rhs + z[n, k] * (fib_poly(2 * k + 1) + fib_poly(2 * k + 2))
        return (fib_poly(2 * n) + fib_poly(2 * n + 1), rhs)

    return at


_POLY_CONNECTIONS: Dict[str, Callable[[int], PairFn]] = {
    "2.1": _poly_21,
    "2.2": _poly_22,
    "2.3": _poly_23,
    "2.4": _poly_24,
    "4.6": _poly_46,
    "4.40": _poly_440,
    "4.42": _poly_442,
    "4.46": _poly_22,
    "4.50": _poly_450,
}

ScalarFn = Callable[[int, int], Tuple[Fraction, Fraction]]


def _scalar_314(depth: int) -> ScalarFn:
    ls = _LS(depth + 1)
    t2 = _T(depth + 2)

    def at(n: int, k: int) -> Tuple[Fraction, Fraction]:
        lhs = sum((comb(2 * n - j, j) * ls[j, k] for j in range(n + 1)), Fraction(0))
        return (lhs, t2[n + 1, k + 1])

    return at


def _scalar_315(depth: int) -> ScalarFn:
    ls = _LS(depth + 1)
    t2 = _T(depth + 2)

    def at(n: int, k: int) -> Tuple[Fraction, Fraction]:
        lhs = sum((comb(2 * n + 1 - j, j) * ls[j, k] for j in range(n + 1)), Fraction(0))
        return (lhs, (k + 1) * t2[n + 1, k + 1])

    return at


def _scalar_320(depth: int) -> ScalarFn:
    ls = _LS(depth + 2)
    t2 = _T(depth + 2)

    def at(n: int, k: int) -> Tuple[Fraction, Fraction]:
        lhs = sum(
            (comb(n + 1, 2 * n - 2 * j) * t2[j + 1, k + 1] for j in range(n + 1)),
            Fraction(0),
        )
        return (lhs, ls[n + 1, k + 1])

    return at


def _scalar_321(depth: int) -> ScalarFn:
    ls = _LS(depth + 2)
    t2 = _T(depth + 2)

    def at(n: int, k: int) -> Tuple[Fraction, Fraction]:
        lhs = sum(
            (comb(n + 1, 2 * n - 2 * j + 1) * t2[j + 1, k + 1] for j in range(n + 1)),
            Fraction(0),
        )
        return (lhs, (k + 1) * ls[n + 1, k + 1])

    return at


def _scalar_58(depth: int) -> ScalarFn:
    uu = _U(depth + 1)
    vv = stirling2(preset("v-product-quarter"), depth + 1)

    def at(n: int, k: int) -> Tuple[Fraction, Fraction]:
        row = lucas_poly(2 * n).coeffs
        lhs = sum((row[j] * vv[j, k] for j in range(len(row))), Fraction(0))
        return (lhs, 2 * uu[n, k])

    return at


def _scalar_59(depth: int) -> ScalarFn:
    uu = _U(depth + 1)
    vv = stirling2(preset("v-product-quarter"), depth + 2)

    def at(n: int, k: int) -> Tuple[Fraction, Fraction]:
        row = lucas_poly(2 * n + 1).coeffs
        lhs = sum((row[j] * vv[j, k] for j in range(len(row))), Fraction(0))
        return (lhs, (2 * k + 1) * uu[n, k])

    return at


_SCALAR_CONNECTIONS: Dict[str, Callable[[int], ScalarFn]] = {
    "3.14": _scalar_314,
    "3.15": _scalar_315,
    "3.20": _scalar_320,
    "3.21": _scalar_321,
    "5.8": _scalar_58,
    "5.9": _scalar_59,
}

CONNECTION_IDS: Tuple[str, ...] = tuple(_POLY_CONNECTIONS) + tuple(_SCALAR_CONNECTIONS)


def verify_connection(ident: str, depth: int) -> IdentityReport:
    """Check one polynomial or scalar connection identity for all n <= depth."""
    if ident in _POLY_CONNECTIONS:
        at = _POLY_CONNECTIONS[ident](depth)
        for n in range(depth + 1):
            values = at(n)
            reference = values[0]
            for other in values[1:]:
                if other != reference:
                    return IdentityReport(
                        ident, depth, False, (f"n={n}", str(reference), str(other))
                    )
        return IdentityReport(ident, depth, True)
    if ident in _SCALAR_CONNECTIONS:
        at = _SCALAR_CONNECTIONS[ident](depth)
        for n in range(depth + 1):
            for k in range(n + 1):
                lhs, rhs = at(n, k)
                if lhs != rhs:
                    return IdentityReport(
                        ident, depth, False, (f"n={n},k={k}", str(lhs), str(rhs))
                    )
        return IdentityReport(ident, depth, True)
    raise UnknownIdentityError(ident, CONNECTION_IDS)
