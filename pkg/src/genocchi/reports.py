"""Shared result types for the identity and factorization catalogs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .trimat import TriMatrix


class UnknownIdentityError(ValueError):
    """Requested catalog label does not exist."""

    def __init__(self, ident: str, known: Sequence[str]):
        super().__init__(f"unknown identity {ident!r}; valid labels: {', '.join(known)}")
        self.ident = ident
        self.known = tuple(known)


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking one catalog identity up to a depth bound.

    The report passes exactly when no counterexample is recorded; the
    counterexample is a (where, lhs, rhs) triple rendered as strings.
    """

    ident: str
    depth: int
    passed: bool
    counterexample: Optional[Tuple[str, str, str]] = None

    def describe(self) -> str:
        if self.passed:
            return f"{self.ident}: pass (depth {self.depth})"
        where, lhs, rhs = self.counterexample
        return f"{self.ident}: FAIL at {where}: lhs={lhs} rhs={rhs}"


@dataclass(frozen=True)
class FactorizationCheck:
    """Two builds of the same matrix identity, compared entrywise."""

    ident: str
    order: int
    lhs: TriMatrix
    rhs: TriMatrix

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    @property
    def first_difference(self):
        return self.lhs.first_difference(self.rhs)

    def to_report(self) -> IdentityReport:
        diff = self.first_difference
        if diff is None:
            return IdentityReport(self.ident, self.order, True)
        i, j = diff
        return IdentityReport(
            self.ident,
            self.order,
            False,
            (f"entry ({i},{j})", str(self.lhs[i, j]), str(self.rhs[i, j])),
        )
