"""Exact two-phase simplex over the rationals.

Solves ``maximize c.x  subject to  A x = b, x >= 0`` with Bland's
smallest-index rule, so it terminates without cycling.  Tableaux are lists
of :class:`~fractions.Fraction`; the problems solved here have at most a few
dozen rows, so no attempt is made at sparsity or revised-simplex tricks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None

    @property
    def feasible(self) -> bool:
        return self.status != INFEASIBLE


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], basis: list[int]):
        self.rows = rows  # each row: coefficients followed by rhs
        self.basis = basis

    def pivot(self, r: int, col: int) -> None:
        row = self.rows[r]
        p = row[col]
        if p != 1:
            row[:] = [v / p for v in row]
        for i, other in enumerate(self.rows):
            if i != r and other[col]:
                f = other[col]
                other[:] = [a - f * b for a, b in zip(other, row)]
        self.basis[r] = col

    def reduced_costs(self, c: Sequence[Fraction]) -> list[Fraction]:
        red = list(c) + [Fraction(0)]
        for i, row in enumerate(self.rows):
            cb = c[self.basis[i]]
            if cb:
                red = [a - cb * b for a, b in zip(red, row)]
        return red

    def optimize(self, c: Sequence[Fraction], columns: range) -> str:
        """Maximize ``c`` over the current basis; Bland's rule for both choices."""
        red = self.reduced_costs(c)
        while True:
            entering = next((j for j in columns if red[j] > 0), None)
            if entering is None:
                return OPTIMAL
            leave = None
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = row[-1] / a
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and self.basis[i] < self.basis[leave])
                    ):
                        best, leave = ratio, i
            if leave is None:
                return UNBOUNDED
            self.pivot(leave, entering)
            row = self.rows[leave]
            f = red[entering]
            red = [a - f * b for a, b in zip(red, row)]

    def solution(self, nvars: int) -> tuple[Fraction, ...]:
        x = [Fraction(0)] * nvars
        for i, j in enumerate(self.basis):
            if j < nvars:
                x[j] = self.rows[i][-1]
        return tuple(x)


def linprog(
    c: Sequence[Fraction],
    a_eq: Sequence[Sequence[Fraction]],
    b_eq: Sequence[Fraction],
    maximize: bool = True,
) -> LPResult:
    """Optimize ``c.x`` subject to ``a_eq x = b_eq`` and ``x >= 0``, exactly."""
    nvars = len(c)
    m = len(a_eq)
    rows = []
    for k, (coeffs, rhs) in enumerate(zip(a_eq, b_eq)):
        if len(coeffs) != nvars:
            raise ValueError("constraint row length does not match the objective")
        row = [Fraction(v) for v in coeffs]
        rhs = Fraction(rhs)
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        row.extend(Fraction(int(i == k)) for i in range(m))
        row.append(rhs)
        rows.append(row)
    tab = _Tableau(rows, [nvars + i for i in range(m)])

    # Phase 1: drive the artificial variables to zero.
    phase1 = [Fraction(0)] * nvars + [Fraction(-1)] * m
    if m:
        tab.optimize(phase1, range(nvars + m))
        if any(tab.rows[i][-1] for i, j in enumerate(tab.basis) if j >= nvars):
            return LPResult(INFEASIBLE)
        # Pivot zero-level artificials out; rows where that is impossible are redundant.
        i = 0
        while i < len(tab.rows):
            if tab.basis[i] >= nvars:
                col = next((j for j in range(nvars) if tab.rows[i][j]), None)
                if col is None:
                    del tab.rows[i]
                    del tab.basis[i]
                    continue
                tab.pivot(i, col)
            i += 1
        for row in tab.rows:
            del row[nvars:-1]

    # Phase 2.
    sign = 1 if maximize else -1
    obj = [sign * Fraction(v) for v in c]
    status = tab.optimize(obj, range(nvars))
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = tab.solution(nvars)
    value = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult(OPTIMAL, x, value)


def feasible_point(a_eq: Sequence[Sequence[Fraction]], b_eq: Sequence[Fraction]) -> tuple[Fraction, ...] | None:
    """Some vertex of ``{x >= 0 : a_eq x = b_eq}``, or None when empty."""
    nvars = len(a_eq[0]) if a_eq else 0
    res = linprog([Fraction(0)] * nvars, a_eq, b_eq)
    return res.x if res.status == OPTIMAL else None
