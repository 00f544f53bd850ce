"""Small exact linear programming: two-phase tableau simplex over Fractions.

Bland's rule is used throughout, so the method terminates on degenerate
problems.  Problem sizes in this package are tiny (tens of columns), so a
dense integer tableau is fine.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction | None = None
    x: tuple | None = None


def _int_rows(A, b):
    """Scale each equation to integers (row scaling keeps the solution set)."""
    rows = []
    for row, rhs in zip(A, b):
        vals = [Fraction(v) for v in row] + [Fraction(rhs)]
        den = lcm(*(v.denominator for v in vals))
        ints = [int(v * den) for v in vals]
        if ints[-1] < 0:
            ints = [-v for v in ints]
        rows.append(ints)
    return rows


class _Tableau:
    """Integer-preserving tableau: the true entries are T[i][j] / D.

    Pivoting uses the fraction-free update
        T'[i][j] = (p T[i][j] - T[i][c] T[r][j]) / D,
    whose divisions are exact (every entry is a minor of the input).  The
    last row holds D times the reduced costs.
    """

    def __init__(self, rows, basis):
        self.T = rows
        self.basis = basis
        self.D = 1

    def pivot(self, r, c):
        T, D = self.T, self.D
        pr = T[r]
        p = pr[c]
        for i, row in enumerate(T):
            if i == r:
                continue
            f = row[c]
            if f:
                T[i] = [(p * v - f * pr[q]) // D if pr[q] else (p * v) // D for q, v in enumerate(row)]
            elif p != D:
                T[i] = [(p * v) // D for v in row]
        self.D = p
        self.basis[r] = c
        if p < 0:
            self.T = [[-v for v in row] for row in self.T]
            self.D = -p

    def set_costs(self, cost):
        """Replace the objective row for integer costs (one per column)."""
        D, T = self.D, self.T
        ncols = len(T[0])
        z = [D * cost[j] if j < len(cost) else 0 for j in range(ncols)]
        for i, bv in enumerate(self.basis):
            cb = cost[bv] if bv < len(cost) else 0
            if cb:
                row = T[i]
                z = [zj - cb * v for zj, v in zip(z, row)]
        T[-1] = z

    def run(self, ncols):
        """Maximise; returns OPTIMAL or UNBOUNDED (Bland's rule)."""
        while True:
            T = self.T
            z = T[-1]
            in_basis = set(self.basis)
            c = next((j for j in range(ncols) if z[j] > 0 and j not in in_basis), None)
            if c is None:
                return OPTIMAL
            best = None
            for i in range(len(T) - 1):
                a = T[i][c]
                if a > 0:
                    if best is None:
                        best = i
                        continue
                    # compare T[i][-1]/a with T[best][-1]/T[best][c]
                    lhs = T[i][-1] * T[best][c]
                    rhs = T[best][-1] * a
                    if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[best]):
                        best = i
            if best is None:
                return UNBOUNDED
            self.pivot(best, c)


def maximize(c: Sequence, A_eq: Sequence[Sequence], b_eq: Sequence) -> LPResult:
    """maximize c.x subject to A_eq x = b_eq, x >= 0, exactly."""
    n = len(c)
    rows = _int_rows(A_eq, b_eq)
    m = len(rows)
    # columns: x (n), artificials (m), rhs
    T = [r[:n] + [int(i == k) for k in range(m)] + [r[n]] for i, r in enumerate(rows)]
    T.append([0] * (n + m + 1))
    tab = _Tableau(T, [n + i for i in range(m)])
    tab.set_costs([0] * n + [-1] * m)
    tab.run(n + m)
    if tab.T[-1][-1] != 0:
        return LPResult(INFEASIBLE)
    # drive zero-valued artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(tab.T) - 1:
        if tab.basis[i] >= n:
            j = next((j for j in range(n) if tab.T[i][j] != 0), None)
            if j is None:
                del tab.T[i]
                del tab.basis[i]
                continue
            tab.pivot(i, j)
        i += 1
    tab.T = [row[:n] + [row[-1]] for row in tab.T]
    cq = [Fraction(v) for v in c]
    scale = lcm(*(v.denominator for v in cq)) if cq else 1
    tab.set_costs([int(v * scale) for v in cq])
    if tab.run(n) == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * n
    for i, bv in enumerate(tab.basis):
        x[bv] = Fraction(tab.T[i][-1], tab.D)
    value = sum((ci * xi for ci, xi in zip(cq, x)), Fraction(0))
    return LPResult(OPTIMAL, value, tuple(x))


def feasible(A_eq: Sequence[Sequence], b_eq: Sequence, nvars: int) -> bool:
    return maximize([0] * nvars, A_eq, b_eq).status != INFEASIBLE
