"""Exact two-phase simplex over the rationals with Bland's pivoting rule."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r, c):
        row = self.rows[r]
        p = row[c]
        self.rows[r] = row = [a / p for a in row]
        self.rhs[r] /= p
        for i, other in enumerate(self.rows):
            if i != r and other[c]:
                f = other[c]
                self.rows[i] = [a - f * b for a, b in zip(other, row)]
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = c

    def reduced_costs(self, cost):
        red = list(cost)
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                red = [a - cb * v for a, v in zip(red, self.rows[i])]
        return red

    def run(self, cost, allowed):
        """Minimize ``cost`` over the current basis; Bland's rule guarantees termination."""
        while True:
            red = self.reduced_costs(cost)
            enter = next((j for j in allowed if red[j] < 0), None)
            if enter is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                if row[enter] > 0:
                    ratio = self.rhs[i] / row[enter]
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], enter)


def solve_lp(A, b, c):
    """Minimize ``c @ x`` subject to ``A x = b``, ``x >= 0``, exactly.

    ``A`` is a list of rows; entries may be ints or Fractions.  Returns an
    :class:`LPResult` whose ``x`` is a basic (vertex) optimal solution.
    """
    m = len(A)
    n = len(c)
    rows, rhs = [], []
    for i in range(m):
        row = [Fraction(a) for a in A[i]]
        rhs_i = Fraction(b[i])
        if rhs_i < 0:
            row = [-a for a in row]
            rhs_i = -rhs_i
        rows.append(row + [Fraction(int(i == j)) for j in range(m)])
        rhs.append(rhs_i)
    tab = _Tableau(rows, rhs, [n + i for i in range(m)])

    phase1 = [Fraction(0)] * n + [Fraction(1)] * m
    tab.run(phase1, range(n + m))
    if sum(tab.rhs[i] for i, bv in enumerate(tab.basis) if bv >= n) > 0:
        return LPResult(INFEASIBLE)

    # drive zero-level artificials out of the basis; drop redundant rows
    keep = []
    for i in range(len(tab.rows)):
        if tab.basis[i] >= n:
            col = next((j for j in range(n) if tab.rows[i][j] != 0), None)
            if col is None:
                continue
            tab.pivot(i, col)
        keep.append(i)
    tab.rows = [tab.rows[i][:n] for i in keep]
    tab.rhs = [tab.rhs[i] for i in keep]
    tab.basis = [tab.basis[i] for i in keep]

    cost = [Fraction(v) for v in c]
    status = tab.run(cost, range(n))
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * n
    for i, bv in enumerate(tab.basis):
        x[bv] = tab.rhs[i]
    return LPResult(OPTIMAL, tuple(x), sum(ci * xi for ci, xi in zip(cost, x)))
