"""Exact rational simplex method in standard form.

Solves ``min c @ x  s.t.  A @ x = b, x >= 0`` with a dense tableau over
:class:`~fractions.Fraction`. Pivoting follows Bland's rule (lowest index
entering column, lowest index leaving variable on ties), which guarantees
termination and makes every result reproducible.

When phase one shows the system infeasible, the phase-one duals give a
Farkas certificate ``y`` with ``y @ A >= 0`` componentwise and
``y @ b < 0``.
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
    x: tuple | None = None
    objective: Fraction | None = None
    certificate: tuple | None = None

    @property
    def feasible(self) -> bool:
        return self.status != INFEASIBLE


class _Tableau:
    def __init__(self, rows, basis, n_struct):
        self.rows = rows
        self.basis = basis
        self.n_struct = n_struct
        self.cost: list[Fraction] = []

    def set_cost(self, c):
        width = len(self.rows[0]) if self.rows else len(c) + 1
        z = list(c) + [Fraction(0)] * (width - len(c))
        for i, bv in enumerate(self.basis):
            cb = z[bv] if bv < len(c) else Fraction(0)
            if cb:
                z = [zj - cb * tj for zj, tj in zip(z, self.rows[i])]
        # z[bv] is now zero for every basic column
        self.cost = z

    def pivot(self, r, j):
        row = self.rows[r]
        inv = 1 / row[j]
        row = [x * inv for x in row]
        self.rows[r] = row
        for i, other in enumerate(self.rows):
            if i != r and other[j] != 0:
                f = other[j]
                self.rows[i] = [a - f * b for a, b in zip(other, row)]
        if self.cost[j] != 0:
            f = self.cost[j]
            self.cost = [a - f * b for a, b in zip(self.cost, row)]
        self.basis[r] = j

    def run(self, allowed) -> bool:
        """Iterate Bland pivots; return False if unbounded."""
        while True:
            entering = next((j for j in allowed if self.cost[j] < 0), None)
            if entering is None:
                return True
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    key = (row[-1] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], entering)


def solve_lp(A: Sequence[Sequence], b: Sequence, c: Sequence | None = None) -> LPResult:
    """Minimise ``c @ x`` over ``A @ x = b, x >= 0`` exactly.

    With ``c`` omitted the first feasible basic solution found by phase one
    is returned. Infeasible systems carry a Farkas certificate.
    """
    A = [[Fraction(x) for x in row] for row in A]
    b = [Fraction(x) for x in b]
    m = len(A)
    n = len(A[0]) if m else (len(c) if c is not None else 0)
    if c is None:
        c = [Fraction(0)] * n
    c = [Fraction(x) for x in c]

    signs = [(-1 if bi < 0 else 1) for bi in b]
    rows = []
    for i in range(m):
        s = signs[i]
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        rows.append([s * x for x in A[i]] + art + [s * b[i]])
    tab = _Tableau(rows, list(range(n, n + m)), n)

    tab.set_cost([Fraction(0)] * n + [Fraction(1)] * m)
    tab.run(range(n + m))
    infeasibility = -tab.cost[-1] if m else Fraction(0)
    if infeasibility > 0:
        dual = [1 - tab.cost[n + i] for i in range(m)]
        cert = tuple(-signs[i] * dual[i] for i in range(m))
        return LPResult(INFEASIBLE, certificate=cert)

    for r in range(m):
        if tab.basis[r] >= n:
            j = next((j for j in range(n) if tab.rows[r][j] != 0), None)
            if j is not None:
                tab.pivot(r, j)

    tab.set_cost(c)
    if not tab.run(range(n)):
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * n
    for i, bv in enumerate(tab.basis):
        if bv < n:
            x[bv] = tab.rows[i][-1]
    objective = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult(OPTIMAL, x=tuple(x), objective=objective)


def verify_farkas(A: Sequence[Sequence], b: Sequence, y: Sequence) -> bool:
    """Check ``y @ A >= 0`` and ``y @ b < 0``, which rules out ``A x = b, x >= 0``."""
    if len(y) != len(A):
        return False
    n = len(A[0]) if A else 0
    for j in range(n):
        if sum((Fraction(yi) * Fraction(row[j]) for yi, row in zip(y, A)), Fraction(0)) < 0:
            return False
    return sum((Fraction(yi) * Fraction(bi) for yi, bi in zip(y, b)), Fraction(0)) < 0
