"""Exact two-phase tableau simplex over :class:`fractions.Fraction`.

Solves ``min c.x  s.t.  A x = b, x >= 0`` with ``b >= 0``.  Bland's rule
(lowest-index entering column, lowest-index leaving basic variable on
ratio ties) guarantees termination without perturbation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


class Infeasible(ArithmeticError):
    pass


class Unbounded(ArithmeticError):
    pass


@dataclass
class SimplexResult:
    value: Fraction
    x: list[Fraction]
    basis: list[int]            # column basic in each surviving row
    rows: list[int]             # original row index of each surviving row
    duals: list[Fraction]       # one per original row; 0 for dropped redundant rows
    pivots: int


def _pivot(T, r, j):
    prow = T[r]
    p = prow[j]
    if p != ONE:
        T[r] = prow = [a / p for a in prow]
    for i, row in enumerate(T):
        if i != r:
            f = row[j]
            if f:
                T[i] = [a - f * b if b else a for a, b in zip(row, prow)]


def _run(T, basis, ncols, allowed):
    """Optimise the tableau in place; the last row is the reduced-cost row."""
    pivots = 0
    obj = T[-1]
    while True:
        obj = T[-1]
        enter = next((j for j in range(ncols) if allowed[j] and obj[j] < 0), None)
        if enter is None:
            return pivots
        best = None
        for i in range(len(T) - 1):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise Unbounded("objective is unbounded below")
        _pivot(T, best[1], enter)
        basis[best[1]] = enter
        pivots += 1


def solve_exact_system(M: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve the square non-singular system ``M z = rhs`` by Gauss-Jordan elimination."""
    k = len(M)
    A = [list(row) + [rhs[i]] for i, row in enumerate(M)]
    for col in range(k):
        piv = next((i for i in range(col, k) if A[i][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular basis")
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [a / p for a in A[col]]
        for i in range(k):
            if i != col and A[i][col]:
                f = A[i][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[col])]
    return [A[i][k] for i in range(k)]


def simplex(A: Sequence[Sequence], b: Sequence, c: Sequence) -> SimplexResult:
    """Minimise ``c.x`` subject to ``A x = b``, ``x >= 0``; every ``b`` entry must be >= 0."""
    A = [[Fraction(a) for a in row] for row in A]
    b = [Fraction(v) for v in b]
    c = [Fraction(v) for v in c]
    nrows, ncols = len(A), len(c)
    if any(v < 0 for v in b):
        raise ValueError("right-hand side must be non-negative")

    # Reuse existing unit columns as the starting basis; add artificials elsewhere.
    basis = [-1] * nrows
    for j in range(ncols):
        col = [A[i][j] for i in range(nrows)]
        nz = [i for i, a in enumerate(col) if a != 0]
        if len(nz) == 1 and col[nz[0]] == ONE and basis[nz[0]] < 0:
            basis[nz[0]] = j
    missing = [i for i in range(nrows) if basis[i] < 0]
    nart = len(missing)
    width = ncols + nart
    T = []
    for i in range(nrows):
        art = [ZERO] * nart
        if basis[i] < 0:
            k = missing.index(i)
            art[k] = ONE
            basis[i] = ncols + k
        T.append(A[i] + art + [b[i]])
    rows = list(range(nrows))
    pivots = 0

    if nart:
        # Phase 1: minimise the sum of artificials.
        obj = [ZERO] * (width + 1)
        for i in missing:
            obj = [o - a for o, a in zip(obj, T[i])]
        for k in range(nart):
            obj[ncols + k] = ZERO
        T.append(obj)
        pivots += _run(T, basis, width, [True] * width)
        if T[-1][-1] != 0:
            raise Infeasible("no feasible point")
        T.pop()
        # Drive remaining (zero-valued) artificials out of the basis.
        i = 0
        while i < len(T):
            if basis[i] >= ncols:
                j = next((j for j in range(ncols) if T[i][j] != 0), None)
                if j is None:
                    del T[i], basis[i], rows[i]
                    continue
                _pivot(T, i, j)
                basis[i] = j
                pivots += 1
            i += 1
        T = [row[:ncols] + [row[-1]] for row in T]

    # Phase 2.
    obj = c + [ZERO]
    for i, j in enumerate(basis):
        if obj[j]:
            f = obj[j]
            obj = [o - f * a for o, a in zip(obj, T[i])]
    T.append(obj)
    pivots += _run(T, basis, ncols, [True] * ncols)

    x = [ZERO] * ncols
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    value = sum((ci * xi for ci, xi in zip(c, x)), ZERO)

    # Dual prices: solve B^T y = c_B on the surviving rows of the original A.
    B_T = [[A[r][j] for r in rows] for j in basis]
    y = solve_exact_system(B_T, [c[j] for j in basis]) if basis else []
    duals = [ZERO] * nrows
    for r, val in zip(rows, y):
        duals[r] = val
    return SimplexResult(value, x, list(basis), rows, duals, pivots)
