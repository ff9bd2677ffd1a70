"""Fractional (edge) metric dimension as an exact covering linear program.

The covering LP is ``min sum(g)`` subject to ``g(R) >= 1`` for every
distinguishing set ``R`` and ``g >= 0``.  By default it is solved through its
packing dual (``max sum(y)`` with one ``<= 1`` row per vertex), whose slack
basis is immediately feasible and whose tableau has only ``n`` rows; the
covering weights are recovered as the dual prices and then re-checked
against every original constraint.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import EmptyRow, TooSmall
from .graph import Graph, all_pairs_distances, require_connected
from .resolving import VertexSet, edge_rsets, vertex_rsets
from .simplex import simplex

Weighting = tuple  # tuple[Fraction, ...], one entry per vertex


@dataclass(frozen=True)
class CoveringLP:
    n: int
    rows: tuple[int, ...]       # vertex bitmasks, a dominance-free antichain

    def row_sets(self) -> list[VertexSet]:
        return [VertexSet(self.n, mask=r) for r in self.rows]


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    weights: Weighting
    packing: tuple[Fraction, ...]   # dual certificate, one entry per row
    pivots: int


def _masks(rsets: Iterable) -> list[int]:
    return [r.mask if isinstance(r, VertexSet) else int(r) for r in rsets]


def reduce_masks(masks: Iterable[int]) -> list[int]:
    """Drop duplicate rows and every row that contains another row."""
    distinct = sorted(set(masks), key=lambda r: (r.bit_count(), r))
    if distinct and distinct[0] == 0:
        raise EmptyRow("a constraint row has no vertices")
    kept: list[int] = []
    for r in distinct:
        if not any(k & r == k for k in kept):
            kept.append(r)
    return kept


def reduce_constraints(rsets: Sequence) -> list[VertexSet]:
    """Minimal antichain (under inclusion) with the same feasible region."""
    if not rsets:
        return []
    n = max(r.n for r in rsets) if isinstance(rsets[0], VertexSet) else None
    kept = reduce_masks(_masks(rsets))
    if n is None:
        n = max(kept, default=0).bit_length()
    return [VertexSet(n, mask=r) for r in kept]


def covering_lp(n: int, rsets: Iterable) -> CoveringLP:
    return CoveringLP(n, tuple(reduce_masks(_masks(rsets))))


def _incidence(lp: CoveringLP) -> list[list[int]]:
    return [[r >> v & 1 for v in range(lp.n)] for r in lp.rows]


def solve_covering_lp(lp: CoveringLP, method: str = "dual") -> LPSolution:
    """Exact optimum and an optimal weighting of the covering LP.

    ``method="dual"`` pivots on the packing dual (fast, default);
    ``method="primal"`` runs two-phase simplex on the covering form with
    surplus columns.  Both return a weighting whose feasibility has been
    verified exactly.
    """
    n, k = lp.n, len(lp.rows)
    inc = _incidence(lp)
    if k == 0:
        return LPSolution(Fraction(0), tuple(Fraction(0) for _ in range(n)), (), 0)

    if method == "dual":
        # max sum(y) s.t. sum_{R ni v} y_R + s_v = 1  ->  min -sum(y)
        A = [[inc[r][v] for r in range(k)] + [int(v == u) for u in range(n)] for v in range(n)]
        res = simplex(A, [1] * n, [-1] * k + [0] * n)
        weights = [-y for y in res.duals]
        packing = tuple(res.x[:k])
        value = -res.value
    elif method == "primal":
        # min sum(g) s.t. sum_{v in R} g_v - s_R = 1
        A = [inc[r] + [-int(r == q) for q in range(k)] for r in range(k)]
        res = simplex(A, [1] * k, [1] * n + [0] * k)
        weights = res.x[:n]
        packing = tuple(res.duals)
        value = res.value
    else:
        raise ValueError(f"unknown method {method!r}")

    # An optimal covering weight never needs to exceed 1.
    weights = tuple(min(w, Fraction(1)) for w in weights)
    for r, row in enumerate(inc):
        if sum(w for w, a in zip(weights, row) if a) < 1:
            raise ArithmeticError(f"solver returned infeasible weighting (row {r})")
    if sum(weights) != value or sum(packing) != value:
        raise ArithmeticError("primal and dual objective values disagree")
    return LPSolution(value, weights, packing, res.pivots)


def _prepare(g: Graph, min_order: int):
    if g.n < min_order:
        raise TooSmall(f"need at least {min_order} vertices, got {g.n}")
    require_connected(g)
    return all_pairs_distances(g)


def vertex_lp(g: Graph, d=None) -> CoveringLP:
    d = _prepare(g, 2) if d is None else d
    return covering_lp(g.n, (r for _, r in vertex_rsets(g, d)))


def edge_lp(g: Graph, d=None) -> CoveringLP:
    d = _prepare(g, 3) if d is None else d
    return covering_lp(g.n, (r for _, r in edge_rsets(g, d)))


def dim_f(g: Graph, method: str = "dual") -> tuple[Fraction, Weighting]:
    """Fractional metric dimension and an optimal resolving function."""
    sol = solve_covering_lp(vertex_lp(g, _prepare(g, 2)), method)
    return sol.value, sol.weights


def edim_f(g: Graph, method: str = "dual") -> tuple[Fraction, Weighting]:
    """Fractional edge metric dimension and an optimal edge resolving function."""
    sol = solve_covering_lp(edge_lp(g, _prepare(g, 3)), method)
    return sol.value, sol.weights


def format_lp(lp: CoveringLP) -> str:
    """One line per reduced row listing its member vertices."""
    return "".join(" ".join(map(str, VertexSet(lp.n, mask=r))) + "\n" for r in lp.rows)
