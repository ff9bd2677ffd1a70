"""Exact metric and edge metric dimension by set-cover branch and bound.

A pair of vertices (or edges) is covered by every vertex of its
distinguishing set, so a resolving set is exactly a cover of all pairs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .errors import TooSmall
from .graph import Graph, all_pairs_distances, require_connected
from .lp import reduce_masks
from .resolving import VertexSet, edge_rsets, is_edge_resolving_set, is_resolving_set, vertex_rsets
from .structure import twin_partition

DEFAULT_NODE_BUDGET = 10 ** 7


@dataclass(frozen=True)
class CoverInstance:
    n: int
    mode: str                           # "vertex" or "edge"
    universe: tuple[tuple[int, int], ...]   # the vertex or edge-id pairs
    rows: tuple[int, ...]               # rows[i]: vertices covering universe[i]
    forced: int = 0                     # vertices that may be assumed chosen

    @cached_property
    def columns(self) -> tuple[int, ...]:
        """columns[v]: bitset over universe indices of the pairs ``v`` distinguishes."""
        cols = [0] * self.n
        for i, r in enumerate(self.rows):
            v = 0
            while r:
                if r & 1:
                    cols[v] |= 1 << i
                r >>= 1
                v += 1
        return tuple(cols)


@dataclass(frozen=True)
class CoverResult:
    size: int
    witness: VertexSet
    optimal: bool
    nodes: int = field(default=0, compare=False)


def twin_forced_mask(g: Graph) -> int:
    """All but the last vertex of every twin class.

    Any resolving set meets every twin pair, so it omits at most one vertex per
    class; swapping twins is an automorphism, so the omitted one may be taken
    to be the last.
    """
    mask = 0
    for c in twin_partition(g).classes:
        for v in c.members[:-1]:
            mask |= 1 << v
    return mask


def build_cover_instance(g: Graph, d=None, mode: str = "edge", twin_forcing: bool = True) -> CoverInstance:
    require_connected(g)
    if d is None:
        d = all_pairs_distances(g)
    if mode == "edge":
        pairs = list(edge_rsets(g, d))
    elif mode == "vertex":
        pairs = list(vertex_rsets(g, d))
    else:
        raise ValueError(f"mode must be 'vertex' or 'edge', not {mode!r}")
    forced = twin_forced_mask(g) if twin_forcing and g.n >= 3 else 0
    return CoverInstance(g.n, mode, tuple(p for p, _ in pairs), tuple(r for _, r in pairs), forced)


def _members(mask: int) -> list[int]:
    out, v = [], 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def _greedy(rows: list[int], n: int) -> int:
    chosen = 0
    left = rows
    while left:
        best = max(range(n), key=lambda v: (sum(r >> v & 1 for r in left), -v))
        chosen |= 1 << best
        left = [r for r in left if not r >> best & 1]
    return chosen


def _lower_bound(rows: list[int], n: int) -> int:
    if not rows:
        return 0
    cover = max(sum(r >> v & 1 for r in rows) for v in range(n))
    by_count = -(-len(rows) // cover)
    # rows that pairwise share no vertex each need their own vertex
    used, disjoint = 0, 0
    for r in sorted(rows, key=int.bit_count):
        if not r & used:
            used |= r
            disjoint += 1
    return max(by_count, disjoint)


def minimum_cover(inst: CoverInstance, upper_bound_hint: int | None = None,
                  node_budget: int = DEFAULT_NODE_BUDGET) -> CoverResult:
    """Smallest vertex set meeting every row.

    Branches on the uncovered row with fewest candidate vertices, trying its
    vertices in order of decreasing coverage (ties: lowest index), and prunes
    with the larger of two LP-free bounds.  When ``node_budget`` runs out the
    best set found is returned with ``optimal=False``.
    """
    n = inst.n
    forced = inst.forced
    open_rows = [r for r in reduce_masks(inst.rows) if not r & forced]
    greedy = forced | _greedy(open_rows, n)
    state = {"best": greedy.bit_count(), "mask": greedy, "nodes": 0, "exhausted": False}
    # prune at the hint, but fall back to a full search if nothing that small exists
    bound = state["best"]
    if upper_bound_hint is not None and upper_bound_hint < bound:
        bound = upper_bound_hint + 1

    def recurse(chosen: int, count: int, left: list[int]):
        state["nodes"] += 1
        if state["nodes"] > node_budget:
            state["exhausted"] = True
            return
        if not left:
            if count < state["best"]:
                state["best"], state["mask"] = count, chosen
                state["bound"] = min(state["bound"], count)
            return
        if count + _lower_bound(left, n) >= state["bound"]:
            return
        row = min(left, key=lambda r: (r.bit_count(), r))
        cands = sorted(_members(row), key=lambda v: (-sum(r >> v & 1 for r in left), v))
        for v in cands:
            bit = 1 << v
            recurse(chosen | bit, count + 1, [r for r in left if not r & bit])
            if state["exhausted"]:
                return
            # later siblings exclude v
            left = [r & ~bit for r in left]
            if not all(left):
                return

    state["bound"] = bound
    recurse(forced, forced.bit_count(), open_rows)
    if bound < greedy.bit_count() and state["mask"] == greedy and not state["exhausted"]:
        return minimum_cover(inst, None, node_budget)
    mask = state["mask"]
    return CoverResult(mask.bit_count(), VertexSet(n, mask=mask), not state["exhausted"], state["nodes"])


def exhaustive_minimum(inst: CoverInstance) -> tuple[int, VertexSet]:
    """Reference answer: try all subsets in increasing size order (no forcing, no pruning)."""
    rows = list(inst.rows)
    for k in range(inst.n + 1):
        for s in combinations(range(inst.n), k):
            mask = 0
            for v in s:
                mask |= 1 << v
            if all(r & mask for r in rows):
                return k, VertexSet(inst.n, mask=mask)
    raise ValueError("instance is infeasible")


def _solve(g: Graph, mode: str, min_order: int, node_budget: int) -> CoverResult:
    if g.n < min_order:
        raise TooSmall(f"need at least {min_order} vertices, got {g.n}")
    d = all_pairs_distances(g)
    res = minimum_cover(build_cover_instance(g, d, mode), node_budget=node_budget)
    check = is_edge_resolving_set if mode == "edge" else is_resolving_set
    ok, witness = check(g, d, res.witness)
    if not ok:
        raise AssertionError(f"search returned a non-resolving set (pair {witness} unseparated)")
    return res


def edim(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> CoverResult:
    """Edge metric dimension with a verified minimum edge resolving set."""
    return _solve(g, "edge", 3, node_budget)


def dim(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> CoverResult:
    """Metric dimension with a verified minimum resolving set."""
    return _solve(g, "vertex", 2, node_budget)
