"""Twin classes, tree anatomy, K5 / K3,3 subgraph search and the n/2 tests."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import NotATree, TooSmall
from .graph import Graph, all_pairs_distances, is_connected, require_connected


@dataclass(frozen=True)
class TwinClass:
    members: tuple[int, ...]
    kind: str       # "clique", "independent" or "singleton"


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[TwinClass, ...]

    def class_of(self, v: int) -> TwinClass:
        return next(c for c in self.classes if v in c.members)

    def twin_pairs(self):
        for c in self.classes:
            yield from combinations(c.members, 2)


def are_twins(g: Graph, u: int, w: int) -> bool:
    """N(u) - {w} == N(w) - {u}."""
    return g.neighbor_mask(u) & ~(1 << w) == g.neighbor_mask(w) & ~(1 << u)


def twin_partition(g: Graph) -> TwinPartition:
    masks = [g.neighbor_mask(v) for v in range(g.n)]
    label = [-1] * g.n
    classes = []
    for v in range(g.n):
        if label[v] >= 0:
            continue
        label[v] = len(classes)
        members = [v]
        for w in range(v + 1, g.n):
            if label[w] < 0 and masks[v] & ~(1 << w) == masks[w] & ~(1 << v):
                label[w] = label[v]
                members.append(w)
        if len(members) == 1:
            kind = "singleton"
        else:
            kind = "clique" if g.has_edge(members[0], members[1]) else "independent"
        classes.append(TwinClass(tuple(members), kind))
    return TwinPartition(tuple(classes))


def is_twin_expansion_family(g: Graph) -> bool:
    """True iff every twin class has at least two vertices (graph is a blow-up by cliques/cocliques)."""
    require_connected(g)
    return all(len(c.members) >= 2 for c in twin_partition(g).classes)


def has_half_dim_bijection(g: Graph, d=None) -> tuple[bool, dict[int, int] | None]:
    """Look for a bijection phi with phi(v) != v and |R_v{v, phi(v)}| == 2 for all v.

    Solved as a perfect matching between two copies of V on the pairs whose
    distinguishing set is exactly the pair itself.
    """
    if g.n < 2:
        raise TooSmall("need at least 2 vertices")
    require_connected(g)
    if d is None:
        d = all_pairs_distances(g)
    diff = (d[:, None, :] != d[None, :, :]).sum(axis=2)
    allowed = (diff == 2) & ~np.eye(g.n, dtype=bool)
    rows, cols = linear_sum_assignment(allowed.astype(int), maximize=True)
    if not allowed[rows, cols].all():
        return False, None
    return True, {int(r): int(c) for r, c in zip(rows, cols)}


# -- trees -------------------------------------------------------------------

@dataclass(frozen=True)
class TreeAnatomy:
    n: int
    leaves: tuple[int, ...]
    major: tuple[int, ...]                       # degree >= 3
    terminals: dict[int, tuple[int, ...]]        # exterior major vertex -> L(v)
    subtrees: dict[int, frozenset[int]]          # exterior major vertex -> V(T_v)

    @property
    def sigma(self) -> int:
        return len(self.leaves)

    @property
    def exterior(self) -> tuple[int, ...]:
        return tuple(sorted(self.terminals))

    def ter(self, v: int) -> int:
        return len(self.terminals.get(v, ()))

    @property
    def m1(self) -> tuple[int, ...]:
        return tuple(v for v in self.exterior if self.ter(v) == 1)

    @property
    def m2(self) -> tuple[int, ...]:
        return tuple(v for v in self.exterior if self.ter(v) >= 2)

    @property
    def ex(self) -> int:
        return len(self.terminals)

    @property
    def ex1(self) -> int:
        return len(self.m1)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def tree_anatomy(g: Graph) -> TreeAnatomy:
    if not is_tree(g):
        raise NotATree(f"{g} is not a tree")
    deg = [g.degree(v) for v in range(g.n)]
    leaves = tuple(v for v in range(g.n) if deg[v] == 1)
    major = tuple(v for v in range(g.n) if deg[v] >= 3)
    terminals: dict[int, list[int]] = {}
    subtrees: dict[int, set[int]] = {}
    if major:
        # Walking inward from a leaf through degree-2 vertices reaches its
        # unique nearest major vertex first; every other major vertex is
        # strictly farther along the same path.
        for leaf in leaves:
            walk = [leaf]
            prev, cur = None, leaf
            while deg[cur] < 3:
                nxt = next(x for x in g.neighbors(cur) if x != prev)
                prev, cur = cur, nxt
                walk.append(cur)
            terminals.setdefault(cur, []).append(leaf)
            subtrees.setdefault(cur, set()).update(walk)
    return TreeAnatomy(
        g.n, leaves, major,
        {v: tuple(sorted(ls)) for v, ls in terminals.items()},
        {v: frozenset(s) for v, s in subtrees.items()},
    )


def edimf_tree_formula(a: TreeAnatomy) -> Fraction:
    """(sigma - ex_1) / 2; a path (no exterior major vertex) gives 1."""
    if a.ex == 0:
        return Fraction(1)
    return Fraction(a.sigma - a.ex1, 2)


def subtree_edges(g: Graph, vertices) -> list[int]:
    vs = set(vertices)
    return [i for i, (u, v) in enumerate(g.edges) if u in vs and v in vs]


# -- fixed-pattern subgraphs -------------------------------------------------

def contains_k5_subgraph(g: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """Search for five pairwise adjacent vertices; returns the lexicographically first."""
    masks = [g.neighbor_mask(v) for v in range(g.n)]
    cand = [v for v in range(g.n) if g.degree(v) >= 4]

    def extend(clique, pool):
        if len(clique) == 5:
            return tuple(clique)
        for i, v in enumerate(pool):
            if len(clique) + len(pool) - i < 5:
                break
            found = extend(clique + [v], [w for w in pool[i + 1:] if masks[v] >> w & 1])
            if found:
                return found
        return None

    witness = extend([], cand)
    return witness is not None, witness


def contains_k33_subgraph(g: Graph) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """K3,3 exists iff some three vertices of degree >= 3 share three common neighbours."""
    masks = [g.neighbor_mask(v) for v in range(g.n)]
    cand = [v for v in range(g.n) if g.degree(v) >= 3]
    for side in combinations(cand, 3):
        common = masks[side[0]] & masks[side[1]] & masks[side[2]]
        if common.bit_count() >= 3:
            other = [v for v in range(g.n) if common >> v & 1][:3]
            return True, (side, tuple(other))
    return False, None
