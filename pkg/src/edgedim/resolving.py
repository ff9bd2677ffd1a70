"""Distinguishing sets, distance codes and resolving checks.

A vertex ``z`` distinguishes two vertices (or two edges) when its distances
to them differ.  ``R_v{x, y}`` and ``R_e{e1, e2}`` collect every such ``z``;
a set resolves the graph when it meets each of them, and a weighting does
when it puts total weight at least one on each of them.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import EqualEdges, EqualVertices, OutOfRange, WeightOutOfRange
from .graph import Graph, edge_distance_matrix


class VertexSet:
    """Immutable subset of ``0..n-1`` stored as an integer bitmask."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, members: Iterable[int] = (), *, mask: int | None = None):
        self.n = n
        if mask is None:
            mask = 0
            for v in members:
                if not 0 <= v < n:
                    raise OutOfRange(f"vertex {v} not in 0..{n - 1}")
                mask |= 1 << v
        elif mask >> n:
            raise OutOfRange(f"mask has members beyond {n - 1}")
        self.mask = mask

    @classmethod
    def from_bools(cls, flags) -> "VertexSet":
        flags = np.asarray(flags, dtype=bool)
        return cls(len(flags), mask=bool_mask(flags))

    def __iter__(self) -> Iterator[int]:
        mask, v = self.mask, 0
        while mask:
            if mask & 1:
                yield v
            mask >>= 1
            v += 1

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, v):
        return 0 <= v < self.n and bool(self.mask >> v & 1)

    def _other(self, other) -> int:
        if isinstance(other, VertexSet):
            if other.n != self.n:
                raise ValueError("vertex sets over different ground sets")
            return other.mask
        return VertexSet(self.n, other).mask

    def __or__(self, other):
        return VertexSet(self.n, mask=self.mask | self._other(other))

    def __and__(self, other):
        return VertexSet(self.n, mask=self.mask & self._other(other))

    def __sub__(self, other):
        return VertexSet(self.n, mask=self.mask & ~self._other(other))

    def __le__(self, other):
        return self.mask & ~self._other(other) == 0

    def __ge__(self, other):
        return self._other(other) & ~self.mask == 0

    def __eq__(self, other):
        if isinstance(other, VertexSet):
            return self.n == other.n and self.mask == other.mask
        if isinstance(other, (set, frozenset)):
            return set(self) == other
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.mask))

    def __repr__(self):
        return "{" + ", ".join(map(str, self)) + "}"


def bool_mask(flags: np.ndarray) -> int:
    """Pack a boolean vector into an int with bit ``i`` set iff ``flags[i]``."""
    if len(flags) == 0:
        return 0
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def _check_vertex(d, v):
    if not 0 <= v < len(d):
        raise OutOfRange(f"vertex {v} not in 0..{len(d) - 1}")


def r_vertex(d: np.ndarray, x: int, y: int) -> VertexSet:
    """Vertices whose distances to ``x`` and ``y`` differ."""
    _check_vertex(d, x)
    _check_vertex(d, y)
    if x == y:
        raise EqualVertices(f"R_v needs two distinct vertices, got {x} twice")
    return VertexSet.from_bools(d[x] != d[y])


def r_edge(g: Graph, d: np.ndarray, e1: int, e2: int) -> VertexSet:
    """Vertices whose distances to edges ``e1`` and ``e2`` differ."""
    for e in (e1, e2):
        if not 0 <= e < g.m:
            raise OutOfRange(f"edge id {e} not in 0..{g.m - 1}")
    if e1 == e2:
        raise EqualEdges(f"R_e needs two distinct edges, got {e1} twice")
    (a, b), (c, e) = g.edges[e1], g.edges[e2]
    return VertexSet.from_bools(np.minimum(d[a], d[b]) != np.minimum(d[c], d[e]))


def vertex_rsets(g: Graph, d: np.ndarray) -> Iterator[tuple[tuple[int, int], int]]:
    """Yield ``((x, y), mask)`` for every vertex pair ``x < y`` in lexicographic order."""
    for x, y in combinations(range(g.n), 2):
        yield (x, y), bool_mask(d[x] != d[y])


def edge_rsets(g: Graph, d: np.ndarray) -> Iterator[tuple[tuple[int, int], int]]:
    """Yield ``((e1, e2), mask)`` for every edge-id pair ``e1 < e2``, lazily."""
    ed = edge_distance_matrix(g, d)
    for i in range(g.m):
        row = ed[i]
        diff = row != ed[i + 1:]
        for k, flags in enumerate(diff):
            yield (i, i + 1 + k), bool_mask(flags)


def code_edge(g: Graph, d: np.ndarray, landmarks: Sequence[int], e: int) -> tuple[int, ...]:
    """Distances from edge ``e`` to each landmark, in landmark order."""
    if not landmarks:
        raise ValueError("landmark list is empty")
    if len(set(landmarks)) != len(landmarks):
        raise ValueError("landmarks must be distinct")
    if not 0 <= e < g.m:
        raise OutOfRange(f"edge id {e} not in 0..{g.m - 1}")
    x, y = g.edges[e]
    for u in landmarks:
        _check_vertex(d, u)
    return tuple(int(min(d[x, u], d[y, u])) for u in landmarks)


def code_vertex(d: np.ndarray, landmarks: Sequence[int], v: int) -> tuple[int, ...]:
    return tuple(int(d[v, u]) for u in landmarks)


def edge_code_multiset(g: Graph, d: np.ndarray, landmarks: Sequence[int]) -> dict[tuple[int, ...], list[int]]:
    """Group edge ids by their code over ``landmarks``."""
    groups: dict[tuple[int, ...], list[int]] = defaultdict(list)
    for e in range(g.m):
        groups[code_edge(g, d, landmarks, e)].append(e)
    return dict(groups)


def _as_mask(n: int, s) -> int:
    if isinstance(s, VertexSet):
        return s.mask
    return VertexSet(n, s).mask


def _first_missed(pairs, mask):
    for pair, rset in pairs:
        if not rset & mask:
            return pair
    return None


def is_edge_resolving_set(g: Graph, d: np.ndarray, s) -> tuple[bool, tuple[int, int] | None]:
    """Check every pair of distinct edges; on failure also return the first unseparated edge-id pair."""
    witness = _first_missed(edge_rsets(g, d), _as_mask(g.n, s))
    return witness is None, witness


def is_resolving_set(g: Graph, d: np.ndarray, s) -> tuple[bool, tuple[int, int] | None]:
    witness = _first_missed(vertex_rsets(g, d), _as_mask(g.n, s))
    return witness is None, witness


def _weights(n, w) -> list[Fraction]:
    if len(w) != n:
        raise ValueError(f"weighting has {len(w)} entries for {n} vertices")
    out = []
    for v, x in enumerate(w):
        x = Fraction(x)
        if not 0 <= x <= 1:
            raise WeightOutOfRange(f"weight {x} at vertex {v} is outside [0, 1]")
        out.append(x)
    return out


def _first_light(pairs, weights):
    for pair, rset in pairs:
        total = Fraction(0)
        v = 0
        while rset:
            if rset & 1:
                total += weights[v]
            rset >>= 1
            v += 1
        if total < 1:
            return pair
    return None


def is_edge_resolving_function(g: Graph, d: np.ndarray, w) -> tuple[bool, tuple[int, int] | None]:
    """Exact check that every R_e set carries weight at least one."""
    witness = _first_light(edge_rsets(g, d), _weights(g.n, w))
    return witness is None, witness


def is_resolving_function(g: Graph, d: np.ndarray, w) -> tuple[bool, tuple[int, int] | None]:
    witness = _first_light(vertex_rsets(g, d), _weights(g.n, w))
    return witness is None, witness
