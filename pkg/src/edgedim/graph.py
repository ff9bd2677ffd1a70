"""Simple undirected graphs on vertices ``0..n-1`` and their distances.

Edges are stored canonically as pairs ``(u, v)`` with ``u < v`` sorted
lexicographically; an edge's position in :attr:`Graph.edges` is its id.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import Disconnected, DuplicateEdge, Loop, OutOfRange, ParseError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...]
    _edge_index: dict = field(repr=False, compare=False, hash=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_index

    def edge_id(self, u: int, v: int) -> int:
        """Index of edge ``uv`` in the canonical order (KeyError if absent)."""
        return self._edge_index[(min(u, v), max(u, v))]

    def neighbor_mask(self, v: int) -> int:
        mask = 0
        for w in self.adjacency[v]:
            mask |= 1 << w
        return mask

    def __str__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edge_pairs: Iterable[Sequence[int]]) -> Graph:
    """Validate ``edge_pairs`` and return the canonical :class:`Graph`.

    Raises OutOfRange, Loop or DuplicateEdge on bad input.
    """
    if n < 0:
        raise OutOfRange(f"vertex count must be non-negative, got {n}")
    seen = set()
    for pair in edge_pairs:
        u, v = int(pair[0]), int(pair[1])
        for x in (u, v):
            if not 0 <= x < n:
                raise OutOfRange(f"vertex {x} not in 0..{n - 1}")
        if u == v:
            raise Loop(f"loop at vertex {u}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise DuplicateEdge(f"edge {e[0]} {e[1]} given twice")
        seen.add(e)
    edges = tuple(sorted(seen))
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    adjacency = tuple(tuple(sorted(a)) for a in nbrs)
    return Graph(n, edges, adjacency, {e: i for i, e in enumerate(edges)})


def _bfs(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return min(_bfs(g, 0)) >= 0


def require_connected(g: Graph) -> None:
    if g.n == 0:
        return
    dist = _bfs(g, 0)
    for v, d in enumerate(dist):
        if d < 0:
            raise Disconnected(0, v)


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Return the read-only ``n x n`` integer distance matrix (BFS from every vertex)."""
    d = np.empty((g.n, g.n), dtype=np.int64)
    for s in range(g.n):
        row = _bfs(g, s)
        if s == 0 and min(row, default=0) < 0:
            raise Disconnected(0, row.index(-1))
        d[s] = row
    d.setflags(write=False)
    return d


def edge_vertex_distance(d: np.ndarray, e: int, v: int, g: Graph) -> int:
    """d(e, v): the smaller distance from ``v`` to an endpoint of edge ``e``."""
    if not 0 <= e < g.m:
        raise OutOfRange(f"edge id {e} not in 0..{g.m - 1}")
    if not 0 <= v < g.n:
        raise OutOfRange(f"vertex {v} not in 0..{g.n - 1}")
    x, y = g.edges[e]
    return int(min(d[x, v], d[y, v]))


def edge_distance_matrix(g: Graph, d: np.ndarray) -> np.ndarray:
    """``m x n`` matrix whose row ``e`` holds d(e, v) for every vertex ``v``."""
    if g.m == 0:
        return np.zeros((0, g.n), dtype=np.int64)
    ends = np.asarray(g.edges)
    return np.minimum(d[ends[:, 0]], d[ends[:, 1]])


# -- edge-list text format ---------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``p <n> <m>`` followed by ``m`` lines ``<u> <v>``; ``#`` starts a comment line."""
    header = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 3 or parts[0] != "p":
                raise ParseError(f"line {lineno}: expected 'p <n> <m>' header")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer header field") from None
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected '<u> <v>'")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex") from None
    if header is None:
        raise ParseError("missing 'p <n> <m>' header")
    n, m = header
    if len(pairs) != m:
        raise ParseError(f"header declares {m} edges but {len(pairs)} were given")
    try:
        return build_graph(n, pairs)
    except (OutOfRange, Loop, DuplicateEdge) as exc:
        raise ParseError(str(exc)) from exc


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
