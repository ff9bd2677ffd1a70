"""Generators for the graph families and fixed constructions used throughout.

Every generator returns a :class:`LabeledGraph` whose ``names`` map ties the
vertex indices back to readable labels (``u_i``, ``w_{i,j}``,
``b_S`` ...), so reference code tables can be compared entry for entry.
"""
from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import BadParameter, UnknownForm
from .graph import Graph, build_graph
from .resolving import VertexSet


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    names: dict[str, int]
    landmarks: tuple[int, ...] | None = None
    label: str = ""
    _inverse: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if len(set(self.names.values())) != len(self.names):
            raise ValueError("vertex names must map to distinct indices")
        if sorted(self.names.values()) != list(range(self.graph.n)):
            raise ValueError("every vertex needs exactly one name")
        if self.landmarks is not None and any(not 0 <= v < self.graph.n for v in self.landmarks):
            raise ValueError("landmark index out of range")
        object.__setattr__(self, "_inverse", {i: s for s, i in self.names.items()})

    def __getitem__(self, name: str) -> int:
        return self.names[name]

    def name(self, v: int) -> str:
        return self._inverse[v]

    def edge(self, a: str, b: str) -> int:
        """Edge id of the edge joining the vertices named ``a`` and ``b``."""
        return self.graph.edge_id(self.names[a], self.names[b])

    def subset(self, names) -> VertexSet:
        return VertexSet(self.graph.n, (self.names[s] for s in names))

    def format_names(self) -> str:
        return "".join(f"{self.name(v)} {v}\n" for v in range(self.graph.n))


def _labeled(names: list[str], edges, landmarks=None, label="") -> LabeledGraph:
    index = {s: i for i, s in enumerate(names)}
    g = build_graph(len(names), [(index[a], index[b]) for a, b in edges])
    lm = None if landmarks is None else tuple(index[s] for s in landmarks)
    return LabeledGraph(g, index, lm, label)


def induced_subgraph(lg: LabeledGraph, subset, label="") -> LabeledGraph:
    """Subgraph induced on ``subset``, reindexed in increasing original order, names kept."""
    keep = sorted(subset)
    pos = {v: i for i, v in enumerate(keep)}
    g = lg.graph
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    names = {lg.name(v): pos[v] for v in keep}
    return LabeledGraph(build_graph(len(keep), edges), names, None, label)


def _need(cond, msg):
    if not cond:
        raise BadParameter(msg)


# -- parametrised families ---------------------------------------------------

def path(n: int) -> LabeledGraph:
    _need(n >= 1, "path needs n >= 1")
    names = [f"u{i}" for i in range(1, n + 1)]
    return _labeled(names, zip(names, names[1:]), label=f"P{n}")


def cycle(n: int) -> LabeledGraph:
    _need(n >= 3, "cycle needs n >= 3")
    names = [f"u{i}" for i in range(n)]
    return _labeled(names, [(names[i], names[(i + 1) % n]) for i in range(n)], label=f"C{n}")


def complete(n: int) -> LabeledGraph:
    _need(n >= 1, "complete graph needs n >= 1")
    names = [f"u{i}" for i in range(n)]
    return _labeled(names, combinations(names, 2), label=f"K{n}")


def multipartite(*parts: int) -> LabeledGraph:
    """Complete multipartite graph; parts are sorted ascending before labelling."""
    _need(len(parts) >= 2 and all(a >= 1 for a in parts), "multipartite needs >= 2 non-empty parts")
    parts = tuple(sorted(parts))
    groups = [[f"p{i}_{j}" for j in range(1, a + 1)] for i, a in enumerate(parts, 1)]
    names = [s for grp in groups for s in grp]
    edges = [(x, y) for gi, gj in combinations(groups, 2) for x in gi for y in gj]
    return _labeled(names, edges, label="K" + ",".join(map(str, parts)))


def star(n: int) -> LabeledGraph:
    _need(n >= 2, "star needs n >= 2")
    return multipartite(1, n - 1)


def wheel(n: int) -> LabeledGraph:
    """W_n = K_1 + C_{n-1}: rim ``u0..u_{n-2}`` then hub ``v``."""
    _need(n >= 4, "wheel needs n >= 4")
    rim = [f"u{i}" for i in range(n - 1)]
    edges = [(rim[i], rim[(i + 1) % (n - 1)]) for i in range(n - 1)] + [("v", u) for u in rim]
    return _labeled(rim + ["v"], edges, label=f"W{n}")


def petersen() -> LabeledGraph:
    """Outer 5-cycle u0..u4, inner pentagram w_i ~ w_{i+2}, spokes u_i w_i."""
    u = [f"u{i}" for i in range(5)]
    w = [f"w{i}" for i in range(5)]
    edges = []
    for i in range(5):
        edges += [(u[i], u[(i + 1) % 5]), (w[i], w[(i + 2) % 5]), (u[i], w[i])]
    return _labeled(u + w, edges, label="Petersen")


def grid(s: int, t: int) -> LabeledGraph:
    """P_s x P_t with vertices ``u{i},{j}``, 1 <= i <= s, 1 <= j <= t."""
    _need(s >= 2 and t >= 2, "grid needs s, t >= 2")
    name = lambda i, j: f"u{i},{j}"  # noqa: E731
    names = [name(i, j) for i in range(1, s + 1) for j in range(1, t + 1)]
    edges = [(name(i, j), name(i + 1, j)) for i in range(1, s) for j in range(1, t + 1)]
    edges += [(name(i, j), name(i, j + 1)) for i in range(1, s + 1) for j in range(1, t)]
    return _labeled(names, edges, label=f"P{s}xP{t}")


def random_tree(n: int, seed) -> LabeledGraph:
    """Uniform labelled tree on ``n`` vertices, decoded from a seeded Pruefer sequence."""
    _need(n >= 2, "random tree needs n >= 2")
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    g = build_graph(n, edges)
    return LabeledGraph(g, {str(v): v for v in range(n)}, None, f"tree{n}/{seed}")


# -- fixed constructions -----------------------------------------------------

def same_codes_pair() -> tuple[LabeledGraph, LabeledGraph, tuple[int, ...]]:
    """Two non-isomorphic 6-cycles-plus-chord with equal edge codes over (v1, v3)."""
    names = [f"v{i}" for i in range(1, 7)]
    ring = [(names[i], names[(i + 1) % 6]) for i in range(6)]
    lm = ("v1", "v3")
    h1 = _labeled(names, ring + [("v2", "v6")], lm, "H1")
    h2 = _labeled(names, ring + [("v2", "v5")], lm, "H2")
    return h1, h2, h1.landmarks


NONPLANAR_EDGES = [
    ("u1", "x1"), ("x1", "x2"), ("x2", "v1"), ("u1", "v2"), ("u1", "v3"),
    ("u2", "v1"), ("u2", "y1"), ("y1", "y2"), ("y2", "y3"), ("y3", "y4"), ("y4", "v2"), ("u2", "v3"),
    ("u3", "z1"), ("z1", "z2"), ("z2", "z3"), ("z3", "v1"), ("u3", "v2"), ("u3", "v3"),
]

# reference code over (x1, y4) of each edge above
NONPLANAR_CODES = {
    ("u1", "x1"): (0, 2), ("x1", "x2"): (0, 3), ("x2", "v1"): (1, 4), ("u1", "v2"): (1, 1),
    ("u1", "v3"): (1, 2), ("u2", "v1"): (2, 4), ("u2", "y1"): (3, 3), ("y1", "y2"): (4, 2),
    ("y2", "y3"): (4, 1), ("y3", "y4"): (3, 0), ("y4", "v2"): (2, 0), ("u2", "v3"): (2, 3),
    ("u3", "z1"): (3, 2), ("z1", "z2"): (4, 3), ("z2", "z3"): (3, 4), ("z3", "v1"): (2, 5),
    ("u3", "v2"): (2, 1), ("u3", "v3"): (2, 2),
}


def nonplanar_edim2() -> LabeledGraph:
    """Subdivided K_{3,3} plus extras: 15 vertices, 18 edges, landmarks (x1, y4)."""
    names = ["u1", "u2", "u3", "v1", "v2", "v3", "x1", "x2",
             "y1", "y2", "y3", "y4", "z1", "z2", "z3"]
    return _labeled(names, NONPLANAR_EDGES, ("x1", "y4"), "nonplanar-edim2")


SUBGRAPH_EDGES = [
    *[(p, q) for p in ("p1", "p2", "p3", "p4") for q in ("q1", "q2")],
    ("b", "p3"), ("b", "p4"),
    ("t", "p2"), ("t", "a"), ("a", "w"), ("w", "c"), ("w", "p4"), ("c", "q2"),
]

# reference codes over (a, b, c), one per edge
SUBGRAPH_CODES = frozenset({
    (1, 3, 2), (0, 3, 2), (0, 2, 1), (1, 2, 0), (1, 1, 1), (2, 2, 0), (3, 0, 2), (2, 0, 2),
    (3, 2, 2), (3, 2, 1), (2, 2, 2), (2, 2, 1), (3, 1, 2), (3, 1, 1), (2, 1, 2), (2, 1, 1),
})


def subgraph_edim_pair() -> tuple[LabeledGraph, VertexSet, tuple[int, ...]]:
    """K_{4,2} (parts p1..p4 / q1, q2) inside an 11-vertex graph resolved by (a, b, c)."""
    names = ["p1", "p2", "p3", "p4", "q1", "q2", "a", "b", "c", "t", "w"]
    g = _labeled(names, SUBGRAPH_EDGES, ("a", "b", "c"), "subgraph-edim")
    return g, g.subset(names[:6]), g.landmarks


def broadcast_pair(m: int) -> tuple[LabeledGraph, VertexSet]:
    """G_m: the clique H_m on blocks V_i = {w_{i,1..i}} plus hubs u_1..u_m."""
    _need(m >= 3, "broadcast pair needs m >= 3")
    w = [f"w{i}_{j}" for i in range(1, m + 1) for j in range(1, i + 1)]
    u = [f"u{i}" for i in range(1, m + 1)]
    edges = list(combinations(w, 2))
    for i in range(1, m + 1):
        targets = [f"w{i}_{j}" for j in range(1, i + 1)] + [f"w{j}_{i}" for j in range(i + 1, m + 1)]
        edges += [(f"u{i}", x) for x in targets]
    g = _labeled(w + u, edges, tuple(u), f"G{m}-broadcast")
    return g, g.subset(w)


def twin_ladder_pair(k: int) -> tuple[LabeledGraph, VertexSet]:
    """G_k: the twin ladder H_k on x_i, y_i (i <= 3k) plus z and k pendant paths a-b-c-d."""
    _need(k >= 2, "twin ladder needs k >= 2")
    L = 3 * k
    xs = [f"x{i}" for i in range(1, L + 1)]
    ys = [f"y{i}" for i in range(1, L + 1)]
    paths = [[f"{c}{j}" for c in "abcd"] for j in range(1, k + 1)]
    edges = []
    for i in range(L - 1):
        edges += [(xs[i], xs[i + 1]), (ys[i], ys[i + 1]), (xs[i], ys[i + 1]), (ys[i], xs[i + 1])]
    edges += [("z", "x1"), ("z", "y1")]
    for j, (a, b, c, d) in enumerate(paths):
        edges += [(a, b), (b, c), (c, d)]
        edges += [(f"y{3 * j + 1}", b), (f"y{3 * j + 2}", a), (f"y{3 * j + 3}", d)]
    names = xs + ys + ["z"] + [s for p in paths for s in p]
    landmarks = ["z"] + [s for j in range(1, k + 1) for s in (f"a{j}", f"c{j}")]
    g = _labeled(names, edges, landmarks, f"G{k}-twin-ladder")
    return g, g.subset(xs + ys)


def subset_name(s) -> str:
    return "b{" + ",".join(map(str, sorted(s))) + "}"


def clique_subsets_graph(k: int) -> LabeledGraph:
    """A = {a_0..a_{k-1}} and B = {b_S : S subset of {0..k-1}}, both cliques, b_S ~ a_i iff i in S."""
    _need(k >= 3, "clique-of-subsets graph needs k >= 3")
    a = [f"a{i}" for i in range(k)]
    subsets = [s for r in range(k + 1) for s in combinations(range(k), r)]
    b = [subset_name(s) for s in subsets]
    edges = list(combinations(a, 2)) + list(combinations(b, 2))
    edges += [(a[i], subset_name(s)) for s in subsets for i in s]
    return _labeled(a + b, edges, label=f"G{k}-clique-subsets")


# -- FamilySpec dispatch -----------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple = ()

    def __str__(self):
        return f"{self.family}({', '.join(map(str, self.params))})"


_GENERATORS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "multipartite": multipartite,
    "wheel": wheel,
    "petersen": petersen,
    "grid": grid,
    "random_tree": random_tree,
    "nonplanar_edim2": nonplanar_edim2,
    "subgraph_edim_pair": lambda: subgraph_edim_pair()[0],
    "broadcast_pair": lambda m: broadcast_pair(m)[0],
    "twin_ladder_pair": lambda k: twin_ladder_pair(k)[0],
    "clique_subsets": clique_subsets_graph,
}


def generate(spec: FamilySpec) -> LabeledGraph:
    try:
        gen = _GENERATORS[spec.family]
    except KeyError:
        raise BadParameter(f"unknown family {spec.family!r}") from None
    try:
        return gen(*spec.params)
    except TypeError as exc:
        raise BadParameter(f"bad parameters for {spec}: {exc}") from None


def _multipartite_forms(parts):
    parts = sorted(parts)
    n = sum(parts)
    singletons = parts.count(1)
    dimf = Fraction(n - 1, 2) if singletons == 1 else Fraction(n, 2)
    edimf = Fraction(n - 1, 2) if len(parts) == 2 and parts[0] == 1 else Fraction(n, 2)
    return n, dimf, edimf


def _forms(spec: FamilySpec) -> tuple[int, Fraction, Fraction]:
    """(order, dim_f, edim_f) for families with known closed forms."""
    f, p = spec.family, spec.params
    if f == "path":
        (n,) = p
        return n, Fraction(1), Fraction(1)
    if f == "cycle":
        (n,) = p
        _need(n >= 3, "cycle needs n >= 3")
        v = Fraction(n, n - 1) if n % 2 else Fraction(n, n - 2)
        return n, v, v
    if f == "petersen":
        return 10, Fraction(5, 3), Fraction(5, 2)
    if f == "wheel":
        (n,) = p
        _need(n >= 4, "wheel needs n >= 4")
        if n in (4, 5):
            return n, Fraction(2), Fraction(n, 2)
        return n, Fraction(3, 2) if n == 6 else Fraction(n - 1, 4), Fraction(n - 1, 2)
    if f in ("multipartite", "complete", "star"):
        if f == "complete":
            parts = (1,) * p[0]
        elif f == "star":
            parts = (1, p[0] - 1)
        else:
            parts = p
        _need(len(parts) >= 2 and min(parts) >= 1, "multipartite needs >= 2 non-empty parts")
        return _multipartite_forms(parts)
    if f == "grid":
        s, t = p
        _need(s >= 2 and t >= 2, "grid needs s, t >= 2")
        return s * t, Fraction(2), Fraction(2)
    if f == "random_tree":
        from .structure import edimf_tree_formula, tree_anatomy
        v = edimf_tree_formula(tree_anatomy(generate(spec).graph))
        return p[0], v, v
    if f == "clique_subsets":
        (k,) = p
        _need(k >= 3, "clique-of-subsets graph needs k >= 3")
        return k + 2 ** k, Fraction(k), Fraction(k + 2 ** k, 2)
    raise UnknownForm(f"no closed form for {spec}")


def closed_form_edimf(spec: FamilySpec) -> Fraction:
    n, _, v = _forms(spec)
    _need(n >= 3, "edge dimension needs at least 3 vertices")
    return v


def closed_form_dimf(spec: FamilySpec) -> Fraction:
    n, v, _ = _forms(spec)
    _need(n >= 2, "metric dimension needs at least 2 vertices")
    return v
