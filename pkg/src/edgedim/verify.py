"""Reproduction checks run by ``edgedim verify``.

Each check recomputes one published value or property from scratch and
compares it with the expected value.  Instance sizes are capped so the
whole suite finishes in a few minutes:

* cycles n <= 12, wheels n <= 10, complete multipartite n <= 8, grids 4 x 4;
* random trees 4 <= n <= 14 (50 seeds), random non-path graphs n <= 10 (30 seeds);
* the characterization sweep uses corpus graphs with n <= 12, the sandwich
  sweep all corpus graphs, exhaustive subset enumeration only for n <= 10.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Any, Callable

from . import families as F
from .families import LabeledGraph, induced_subgraph
from .graph import Graph, all_pairs_distances, build_graph
from .lp import dim_f, edim_f
from .resolving import edge_code_multiset, is_edge_resolving_set
from .search import build_cover_instance, dim, edim, exhaustive_minimum
from .structure import (contains_k5_subgraph, contains_k33_subgraph, edimf_tree_formula,
                        has_half_dim_bijection, is_twin_expansion_family, tree_anatomy)


@dataclass(frozen=True)
class Check:
    name: str
    source: str                 # PUBLISHED, DERIVED or TRIVIAL
    expected: Any
    compute: Callable[[], Any]


@dataclass
class CheckResult:
    name: str
    source: str
    expected: Any
    got: Any
    passed: bool
    elapsed: float

    def line(self, timings: bool = False) -> str:
        s = f"{'PASS' if self.passed else 'FAIL'} {self.name} expected={fmt(self.expected)} got={fmt(self.got)} [{self.source}]"
        if timings:
            s += f" ({self.elapsed:.2f}s)"
        return s


@dataclass
class VerifyReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def format(self, timings: bool = False) -> str:
        lines = [r.line(timings) for r in self.results]
        ok = sum(r.passed for r in self.results)
        lines.append(f"{'OK' if self.passed else 'FAILED'} {ok}/{len(self.results)} checks passed")
        return "\n".join(lines) + "\n"


def fmt(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, list):
        return "[" + ",".join(fmt(x) for x in v) + "]"
    if isinstance(v, tuple):
        return "(" + ",".join(fmt(x) for x in v) + ")"
    return str(v)


# -- helpers -----------------------------------------------------------------

def random_connected_graph(n: int, seed: int, extra: int | None = None) -> Graph:
    """Random tree on ``n`` vertices plus ``extra`` (default 1..3) random chords."""
    rng = random.Random(f"connected/{seed}")
    tree = F.random_tree(n, rng.randrange(2 ** 32)).graph
    edges = set(tree.edges)
    missing = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    k = rng.randint(1, 3) if extra is None else extra
    edges.update(rng.sample(missing, min(k, len(missing))))
    return build_graph(n, sorted(edges))


def is_path_graph(g: Graph) -> bool:
    degs = sorted(g.degree(v) for v in range(g.n))
    return g.m == g.n - 1 and degs[:2] == [1, 1] and all(x <= 2 for x in degs)


def isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exhaustive isomorphism test; only meant for graphs with a handful of vertices."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(map(g1.degree, range(g1.n))) != sorted(map(g2.degree, range(g2.n))):
        return False
    target = set(g2.edges)
    for p in permutations(range(g1.n)):
        if all((min(p[u], p[v]), max(p[u], p[v])) in target for u, v in g1.edges):
            return True
    return False


def corpus(max_n: int = 12) -> list[tuple[str, Graph]]:
    """Deterministic list of small connected graphs used by the property sweeps."""
    items: list[tuple[str, Graph]] = []
    add = lambda name, lg: items.append((name, lg.graph if isinstance(lg, LabeledGraph) else lg))  # noqa: E731
    for n in range(2, 11):
        add(f"P{n}", F.path(n))
    for n in range(3, 13):
        add(f"C{n}", F.cycle(n))
    for n in range(2, 8):
        add(f"K{n}", F.complete(n))
    for n in range(4, 9):
        add(f"K1,{n - 1}", F.star(n))
    for parts in [(2, 2), (2, 3), (3, 3), (2, 4), (1, 2, 2), (1, 1, 2), (1, 2, 3), (2, 2, 2), (2, 2, 3), (1, 1, 1, 2)]:
        add("K" + ",".join(map(str, parts)), F.multipartite(*parts))
    for n in range(4, 11):
        add(f"W{n}", F.wheel(n))
    for s, t in [(2, 2), (2, 3), (2, 4), (3, 3), (2, 5), (3, 4), (2, 6)]:
        add(f"P{s}xP{t}", F.grid(s, t))
    add("Petersen", F.petersen())
    h1, h2, _ = F.same_codes_pair()
    add("H1", h1)
    add("H2", h2)
    add("subgraph-edim", F.subgraph_edim_pair()[0])
    add("G3-broadcast", F.broadcast_pair(3)[0])
    g, h = F.twin_ladder_pair(2)
    add("H2-twin-ladder", induced_subgraph(g, h))
    add("G3-clique-subsets", F.clique_subsets_graph(3))
    add("nonplanar-edim2", F.nonplanar_edim2())
    for seed in range(20):
        n = 4 + seed % 9
        add(f"tree{n}/{seed}", F.random_tree(n, seed))
    for seed in range(30):
        n = 4 + seed % 7
        add(f"rand{n}/{seed}", random_connected_graph(n, seed))
    return [(name, g) for name, g in items if g.n <= max_n]


# -- check bodies ------------------------------------------------------------

def _val(fn, g):
    return fn(g)[0]


def _codes_table(lg: LabeledGraph, table: dict) -> int:
    """Number of expected codes that the computed codes disagree with."""
    g = lg.graph
    d = all_pairs_distances(g)
    groups = edge_code_multiset(g, d, lg.landmarks)
    computed = {e: code for code, es in groups.items() for e in es}
    return sum(computed[lg.edge(a, b)] != code for (a, b), code in table.items()) + (len(table) != g.m)


def _same_codes() -> tuple:
    h1, h2, s = F.same_codes_pair()
    c1 = edge_code_multiset(h1.graph, all_pairs_distances(h1.graph), s)
    c2 = edge_code_multiset(h2.graph, all_pairs_distances(h2.graph), s)
    singletons = all(len(v) == 1 for v in c1.values()) and all(len(v) == 1 for v in c2.values())
    return (sorted(c1) == sorted(c2), len(c1), singletons, isomorphic(h1.graph, h2.graph))


def _subgraph_codes() -> tuple:
    g, h, s = F.subgraph_edim_pair()
    d = all_pairs_distances(g.graph)
    groups = edge_code_multiset(g.graph, d, s)
    resolves = is_edge_resolving_set(g.graph, d, s)[0]
    return (frozenset(groups) == F.SUBGRAPH_CODES, len(groups), resolves)


def _subgraph_gap() -> tuple:
    g, h, _ = F.subgraph_edim_pair()
    inner, outer = edim(induced_subgraph(g, h).graph).size, edim(g.graph).size
    return (inner, outer <= 3 < inner)


def _twin_ladder_h() -> tuple:
    g, h = F.twin_ladder_pair(2)
    hh = induced_subgraph(g, h).graph
    return (edim(hh).size, edim_f(hh)[0])


def _twin_ladder_g() -> tuple:
    g, _ = F.twin_ladder_pair(2)
    d = all_pairs_distances(g.graph)
    ok = is_edge_resolving_set(g.graph, d, g.landmarks)[0]
    return (ok, len(g.landmarks), edim(g.graph).size <= 5, edim_f(g.graph)[0] <= 5)


def _trees() -> int:
    bad = 0
    for seed in range(50):
        n = 4 + seed % 11
        t = F.random_tree(n, seed).graph
        formula = edimf_tree_formula(tree_anatomy(t))
        if not (edim_f(t)[0] == formula == dim_f(t)[0]):
            bad += 1
    return bad


def _non_paths() -> int:
    bad = 0
    for seed in range(30):
        g = random_connected_graph(5 + seed % 6, seed)
        if is_path_graph(g) or edim_f(g)[0] <= 1:
            bad += 1
    return bad


def _characterization(max_n=12) -> list[str]:
    bad = []
    for name, g in corpus(max_n):
        half = Fraction(g.n, 2)
        df = dim_f(g)[0]
        a, b, c = df == half, is_twin_expansion_family(g), has_half_dim_bijection(g)[0]
        if not (a == b == c) or (g.n >= 3 and a and edim_f(g)[0] != half):
            bad.append(name)
    return bad


def _sandwich(max_exhaustive=10) -> list[str]:
    bad = []
    for name, g in corpus(max_n=99):
        if g.n < 3:
            continue
        ef, df = edim_f(g)[0], dim_f(g)[0]
        e, dv = edim(g).size, dim(g).size
        ok = 1 <= ef <= Fraction(g.n, 2) and ef <= e and df <= dv
        if g.n <= max_exhaustive:
            d = all_pairs_distances(g)
            ok = ok and exhaustive_minimum(build_cover_instance(g, d, "edge", False))[0] == e
            ok = ok and exhaustive_minimum(build_cover_instance(g, d, "vertex", False))[0] == dv
        if not ok:
            bad.append(name)
    return bad


def _edim2_patterns() -> list[str]:
    bad = []
    for name, g in corpus(max_n=99):
        if g.n >= 3 and edim(g).size == 2:
            if contains_k5_subgraph(g)[0] or contains_k33_subgraph(g)[0]:
                bad.append(name)
    return bad


def build_checks() -> list[Check]:
    checks: list[Check] = []
    add = lambda *a: checks.append(Check(*a))  # noqa: E731

    for n in range(3, 13):
        expected = Fraction(n, n - 1) if n % 2 else Fraction(n, n - 2)
        add(f"cycle/edimf/C{n:02d}", "PUBLISHED", expected, lambda n=n: _val(edim_f, F.cycle(n).graph))
    add("petersen/edimf", "PUBLISHED", Fraction(5, 2), lambda: _val(edim_f, F.petersen().graph))
    add("petersen/dimf", "PUBLISHED", Fraction(5, 3), lambda: _val(dim_f, F.petersen().graph))
    for n in range(4, 11):
        expected = Fraction(n, 2) if n in (4, 5) else Fraction(n - 1, 2)
        add(f"wheel/edimf/W{n:02d}", "PUBLISHED", expected, lambda n=n: _val(edim_f, F.wheel(n).graph))
    add("wheel/dimf/W06", "PUBLISHED", Fraction(3, 2), lambda: _val(dim_f, F.wheel(6).graph))
    for n in range(4, 9):
        add(f"multipartite/edimf/K1,{n - 1}", "PUBLISHED", Fraction(n - 1, 2),
            lambda n=n: _val(edim_f, F.star(n).graph))
    for parts in [(3,), (4,), (2, 3), (1, 2, 2), (2, 2, 3)]:
        g = (lambda p=parts: F.complete(p[0]) if len(p) == 1 else F.multipartite(*p))
        label = f"K{parts[0]}" if len(parts) == 1 else "K" + ",".join(map(str, parts))
        add(f"multipartite/edimf/{label}", "PUBLISHED", Fraction(sum(parts), 2),
            lambda g=g: _val(edim_f, g().graph))
    add("multipartite/dimf/K1,2,2", "PUBLISHED", Fraction(2), lambda: _val(dim_f, F.multipartite(1, 2, 2).graph))
    for s in (2, 3, 4):
        for t in (2, 3, 4):
            add(f"grid/edim+edimf/P{s}xP{t}", "PUBLISHED", (2, Fraction(2)),
                lambda s=s, t=t: (edim(F.grid(s, t).graph).size, _val(edim_f, F.grid(s, t).graph)))
    add("tree/formula-vs-lp/50-seeds", "PUBLISHED", 0, _trees)
    for n in range(3, 9):
        add(f"path/edimf/P{n}", "PUBLISHED", Fraction(1), lambda n=n: _val(edim_f, F.path(n).graph))
    add("path/non-path-above-one/30-seeds", "PUBLISHED", 0, _non_paths)
    add("construction/nonplanar/codes", "PUBLISHED", 0, lambda: _codes_table(F.nonplanar_edim2(), F.NONPLANAR_CODES))
    add("construction/nonplanar/edim", "PUBLISHED", 2, lambda: edim(F.nonplanar_edim2().graph).size)
    add("construction/nonplanar/no-k5-k33", "DERIVED", (False, False),
        lambda: (contains_k5_subgraph(F.nonplanar_edim2().graph)[0],
                 contains_k33_subgraph(F.nonplanar_edim2().graph)[0]))
    add("construction/same-codes/equal-sets,size,singletons,isomorphic", "PUBLISHED", (True, 7, True, False), _same_codes)
    add("construction/subgraph/codes,size,resolves", "PUBLISHED", (True, 16, True), _subgraph_codes)
    add("construction/subgraph/edim(K4,2),edim(G)<=3<edim(K4,2)", "PUBLISHED", (4, True), _subgraph_gap)
    add("clique-subsets/dimf/G3", "PUBLISHED", Fraction(3), lambda: _val(dim_f, F.clique_subsets_graph(3).graph))
    add("clique-subsets/edimf/G3", "PUBLISHED", Fraction(11, 2), lambda: _val(edim_f, F.clique_subsets_graph(3).graph))
    add("twin-ladder/edim,edimf/H2", "PUBLISHED", (6, Fraction(6)), _twin_ladder_h)
    add("twin-ladder/witness,size,edim<=5,edimf<=5/G2", "PUBLISHED", (True, 5, True, True), _twin_ladder_g)
    add("corpus/characterization/n<=12", "PUBLISHED", [], _characterization)
    add("corpus/sandwich+exhaustive", "PUBLISHED", [], _sandwich)
    add("corpus/edim2-excludes-k5-k33", "PUBLISHED", [], _edim2_patterns)
    for n in (6, 7):
        add(f"gap/complete/K{n}", "PUBLISHED", Fraction(n - 2, 2),
            lambda n=n: edim(F.complete(n).graph).size - _val(edim_f, F.complete(n).graph))
    return sorted(checks, key=lambda c: c.name)


def run_checks(name_filter: str | None = None) -> VerifyReport:
    report = VerifyReport()
    for check in build_checks():
        if name_filter and name_filter not in check.name:
            continue
        start = time.perf_counter()
        try:
            got = check.compute()
            passed = got == check.expected
        except Exception as exc:  # a crash is a failed check, not a crashed run
            got, passed = f"error:{type(exc).__name__}", False
        report.results.append(CheckResult(check.name, check.source, check.expected, got, passed,
                                          time.perf_counter() - start))
    return report
