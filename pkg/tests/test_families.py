from fractions import Fraction
from itertools import combinations

import pytest

from edgedim import families as F
from edgedim.errors import BadParameter, UnknownForm
from edgedim.families import FamilySpec, closed_form_dimf, closed_form_edimf, generate
from edgedim.graph import all_pairs_distances, is_connected
from edgedim.lp import dim_f, edim_f
from edgedim.resolving import is_edge_resolving_set, is_resolving_set, r_edge
from edgedim.verify import isomorphic


@pytest.mark.parametrize("spec, n, m", [
    (FamilySpec("wheel", (6,)), 6, 10),
    (FamilySpec("grid", (6, 4)), 24, 38),
    (FamilySpec("clique_subsets", (3,)), 11, 43),
    (FamilySpec("petersen"), 10, 15),
    (FamilySpec("path", (5,)), 5, 4),
    (FamilySpec("cycle", (7,)), 7, 7),
    (FamilySpec("complete", (5,)), 5, 10),
    (FamilySpec("star", (6,)), 6, 5),
    (FamilySpec("multipartite", (2, 2, 3)), 7, 16),
    (FamilySpec("nonplanar_edim2"), 15, 18),
    (FamilySpec("subgraph_edim_pair"), 11, 16),
    (FamilySpec("random_tree", (9, 4)), 9, 8),
])
def test_order_and_size(spec, n, m):
    lg = generate(spec)
    assert (lg.graph.n, lg.graph.m) == (n, m)
    assert is_connected(lg.graph)
    assert sorted(lg.names.values()) == list(range(n))


@pytest.mark.parametrize("m", [3, 4, 5])
def test_broadcast_sizes(m):
    g, h = F.broadcast_pair(m)
    assert g.graph.n == m * (m + 1) // 2 + m
    hg = F.induced_subgraph(g, h).graph
    assert hg.m == len(h) * (len(h) - 1) // 2
    d = all_pairs_distances(g.graph)
    assert is_resolving_set(g.graph, d, set(g.landmarks))[0]


def test_broadcast_h3_dim_f():
    g, h = F.broadcast_pair(3)
    assert dim_f(F.induced_subgraph(g, h).graph)[0] == 3


@pytest.mark.parametrize("k", [2, 3])
def test_twin_ladder_sizes(k):
    g, h = F.twin_ladder_pair(k)
    assert len(h) == 6 * k
    assert g.graph.n == 6 * k + 1 + 4 * k
    d = all_pairs_distances(g.graph)
    assert is_edge_resolving_set(g.graph, d, set(g.landmarks))[0]


def test_twin_ladder_witness_names():
    g, _ = F.twin_ladder_pair(2)
    assert [g.name(v) for v in g.landmarks] == ["z", "a1", "c1", "a2", "c2"]


def test_clique_subsets_structure():
    lg = F.clique_subsets_graph(3)
    g = lg.graph
    a = [lg[f"a{i}"] for i in range(3)]
    b = [v for v in range(g.n) if lg.name(v).startswith("b")]
    assert len(b) == 8
    assert all(g.has_edge(x, y) for x, y in combinations(a, 2))
    assert all(g.has_edge(x, y) for x, y in combinations(b, 2))
    assert g.has_edge(lg["a1"], lg["b{0,1}"]) and not g.has_edge(lg["a2"], lg["b{0,1}"])
    d = all_pairs_distances(g)
    r = r_edge(g, d, lg.edge("a0", "b{0}"), lg.edge("a0", "b{0,1,2}"))
    assert r == lg.subset(["b{0}", "b{0,1,2}"])
    assert F.clique_subsets_graph(4).graph.n == 20


def test_same_codes_pair_shapes():
    h1, h2, s = F.same_codes_pair()
    assert h1.graph.n == h2.graph.n == 6 and h1.graph.m == h2.graph.m == 7
    assert not isomorphic(h1.graph, h2.graph)
    for h in (h1, h2):
        assert is_edge_resolving_set(h.graph, all_pairs_distances(h.graph), set(s))[0]


def test_isomorphism_oracle_sanity():
    h1, _, _ = F.same_codes_pair()
    assert isomorphic(h1.graph, h1.graph)
    assert isomorphic(F.wheel(5).graph, F.multipartite(1, 2, 2).graph)


def test_random_tree_determinism():
    t1, t2 = F.random_tree(10, 12345), F.random_tree(10, 12345)
    assert t1.graph.edges == t2.graph.edges
    assert F.random_tree(2, 0).graph.edges == ((0, 1),)
    assert len({F.random_tree(10, s).graph.edges for s in range(20)}) > 1


@pytest.mark.parametrize("call", [
    lambda: F.path(0), lambda: F.cycle(2), lambda: F.wheel(3), lambda: F.grid(1, 4),
    lambda: F.multipartite(3), lambda: F.random_tree(1, 0), lambda: F.broadcast_pair(2),
    lambda: F.twin_ladder_pair(1), lambda: F.clique_subsets_graph(2),
    lambda: generate(FamilySpec("nope")), lambda: generate(FamilySpec("cycle", (1, 2))),
])
def test_bad_parameters(call):
    with pytest.raises(BadParameter):
        call()


def test_format_names():
    text = F.petersen().format_names()
    assert text.splitlines()[0] == "u0 0" and text.splitlines()[-1] == "w4 9"


# -- closed forms ------------------------------------------------------------

def test_closed_form_examples():
    assert closed_form_edimf(FamilySpec("wheel", (5,))) == Fraction(5, 2)
    assert closed_form_edimf(FamilySpec("multipartite", (1, 2, 2))) == Fraction(5, 2)
    assert closed_form_dimf(FamilySpec("multipartite", (1, 2, 2))) == 2
    assert closed_form_edimf(FamilySpec("cycle", (3,))) == Fraction(3, 2)
    with pytest.raises(UnknownForm):
        closed_form_edimf(FamilySpec("nonplanar_edim2"))
    with pytest.raises(BadParameter):
        closed_form_edimf(FamilySpec("path", (2,)))


def _specs():
    for n in range(3, 10):
        yield FamilySpec("path", (n,))
    for n in range(3, 13):
        yield FamilySpec("cycle", (n,))
    for n in range(4, 12):
        yield FamilySpec("wheel", (n,))
    for n in range(3, 8):
        yield FamilySpec("complete", (n,))
    for n in range(3, 9):
        yield FamilySpec("star", (n,))
    for parts in [(2, 3), (1, 2, 2), (2, 2, 3), (1, 1, 3), (1, 3, 3), (1, 1, 1, 2), (3, 3), (1, 4), (2, 2, 2, 2)]:
        yield FamilySpec("multipartite", parts)
    for s in (2, 3, 4):
        for t in (2, 3, 4, 5):
            yield FamilySpec("grid", (s, t))
    yield FamilySpec("petersen")
    yield FamilySpec("clique_subsets", (3,))
    yield FamilySpec("clique_subsets", (4,))
    for seed in range(10):
        yield FamilySpec("random_tree", (5 + seed, seed))


@pytest.mark.parametrize("spec", list(_specs()), ids=str)
def test_closed_forms_match_lp(spec):
    g = generate(spec).graph
    assert edim_f(g)[0] == closed_form_edimf(spec)
    assert dim_f(g)[0] == closed_form_dimf(spec)


def test_clique_subsets_ratio():
    g = F.clique_subsets_graph(3).graph
    ratio = edim_f(g)[0] / dim_f(g)[0]
    assert ratio == Fraction(3 + 8, 6)
