import random
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from scipy.optimize import linprog

from edgedim import families as F
from edgedim.errors import Disconnected, EmptyRow, TooSmall
from edgedim.graph import all_pairs_distances, build_graph
from edgedim.lp import (
    CoveringLP, covering_lp, dim_f, edge_lp, edim_f, format_lp, reduce_constraints, solve_covering_lp,
    vertex_lp,
)
from edgedim.resolving import (
    VertexSet, edge_rsets, is_edge_resolving_function, is_resolving_function, vertex_rsets,
)
from edgedim.simplex import Infeasible, Unbounded, simplex, solve_exact_system
from edgedim.structure import twin_partition

from conftest import connected_graphs


def float_optimum(lp):
    """Floating point reference value from HiGHS."""
    if not lp.rows:
        return 0.0
    A = np.array([[-(r >> v & 1) for v in range(lp.n)] for r in lp.rows])
    res = linprog(np.ones(lp.n), A_ub=A, b_ub=-np.ones(len(lp.rows)), bounds=(0, None), method="highs")
    assert res.status == 0
    return res.fun


# -- simplex -----------------------------------------------------------------

def test_simplex_small_lp():
    # min -x - y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6
    res = simplex([[1, 2, 1, 0], [3, 1, 0, 1]], [4, 6], [-1, -1, 0, 0])
    assert res.value == Fraction(-14, 5)
    assert res.x[:2] == [Fraction(8, 5), Fraction(6, 5)]
    assert res.duals == [Fraction(-2, 5), Fraction(-1, 5)]


def test_simplex_redundant_row_and_artificials():
    # second row duplicates the first
    res = simplex([[1, 1, 0], [1, 1, 0], [0, 1, 1]], [2, 2, 1], [1, 2, 0])
    assert res.value == 2 and res.x == [2, 0, 1]
    assert len(res.rows) == 2


def test_simplex_infeasible_and_unbounded():
    with pytest.raises(Infeasible):
        simplex([[1, 1], [1, 1]], [1, 2], [0, 0])
    with pytest.raises(Unbounded):
        simplex([[1, -1]], [1], [0, -1])


def test_solve_exact_system():
    x = solve_exact_system([[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]], [Fraction(3), Fraction(5)])
    assert x == [Fraction(4, 5), Fraction(7, 5)]


@pytest.mark.parametrize("seed", range(25))
def test_simplex_matches_highs_on_random_lps(seed):
    rng = random.Random(seed)
    m, n = rng.randint(2, 5), rng.randint(3, 7)
    A = [[rng.randint(0, 4) for _ in range(n)] for _ in range(m)]
    x0 = [rng.randint(0, 3) for _ in range(n)]
    b = [sum(a * x for a, x in zip(row, x0)) for row in A]   # feasible by construction
    c = [rng.randint(1, 9) for _ in range(n)]                 # bounded since c > 0
    res = simplex(A, b, c)
    ref = linprog(c, A_eq=A, b_eq=b, bounds=(0, None), method="highs")
    assert abs(float(res.value) - ref.fun) < 1e-9
    assert all(sum(a * x for a, x in zip(row, res.x)) == bi for row, bi in zip(A, b))
    assert all(x >= 0 for x in res.x)


# -- constraint reduction ----------------------------------------------------

def test_reduce_dominance():
    a = VertexSet(4, [0, 1])
    assert reduce_constraints([a | VertexSet(4, [3]), a, a]) == [a]
    with pytest.raises(EmptyRow):
        reduce_constraints([VertexSet(3), a])


def test_reduce_c5_vertex_rows():
    g = F.cycle(5).graph
    d = all_pairs_distances(g)
    rows = reduce_constraints([VertexSet(5, mask=r) for _, r in vertex_rsets(g, d)])
    assert len(rows) == 5 and {len(r) for r in rows} == {4}


def test_reduce_petersen_edge_rows():
    g = F.petersen().graph
    d = all_pairs_distances(g)
    all_rows = [VertexSet(10, mask=r) for _, r in edge_rsets(g, d)]
    assert len(all_rows) == 105 and min(map(len, all_rows)) >= 4
    kept = reduce_constraints(all_rows)
    assert {len(r) for r in kept} <= {4, 6}
    # each dropped row contains some kept row
    for r in all_rows:
        assert any(k <= r for k in kept)


def test_format_lp():
    lp = covering_lp(4, [0b0011, 0b1100, 0b0111])
    assert format_lp(lp) == "0 1\n2 3\n"


# -- solving -----------------------------------------------------------------

def test_single_row():
    sol = solve_covering_lp(CoveringLP(2, (0b11,)))
    assert sol.value == 1


@pytest.mark.parametrize("n, value", [(5, Fraction(5, 4)), (6, Fraction(3, 2))])
def test_cycles(n, value):
    assert solve_covering_lp(edge_lp(F.cycle(n).graph)).value == value


def test_named_values():
    assert dim_f(F.petersen().graph)[0] == Fraction(5, 3)
    assert edim_f(F.petersen().graph)[0] == Fraction(5, 2)
    assert dim_f(F.wheel(6).graph)[0] == Fraction(3, 2)
    assert dim_f(F.clique_subsets_graph(3).graph)[0] == 3


def test_order_and_connectivity_errors():
    with pytest.raises(TooSmall):
        edim_f(F.path(2).graph)
    with pytest.raises(TooSmall):
        dim_f(build_graph(1, []))
    with pytest.raises(Disconnected):
        dim_f(build_graph(4, [(0, 1), (2, 3)]))
    assert dim_f(F.path(2).graph)[0] == 1


def _certify(g):
    d = all_pairs_distances(g)
    for lp, check in ((vertex_lp(g, d), is_resolving_function), (edge_lp(g, d), is_edge_resolving_function)):
        sol = solve_covering_lp(lp)
        primal = solve_covering_lp(lp, method="primal")
        assert sol.value == primal.value
        assert abs(float(sol.value) - float_optimum(lp)) < 1e-9
        assert check(g, d, sol.weights) == (True, None)
        assert check(g, d, primal.weights) == (True, None)
        # the packing is a feasible dual of equal value: a certificate of optimality
        assert all(y >= 0 for y in sol.packing) and sum(sol.packing) == sol.value
        for v in range(g.n):
            assert sum(y for y, r in zip(sol.packing, lp.rows) if r >> v & 1) <= 1
        rows = list(lp.rows)
        random.Random(g.n * 7919 + g.m).shuffle(rows)
        assert solve_covering_lp(CoveringLP(lp.n, tuple(rows))).value == sol.value


def test_certificates_on_corpus(small_corpus):
    for name, g in small_corpus:
        if g.n >= 3:
            _certify(g)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_n=3, max_n=9))
def test_certificates_random(g):
    _certify(g)


def test_bounds_on_corpus(full_corpus):
    for name, g in full_corpus:
        if g.n < 3:
            continue
        e, _ = edim_f(g)
        assert 1 <= e <= Fraction(g.n, 2), name
        if dim_f(g)[0] == Fraction(g.n, 2):
            assert e == Fraction(g.n, 2), name


def test_twin_pairs_carry_unit_weight(small_corpus):
    for name, g in small_corpus:
        if g.n < 3:
            continue
        _, w = edim_f(g)
        _, wv = dim_f(g)
        for x, y in twin_partition(g).twin_pairs():
            assert w[x] + w[y] >= 1 and wv[x] + wv[y] >= 1, (name, x, y)


def test_complete_graph_gap_formula():
    from edgedim.search import edim
    for n in (6, 7):
        g = F.complete(n).graph
        assert edim(g).size - edim_f(g)[0] == Fraction(n - 2, 2)
