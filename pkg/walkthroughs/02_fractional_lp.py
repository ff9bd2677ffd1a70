# %% Fractional (edge) metric dimension as an exact covering LP
#
# Every pair of vertices (or edges) contributes one row: the weights on the
# vertices that distinguish the pair must add up to at least 1.  Rows that
# contain other rows are dropped, then the LP is solved in exact rationals.

from fractions import Fraction

from edgedim import families as F
from edgedim.graph import all_pairs_distances
from edgedim.lp import dim_f, edge_lp, edim_f, solve_covering_lp
from edgedim.resolving import is_edge_resolving_function

# %% Cycles: odd n gives n/(n-1), even n gives n/(n-2)
for n in range(3, 11):
    print(f"edim_f(C{n}) = {edim_f(F.cycle(n).graph)[0]}")

# %% Petersen graph, with the optimal weighting and its dual certificate
g = F.petersen().graph
lp = edge_lp(g)
sol = solve_covering_lp(lp)
print("rows after reduction:", len(lp.rows))
print("edim_f =", sol.value, "  dim_f =", dim_f(g)[0])
print("weights:", [str(w) for w in sol.weights])
print("packing total:", sum(sol.packing))   # equals the optimum, so it is optimal

# the weighting is checked against every edge pair, not just the reduced rows
print("feasible:", is_edge_resolving_function(g, all_pairs_distances(g), sol.weights)[0])

# %% The primal tableau gives the same value
print("primal method:", solve_covering_lp(lp, method="primal").value)

# %% Wheels and complete multipartite graphs
for n in range(4, 9):
    print(f"edim_f(W{n}) = {edim_f(F.wheel(n).graph)[0]}")

k122 = F.multipartite(1, 2, 2).graph
e, d = edim_f(k122)[0], dim_f(k122)[0]
print(f"K1,2,2: edim_f = {e} > dim_f = {d}:", e > d)

# %% Every connected graph lands between 1 and n/2
from edgedim.verify import random_connected_graph

for seed in range(5):
    h = random_connected_graph(8, seed)
    v = edim_f(h)[0]
    print(f"random graph {seed}: edim_f = {v}", Fraction(1) <= v <= Fraction(h.n, 2))
