# %% Hand-built constructions and their reference code tables
#
# Each fixed construction carries names for its vertices and an ordered
# landmark list, so known edge codes can be compared entry for entry.

from edgedim import families as F
from edgedim.graph import all_pairs_distances
from edgedim.lp import dim_f, edim_f
from edgedim.resolving import edge_code_multiset, is_edge_resolving_set, r_edge
from edgedim.search import edim
from edgedim.verify import isomorphic

# %% Two different graphs, same set of edge codes
h1, h2, s = F.same_codes_pair()
for h in (h1, h2):
    codes = edge_code_multiset(h.graph, all_pairs_distances(h.graph), s)
    print(h.label, sorted(codes))
print("isomorphic:", isomorphic(h1.graph, h2.graph))

# %% K4,2 inside an 11-vertex graph that needs fewer landmarks
g, k42, lm = F.subgraph_edim_pair()
d = all_pairs_distances(g.graph)
print("{a, b, c} resolves G:", is_edge_resolving_set(g.graph, d, set(lm))[0])
print("edim(K4,2) =", edim(F.induced_subgraph(g, k42).graph).size, " edim(G) =", edim(g.graph).size)

# %% The broadcast pair: hubs u_i resolve G_m, the w-clique is H_m
gm, hm = F.broadcast_pair(4)
print("G4 order", gm.graph.n, " dim_f(H4) =", dim_f(F.induced_subgraph(gm, hm).graph)[0])

# %% Clique of subsets: A = {a_i}, B = {b_S}, b_S ~ a_i iff i in S
gk = F.clique_subsets_graph(3)
print("G3: dim_f =", dim_f(gk.graph)[0], " edim_f =", edim_f(gk.graph)[0])
r = r_edge(gk.graph, all_pairs_distances(gk.graph), gk.edge("a0", "b{0}"), gk.edge("a0", "b{0,1,2}"))
print("R_e{a0 b{0}, a0 b{0,1,2}} =", [gk.name(v) for v in r])
