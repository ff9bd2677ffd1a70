# %% Twins, the n/2 characterizations, and tree anatomy

from edgedim import families as F
from edgedim.graph import build_graph
from edgedim.lp import dim_f, edim_f
from edgedim.structure import (
    contains_k33_subgraph, contains_k5_subgraph, edimf_tree_formula, has_half_dim_bijection,
    is_twin_expansion_family, tree_anatomy, twin_partition,
)

# %% Twin classes: vertices with the same neighbours apart from each other
for lg in (F.complete(4), F.star(5), F.multipartite(2, 2, 3)):
    part = twin_partition(lg.graph)
    print(lg.label, [(c.kind, [lg.name(v) for v in c.members]) for c in part.classes])

# %% dim_f = n/2 exactly when every twin class has two or more members,
#    and exactly when the "|R| = 2" pairing exists
for lg in (F.complete(5), F.multipartite(2, 3), F.star(5), F.cycle(6)):
    g = lg.graph
    print(f"{lg.label:6} dim_f={str(dim_f(g)[0]):4} n/2={g.n / 2:<4}",
          "expansion:", is_twin_expansion_family(g),
          "pairing:", has_half_dim_bijection(g)[0])

# %% Trees: leaves, major vertices and terminal leaves
spider = build_graph(8, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (4, 7)])
a = tree_anatomy(spider)
print("leaves", a.leaves, "major", a.major, "terminals", a.terminals)
print("formula", edimf_tree_formula(a), "LP", edim_f(spider)[0])

for seed in range(5):
    t = F.random_tree(12, seed).graph
    a = tree_anatomy(t)
    print(f"tree {seed}: sigma={a.sigma} ex1={a.ex1}",
          "formula", edimf_tree_formula(a), "LP", edim_f(t)[0], dim_f(t)[0])

# %% K5 and K3,3 as subgraphs
print(contains_k5_subgraph(F.complete(6).graph))
print(contains_k33_subgraph(F.multipartite(3, 4).graph))
print(contains_k33_subgraph(F.nonplanar_edim2().graph))
