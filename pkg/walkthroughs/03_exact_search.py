# %% Exact edim and dim by branch and bound
#
# A resolving set is a vertex set that hits every distinguishing set, which
# makes the integer problem a set cover.  Twin classes force all but one of
# their members into the answer before the search starts.

import time

from edgedim import families as F
from edgedim.search import build_cover_instance, dim, edim, exhaustive_minimum, minimum_cover

# %% Complete graphs: edim(K_n) = n - 1
for n in range(4, 8):
    res = edim(F.complete(n).graph)
    print(f"edim(K{n}) = {res.size}, witness {res.witness}")

# %% Grids all have edim 2
for s, t in [(2, 2), (3, 4), (4, 4)]:
    print(f"edim(P{s} x P{t}) =", edim(F.grid(s, t).graph).size)

# %% The twin ladder H2 and the larger graph G2 that contains it
g, h = F.twin_ladder_pair(2)
hg = F.induced_subgraph(g, h)
start = time.perf_counter()
print("edim(H2) =", edim(hg.graph).size)
res = edim(g.graph)
print("edim(G2) =", res.size, sorted(g.name(v) for v in res.witness),
      f"({time.perf_counter() - start:.3f}s, {res.nodes} nodes)")

# %% Cross-check against plain enumeration
inst = build_cover_instance(F.petersen().graph, twin_forcing=False)
print("Petersen edim: search", minimum_cover(inst).size, "enumeration", exhaustive_minimum(inst)[0])
print("Petersen dim:", dim(F.petersen().graph).size)

# %% A tiny node budget returns the best set so far and says so
res = minimum_cover(inst, node_budget=1)
print("budget 1:", res.size, "optimal" if res.optimal else "not proven optimal")
