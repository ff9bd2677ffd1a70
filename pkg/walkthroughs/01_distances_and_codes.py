# %% Distances from vertices to edges, and edge codes
#
# The distance from an edge xy to a vertex v is min(d(x, v), d(y, v)).
# A set S of landmark vertices separates two edges when some landmark sees
# them at different distances.

from edgedim import families as F
from edgedim.graph import all_pairs_distances, edge_distance_matrix
from edgedim.resolving import code_edge, edge_code_multiset, is_edge_resolving_set, r_edge

# %% Petersen graph: outer cycle u0..u4, inner pentagram w0..w4
pg = F.petersen()
g = pg.graph
d = all_pairs_distances(g)       # read-only int64 matrix
print("Petersen diameter:", d.max())

ed = edge_distance_matrix(g, d)  # one row per edge, one column per vertex
print("edge u0u1 sees the vertices at", ed[pg.edge("u0", "u1")].tolist())

# %% Which vertices tell two adjacent rim edges apart?
r = r_edge(g, d, pg.edge("u0", "u1"), pg.edge("u1", "u2"))
print("R_e{u0u1, u1u2} =", sorted(pg.name(v) for v in r))

# %% Edge codes on a 15-vertex non-planar graph with two landmarks
lg = F.nonplanar_edim2()
d = all_pairs_distances(lg.graph)
for a, b in [("u2", "y1"), ("y3", "y4"), ("z3", "v1")]:
    print(f"code({a}{b}) =", code_edge(lg.graph, d, lg.landmarks, lg.edge(a, b)))

groups = edge_code_multiset(lg.graph, d, lg.landmarks)
print("distinct codes:", len(groups), "of", lg.graph.m, "edges")
print("{x1, y4} separates all edges:", is_edge_resolving_set(lg.graph, d, set(lg.landmarks))[0])

# %% A single landmark on K4 fails, and the first clash is reported
k4 = F.complete(4).graph
print(is_edge_resolving_set(k4, all_pairs_distances(k4), {0}))
