"""Exact metric dimension, edge metric dimension and their fractional versions."""
from .errors import (BadParameter, Disconnected, DuplicateEdge, EmptyRow, EqualEdges, EqualVertices,
                     GraphError, Loop, NotATree, OutOfRange, ParseError, TooSmall, UnknownForm,
                     WeightOutOfRange)
from .graph import Graph, all_pairs_distances, build_graph, edge_vertex_distance, is_connected
from .lp import dim_f, edim_f, reduce_constraints, solve_covering_lp
from .resolving import (VertexSet, code_edge, edge_code_multiset, is_edge_resolving_function,
                        is_edge_resolving_set, is_resolving_function, is_resolving_set, r_edge, r_vertex)
from .search import dim, edim, minimum_cover

__version__ = "0.1.0"
