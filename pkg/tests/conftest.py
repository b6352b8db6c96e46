import networkx as nx

from pointcircle.graphs import Multigraph


def to_nx(g: Multigraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


def nx_automorphism_count(g: Multigraph) -> int:
    h = nx.Graph(to_nx(g))
    return sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter())
