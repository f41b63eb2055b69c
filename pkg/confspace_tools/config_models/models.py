from collections import namedtuple
from functools import lru_cache

import networkx as nx

from ..complex_core import (ConstraintSet, GraphError, SimplicialMap, staircase_product,
                            constrained_subcomplex, projection_map, subdivide_edges,
                            chains, constrained_cells)
from ..utils import function_utils as fu

CERTIFIED = 'certified'
HEURISTIC = 'heuristic'

SIMPLICIAL = 'simplicial'
CELLULAR = 'cellular'
REALIZATIONS = (CELLULAR, SIMPLICIAL)

AbramsReport = namedtuple('AbramsReport', ['holds', 'kind', 'witness'])


@lru_cache(maxsize=16)
def power(K, k):
    """ k-fold staircase product of K with itself
    """
    return staircase_product([K] * k)


class ConfigModel:
    """ Deleted product model of the configuration space of k particles in |K|.

    `complex` is the fully constrained subcomplex of the k-fold product,
    `inclusion` the subcomplex inclusion into that product.
    """

    def __init__(self, base, k, complex, inclusion, exactness):
        self.base = base
        self.k = k
        self.complex = complex
        self.inclusion = inclusion
        self.exactness = exactness

    @property
    def certified(self):
        return self.exactness == CERTIFIED

    @property
    def constraints(self):
        return ConstraintSet.full(self.k)

    def chain_complex(self, realization=SIMPLICIAL):
        """ Chains of the model, either of the triangulated subcomplex
            or of the product cells with disjoint carriers
        """
        if realization == SIMPLICIAL:
            return chains(self.complex)
        elif realization == CELLULAR:
            return constrained_cells(self.base, self.constraints)
        raise ValueError("Unknown realization %s, expected one of %s" % (realization, REALIZATIONS))

    def __repr__(self):
        return "ConfigModel(k=%i, f_vector=%s, %s)" % (self.k, self.complex.f_vector, self.exactness)


def deleted_product_model(K, k):
    if k < 1:
        raise ValueError("Number of particles must be positive, got %i" % k)
    P = power(K, k)
    complex_ = constrained_subcomplex(P, ConstraintSet.full(k))
    inclusion = SimplicialMap.inclusion(complex_, P)

    if K.is_graph and abrams_condition(K, k).holds:
        exactness = CERTIFIED
    else:
        exactness = HEURISTIC
        fu.warn("deleted product of %r for %i particles is not certified" % (K, k))
    return ConfigModel(K, k, complex_, inclusion, exactness)


def forget_coordinate(model, coordinate):
    """ Projection of the model onto one factor, a simplicial map to the base
    """
    return projection_map(model.complex, coordinate)


def forget_last_coordinate(model, lower):
    """ Simplicial map from the k-particle model to the (k - 1)-particle model
    """
    assert lower.k == model.k - 1 and lower.base == model.base
    return SimplicialMap(model.complex, lower.complex, {v: v[:-1] for v in model.complex.vertices})


#
# graphs
#

def graph_of(K):
    """ networkx graph of the 1-skeleton, vertices in the order of K
    """
    if not K.is_graph:
        raise GraphError("Complex of dimension %i is not a graph" % K.dim)
    graph = nx.Graph()
    graph.add_nodes_from(K.vertices)
    graph.add_edges_from(K.edges())
    return graph


def smoothed_graph(K):
    """ Multigraph obtained by erasing all vertices of degree two.

    Two graphs are subdivisions of a common graph iff their smoothed
    graphs are isomorphic. A pure cycle smooths to a single vertex with a loop.
    """
    graph = nx.MultiGraph(graph_of(K))
    changed = True
    while changed:
        changed = False
        for v in list(graph.nodes):
            nbrs = [u for _, u in graph.edges(v)]
            if len(nbrs) != 2 or v in nbrs:
                continue
            graph.remove_node(v)
            graph.add_edge(*nbrs)
            changed = True
    return graph


def _shortest_cycle(graph):
    best = None
    for u, v in list(graph.edges()):
        graph.remove_edge(u, v)
        try:
            path = nx.shortest_path(graph, u, v)
        except nx.NetworkXNoPath:
            path = None
        graph.add_edge(u, v)
        if path is not None and (best is None or len(path) < len(best)):
            best = path
    return best


def _essential_segments(graph):
    """ Paths between essential vertices (degree != 2) through degree two vertices
    """
    essential = [v for v in graph.nodes if graph.degree(v) != 2]
    for start in essential:
        for nbr in graph.neighbors(start):
            path = [start, nbr]
            while graph.degree(path[-1]) == 2:
                step = [u for u in graph.neighbors(path[-1]) if u != path[-2]]
                path.append(step[0])
            yield path


def abrams_condition(K, k):
    """ Sufficient subdivision bound for the discretized configuration space of a graph:
        every embedded cycle has at least k + 1 edges and every path between
        distinct essential vertices at least k - 1 edges.
    """
    graph = graph_of(K)
    cycle = _shortest_cycle(graph)
    if cycle is not None and len(cycle) < k + 1:
        return AbramsReport(False, 'cycle', tuple(cycle))
    for path in _essential_segments(graph):
        if path[0] != path[-1] and len(path) - 1 < k - 1:
            return AbramsReport(False, 'path', tuple(path))
    return AbramsReport(True, None, None)


def prepare_graph(K, k):
    """ Minimal uniform edge subdivision of K that passes the Abrams condition for k
    """
    for factor in range(1, k + 2):
        subdivided = subdivide_edges(K, factor)
        if abrams_condition(subdivided, k).holds:
            if factor > 1:
                fu.warn("subdivided every edge of %r into %i edges for %i particles" % (K, factor, k))
            return subdivided
    raise GraphError("No subdivision of %r up to factor %i satisfies the Abrams condition" % (K, k + 1))
