from collections import namedtuple
from functools import lru_cache
from itertools import combinations, product

import numpy as np
from scipy.special import comb


class ComplexValidationError(Exception):
    """ Custom exception for complexes that violate face closure,
        reference undeclared vertices or are combined inconsistently
    """
    def __init__(self, msg, simplex=None):
        super().__init__(msg)
        self.simplex = simplex


class GraphError(Exception):
    """ Custom exception for graph operations on complexes of dimension > 1
    """
    pass


ValidationReport = namedtuple('ValidationReport', ['n_vertices', 'f_vector', 'euler_characteristic'])


class OrderedComplex:
    """ Finite abstract simplicial complex with totally ordered vertices.

    Simplices are stored as tuples sorted by the vertex order.
    For complexes produced by `staircase_product`, `factors` holds the
    factor complexes and the vertices are tuples with one entry per factor.
    """

    def __init__(self, vertices, simplices, factors=None):
        self.vertices = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        if len(self._index) != len(self.vertices):
            raise ComplexValidationError("Duplicate vertex declaration")
        n = len(self.vertices)

        # undeclared vertices are sorted to the end, `validate` reports them
        def _key(v):
            return (self._index.get(v, n), str(v))

        self.simplices = frozenset(tuple(sorted(set(s), key=_key)) for s in simplices)
        self.factors = None if factors is None else tuple(factors)
        self._by_dim = None

    #
    # queries
    #

    def index(self, vertex):
        return self._index[vertex]

    def has_vertex(self, vertex):
        return vertex in self._index

    def key(self, simplex):
        """ Vertex indices of a simplex, used for the lexicographic order
        """
        return tuple(self._index[v] for v in simplex)

    def sort_simplex(self, vertices):
        return tuple(sorted(set(vertices), key=self._index.__getitem__))

    def __contains__(self, simplex):
        return tuple(simplex) in self.simplices

    def __len__(self):
        return len(self.simplices)

    def __eq__(self, other):
        if not isinstance(other, OrderedComplex):
            return NotImplemented
        return self.vertices == other.vertices and self.simplices == other.simplices

    def __hash__(self):
        return hash((self.vertices, self.simplices))

    def __repr__(self):
        return "OrderedComplex(n_vertices=%i, f_vector=%s)" % (len(self.vertices), self.f_vector)

    def simplices_of_dim(self, dim):
        """ Simplices of the given dimension in lexicographic order
        """
        if self._by_dim is None:
            by_dim = {}
            for s in self.simplices:
                by_dim.setdefault(len(s) - 1, []).append(s)
            n = len(self.vertices)
            self._by_dim = {d: sorted(ss, key=lambda s: tuple(self._index.get(v, n) for v in s))
                            for d, ss in by_dim.items()}
        return self._by_dim.get(dim, [])

    @property
    def dim(self):
        return max((len(s) - 1 for s in self.simplices), default=-1)

    @property
    def f_vector(self):
        return tuple(len(self.simplices_of_dim(d)) for d in range(self.dim + 1))

    @property
    def euler_characteristic(self):
        f = np.array(self.f_vector, dtype='int64')
        signs = (-1) ** np.arange(len(f))
        return int(np.sum(signs * f))

    @property
    def is_graph(self):
        return self.dim <= 1

    @property
    def arity(self):
        return 1 if self.factors is None else len(self.factors)

    def edges(self):
        return self.simplices_of_dim(1)

    def without_vertices(self, removed):
        """ Subcomplex of all simplices avoiding the given vertices
        """
        removed = set(removed)
        vertices = [v for v in self.vertices if v not in removed]
        simplices = [s for s in self.simplices if removed.isdisjoint(s)]
        return OrderedComplex(vertices, simplices, factors=self.factors)


def validate(K):
    """ Check face closure and vertex declaration.

    Returns a `ValidationReport` with the f-vector and euler characteristic,
    raises `ComplexValidationError` naming the first offending simplex.
    """
    for dim in range(K.dim + 1):
        for s in sorted(K.simplices_of_dim(dim), key=str):
            for v in s:
                if not K.has_vertex(v):
                    raise ComplexValidationError("Simplex %s references undeclared vertex %s" % (s, v),
                                                 simplex=s)
            if dim == 0:
                continue
            for face in combinations(s, dim):
                if face not in K.simplices:
                    raise ComplexValidationError("Simplex %s is missing its face %s" % (s, face),
                                                 simplex=s)
    return ValidationReport(len(K.vertices), K.f_vector, K.euler_characteristic)


def close_faces(vertices, simplices):
    """ Build a complex from top simplices, adding all nonempty faces
    """
    closed = set()
    for s in simplices:
        s = tuple(s)
        for d in range(1, len(s) + 1):
            closed.update(combinations(s, d))
    return OrderedComplex(vertices, closed)


class SimplicialMap:
    """ Vertex assignment between ordered complexes
    """

    def __init__(self, source, target, assignment, check=True):
        self.source = source
        self.target = target
        self.assignment = dict(assignment)
        if check:
            self.check()

    def check(self):
        for v in self.source.vertices:
            if v not in self.assignment or not self.target.has_vertex(self.assignment[v]):
                raise ComplexValidationError("Vertex %s has no image in the target" % (v,), simplex=(v,))
        for s in self.source.simplices:
            image = self.image(s)
            if image not in self.target.simplices:
                raise ComplexValidationError("Image %s of simplex %s is not a simplex of the target" % (image, s),
                                             simplex=s)

    def image(self, simplex):
        """ The image simplex, sorted in the target order, without repetitions
        """
        return self.target.sort_simplex(self.assignment[v] for v in simplex)

    def __call__(self, vertex):
        return self.assignment[vertex]

    def __eq__(self, other):
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.assignment == other.assignment

    def compose(self, other):
        """ self after other
        """
        if other.target != self.source:
            raise ComplexValidationError("Cannot compose simplicial maps with mismatching complexes")
        return SimplicialMap(other.source, self.target,
                             {v: self.assignment[w] for v, w in other.assignment.items()},
                             check=False)

    @classmethod
    def identity(cls, K):
        return cls(K, K, {v: v for v in K.vertices}, check=False)

    @classmethod
    def inclusion(cls, sub, K):
        return cls(sub, K, {v: v for v in sub.vertices})


class ConstraintSet:
    """ Pairwise distinctness conditions (u, v), 1 <= v < u <= arity,
        on the coordinates of a product complex.
    """

    def __init__(self, arity, pairs=()):
        if arity < 1:
            raise ValueError("Constraint arity must be positive, got %i" % arity)
        normalized = set()
        for pair in pairs:
            u, v = pair
            u, v = max(u, v), min(u, v)
            if v < 1 or u > arity or u == v:
                raise ValueError("Constraint %s is not a pair of distinct coordinates in 1..%i" % (tuple(pair), arity))
            normalized.add((u, v))
        self.arity = arity
        self.pairs = frozenset(normalized)

    @classmethod
    def full(cls, arity):
        return cls(arity, combinations(range(arity, 0, -1), 2))

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __len__(self):
        return len(self.pairs)

    def __eq__(self, other):
        if not isinstance(other, ConstraintSet):
            return NotImplemented
        return self.arity == other.arity and self.pairs == other.pairs

    def __hash__(self):
        return hash((self.arity, self.pairs))

    def __repr__(self):
        return "ConstraintSet(%i, %s)" % (self.arity, sorted(self.pairs))

    def issuperset(self, other):
        return self.arity == other.arity and self.pairs >= other.pairs

    def union(self, pairs):
        return ConstraintSet(self.arity, self.pairs | set(pairs))

    def mentions(self, coordinate):
        return any(coordinate in pair for pair in self.pairs)

    def with_arity(self, arity):
        """ Same pairs, seen in a product of different arity
        """
        return ConstraintSet(arity, self.pairs)

    def forget_last(self):
        """ Pairs not involving the last coordinate, in arity - 1
        """
        return ConstraintSet(self.arity - 1, [p for p in self.pairs if self.arity not in p])

    def relabel(self, perm):
        """ Apply a coordinate permutation given as dict old -> new
        """
        return ConstraintSet(self.arity, [(perm[u], perm[v]) for u, v in self.pairs])

    def as_list(self):
        return [list(p) for p in self]


#
# products and constrained subcomplexes
#


def _upper_neighbors(K):
    """ For every vertex index i the indices j >= i such that {i, j} spans a simplex
    """
    upper = {i: [i] for i in range(len(K.vertices))}
    for s in K.simplices_of_dim(1):
        i, j = K.key(s)
        upper[i].append(j)
    return {i: sorted(js) for i, js in upper.items()}


def staircase_product(factors):
    """ Ordered product triangulation of the given factors.

    Vertices are tuples ordered lexicographically; simplices are chains in the
    coordinatewise order whose projection to each factor spans a simplex.
    """
    factors = tuple(factors)
    if len(factors) == 0:
        raise ComplexValidationError("Product of an empty list of factors")
    uppers = [_upper_neighbors(F) for F in factors]
    factor_keys = [set(F.key(s) for s in F.simplices) for F in factors]

    index_vertices = list(product(*[range(len(F.vertices)) for F in factors]))

    def _proj_ok(carriers, w):
        new = []
        for f, (carrier, wi) in enumerate(zip(carriers, w)):
            if wi in carrier:
                new.append(carrier)
                continue
            extended = tuple(sorted(carrier + (wi,)))
            if extended not in factor_keys[f]:
                return None
            new.append(extended)
        return new

    simplices = []

    def _extend(chain, carriers):
        simplices.append(chain)
        last = chain[-1]
        for w in product(*[upper[i] for upper, i in zip(uppers, last)]):
            if w == last:
                continue
            new = _proj_ok(carriers, w)
            if new is not None:
                _extend(chain + (w,), new)

    for v in index_vertices:
        _extend((v,), [(i,) for i in v])

    def _vertex(idx):
        return tuple(F.vertices[i] for F, i in zip(factors, idx))

    vertices = [_vertex(v) for v in index_vertices]
    return OrderedComplex(vertices, [tuple(_vertex(v) for v in s) for s in simplices],
                          factors=factors)


def _interior_chains(dims):
    """ Simplices of the staircase triangulation of a product of simplices
        of the given dimensions that project onto every factor simplex.

    A chain of n + 1 vertices is a weakly increasing surjection onto each
    factor, C(n, p) choices per factor; inclusion-exclusion removes the
    steps where no coordinate moves.
    """
    total = 0
    for n in range(max(dims, default=0), sum(dims) + 1):
        for j in range(n + 1):
            term = comb(n, j, exact=True)
            for p in dims:
                term *= comb(n - j, p, exact=True)
            total += (-1) ** j * term
    return total


def staircase_size(factors):
    """ Number of simplices of `staircase_product(factors)`, without building it
    """
    f_vectors = [F.f_vector for F in factors]
    total = 0
    for dims in product(*[range(len(f)) for f in f_vectors]):
        n_cells = 1
        for f, d in zip(f_vectors, dims):
            n_cells *= f[d]
        total += n_cells * _interior_chains(dims)
    return total


def projection_map(P, coordinate):
    """ Simplicial projection of a product onto one of its factors (1-based)
    """
    if P.factors is None:
        raise ComplexValidationError("Complex is not a product")
    F = P.factors[coordinate - 1]
    return SimplicialMap(P, F, {v: v[coordinate - 1] for v in P.vertices}, check=False)


def _check_arity(P, constraints):
    if P.factors is None or len(P.factors) != constraints.arity:
        arity = 0 if P.factors is None else len(P.factors)
        raise ComplexValidationError("Constraint arity %i does not match product arity %i" % (constraints.arity,
                                                                                              arity))


def satisfies(simplex, constraints):
    """ Are the coordinate carriers of a product simplex disjoint for all constrained pairs
    """
    for u, v in constraints.pairs:
        if not {x[u - 1] for x in simplex}.isdisjoint({x[v - 1] for x in simplex}):
            return False
    return True


def constrained_subcomplex(P, constraints):
    """ Partial deleted product: simplices of P whose u-th and v-th
        coordinate carriers are vertex disjoint for all (u, v) in constraints.
    """
    _check_arity(P, constraints)
    simplices = [s for s in P.simplices if satisfies(s, constraints)]
    kept = {x for s in simplices if len(s) == 1 for x in s}
    vertices = [v for v in P.vertices if v in kept]
    return OrderedComplex(vertices, simplices, factors=P.factors)


def relabel_coordinates(P, perm):
    """ Permute the coordinates of a product complex.

    `perm` maps old coordinate positions to new ones (1-based).
    """
    k = P.arity
    if sorted(perm) != list(range(1, k + 1)) or sorted(perm.values()) != list(range(1, k + 1)):
        raise ComplexValidationError("%s is not a permutation of the %i coordinates" % (perm, k))

    def _move(v):
        out = [None] * k
        for old, new in perm.items():
            out[new - 1] = v[old - 1]
        return tuple(out)

    factors = [None] * k
    for old, new in perm.items():
        factors[new - 1] = P.factors[old - 1]
    vertices = sorted((_move(v) for v in P.vertices),
                      key=lambda v: tuple(F.index(x) for F, x in zip(factors, v)))
    return OrderedComplex(vertices, [[_move(v) for v in s] for s in P.simplices], factors=factors)


#
# subdivision
#


def barycentric_subdivide(K, rounds=1):
    """ Iterated barycentric subdivision.

    The vertices of one round are the simplices of the input, in lexicographic
    order of their vertex indices; the simplices are the flags of faces.
    """
    assert rounds >= 0, "Number of rounds must be non-negative, got %i" % rounds
    for _ in range(rounds):
        K = _subdivide_once(K)
    return K


def _subdivide_once(K):
    faces = sorted(K.simplices, key=K.key)

    @lru_cache(maxsize=None)
    def _flags(s):
        # all increasing face chains ending in s
        chains = [(s,)]
        for d in range(1, len(s)):
            for face in combinations(s, d):
                chains.extend(c + (s,) for c in _flags(face))
        return chains

    simplices = [flag for s in faces for flag in _flags(s)]
    return OrderedComplex(faces, simplices)


def subdivide_edges(K, factor):
    """ Replace every edge of a graph by a path of `factor` edges.

    The original vertices keep their identifiers and order; new vertices
    are appended edge by edge.
    """
    if not K.is_graph:
        raise GraphError("Edge subdivision needs a graph, got a complex of dimension %i" % K.dim)
    assert factor >= 1, "Subdivision factor must be positive, got %i" % factor
    if factor == 1:
        return K
    vertices = list(K.vertices)
    simplices = [(v,) for v in K.vertices]
    for u, v in K.edges():
        path = [u] + ["%s~%s~%i" % (u, v, i) for i in range(1, factor)] + [v]
        vertices.extend(path[1:-1])
        simplices.extend((x,) for x in path[1:-1])
        simplices.extend(zip(path[:-1], path[1:]))
    return OrderedComplex(vertices, simplices)


#
# standard complexes
#


def point():
    return OrderedComplex([0], [(0,)])


def two_points():
    return OrderedComplex([0, 1], [(0,), (1,)])


def path_graph(n_edges):
    """ The path P_n with n edges and vertices 0..n
    """
    vertices = list(range(n_edges + 1))
    return close_faces(vertices, [(v,) for v in vertices] + [(i, i + 1) for i in range(n_edges)])


def cycle_graph(n):
    """ The cycle C_n with vertices 0..n-1
    """
    assert n >= 3, "A simplicial cycle needs at least 3 vertices"
    vertices = list(range(n))
    return close_faces(vertices, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def simplex(dim):
    vertices = list(range(dim + 1))
    return close_faces(vertices, [tuple(vertices)])


def simplex_boundary(dim):
    vertices = list(range(dim + 1))
    return close_faces(vertices, list(combinations(vertices, dim)))


def real_projective_plane():
    """ The six vertex triangulation
    """
    triangles = [(0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 4), (0, 3, 5),
                 (1, 2, 3), (1, 2, 5), (1, 3, 4), (2, 4, 5), (3, 4, 5)]
    return close_faces(list(range(6)), triangles)
