from collections import namedtuple

from ..chain_algebra import ZigzagDiagram, ChainMap, hocolim_zigzag, hocolim_map, homology, tensor, RATIONAL
from ..complex_core import (ConstraintSet, ComplexValidationError, SimplicialMap, chains, constrained_cells,
                            constrained_subcomplex, drop_last_factor, induced_map, staircase_size, two_points)
from ..config_models import CELLULAR, REALIZATIONS, abrams_condition, power
from ..utils import function_utils as fu
from .diagrams import ROOT, ConstraintNode, build_tower_diagram

DEFAULT_MAX_K = 4
DEFAULT_MAX_SIMPLICES = 2000000


class ResourceCapError(Exception):
    """ Custom exception for towers beyond the particle cap or the cell budget
    """
    pass


TowerResult = namedtuple('TowerResult', ['complex', 'projection'])
BoundaryModel = namedtuple('BoundaryModel', ['complex', 'tower', 'factor'])


class NodeRealizer:
    """ Chain complexes of constraint nodes, cached by constraint set.

    The cellular realization uses products of simplices with disjoint carriers,
    the simplicial one the constrained staircase triangulation.
    """

    def __init__(self, base, realization=CELLULAR):
        if realization not in REALIZATIONS:
            raise ValueError("Unknown realization %s, expected one of %s" % (realization, REALIZATIONS))
        self.base = base
        self.realization = realization
        self._chains = {}
        self._subcomplexes = {}

    def __contains__(self, constraints):
        return constraints in self._chains

    def preload(self, constraints, C):
        self._chains[constraints] = C

    def subcomplex(self, constraints):
        if constraints not in self._subcomplexes:
            self._subcomplexes[constraints] = constrained_subcomplex(power(self.base, constraints.arity),
                                                                     constraints)
        return self._subcomplexes[constraints]

    def __call__(self, constraints):
        if constraints not in self._chains:
            if self.realization == CELLULAR:
                self._chains[constraints] = constrained_cells(self.base, constraints)
            else:
                self._chains[constraints] = chains(self.subcomplex(constraints))
        return self._chains[constraints]

    def projection(self, constraints):
        """ Forget the last coordinate, into the node of the remaining constraints
        """
        lower = constraints.forget_last()
        source, target = self(constraints), self(lower)
        if self.realization == CELLULAR:
            return drop_last_factor(source, target)
        sub, lower_sub = self.subcomplex(constraints), self.subcomplex(lower)
        f = SimplicialMap(sub, lower_sub, {v: v[:-1] for v in sub.vertices}, check=False)
        return induced_map(f, source, target)


class TowerAssembler:
    """ Nested compact homotopy colimits over the tower diagrams, memoized by placement state.

    The diagram of every arity comes from `build_tower_diagram`, which checks each
    wall arrow for constraint inclusion and raises `TowerConsistencyError` otherwise.
    `complex(k)` is the chain complex of E^k, `projection(k)` the chain map
    E^k -> E^{k-1}: nodewise on the nested zigzags and, at the level of the
    last particle, the projection of the odd nodes with the even cylinders
    collapsed.
    """

    def __init__(self, base, realization=CELLULAR, max_simplices=DEFAULT_MAX_SIMPLICES,
                 realizer=None, check=False):
        self.base = base
        self.realizer = NodeRealizer(base, realization) if realizer is None else realizer
        self.max_simplices = max_simplices
        self.check = check
        self._diagrams = {}
        self._nodes = {}
        self._projections = {}

    def _check_budget(self, C, what):
        if C.size > self.max_simplices:
            raise ResourceCapError("%s has %i cells, the budget is %i" % (what, C.size, self.max_simplices))

    def diagram(self, arity):
        if arity not in self._diagrams:
            self._diagrams[arity] = build_tower_diagram(self.base, arity)
        return self._diagrams[arity]

    def node(self, node, arity):
        """ Chain complex of a diagram node and the zigzag it is the homotopy colimit of
        """
        key = (node.state.key, arity)
        if key not in self._nodes:
            if isinstance(node, ConstraintNode):
                C, Z = self.realizer(node.constraints), None
            else:
                children = [self.node(child, arity)[0] for child in node.children]
                Z = ZigzagDiagram.inclusions(children, check=self.check)
                C = hocolim_zigzag(Z, compact=True).complex
            self._check_budget(C, "node %r of arity %i" % (node.state, arity))
            self._nodes[key] = (C, Z)
        return self._nodes[key]

    def complex(self, k):
        return self.node(self.diagram(k).root, k)[0]

    def projection(self, k):
        return self._project(self.diagram(k).root, self.diagram(k - 1).root, k)

    def _project(self, upper, lower, arity):
        key = (upper.state.key, arity)
        if key in self._projections:
            return self._projections[key]
        source, Z = self.node(upper, arity)
        target, Z2 = self.node(lower, arity - 1)

        if isinstance(lower, ConstraintNode):
            # last particle: odd nodes project, even cylinders collapse
            columns = {q: self.realizer.projection(child.constraints).columns()
                       for q, child in enumerate(upper.children, 1) if q % 2}

            def _image(label):
                tag, pos, inner = label
                if tag == 'e':
                    return []
                return columns[2 * pos - 1].get(inner, [])

            f = ChainMap.from_labels(source, target, _image, check=self.check)
        else:
            maps = [self._project(child, lower_child, arity)
                    for child, lower_child in zip(upper.children, lower.children)]
            f = hocolim_map(Z, Z2, maps[::2], maps[1::2], source=source, target=target, compact=True)
            if self.check:
                f.check()
        self._projections[key] = f
        return f

    def check_euler(self, k):
        """ Compare against chi(E^k) = chi(E^{k-1}) (chi(K) - (k - 1)) for certified graphs
        """
        if k < 2 or not self.base.is_graph or not abrams_condition(self.base, k).holds:
            return None
        expected = self.complex(k - 1).euler_characteristic * (self.base.euler_characteristic - (k - 1))
        found = self.complex(k).euler_characteristic
        if found != expected:
            fu.warn("euler characteristic of the %i particle tower is %i, expected %i" % (k, found, expected))
        return found == expected


def check_product_size(factors, max_simplices=DEFAULT_MAX_SIMPLICES):
    """ Refuse staircase products beyond the simplex budget before building them
    """
    size = staircase_size(factors)
    if size > max_simplices:
        raise ResourceCapError("The staircase product of %i factors has %i simplices, the budget is %i"
                               % (len(factors), size, max_simplices))
    return size


def check_tower_size(K, k, max_k=DEFAULT_MAX_K, max_simplices=DEFAULT_MAX_SIMPLICES, realization=CELLULAR):
    """ Refuse towers beyond the particle cap or whose untied nodes, the full
        k-fold products, exceed the budget in the given realization
    """
    if not 1 <= k <= max_k:
        raise ResourceCapError("Number of particles %i is outside [1, %i]" % (k, max_k))
    if realization == CELLULAR:
        if len(K) ** k > max_simplices:
            raise ResourceCapError("The %i-fold product of %r has %i cells, the budget is %i"
                                   % (k, K, len(K) ** k, max_simplices))
    else:
        check_product_size([K] * k, max_simplices)


def assemble_tower(K, k, max_k=DEFAULT_MAX_K, max_simplices=DEFAULT_MAX_SIMPLICES,
                   realization=CELLULAR, realizer=None, check=False):
    """ Chain complex of E^k and its projection to E^{k-1} (None for k = 1)
    """
    check_tower_size(K, k, max_k, max_simplices, realization)
    assembler = TowerAssembler(K, realization, max_simplices, realizer=realizer, check=check)
    E = assembler.complex(k)
    if k == 1:
        return TowerResult(E, None)
    projection = assembler.projection(k)
    assembler.check_euler(k)
    return TowerResult(E, projection)


def projection_tower(K, k, max_k=DEFAULT_MAX_K, max_simplices=DEFAULT_MAX_SIMPLICES,
                     realization=CELLULAR, check=False):
    """ The projections E^k -> E^{k-1} -> ... -> E^1 = K, top first
    """
    check_tower_size(K, k, max_k, max_simplices, realization)
    assembler = TowerAssembler(K, realization, max_simplices, check=check)
    return [assembler.projection(arity) for arity in range(k, 1, -1)]


def boundary_model(K, k, max_k=DEFAULT_MAX_K, max_simplices=DEFAULT_MAX_SIMPLICES,
                   realization=CELLULAR):
    """ E^k times K times two points, the boundary piece of the next tower stage.

    E^1 is K itself, so k = 1 gives K x K x S^0 (Betti (2, 4, 2) for a hexagon).
    """
    E = assemble_tower(K, k, max_k=max_k, max_simplices=max_simplices, realization=realization).complex
    factor = tensor(chains(K), chains(two_points()))
    return BoundaryModel(tensor(E, factor), E, factor)


def fiber_homology(K, points, mode=RATIONAL):
    """ Homology of hocolim(K <- K - q_1 -> K <- ... -> K) for distinct vertices q_i,
        the fiber of forgetting the last of len(points) + 1 particles.
    """
    points = list(points)
    if len(set(points)) != len(points):
        raise ComplexValidationError("Fiber points %s are not distinct" % (points,))
    for q in points:
        if not K.has_vertex(q):
            raise ComplexValidationError("Fiber point %s is not a vertex" % (q,), simplex=(q,))
    A = chains(K)
    nodes = [A]
    for q in points:
        nodes.extend([chains(K.without_vertices([q])), A])
    return homology(hocolim_zigzag(ZigzagDiagram.inclusions(nodes)).complex, mode)


def leaf_constraints(k):
    """ Distinct leaf constraint sets of the towers for k and k - 1 particles
    """
    found = set()

    def _visit(state, arity, seen):
        if state.key in seen:
            return
        seen.add(state.key)
        if state.n_placed == arity:
            found.add(state.constraints(arity))
            return
        c = state.n_placed + 1
        for q in range(1, 2 * c):
            _visit(state.place(c, q), arity, seen)

    for arity in range(max(k - 1, 1), k + 1):
        _visit(ROOT, arity, set())
    return sorted(found, key=lambda c: (c.arity, len(c), sorted(c.pairs)))


def constraints_from_list(arity, pairs):
    return ConstraintSet(arity, [tuple(p) for p in pairs])


def tower_rows(k, C, summary):
    """ Rows of the tower report table
    """
    rows = [('k', k), ('cells', C.size), ('euler', C.euler_characteristic), ('betti', summary.betti_row())]
    if summary.torsion is not None:
        rows.append(('torsion', summary.torsion_row()))
    return rows
