from collections import namedtuple
from itertools import combinations

from ..complex_core import ConstraintSet, SimplicialMap, constrained_subcomplex
from ..config_combinatorics import IndexTupleError, check_index_tuple, insert_position, wall_relabel
from ..config_models import power


class TowerConsistencyError(Exception):
    """ Custom exception for tower arrows that are not subcomplex inclusions
        and for restrictions that mention the fibered coordinate
    """
    pass


class PlacementState:
    """ Particles placed on the line, listed from bottom to top.

    `ties[r]` says whether `order[r]` and `order[r + 1]` sit at the same height.
    Tied particles form consecutive blocks and have to be at distinct points of
    the base, so the constraints of a state are all pairs inside a block.
    """

    def __init__(self, order, ties=None):
        self.order = tuple(order)
        self.ties = (False,) * (len(self.order) - 1) if ties is None else tuple(bool(t) for t in ties)
        assert len(self.order) > 0, "empty placement"
        assert len(self.ties) == len(self.order) - 1, "%s does not fit %s" % (self.ties, self.order)

    @classmethod
    def from_prefix(cls, prefix):
        """ Untied state reached by placing particles 2, 3, ... into the gaps an index tuple names,
            so it is ordered by the ranks of the tuple
        """
        prefix = check_index_tuple(prefix)
        state = cls((1,))
        for m in range(len(prefix)):
            state = state.place(m + 2, 2 * insert_position(prefix[:m + 1]) - 1)
        return state

    @property
    def n_placed(self):
        return len(self.order)

    @property
    def n_positions(self):
        return 2 * len(self.order) + 1

    @property
    def key(self):
        return self.order, self.ties

    def __eq__(self, other):
        if not isinstance(other, PlacementState):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "PlacementState(%s)" % ' '.join('(%s)' % ' '.join(map(str, b)) for b in self.blocks())

    def blocks(self):
        blocks = [[self.order[0]]]
        for tied, x in zip(self.ties, self.order[1:]):
            if tied:
                blocks[-1].append(x)
            else:
                blocks.append([x])
        return [tuple(b) for b in blocks]

    def constraints(self, arity=None):
        arity = self.n_placed if arity is None else arity
        return ConstraintSet(arity, [pair for block in self.blocks() for pair in combinations(block, 2)])

    def place(self, particle, position):
        """ Place a new particle at one of the 2m + 1 zigzag positions.

        Odd position 2r + 1 is the gap above the r-th particle, even position
        2r is the height of the r-th particle (the new one is listed just below it).
        A particle dropped into the gap inside a block joins that block.
        """
        m = self.n_placed
        if not 1 <= position <= 2 * m + 1:
            raise IndexTupleError("Zigzag position %i is out of range [1, %i]" % (position, 2 * m + 1))
        r = position // 2
        if position % 2:
            index = r
            left = right = 0 < r < m and self.ties[r - 1]
        else:
            index = r - 1
            left = index > 0 and self.ties[index - 1]
            right = True

        ties = list(self.ties)
        if 0 < index < m:
            ties[index - 1:index] = [left, right]
        elif index == 0:
            ties.insert(0, right)
        else:
            ties.append(left)
        return PlacementState(self.order[:index] + (particle,) + self.order[index:], ties)


ROOT = PlacementState((1,))


class ConstraintNode:
    """ Constrained subcomplex of the k-fold product of the base.
    """

    def __init__(self, base, constraints, state=None):
        self.base = base
        self.constraints = constraints
        self.state = state
        self._realized = None

    @property
    def arity(self):
        return self.constraints.arity

    @property
    def realized(self):
        if self._realized is None:
            self._realized = constrained_subcomplex(power(self.base, self.arity), self.constraints)
        return self._realized

    @property
    def projection(self):
        """ Forget the last coordinate, into the (k - 1)-fold product
        """
        if self.arity == 1:
            return None
        return SimplicialMap(self.realized, power(self.base, self.arity - 1),
                             {v: v[:-1] for v in self.realized.vertices}, check=False)

    def __repr__(self):
        return "ConstraintNode(%r)" % (self.constraints,)


class LevelDiagram:
    """ Zigzag over the placements of one particle into a state.

    `children[q - 1]` is the node at position q: a `ConstraintNode` at the
    deepest level, a `LevelDiagram` for the next particle otherwise.
    """

    def __init__(self, base, state, particle, children):
        self.base = base
        self.state = state
        self.particle = particle
        self.children = list(children)
        assert len(self.children) == 2 * particle - 1, "%i positions for particle %i" % (len(self.children),
                                                                                           particle)

    @property
    def n_positions(self):
        return len(self.children)

    def node(self, position):
        return self.children[position - 1]

    def leaves(self):
        return list(_leaves(self, ()))

    def map_leaves(self, fn):
        children = [fn(child) if isinstance(child, ConstraintNode) else child.map_leaves(fn)
                    for child in self.children]
        return LevelDiagram(self.base, None, self.particle, children)

    def __repr__(self):
        return "LevelDiagram(particle=%i, %s)" % (self.particle, self.state)


def _leaves(node, path):
    if isinstance(node, ConstraintNode):
        yield path, node
        return
    for q, child in enumerate(node.children, 1):
        yield from _leaves(child, path + (q,))


ArrowData = namedtuple('ArrowData', ['particle', 'position', 'side', 'relabel', 'pairs'])


def _arrow(source, target, p, side, relabel):
    particle = source.state.n_placed
    expected = tuple(source.state.order[relabel[q] - 1] for q in range(1, particle + 1))
    if target.state.order != expected:
        raise TowerConsistencyError("Order %s of the %s side of wall %i does not match %s"
                                    % (target.state.order, side, p, expected))
    source_leaves, target_leaves = list(_leaves(source, ())), list(_leaves(target, ()))
    if [path for path, _ in source_leaves] != [path for path, _ in target_leaves]:
        raise TowerConsistencyError("Diagrams on both sides of wall %i have different shapes" % p)
    pairs = []
    for (path, src), (_, trgt) in zip(source_leaves, target_leaves):
        if not src.constraints.issuperset(trgt.constraints):
            raise TowerConsistencyError("Arrow at %s of wall %i maps %r into %r which is not an inclusion"
                                        % (path, p, src.constraints, trgt.constraints))
        pairs.append((path, src, trgt))
    return ArrowData(particle, p, side, relabel, pairs)


def left_arrow(wall, left, p):
    """ Arrow from the wall at position 2p into the odd node at 2p - 1
    """
    return _arrow(wall, left, p, 'left', {q: q for q in range(1, wall.state.n_placed + 1)})


def cross_wall(wall, right, p):
    """ Arrow from the wall at position 2p into the odd node at 2p + 1.

    Deeper placements on the right are indexed by the wall order with the
    rank positions p, p + 1 exchanged; every leaf pair has to be a constraint
    inclusion.
    """
    return _arrow(wall, right, p, 'right', wall_relabel(p, wall.state.n_placed - 1))


def base_zigzag(prefix, K, k):
    """ Deepest zigzag over an untied prefix: full products at odd positions,
        the pair (k, j_p) at position 2p.
    """
    prefix = check_index_tuple(prefix)
    if len(prefix) != k - 2:
        raise IndexTupleError("Prefix %s has length %i, expected %i" % (prefix, len(prefix), k - 2))
    state = PlacementState.from_prefix(prefix)
    children = []
    for q in range(1, 2 * k):
        child = state.place(k, q)
        children.append(ConstraintNode(K, child.constraints(k), child))
    return LevelDiagram(K, state, k, children)


def _extra_pairs(extra):
    if extra is None or len(extra) == 0:
        return []
    if isinstance(extra, ConstraintSet):
        return sorted(extra.pairs)
    if isinstance(extra[0], int):
        return [tuple(extra)]
    return [tuple(pair) for pair in extra]


def restrict_diagram(D, extra):
    """ Add constraint pairs on the already placed coordinates to every node
    """
    pairs = _extra_pairs(extra)
    for pair in pairs:
        if max(pair) >= D.particle:
            raise TowerConsistencyError("Constraint %s mentions the fibered coordinate %i" % (pair, D.particle))
    if not pairs:
        return D
    return D.map_leaves(lambda node: ConstraintNode(node.base, node.constraints.union(pairs)))


class TowerDiagram:
    """ Nested zigzags for particles 2..k over the root placement of particle 1.
    """

    def __init__(self, base, k, root, arrows):
        self.base = base
        self.k = k
        self.root = root
        self.arrows = arrows

    def levels(self):
        """ particle -> distinct level diagrams placing it
        """
        levels = {}
        seen = set()

        def _visit(node):
            if isinstance(node, ConstraintNode) or id(node) in seen:
                return
            seen.add(id(node))
            levels.setdefault(node.particle, []).append(node)
            for child in node.children:
                _visit(child)

        _visit(self.root)
        return levels

    def leaves(self):
        return list(_leaves(self.root, ()))

    def leaf_constraints(self):
        """ Distinct leaf constraint sets in a fixed order
        """
        distinct = {node.constraints for _, node in self.leaves()}
        return sorted(distinct, key=lambda c: (len(c), sorted(c.pairs)))


def build_tower_diagram(K, k):
    """ All nested zigzags of the k-particle tower with their checked arrows
    """
    if k < 1:
        raise IndexTupleError("Number of particles must be positive, got %i" % k)
    built = {}
    arrows = []

    def _build(state):
        if state.n_placed == k:
            return ConstraintNode(K, state.constraints(k), state)
        if state.key in built:
            return built[state.key]
        c = state.n_placed + 1
        children = [_build(state.place(c, q)) for q in range(1, 2 * c)]
        for p in range(1, c):
            wall = children[2 * p - 1]
            arrows.append(left_arrow(wall, children[2 * p - 2], p))
            arrows.append(cross_wall(wall, children[2 * p], p))
        built[state.key] = LevelDiagram(K, state, c, children)
        return built[state.key]

    return TowerDiagram(K, k, _build(ROOT), arrows)
