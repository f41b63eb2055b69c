from collections import namedtuple

from scipy import sparse

from .complexes import ChainComplex, ChainMap, ChainComplexError, block_matrix

HocolimResult = namedtuple('HocolimResult', ['complex', 'odd_inclusions', 'even_inclusions'])


class ZigzagDiagram:
    """ Diagram O_1 <- E_1 -> O_2 <- E_2 -> ... -> O_{m+1} of chain complexes.

    `left_maps[p]` goes from `even_nodes[p]` to `odd_nodes[p]`,
    `right_maps[p]` from `even_nodes[p]` to `odd_nodes[p + 1]` (0-based).
    """

    def __init__(self, odd_nodes, even_nodes, left_maps, right_maps, check=False):
        self.odd_nodes = list(odd_nodes)
        self.even_nodes = list(even_nodes)
        self.left_maps = list(left_maps)
        self.right_maps = list(right_maps)
        m = len(self.even_nodes)
        if len(self.odd_nodes) != m + 1:
            raise ChainComplexError("A zigzag with %i even nodes needs %i odd nodes, got %i"
                                    % (m, m + 1, len(self.odd_nodes)))
        if len(self.left_maps) != m or len(self.right_maps) != m:
            raise ChainComplexError("Every even node needs exactly one left and one right map")
        for p in range(m):
            for f, target in ((self.left_maps[p], self.odd_nodes[p]), (self.right_maps[p], self.odd_nodes[p + 1])):
                if not _same(f.source, self.even_nodes[p]) or not _same(f.target, target):
                    raise ChainComplexError("Map at even node %i does not match the diagram nodes" % (p + 1))
                if check:
                    f.check()

    @property
    def length(self):
        return len(self.odd_nodes) + len(self.even_nodes)

    def node(self, position):
        """ Node at the 1-based zigzag position
        """
        if position % 2:
            return self.odd_nodes[(position - 1) // 2]
        return self.even_nodes[position // 2 - 1]

    @classmethod
    def inclusions(cls, nodes, check=False):
        """ Zigzag of subcomplexes given position by position, all arrows are label inclusions
        """
        odd, even = nodes[::2], nodes[1::2]
        left = [ChainMap.inclusion(e, o) for e, o in zip(even, odd[:-1])]
        right = [ChainMap.inclusion(e, o) for e, o in zip(even, odd[1:])]
        return cls(odd, even, left, right, check=check)


def _same(a, b):
    return a is b or (a.top_degree == b.top_degree and all(a.rank(d) == b.rank(d) for d in a.degrees()))


def _total(summands, components):
    """ Total complex of shifted summands.

    `summands` is a list of (complex, shift); `components` a list of
    (target summand, source summand, coeff, map) where `map` is a callable
    deg -> matrix in the source summand's own degree, or the string 'd'
    for the summand's own differential.
    """
    top = max((C.top_degree + s for C, s in summands), default=-1)
    bases = {deg: [label for C, s in summands for label in C.basis(deg - s)]
             for deg in range(top + 1)}
    differentials = {}
    for deg in range(1, top + 1):
        row_sizes = [C.rank(deg - 1 - s) for C, s in summands]
        col_sizes = [C.rank(deg - s) for C, s in summands]
        placed = []
        for trgt, src, coeff, mat in components:
            C, s = summands[src]
            inner = deg - s
            if C.rank(inner) == 0:
                continue
            if mat == 'd':
                if inner < 1:
                    continue
                block = C.d(inner)
            else:
                block = mat(inner)
            if block.shape[0] == 0:
                continue
            placed.append(((trgt, src), coeff * block))
        differentials[deg] = block_matrix(row_sizes, col_sizes, placed)
    return ChainComplex(bases, differentials)


def _tag(C, tag):
    return ChainComplex({deg: [tag + (label,) for label in C.basis(deg)] for deg in C.degrees()},
                        {deg: C.d(deg) for deg in range(1, C.top_degree + 1)})


def hocolim_zigzag(Z, compact=False):
    """ Chain level homotopy colimit of a zigzag diagram.

    The default form is the simplicial replacement total complex
        T = (+)_q O_q (+)_p E_p (+)_p E_p^L[1] (+)_p E_p^R[1]
    with d(x^L) = -(dx)^L + l(x) - x and d(x^R) = -(dx)^R + r(x) - x.
    The compact form is the double mapping cylinder
        T = (+)_q O_q (+)_p E_p[1]
    with d(x[1]) = -(dx)[1] + l(x) - r(x).

    Basis labels are ('o', q, x), ('e', p, x), ('l', p, x), ('r', p, x)
    with 1-based positions q, p. Returns the total complex and the node inclusions;
    in the compact form an even node is included through its left map.
    """
    m = len(Z.even_nodes)
    summands = [(_tag(O, ('o', q + 1)), 0) for q, O in enumerate(Z.odd_nodes)]
    components = [(q, q, 1, 'd') for q in range(m + 1)]

    if compact:
        for p, E in enumerate(Z.even_nodes):
            pos = len(summands)
            summands.append((_tag(E, ('e', p + 1)), 1))
            components.append((pos, pos, -1, 'd'))
            components.append((p, pos, 1, Z.left_maps[p].matrix))
            components.append((p + 1, pos, -1, Z.right_maps[p].matrix))
    else:
        even_pos = []
        for p, E in enumerate(Z.even_nodes):
            even_pos.append(len(summands))
            summands.append((_tag(E, ('e', p + 1)), 0))
            components.append((even_pos[-1], even_pos[-1], 1, 'd'))
        for tag, maps, offset in (('l', Z.left_maps, 0), ('r', Z.right_maps, 1)):
            for p, E in enumerate(Z.even_nodes):
                pos = len(summands)
                summands.append((_tag(E, (tag, p + 1)), 1))
                components.append((pos, pos, -1, 'd'))
                components.append((p + offset, pos, 1, maps[p].matrix))
                components.append((even_pos[p], pos, -1, lambda deg, E=E: _identity(E, deg)))

    T = _total(summands, components)

    def _include(C, tag):
        return ChainMap.from_labels(C, T, lambda label: [(tag + (label,), 1)])

    odd_inclusions = [_include(O, ('o', q + 1)) for q, O in enumerate(Z.odd_nodes)]
    if compact:
        even_inclusions = [odd_inclusions[p].compose(Z.left_maps[p]) for p in range(m)]
    else:
        even_inclusions = [_include(E, ('e', p + 1)) for p, E in enumerate(Z.even_nodes)]
    return HocolimResult(T, odd_inclusions, even_inclusions)


def _identity(C, deg):
    return sparse.identity(C.rank(deg), dtype='int64', format='csr')


def hocolim_map(Z, Z2, odd_maps, even_maps, source=None, target=None, compact=False):
    """ Chain map between homotopy colimits induced by nodewise maps
        that commute with the arrows of both diagrams.
    """
    source = hocolim_zigzag(Z, compact=compact).complex if source is None else source
    target = hocolim_zigzag(Z2, compact=compact).complex if target is None else target
    if compact:
        parts = [('o', odd_maps), ('e', even_maps)]
    else:
        parts = [('o', odd_maps), ('e', even_maps), ('l', even_maps), ('r', even_maps)]

    # the label tags locate the node, the node map sends the inner label
    node_maps = {(tag, p + 1): f for tag, maps in parts for p, f in enumerate(maps)}
    columns = {}

    def _image(label):
        tag, pos, inner = label
        f = node_maps[(tag, pos)]
        key = (tag, pos, id(f))
        if key not in columns:
            columns[key] = f.columns()
        return [((tag, pos, trgt), coeff) for trgt, coeff in columns[key].get(inner, ())]

    return ChainMap.from_labels(source, target, _image)

