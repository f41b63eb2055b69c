import numpy as np
from scipy import sparse

from ..chain_algebra.complexes import ChainComplex, ChainMap
from .complexes import ComplexValidationError


def _boundary(rows, cols, row_index):
    """ Simplicial boundary of the simplices in `cols` in terms of `rows`
    """
    ri, ci, vals = [], [], []
    for j, s in enumerate(cols):
        for i in range(len(s)):
            ri.append(row_index[s[:i] + s[i + 1:]])
            ci.append(j)
            vals.append(-1 if i % 2 else 1)
    return sparse.csr_matrix((np.array(vals, dtype='int64'), (ri, ci)),
                             shape=(len(rows), len(cols)), dtype='int64')


def chains(K):
    """ Simplicial chain complex with incidence signs from the vertex order.

    The basis in degree n are the n-simplices of K in lexicographic order.
    """
    bases = {d: K.simplices_of_dim(d) for d in range(K.dim + 1)}
    differentials = {}
    for d in range(1, K.dim + 1):
        row_index = {s: i for i, s in enumerate(bases[d - 1])}
        differentials[d] = _boundary(bases[d - 1], bases[d], row_index)
    return ChainComplex(bases, differentials)


def _permutation_sign(seq):
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def induced_map(f, source=None, target=None):
    """ Chain map induced by a simplicial map.

    Degenerate images map to zero, the sign is the sign of the permutation
    that sorts the image vertices into the target order.
    """
    source = chains(f.source) if source is None else source
    target = chains(f.target) if target is None else target
    matrices = {}
    for d in source.degrees():
        ri, ci, vals = [], [], []
        target_index = target.index(d)
        for j, s in enumerate(source.basis(d)):
            image = [f(v) for v in s]
            if len(set(image)) < len(image):
                if f.target.sort_simplex(image) not in f.target.simplices:
                    raise ComplexValidationError("non-simplicial vertex assignment on %s" % (s,), simplex=s)
                continue
            simplex = f.target.sort_simplex(image)
            if simplex not in target_index:
                raise ComplexValidationError("non-simplicial vertex assignment on %s" % (s,), simplex=s)
            ri.append(target_index[simplex])
            ci.append(j)
            vals.append(_permutation_sign(f.target.index(v) for v in image))
        matrices[d] = sparse.csr_matrix((np.array(vals, dtype='int64'), (ri, ci)),
                                        shape=(target.rank(d), source.rank(d)), dtype='int64')
    return ChainMap(source, target, matrices)


#
# cellular deleted products
#


def _cell_ok(cell, pairs):
    for u, v in pairs:
        if not set(cell[u - 1]).isdisjoint(cell[v - 1]):
            return False
    return True


def constrained_cells(K, constraints):
    """ Cellular chains of the constrained product K^k.

    Basis elements are tuples of simplices (s_1, ..., s_k) whose carriers are
    vertex disjoint for the constrained pairs, in degree sum(dim s_i).
    The boundary follows the graded Leibniz rule.
    """
    k = constraints.arity
    cells = sorted(K.simplices, key=lambda s: (len(s), K.key(s)))
    pairs = sorted(constraints.pairs)

    # prune partial tuples as soon as both coordinates of a pair are fixed
    by_last = {}
    for u, v in pairs:
        by_last.setdefault(u, []).append((u, v))

    bases = {}

    def _extend(prefix, degree):
        if len(prefix) == k:
            bases.setdefault(degree, []).append(prefix)
            return
        position = len(prefix) + 1
        checks = by_last.get(position, [])
        for s in cells:
            cell = prefix + (s,)
            if checks and not _cell_ok(cell, checks):
                continue
            _extend(cell, degree + len(s) - 1)

    _extend((), 0)
    top = max(bases, default=-1)
    bases = {d: bases.get(d, []) for d in range(top + 1)}

    differentials = {}
    for d in range(1, top + 1):
        row_index = {c: i for i, c in enumerate(bases[d - 1])}
        ri, ci, vals = [], [], []
        for j, cell in enumerate(bases[d]):
            sign = 1
            for pos, s in enumerate(cell):
                for i in range(len(s)):
                    if len(s) == 1:
                        break
                    face = cell[:pos] + (s[:i] + s[i + 1:],) + cell[pos + 1:]
                    ri.append(row_index[face])
                    ci.append(j)
                    vals.append(sign * (-1 if i % 2 else 1))
                if (len(s) - 1) % 2:
                    sign = -sign
        differentials[d] = sparse.csr_matrix((np.array(vals, dtype='int64'), (ri, ci)),
                                             shape=(len(bases[d - 1]), len(bases[d])), dtype='int64')
    return ChainComplex(bases, differentials)


def drop_last_factor(source, target):
    """ Chain map between cellular products forgetting the last coordinate.

    A cell maps to its truncation if its last simplex is a vertex, else to zero.
    """
    def _image(cell):
        if len(cell[-1]) == 1:
            return [(cell[:-1], 1)]
        return []
    return ChainMap.from_labels(source, target, _image)

