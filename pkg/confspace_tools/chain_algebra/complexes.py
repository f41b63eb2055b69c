import numpy as np
from scipy import sparse


class ChainComplexError(Exception):
    """ Custom exception for inconsistent chain complexes and chain maps
    """
    pass


def _zero(n_rows, n_cols):
    return sparse.csr_matrix((n_rows, n_cols), dtype='int64')


def _is_zero(mat):
    return mat.count_nonzero() == 0


def block_matrix(row_sizes, col_sizes, blocks):
    """ Assemble a sparse matrix from blocks indexed by (row block, col block).

    Blocks at the same position are summed.
    """
    row_offsets = np.concatenate([[0], np.cumsum(row_sizes)]).astype('int64')
    col_offsets = np.concatenate([[0], np.cumsum(col_sizes)]).astype('int64')
    rows, cols, vals = [], [], []
    for (i, j), block in blocks:
        block = sparse.coo_matrix(block)
        assert block.shape == (row_sizes[i], col_sizes[j]),\
            "Block (%i, %i) has shape %s, expected %s" % (i, j, block.shape, (row_sizes[i], col_sizes[j]))
        rows.append(block.row.astype('int64') + row_offsets[i])
        cols.append(block.col.astype('int64') + col_offsets[j])
        vals.append(block.data.astype('int64'))
    shape = (int(row_offsets[-1]), int(col_offsets[-1]))
    if not vals:
        return _zero(*shape)
    mat = sparse.csr_matrix((np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
                            shape=shape, dtype='int64')
    mat.eliminate_zeros()
    return mat


class ChainComplex:
    """ Graded free abelian group with chosen bases and integer boundary matrices.

    `bases` maps degree -> list of hashable basis labels, `differentials` maps
    degree n -> sparse matrix d_n of shape (rank(n - 1), rank(n)).
    Degrees are non-negative.
    """

    def __init__(self, bases, differentials=None):
        if any(deg < 0 for deg, basis in bases.items() if len(basis) > 0):
            raise ChainComplexError("Chain complexes live in non-negative degrees")
        top = max((deg for deg, basis in bases.items() if len(basis) > 0), default=-1)
        self._bases = {deg: list(bases.get(deg, [])) for deg in range(top + 1)}
        self._index = {}
        self._differentials = {}
        differentials = {} if differentials is None else differentials
        for deg, mat in differentials.items():
            if deg < 1 or deg > top:
                if mat.nnz and not _is_zero(mat):
                    raise ChainComplexError("Nonzero differential in degree %i outside the complex" % deg)
                continue
            mat = sparse.csr_matrix(mat, dtype='int64')
            expected = (self.rank(deg - 1), self.rank(deg))
            if mat.shape != expected:
                raise ChainComplexError("Differential d_%i has shape %s, expected %s" % (deg, mat.shape, expected))
            self._differentials[deg] = mat

    @property
    def top_degree(self):
        return len(self._bases) - 1

    def degrees(self):
        return range(len(self._bases))

    def basis(self, deg):
        return self._bases.get(deg, [])

    def rank(self, deg):
        return len(self._bases.get(deg, []))

    @property
    def size(self):
        return sum(len(b) for b in self._bases.values())

    def index(self, deg):
        """ label -> position in the basis of the given degree
        """
        if deg not in self._index:
            index = {label: i for i, label in enumerate(self.basis(deg))}
            if len(index) != self.rank(deg):
                raise ChainComplexError("Duplicate basis labels in degree %i" % deg)
            self._index[deg] = index
        return self._index[deg]

    def d(self, deg):
        mat = self._differentials.get(deg)
        if mat is None:
            return _zero(self.rank(deg - 1) if deg >= 1 else 0, self.rank(deg))
        return mat

    @property
    def euler_characteristic(self):
        return sum((-1) ** deg * self.rank(deg) for deg in self.degrees())

    def check(self):
        """ Check that consecutive differentials compose to zero
        """
        for deg in range(2, self.top_degree + 1):
            if not _is_zero(self.d(deg - 1) @ self.d(deg)):
                raise ChainComplexError("d_%i o d_%i is not zero" % (deg - 1, deg))
        return True

    def __eq__(self, other):
        if not isinstance(other, ChainComplex):
            return NotImplemented
        if self._bases != other._bases:
            return False
        return all(_is_zero(self.d(deg) - other.d(deg)) for deg in self.degrees())

    def __repr__(self):
        return "ChainComplex(ranks=%s)" % (tuple(self.rank(deg) for deg in self.degrees()),)

    @classmethod
    def empty(cls):
        return cls({})


class ChainMap:
    """ Degreewise integer matrices between two chain complexes
    """

    def __init__(self, source, target, matrices, check=False):
        self.source = source
        self.target = target
        self._matrices = {}
        for deg, mat in matrices.items():
            mat = sparse.csr_matrix(mat, dtype='int64')
            expected = (target.rank(deg), source.rank(deg))
            if mat.shape != expected:
                raise ChainComplexError("Chain map in degree %i has shape %s, expected %s" % (deg, mat.shape,
                                                                                             expected))
            self._matrices[deg] = mat
        if check:
            self.check()

    def matrix(self, deg):
        mat = self._matrices.get(deg)
        if mat is None:
            return _zero(self.target.rank(deg), self.source.rank(deg))
        return mat

    def check(self):
        """ Check that the map commutes with the differentials
        """
        top = max(self.source.top_degree, self.target.top_degree)
        for deg in range(1, top + 1):
            lhs = self.target.d(deg) @ self.matrix(deg)
            rhs = self.matrix(deg - 1) @ self.source.d(deg)
            if not _is_zero(lhs - rhs):
                raise ChainComplexError("Chain map does not commute with the differential in degree %i" % deg)
        return True

    def compose(self, other):
        """ self after other
        """
        if other.target is not self.source and other.target != self.source:
            raise ChainComplexError("Cannot compose chain maps with mismatching complexes")
        return ChainMap(other.source, self.target,
                        {deg: self.matrix(deg) @ other.matrix(deg) for deg in other.source.degrees()})

    def __eq__(self, other):
        if not isinstance(other, ChainMap):
            return NotImplemented
        degrees = set(self.source.degrees()) | set(other.source.degrees())
        return all(self.matrix(deg).shape == other.matrix(deg).shape and
                   _is_zero(self.matrix(deg) - other.matrix(deg)) for deg in degrees)

    def columns(self):
        """ source label -> [(target label, coeff)], nonzero entries only
        """
        out = {}
        for deg in self.source.degrees():
            mat = self.matrix(deg).tocsc()
            basis = self.target.basis(deg)
            for j, label in enumerate(self.source.basis(deg)):
                start, stop = mat.indptr[j], mat.indptr[j + 1]
                out[label] = [(basis[i], int(v)) for i, v in zip(mat.indices[start:stop], mat.data[start:stop])
                              if v != 0]
        return out

    @classmethod
    def identity(cls, C):
        return cls(C, C, {deg: sparse.identity(C.rank(deg), dtype='int64', format='csr')
                          for deg in C.degrees()})

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, {})

    @classmethod
    def from_labels(cls, source, target, image, check=False):
        """ Build a chain map from a function label -> [(target label, coefficient)]
        """
        matrices = {}
        for deg in source.degrees():
            target_index = target.index(deg)
            rows, cols, vals = [], [], []
            for j, label in enumerate(source.basis(deg)):
                for trgt, coeff in image(label):
                    if trgt not in target_index:
                        raise ChainComplexError("Image %s of %s is not a basis element of the target in degree %i"
                                                % (trgt, label, deg))
                    rows.append(target_index[trgt])
                    cols.append(j)
                    vals.append(coeff)
            matrices[deg] = sparse.csr_matrix((np.array(vals, dtype='int64'), (rows, cols)),
                                              shape=(target.rank(deg), source.rank(deg)), dtype='int64')
        return cls(source, target, matrices, check=check)

    @classmethod
    def inclusion(cls, source, target, relabel=None, check=False):
        """ Map every source label (optionally relabeled) to the equal target label
        """
        if relabel is None:
            return cls.from_labels(source, target, lambda label: [(label, 1)], check=check)
        return cls.from_labels(source, target, lambda label: [(relabel(label), 1)], check=check)


#
# constructions
#


def shift(C, n):
    """ Shift degrees up by n; the differential picks up the sign (-1)^n
    """
    if n == 0:
        return C
    if C.top_degree >= 0 and n < 0:
        low = min(deg for deg in C.degrees() if C.rank(deg) > 0)
        if low + n < 0:
            raise ChainComplexError("Shifting by %i produces negative degrees" % n)
    sign = -1 if n % 2 else 1
    bases = {deg + n: C.basis(deg) for deg in C.degrees() if deg + n >= 0}
    differentials = {deg + n: sign * C.d(deg) for deg in range(1, C.top_degree + 1) if deg + n >= 1}
    return ChainComplex(bases, differentials)


def direct_sum(*complexes):
    """ Direct sum, basis labels are tagged with the summand position
    """
    top = max((C.top_degree for C in complexes), default=-1)
    bases = {deg: [(i, label) for i, C in enumerate(complexes) for label in C.basis(deg)]
             for deg in range(top + 1)}
    differentials = {deg: block_matrix([C.rank(deg - 1) for C in complexes],
                                       [C.rank(deg) for C in complexes],
                                       [((i, i), C.d(deg)) for i, C in enumerate(complexes)])
                     for deg in range(1, top + 1)}
    return ChainComplex(bases, differentials)


def _tensor_blocks(C, D, n):
    # the (i, j) with i + j = n and nonempty factors
    return [(i, n - i) for i in C.degrees() if 0 <= n - i <= D.top_degree
            and C.rank(i) > 0 and D.rank(n - i) > 0]


def tensor(C, D):
    """ Tensor product with the Koszul sign d(c x d) = dc x d + (-1)^|c| c x dd.

    Basis labels are pairs (c, d), ordered by the degree of c first.
    """
    top = C.top_degree + D.top_degree if C.top_degree >= 0 and D.top_degree >= 0 else -1
    blocks = {n: _tensor_blocks(C, D, n) for n in range(top + 1)}
    bases = {n: [(c, d) for i, j in blocks[n] for c in C.basis(i) for d in D.basis(j)]
             for n in range(top + 1)}

    differentials = {}
    for n in range(1, top + 1):
        row_pos = {ij: p for p, ij in enumerate(blocks[n - 1])}
        row_sizes = [C.rank(i) * D.rank(j) for i, j in blocks[n - 1]]
        col_sizes = [C.rank(i) * D.rank(j) for i, j in blocks[n]]
        placed = []
        for q, (i, j) in enumerate(blocks[n]):
            if (i - 1, j) in row_pos:
                placed.append(((row_pos[(i - 1, j)], q),
                               sparse.kron(C.d(i), sparse.identity(D.rank(j), dtype='int64'))))
            if (i, j - 1) in row_pos:
                sign = -1 if i % 2 else 1
                placed.append(((row_pos[(i, j - 1)], q),
                               sign * sparse.kron(sparse.identity(C.rank(i), dtype='int64'), D.d(j))))
        differentials[n] = block_matrix(row_sizes, col_sizes, placed)
    return ChainComplex(bases, differentials)


def tensor_maps(f, g):
    """ Tensor product f x g of two degree preserving chain maps
    """
    source = tensor(f.source, g.source)
    target = tensor(f.target, g.target)
    matrices = {}
    for n in source.degrees():
        src_blocks = _tensor_blocks(f.source, g.source, n)
        trgt_blocks = _tensor_blocks(f.target, g.target, n)
        trgt_pos = {ij: p for p, ij in enumerate(trgt_blocks)}
        placed = [((trgt_pos[(i, j)], q), sparse.kron(f.matrix(i), g.matrix(j)))
                  for q, (i, j) in enumerate(src_blocks) if (i, j) in trgt_pos]
        matrices[n] = block_matrix([f.target.rank(i) * g.target.rank(j) for i, j in trgt_blocks],
                                   [f.source.rank(i) * g.source.rank(j) for i, j in src_blocks],
                                   placed)
    return ChainMap(source, target, matrices)


def mapping_cone(f):
    """ Mapping cone of f: C -> D, cone_n = C_{n-1} + D_n with
        d(c, d) = (-dc, f(c) + dd).
    """
    C, D = f.source, f.target
    top = max(C.top_degree + 1, D.top_degree)
    bases = {n: [('s', c) for c in C.basis(n - 1)] + [('t', d) for d in D.basis(n)]
             for n in range(top + 1)}
    differentials = {}
    for n in range(1, top + 1):
        row_sizes = [C.rank(n - 2) if n >= 2 else 0, D.rank(n - 1)]
        col_sizes = [C.rank(n - 1), D.rank(n)]
        placed = [((1, 0), f.matrix(n - 1)), ((1, 1), D.d(n))]
        if n >= 2:
            placed.append(((0, 0), -C.d(n - 1)))
        differentials[n] = block_matrix(row_sizes, col_sizes, placed)
    return ChainComplex(bases, differentials)
