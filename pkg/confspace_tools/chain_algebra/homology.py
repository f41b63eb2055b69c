from math import gcd

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from .complexes import ChainComplexError

RATIONAL = 'q'
INTEGRAL = 'z'


class HomologySummary:
    """ Betti numbers per degree and, for integral homology, the torsion
        invariant factors per degree.

    Trailing zero Betti numbers are dropped, so summaries of complexes that
    only differ by acyclic top degrees compare equal.
    """

    def __init__(self, betti, torsion=None):
        betti = [int(b) for b in betti]
        if any(b < 0 for b in betti):
            raise ChainComplexError("Negative Betti number in %s" % betti)
        while betti and betti[-1] == 0:
            betti.pop()
        self.betti = tuple(betti)
        self.torsion = None if torsion is None else {deg: tuple(factors)
                                                     for deg, factors in sorted(torsion.items()) if factors}

    def betti_at(self, deg):
        return self.betti[deg] if 0 <= deg < len(self.betti) else 0

    def torsion_at(self, deg):
        if self.torsion is None:
            return ()
        return self.torsion.get(deg, ())

    @property
    def euler_characteristic(self):
        return sum((-1) ** deg * b for deg, b in enumerate(self.betti))

    def shifted(self, n):
        """ Summary of the n-fold suspension, lower degrees must vanish
        """
        if n >= 0:
            betti = (0,) * n + self.betti
        else:
            assert all(b == 0 for b in self.betti[:-n]), "Cannot shift %s down by %i" % (self.betti, -n)
            betti = self.betti[-n:]
        torsion = None if self.torsion is None else {deg + n: f for deg, f in self.torsion.items()}
        return HomologySummary(betti, torsion)

    def __eq__(self, other):
        if not isinstance(other, HomologySummary):
            return NotImplemented
        if self.betti != other.betti:
            return False
        if self.torsion is None or other.torsion is None:
            return True
        return self.torsion == other.torsion

    def __repr__(self):
        if self.torsion:
            return "HomologySummary(betti=%s, torsion=%s)" % (self.betti, self.torsion)
        return "HomologySummary(betti=%s)" % (self.betti,)

    def betti_row(self):
        return ' '.join(str(b) for b in self.betti) if self.betti else '0'

    def torsion_row(self):
        if not self.torsion:
            return '-'
        return ' '.join('%i:%s' % (deg, ','.join(str(f) for f in factors))
                        for deg, factors in sorted(self.torsion.items()))


#
# sparse elimination
#


def _to_rows(mat):
    """ csr matrix -> dict row -> dict col -> value, and col -> set of rows
    """
    mat = mat.tocsr()
    rows = {}
    cols = {}
    for r in range(mat.shape[0]):
        start, stop = mat.indptr[r], mat.indptr[r + 1]
        if start == stop:
            continue
        row = {int(c): int(v) for c, v in zip(mat.indices[start:stop], mat.data[start:stop]) if v != 0}
        if not row:
            continue
        rows[r] = row
        for c in row:
            cols.setdefault(c, set()).add(r)
    return rows, cols


def _pivot(rows, cols, r, c, reduce_gcd):
    """ Clear column c with row r and remove the pivot row.

    For unit pivots the operations are unimodular; otherwise rows are combined
    fraction free and divided by their content.
    """
    row = rows.pop(r)
    piv = row[c]
    for c2 in row:
        cols[c2].discard(r)
    for r2 in list(cols.get(c, ())):
        row2 = rows[r2]
        val = row2[c]
        if piv in (1, -1):
            scale, factor = 1, val * piv
        else:
            g = gcd(piv, val)
            scale, factor = piv // g, val // g
        if scale != 1:
            for c2 in row2:
                row2[c2] *= scale
        for c2, v in row.items():
            nv = row2.get(c2, 0) - factor * v
            if nv == 0:
                if c2 in row2:
                    del row2[c2]
                    cols[c2].discard(r2)
            else:
                if c2 not in row2:
                    cols.setdefault(c2, set()).add(r2)
                row2[c2] = nv
        if not row2:
            del rows[r2]
        elif reduce_gcd and scale != 1:
            content = 0
            for v in row2.values():
                content = gcd(content, v)
                if content == 1:
                    break
            if content > 1:
                for c2 in row2:
                    row2[c2] //= content
    cols.pop(c, None)


def _eliminate_units(rows, cols):
    """ Eliminate unit pivots, Markowitz style: short rows first, and within a
        row the unit entry in the sparsest column.

    Returns the number of eliminated pivots; the residual matrix keeps the
    non-unit invariant factors.
    """
    rank = 0
    changed = True
    while changed and rows:
        changed = False
        for r in sorted(rows, key=lambda r: (len(rows[r]), r)):
            row = rows.get(r)
            if row is None:
                continue
            best = None
            for c, v in row.items():
                if v == 1 or v == -1:
                    count = len(cols[c])
                    if best is None or (count, c) < best:
                        best = (count, c)
            if best is None:
                continue
            _pivot(rows, cols, r, best[1], reduce_gcd=False)
            rank += 1
            changed = True
    return rank


def _eliminate_rational(rows, cols):
    """ Fraction free elimination of the residual matrix, returns its rank
    """
    rank = 0
    while rows:
        r = min(rows, key=lambda r: (len(rows[r]), r))
        row = rows[r]
        c = min(row, key=lambda c: (abs(row[c]), len(cols[c]), c))
        _pivot(rows, cols, r, c, reduce_gcd=True)
        rank += 1
    return rank


def _residual_invariants(rows):
    """ Nonzero invariant factors of the residual matrix by Smith normal form
    """
    if not rows:
        return []
    row_ids = sorted(rows)
    col_ids = sorted({c for row in rows.values() for c in row})
    col_pos = {c: i for i, c in enumerate(col_ids)}
    dense = [[0] * len(col_ids) for _ in row_ids]
    for i, r in enumerate(row_ids):
        for c, v in rows[r].items():
            dense[i][col_pos[c]] = v
    snf = smith_normal_form(Matrix(dense), domain=ZZ)
    factors = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    return [f for f in factors if f != 0]


def matrix_rank(mat, mode=RATIONAL):
    """ Rank of an integer matrix; in integral mode also the invariant factors > 1
    """
    if mat.shape[0] == 0 or mat.shape[1] == 0 or mat.nnz == 0:
        return 0, []
    rows, cols = _to_rows(mat)
    rank = _eliminate_units(rows, cols)
    if mode == INTEGRAL:
        factors = _residual_invariants(rows)
        return rank + len(factors), sorted(f for f in factors if f > 1)
    return rank + _eliminate_rational(rows, cols), []


def homology(C, mode=RATIONAL):
    """ Homology of a chain complex.

    Rational mode returns Betti numbers; integral mode additionally returns
    the torsion invariant factors, degree n torsion coming from d_{n+1}.
    """
    if mode not in (RATIONAL, INTEGRAL):
        raise ValueError("Unknown coefficient mode %s, expected '%s' or '%s'" % (mode, RATIONAL, INTEGRAL))
    ranks, torsion = {}, {}
    for deg in range(1, C.top_degree + 1):
        ranks[deg], factors = matrix_rank(C.d(deg), mode)
        if factors:
            torsion[deg - 1] = factors
    betti = [C.rank(deg) - ranks.get(deg, 0) - ranks.get(deg + 1, 0) for deg in C.degrees()]
    return HomologySummary(betti, torsion if mode == INTEGRAL else None)


def betti_convolution(a, b):
    """ Kunneth convolution of two Betti sequences
    """
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)
