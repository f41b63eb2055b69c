from collections import namedtuple

import networkx as nx

from ..chain_algebra import (ChainMap, HomologySummary, ZigzagDiagram, hocolim_zigzag, homology,
                             mapping_cone, tensor, RATIONAL)
from ..complex_core import (ConstraintSet, GraphError, SimplicialMap, chains, constrained_cells,
                            staircase_product, two_points)
from ..config_models import CELLULAR, abrams_condition, deleted_product_model, power, smoothed_graph
from ..tower_builder import (NodeRealizer, assemble_tower, base_zigzag, restrict_diagram,
                             DEFAULT_MAX_K, DEFAULT_MAX_SIMPLICES)


class CertificationError(Exception):
    """ Custom exception for inputs that fail the Abrams condition
    """
    pass


class InvarianceInputError(Exception):
    """ Custom exception for input pairs that are not subdivisions of a common graph
    """
    pass


def certify(K, k=3):
    if not K.is_graph:
        raise CertificationError("Only graphs can be certified, got a complex of dimension %i" % K.dim)
    report = abrams_condition(K, k)
    if not report.holds:
        raise CertificationError("%r fails the Abrams condition for %i particles, short %s %s"
                                 % (K, k, report.kind, ' '.join(map(str, report.witness))))
    return report


#
# the k = 3 suspension pieces
#

def _suspension_diagram(K):
    """ F_3 <- F_3 x S^0 -> F_2 x (K x S^0) on product cells, and the right node
    """
    certify(K, 3)
    S0 = chains(two_points())
    F3 = constrained_cells(K, ConstraintSet.full(3))
    F2 = constrained_cells(K, ConstraintSet.full(2))
    A = constrained_cells(K, ConstraintSet(1))
    F3S0 = tensor(F3, S0)
    Z3 = tensor(F2, tensor(A, S0))

    left = ChainMap.from_labels(F3S0, F3, lambda label: [(label[0], 1)])
    # the F_3 cell sits in F_2 x K because its constraints contain those of F_2
    right = ChainMap.from_labels(F3S0, Z3, lambda label: [((label[0][:2], ((label[0][2],), label[1])), 1)])
    return ZigzagDiagram([F3, Z3], [F3S0], [left], [right], check=True)


def build_c(K):
    return hocolim_zigzag(_suspension_diagram(K)).complex


def build_e23(K, realization=CELLULAR):
    """ Hocolim of the three particle base zigzag restricted to particles 1, 2 at distinct points
    """
    certify(K, 3)
    D = restrict_diagram(base_zigzag((1,), K, 3), (2, 1))
    realizer = NodeRealizer(K, realization)
    Z = ZigzagDiagram.inclusions([realizer(node.constraints) for node in D.children], check=True)
    return hocolim_zigzag(Z).complex


def _cofiber(hocolim):
    # Z^3 is the right node of the diagram
    return mapping_cone(hocolim.odd_inclusions[1])


def sigma_cofiber(K, mode=RATIONAL):
    """ Homology of the cofiber of F_2 x (K x S^0) -> C, the suspension of F_3 with a base point added
    """
    return homology(_cofiber(hocolim_zigzag(_suspension_diagram(K))), mode)


def unpointed_suspension(cofiber):
    """ Drop the circle split off by the added base point
    """
    betti = list(cofiber.betti)
    if len(betti) > 1 and betti[1] > 0:
        betti[1] -= 1
    return HomologySummary(betti, cofiber.torsion)


def product_projection_check(K):
    """ F_3 x S^0 -> F_2 x (K x S^0) -> K^3 agrees with F_3 x S^0 -> F_3 -> K^3 as simplicial maps
    """
    M3 = deleted_product_model(K, 3)
    M2 = deleted_product_model(K, 2)
    S = two_points()
    source = staircase_product([M3.complex, S])
    middle = staircase_product([M2.complex, staircase_product([K, S])])
    cube = power(K, 3)

    into_middle = SimplicialMap(source, middle, {v: (v[0][:2], (v[0][2], v[1])) for v in source.vertices})
    flatten = SimplicialMap(middle, cube, {v: v[0] + (v[1][0],) for v in middle.vertices})
    to_model = SimplicialMap(source, M3.complex, {v: v[0] for v in source.vertices})
    return flatten.compose(into_middle) == M3.inclusion.compose(to_model)


class SuspensionReport(namedtuple('SuspensionReport', ['c', 'e23', 'cofiber', 'f3', 'unpointed',
                                                       'product_projection'])):
    """ Homologies of the k = 3 suspension pieces
    """

    @property
    def shift_law(self):
        return self.cofiber == self.f3.shifted(1)

    @property
    def consistent(self):
        return self.shift_law and self.c == self.e23 and self.product_projection is not False


def suspension_report(K, mode=RATIONAL, realization=CELLULAR, product_check=True):
    certify(K, 3)
    hocolim = hocolim_zigzag(_suspension_diagram(K))
    c = homology(hocolim.complex, mode)
    cofiber = homology(_cofiber(hocolim), mode)
    e23 = homology(build_e23(K, realization), mode)
    f3 = homology(deleted_product_model(K, 3).chain_complex(realization), mode)
    product = product_projection_check(K) if product_check else None
    return SuspensionReport(c, e23, cofiber, f3, unpointed_suspension(cofiber), product)


def _status(flag):
    return '-' if flag is None else ('ok' if flag else 'failed')


def suspension_rows(report):
    return [('c', report.c.betti_row()),
            ('e23', report.e23.betti_row()),
            ('cofiber', report.cofiber.betti_row()),
            ('f3', report.f3.betti_row()),
            ('unpointed', report.unpointed.betti_row()),
            ('shift_law', _status(report.shift_law)),
            ('product_projection', _status(report.product_projection))]


#
# invariance
#

InvarianceRow = namedtuple('InvarianceRow', ['name', 'first', 'second', 'equal'])


class InvarianceReport(namedtuple('InvarianceReport', ['k', 'rows'])):
    """ Homology summaries of both inputs, the verdict passes iff all agree
    """

    @property
    def verdict(self):
        return all(row.equal for row in self.rows)


def check_common_graph(K, L):
    try:
        same = nx.is_isomorphic(smoothed_graph(K), smoothed_graph(L))
    except GraphError as e:
        raise InvarianceInputError(str(e))
    if not same:
        raise InvarianceInputError("%r and %r are not subdivisions of a common graph" % (K, L))


def invariance_check(K, L, k, mode=RATIONAL, max_k=DEFAULT_MAX_K, max_simplices=DEFAULT_MAX_SIMPLICES,
                     realization=CELLULAR):
    """ Compare the towers of two subdivisions of a graph and, for three particles,
        their suspension cofibers.
    """
    check_common_graph(K, L)
    for M in (K, L):
        certify(M, k)
    rows = []
    towers = [homology(assemble_tower(M, k, max_k=max_k, max_simplices=max_simplices,
                                      realization=realization).complex, mode) for M in (K, L)]
    rows.append(InvarianceRow('tower', towers[0], towers[1], towers[0] == towers[1]))
    if k == 3:
        cofibers = [sigma_cofiber(M, mode) for M in (K, L)]
        rows.append(InvarianceRow('sigma_cofiber', cofibers[0], cofibers[1], cofibers[0] == cofibers[1]))
    return InvarianceReport(k, rows)


def invariance_rows(report):
    rows = [('k', report.k)]
    rows.extend((row.name, row.first.betti_row(), row.second.betti_row(), _status(row.equal))
                for row in report.rows)
    rows.append(('verdict', 'pass' if report.verdict else 'fail'))
    return rows
