import unittest


def _circle_pieces():
    """ Two arcs of the square cycle glued along two points
    """
    from confspace_tools.complex_core import chains, cycle_graph
    C4 = cycle_graph(4)
    arcs = [chains(C4.without_vertices([3])), chains(C4.without_vertices([1, 3])),
            chains(C4.without_vertices([1]))]
    return C4, arcs


def _suspension_of_two_points():
    from confspace_tools.chain_algebra import ChainComplex, ChainMap, ZigzagDiagram
    south, north = ChainComplex({0: ['s']}), ChainComplex({0: ['n']})
    two_points = ChainComplex({0: ['x', 'y']})
    left = ChainMap.from_labels(two_points, south, lambda label: [('s', 1)])
    right = ChainMap.from_labels(two_points, north, lambda label: [('n', 1)])
    return ZigzagDiagram([south, north], [two_points], [left], [right], check=True)


def _random_zigzag(seed, n_vertices=6, n_odd=3):
    """ Random graphs on a common vertex set, even nodes are the intersections of their neighbors
    """
    import numpy as np
    from confspace_tools.complex_core import close_faces, chains
    from confspace_tools.chain_algebra import ZigzagDiagram
    rng = np.random.RandomState(seed)
    vertices = list(range(n_vertices))
    candidates = [(u, v) for u in vertices for v in vertices if u < v]
    graphs = []
    for _ in range(n_odd):
        mask = rng.rand(len(candidates)) < 0.4
        graphs.append({(v,) for v in vertices} | {e for e, keep in zip(candidates, mask) if keep})
    nodes = []
    for q, graph in enumerate(graphs):
        if q > 0:
            nodes.append(close_faces(vertices, graphs[q - 1] & graph))
        nodes.append(close_faces(vertices, graph))
    return ZigzagDiagram.inclusions([chains(K) for K in nodes], check=True)


class TestHocolim(unittest.TestCase):

    def test_suspension(self):
        from confspace_tools.chain_algebra import hocolim_zigzag, homology
        Z = _suspension_of_two_points()
        for compact in (False, True):
            result = hocolim_zigzag(Z, compact=compact)
            self.assertTrue(result.complex.check())
            self.assertEqual(homology(result.complex).betti, (1, 1))
            self.assertEqual(len(result.odd_inclusions), 2)
            self.assertEqual(len(result.even_inclusions), 1)
            for f in result.odd_inclusions + result.even_inclusions:
                self.assertTrue(f.check())

    def test_inclusion_zigzag(self):
        from confspace_tools.chain_algebra import ZigzagDiagram, hocolim_zigzag, homology
        _, arcs = _circle_pieces()
        Z = ZigzagDiagram.inclusions(arcs, check=True)
        self.assertEqual(Z.length, 3)
        self.assertIs(Z.node(2), arcs[1])
        default = hocolim_zigzag(Z)
        compact = hocolim_zigzag(Z, compact=True)
        self.assertEqual(homology(default.complex).betti, (1, 1))
        self.assertEqual(homology(compact.complex).betti, (1, 1))
        # labels are tagged with the node position
        self.assertIn(('o', 2, (2, 3)), default.complex.basis(1))
        self.assertIn(('e', 1, (0,)), compact.complex.basis(1))

    def test_malformed_zigzag(self):
        from confspace_tools.chain_algebra import ZigzagDiagram, ChainComplexError
        _, arcs = _circle_pieces()
        with self.assertRaises(ChainComplexError):
            ZigzagDiagram(arcs[:1], arcs[1:2], [], [])
        with self.assertRaises(ChainComplexError):
            ZigzagDiagram.inclusions([arcs[0], arcs[0], arcs[2]])

    def test_hocolim_map(self):
        from confspace_tools.chain_algebra import ChainMap, hocolim_zigzag, hocolim_map, homology, mapping_cone
        Z = _suspension_of_two_points()
        identities = [ChainMap.identity(C) for C in Z.odd_nodes], [ChainMap.identity(C) for C in Z.even_nodes]
        for compact in (False, True):
            f = hocolim_map(Z, Z, *identities, compact=compact)
            self.assertTrue(f.check())
            self.assertEqual(f, ChainMap.identity(hocolim_zigzag(Z, compact=compact).complex))
            self.assertEqual(homology(mapping_cone(f)).betti, ())

    def test_suspension_of_circle(self):
        from confspace_tools.chain_algebra import ChainComplex, ChainMap, ZigzagDiagram, hocolim_zigzag, homology
        from confspace_tools.complex_core import chains, cycle_graph
        X = chains(cycle_graph(6))
        south, north = ChainComplex({0: ['s']}), ChainComplex({0: ['n']})
        left = ChainMap.from_labels(X, south, lambda label: [('s', 1)] if len(label) == 1 else [])
        right = ChainMap.from_labels(X, north, lambda label: [('n', 1)] if len(label) == 1 else [])
        Z = ZigzagDiagram([south, north], [X], [left], [right], check=True)
        for compact in (False, True):
            self.assertEqual(homology(hocolim_zigzag(Z, compact=compact).complex).betti, (1, 0, 1))

    def test_euler_formula(self):
        from confspace_tools.chain_algebra import hocolim_zigzag
        for seed in range(20):
            Z = _random_zigzag(seed)
            expected = sum(O.euler_characteristic for O in Z.odd_nodes) - \
                sum(E.euler_characteristic for E in Z.even_nodes)
            for compact in (False, True):
                T = hocolim_zigzag(Z, compact=compact).complex
                self.assertTrue(T.check())
                self.assertEqual(T.euler_characteristic, expected)

    def test_tensor_with_circle(self):
        from confspace_tools.chain_algebra import (ChainMap, ZigzagDiagram, hocolim_zigzag, homology,
                                                   tensor, tensor_maps, betti_convolution)
        from confspace_tools.complex_core import chains, cycle_graph
        circle = chains(cycle_graph(3))
        identity = ChainMap.identity(circle)
        for seed in range(10):
            Z = _random_zigzag(seed, n_vertices=5)
            W = ZigzagDiagram([tensor(O, circle) for O in Z.odd_nodes],
                              [tensor(E, circle) for E in Z.even_nodes],
                              [tensor_maps(f, identity) for f in Z.left_maps],
                              [tensor_maps(f, identity) for f in Z.right_maps], check=True)
            expected = betti_convolution(homology(hocolim_zigzag(Z).complex).betti, (1, 1))
            self.assertEqual(homology(hocolim_zigzag(W).complex).betti, expected)


if __name__ == '__main__':
    unittest.main()
