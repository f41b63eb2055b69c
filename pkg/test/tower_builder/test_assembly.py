import unittest
import sys

try:
    from ..base import SLOW_TESTS
except (ValueError, ImportError):
    sys.path.append('..')
    from base import SLOW_TESTS


class TestAssembly(unittest.TestCase):

    def test_small_towers(self):
        from confspace_tools.tower_builder import assemble_tower
        from confspace_tools.complex_core import path_graph, cycle_graph
        from confspace_tools.chain_algebra import homology
        expected = [(path_graph(3), 1, (1,)),
                    (path_graph(3), 2, (1, 1)),
                    (path_graph(3), 3, (1, 3, 2)),
                    (cycle_graph(6), 2, (1, 3, 2))]
        for K, k, betti in expected:
            result = assemble_tower(K, k, check=True)
            self.assertTrue(result.complex.check())
            self.assertEqual(homology(result.complex).betti, betti)
            self.assertEqual(result.projection is None, k == 1)

    def test_realizations_agree(self):
        from confspace_tools.tower_builder import assemble_tower
        from confspace_tools.complex_core import cycle_graph
        from confspace_tools.chain_algebra import homology
        K = cycle_graph(4)
        cellular = assemble_tower(K, 2, realization='cellular')
        simplicial = assemble_tower(K, 2, realization='simplicial', check=True)
        self.assertEqual(homology(cellular.complex), homology(simplicial.complex))
        self.assertTrue(simplicial.projection.check())
        with self.assertRaises(ValueError):
            assemble_tower(K, 2, realization='cubical')

    def test_integral(self):
        from confspace_tools.tower_builder import assemble_tower, tower_rows
        from confspace_tools.complex_core import path_graph
        from confspace_tools.chain_algebra import homology
        C = assemble_tower(path_graph(3), 2).complex
        summary = homology(C, 'z')
        self.assertEqual(summary.torsion, {})
        rows = tower_rows(2, C, summary)
        self.assertEqual([row[0] for row in rows], ['k', 'cells', 'euler', 'betti', 'torsion'])
        self.assertEqual(rows[2][1], 0)
        self.assertEqual(rows[3][1], '1 1')
        self.assertEqual(rows[4][1], '-')

    def test_corrupted_wall(self):
        from unittest import mock
        from confspace_tools.tower_builder import assemble_tower, TowerConsistencyError
        from confspace_tools.complex_core import path_graph

        # walls that keep the order of the wall state do not match the right node
        def _keep_order(p, alpha):
            return {q: q for q in range(1, alpha + 2)}

        with mock.patch('confspace_tools.tower_builder.diagrams.wall_relabel', _keep_order):
            with self.assertRaises(TowerConsistencyError):
                assemble_tower(path_graph(3), 2)
            with self.assertRaises(TowerConsistencyError):
                assemble_tower(path_graph(3), 3, realization='simplicial')
        self.assertIsNotNone(assemble_tower(path_graph(3), 2).projection)

    def test_two_particles_direct_zigzag(self):
        from confspace_tools.tower_builder import assemble_tower
        from confspace_tools.config_models import power
        from confspace_tools.complex_core import (ConstraintSet, path_graph, cycle_graph, chains,
                                                  constrained_cells, constrained_subcomplex)
        from confspace_tools.chain_algebra import ZigzagDiagram, hocolim_zigzag, homology
        full, tied = ConstraintSet(2), ConstraintSet(2, [(2, 1)])
        for K in (path_graph(3), cycle_graph(6)):
            P = power(K, 2)
            nodes = {'cellular': [constrained_cells(K, c) for c in (full, tied, full)],
                     'simplicial': [chains(constrained_subcomplex(P, c)) for c in (full, tied, full)]}
            for realization, complexes in nodes.items():
                direct = hocolim_zigzag(ZigzagDiagram.inclusions(complexes, check=True), compact=True).complex
                tower = assemble_tower(K, 2, realization=realization).complex
                self.assertEqual(tower.size, direct.size)
                self.assertEqual(homology(tower, 'z'), homology(direct, 'z'))

    def test_projection_tower(self):
        from confspace_tools.tower_builder import projection_tower, TowerAssembler
        from confspace_tools.complex_core import path_graph
        K = path_graph(3)
        maps = projection_tower(K, 3, check=True)
        self.assertEqual(len(maps), 2)
        top, bottom = maps
        self.assertEqual(top.target.size, bottom.source.size)
        assembler = TowerAssembler(K)
        self.assertEqual(assembler.projection(2).target.size, assembler.complex(1).size)
        self.assertTrue(bottom.compose(top).check())

    def test_euler_check(self):
        from confspace_tools.tower_builder import TowerAssembler
        from confspace_tools.complex_core import cycle_graph, path_graph
        self.assertTrue(TowerAssembler(path_graph(3)).check_euler(3))
        self.assertTrue(TowerAssembler(cycle_graph(6)).check_euler(2))
        self.assertTrue(TowerAssembler(cycle_graph(6)).check_euler(3))
        self.assertIsNone(TowerAssembler(path_graph(3)).check_euler(1))
        # no certificate for a triangle with three particles
        self.assertIsNone(TowerAssembler(cycle_graph(3)).check_euler(3))

    def test_resource_caps(self):
        from confspace_tools.tower_builder import (assemble_tower, check_tower_size, check_product_size,
                                                   ResourceCapError)
        from confspace_tools.complex_core import path_graph, cycle_graph
        with self.assertRaises(ResourceCapError):
            assemble_tower(path_graph(3), 5)
        with self.assertRaises(ResourceCapError):
            assemble_tower(path_graph(3), 0)
        with self.assertRaises(ResourceCapError):
            check_tower_size(cycle_graph(6), 3, max_simplices=1000)
        # 144 product cells but 216 staircase simplices
        check_tower_size(cycle_graph(6), 2, max_simplices=200)
        with self.assertRaises(ResourceCapError):
            check_tower_size(cycle_graph(6), 2, max_simplices=200, realization='simplicial')
        self.assertEqual(check_product_size([cycle_graph(6)] * 2, max_simplices=216), 216)
        with self.assertRaises(ResourceCapError):
            check_product_size([cycle_graph(6)] * 2, max_simplices=215)
        with self.assertRaises(ResourceCapError):
            assemble_tower(cycle_graph(6), 2, max_simplices=200)
        check_tower_size(path_graph(3), 2, max_k=2, max_simplices=49)

    def test_boundary_model(self):
        from confspace_tools.tower_builder import boundary_model
        from confspace_tools.complex_core import path_graph, cycle_graph
        from confspace_tools.chain_algebra import homology, betti_convolution
        for K, betti in ((cycle_graph(6), (2, 8, 10, 4)), (path_graph(3), (2, 2))):
            model = boundary_model(K, 2)
            summary = homology(model.complex)
            self.assertEqual(summary.betti, betti)
            self.assertEqual(summary.betti, betti_convolution(homology(model.tower).betti,
                                                              homology(model.factor).betti))
        # the one particle tower is the base itself
        self.assertEqual(homology(boundary_model(cycle_graph(6), 1).complex).betti, (2, 4, 2))
        self.assertEqual(homology(boundary_model(path_graph(3), 1).complex).betti, (2,))

    def test_fiber_homology(self):
        from confspace_tools.tower_builder import fiber_homology
        from confspace_tools.complex_core import path_graph, cycle_graph, ComplexValidationError
        P3 = path_graph(3)
        self.assertEqual(fiber_homology(P3, []).betti, (1,))
        self.assertEqual(fiber_homology(P3, [0]).betti, (1,))
        self.assertEqual(fiber_homology(P3, [1]).betti, (1, 1))
        self.assertEqual(fiber_homology(P3, [1, 2]).betti, (1, 2))
        self.assertEqual(fiber_homology(cycle_graph(6), [0]).betti, (1, 2))
        self.assertEqual(fiber_homology(cycle_graph(6), [0, 3], 'z').betti, (1, 3))
        with self.assertRaises(ComplexValidationError):
            fiber_homology(P3, [1, 1])
        with self.assertRaises(ComplexValidationError):
            fiber_homology(P3, [7])

    def test_leaf_constraints(self):
        from confspace_tools.tower_builder import leaf_constraints, build_tower_diagram
        from confspace_tools.complex_core import ConstraintSet, path_graph
        self.assertEqual(leaf_constraints(1), [ConstraintSet(1)])
        self.assertEqual(leaf_constraints(2), [ConstraintSet(1), ConstraintSet(2), ConstraintSet(2, [(2, 1)])])
        top = set(build_tower_diagram(path_graph(3), 3).leaf_constraints())
        self.assertTrue(top <= set(leaf_constraints(3)))

    @unittest.skipUnless(SLOW_TESTS, "set CONFSPACE_SLOW_TESTS to run the four particle towers")
    def test_large_towers(self):
        from confspace_tools.tower_builder import assemble_tower
        from confspace_tools.complex_core import path_graph, cycle_graph
        from confspace_tools.chain_algebra import homology
        self.assertEqual(homology(assemble_tower(path_graph(3), 4).complex).betti, (1, 6, 11, 6))
        self.assertEqual(homology(assemble_tower(cycle_graph(9), 3).complex).betti, (1, 6, 11, 6))


if __name__ == '__main__':
    unittest.main()
