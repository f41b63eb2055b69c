import unittest


class TestPlacementState(unittest.TestCase):

    def test_place(self):
        from confspace_tools.tower_builder import ROOT
        below, tied, above = [ROOT.place(2, q) for q in (1, 2, 3)]
        self.assertEqual(below.order, (2, 1))
        self.assertEqual(below.ties, (False,))
        self.assertEqual(tied.order, (2, 1))
        self.assertEqual(tied.blocks(), [(2, 1)])
        self.assertEqual(above.order, (1, 2))
        self.assertEqual(len(below.constraints()), 0)
        self.assertEqual(list(tied.constraints()), [(2, 1)])

    def test_place_into_block(self):
        from confspace_tools.tower_builder import ROOT
        tied = ROOT.place(2, 2)
        # the gap inside a block keeps the new particle tied
        inside = tied.place(3, 3)
        self.assertEqual(inside.order, (2, 3, 1))
        self.assertEqual(inside.blocks(), [(2, 3, 1)])
        self.assertEqual(len(inside.constraints()), 3)
        # the gap above the block does not
        above = tied.place(3, 5)
        self.assertEqual(above.blocks(), [(2, 1), (3,)])
        # tying with the lower particle of the block
        with_lower = tied.place(3, 2)
        self.assertEqual(with_lower.order, (3, 2, 1))
        self.assertEqual(with_lower.blocks(), [(3, 2, 1)])

    def test_place_errors(self):
        from confspace_tools.tower_builder import ROOT
        from confspace_tools.config_combinatorics import IndexTupleError
        with self.assertRaises(IndexTupleError):
            ROOT.place(2, 0)
        with self.assertRaises(IndexTupleError):
            ROOT.place(2, 4)

    def test_from_prefix(self):
        from confspace_tools.tower_builder import PlacementState
        state = PlacementState.from_prefix((1,))
        self.assertEqual(state.order, (2, 1))
        self.assertEqual(state.n_positions, 5)
        self.assertEqual(PlacementState.from_prefix(()), PlacementState((1,)))

    def test_from_prefix_matches_ranks(self):
        from confspace_tools.tower_builder import PlacementState
        from confspace_tools.config_combinatorics import enumerate_index_tuples, ranks
        for k in range(1, 6):
            for i in enumerate_index_tuples(k):
                state = PlacementState.from_prefix(i)
                self.assertEqual(state.order, ranks(i))
                self.assertFalse(any(state.ties))


class TestDiagrams(unittest.TestCase):

    def test_base_zigzag(self):
        from confspace_tools.tower_builder import base_zigzag
        from confspace_tools.complex_core import ConstraintSet, path_graph
        D = base_zigzag((1,), path_graph(3), 3)
        self.assertEqual(D.n_positions, 5)
        expected = [[], [(3, 2)], [], [(3, 1)], []]
        for q, pairs in enumerate(expected, 1):
            self.assertEqual(D.node(q).constraints, ConstraintSet(3, pairs))

    def test_base_zigzag_errors(self):
        from confspace_tools.tower_builder import base_zigzag
        from confspace_tools.config_combinatorics import IndexTupleError
        from confspace_tools.complex_core import path_graph
        with self.assertRaises(IndexTupleError):
            base_zigzag((1, 1), path_graph(3), 3)
        with self.assertRaises(IndexTupleError):
            base_zigzag((2,), path_graph(3), 3)

    def test_restrict_diagram(self):
        from confspace_tools.tower_builder import base_zigzag, restrict_diagram, TowerConsistencyError
        from confspace_tools.complex_core import ConstraintSet, path_graph
        D = base_zigzag((1,), path_graph(3), 3)
        R = restrict_diagram(D, (2, 1))
        self.assertEqual(R.node(2).constraints, ConstraintSet(3, [(3, 2), (2, 1)]))
        self.assertTrue(all((2, 1) in node.constraints.pairs for _, node in R.leaves()))
        self.assertIs(restrict_diagram(D, []), D)
        self.assertEqual(restrict_diagram(D, ConstraintSet(3, [(2, 1)])).node(1).constraints,
                         ConstraintSet(3, [(2, 1)]))
        with self.assertRaises(TowerConsistencyError):
            restrict_diagram(D, (3, 1))

    def test_tower_diagram(self):
        from confspace_tools.tower_builder import build_tower_diagram
        from confspace_tools.complex_core import path_graph
        T = build_tower_diagram(path_graph(3), 3)
        levels = T.levels()
        self.assertEqual(len(levels[2]), 1)
        self.assertEqual(len(levels[3]), 3)
        self.assertEqual(len(T.leaves()), 15)
        # two arrows per wall
        self.assertEqual(len(T.arrows), 2 * (1 + 3 * 2))
        for arrow in T.arrows:
            for _, source, target in arrow.pairs:
                self.assertTrue(source.constraints.issuperset(target.constraints))
        self.assertEqual(len(build_tower_diagram(path_graph(3), 1).leaves()), 1)

    def test_cross_wall_relabel(self):
        from confspace_tools.tower_builder import build_tower_diagram
        from confspace_tools.complex_core import path_graph
        T = build_tower_diagram(path_graph(2), 2)
        right = [a for a in T.arrows if a.side == 'right']
        self.assertEqual(len(right), 1)
        self.assertEqual(right[0].relabel, {1: 2, 2: 1})

    def test_arrow_mismatch(self):
        from confspace_tools.tower_builder import ROOT, base_zigzag, left_arrow, TowerConsistencyError
        from confspace_tools.complex_core import path_graph
        K = path_graph(3)
        D = base_zigzag((1,), K, 3)
        E = base_zigzag((3,), K, 3)
        with self.assertRaises(TowerConsistencyError):
            left_arrow(D, E, 1)


if __name__ == '__main__':
    unittest.main()
