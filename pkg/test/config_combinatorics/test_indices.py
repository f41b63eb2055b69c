import unittest
from fractions import Fraction
from math import factorial


class TestIndices(unittest.TestCase):

    def test_enumerate(self):
        from confspace_tools.config_combinatorics import enumerate_index_tuples, IndexTupleError
        self.assertEqual(enumerate_index_tuples(1), [()])
        self.assertEqual(enumerate_index_tuples(2), [(1,), (3,)])
        self.assertEqual(enumerate_index_tuples(3), [(1, 1), (1, 3), (1, 5), (3, 1), (3, 3), (3, 5)])
        for k in range(1, 6):
            self.assertEqual(len(enumerate_index_tuples(k)), factorial(k))
        with self.assertRaises(IndexTupleError):
            enumerate_index_tuples(0)

    def test_check_index_tuple(self):
        from confspace_tools.config_combinatorics import check_index_tuple, IndexTupleError
        self.assertEqual(check_index_tuple([3, 5]), (3, 5))
        for bad in ((2,), (5,), (1, 7), (0,)):
            with self.assertRaises(IndexTupleError):
                check_index_tuple(bad)

    def test_heights(self):
        from confspace_tools.config_combinatorics import heights, format_fraction
        self.assertEqual(heights(()), (0,))
        self.assertEqual(heights((1, 5)), (0, -1, 2))
        self.assertEqual(heights((3, 3)), (0, 1, Fraction(1, 2)))
        self.assertEqual(' '.join(format_fraction(t) for t in heights((3, 3))), '0 1 1/2')

    def test_heights_distinct(self):
        from confspace_tools.config_combinatorics import enumerate_index_tuples, heights
        for k in range(1, 6):
            for i in enumerate_index_tuples(k):
                t = heights(i)
                self.assertEqual(len(set(t)), k)

    def test_ranks(self):
        from confspace_tools.config_combinatorics import enumerate_index_tuples, ranks
        self.assertEqual(ranks((1, 1)), (3, 2, 1))
        self.assertEqual(ranks((3, 5)), (1, 2, 3))
        self.assertEqual(ranks((3, 3)), (1, 3, 2))
        # the tuples enumerate every ordering exactly once
        for k in range(1, 6):
            orders = [ranks(i) for i in enumerate_index_tuples(k)]
            self.assertEqual(len(set(orders)), factorial(k))

    def test_larger_k(self):
        from itertools import permutations
        from confspace_tools.config_combinatorics import enumerate_index_tuples, heights, ranks
        for k in range(1, 9):
            self.assertEqual(len(enumerate_index_tuples(k)), factorial(k))
        for k in range(1, 8):
            orders = {ranks(i) for i in enumerate_index_tuples(k)}
            self.assertEqual(orders, set(permutations(range(1, k + 1))))

    def test_heights_bounds(self):
        from confspace_tools.config_combinatorics import enumerate_index_tuples, heights
        for k in range(2, 8):
            for i in enumerate_index_tuples(k):
                t = heights(i)
                self.assertTrue(all(abs(t_m) <= m - 1 for m, t_m in enumerate(t, 1)))
                # placing a particle never moves the earlier ones
                self.assertEqual(t[:-1], heights(i[:-1]))

    def test_wall_relabel(self):
        from confspace_tools.config_combinatorics import wall_relabel, insert_position, IndexTupleError
        self.assertEqual(wall_relabel(1, 2), {1: 2, 2: 1, 3: 3})
        self.assertEqual(wall_relabel(2, 2), {1: 1, 2: 3, 3: 2})
        with self.assertRaises(IndexTupleError):
            wall_relabel(3, 2)
        with self.assertRaises(IndexTupleError):
            wall_relabel(0, 2)
        self.assertEqual(insert_position(()), 1)
        self.assertEqual(insert_position((3, 5)), 3)
        self.assertEqual(insert_position((1,)), 1)


if __name__ == '__main__':
    unittest.main()
