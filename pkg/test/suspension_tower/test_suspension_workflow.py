import os
import unittest
import sys

try:
    from ..base import BaseTest
except (ValueError, ImportError):
    sys.path.append('..')
    from base import BaseTest


class TestSuspensionWorkflow(BaseTest):

    def test_suspension_workflow(self):
        from confspace_tools.suspension_tower import SuspensionWorkflow
        from confspace_tools.complex_core import path_graph
        from confspace_tools.utils.task_utils import read_table
        input_path = self.write_input(path_graph(4))
        self.assertTrue(self.run_workflow(SuspensionWorkflow, input_path=input_path,
                                          output_path=self.output_path))
        rows = dict((row[0], row[1]) for row in read_table(self.output_path))
        self.assertEqual(rows['cofiber'], '0 6')
        self.assertEqual(rows['f3'], '6')
        self.assertEqual(rows['shift_law'], 'ok')

    def test_uncertified_input(self):
        from confspace_tools.suspension_tower import SuspensionWorkflow
        from confspace_tools.complex_core import cycle_graph
        input_path = self.write_input(cycle_graph(3))
        self.assertFalse(self.run_workflow(SuspensionWorkflow, input_path=input_path,
                                           output_path=self.output_path))
        self.assertTrue(os.path.exists(os.path.join(self.tmp_folder, 'suspension_table_failed.log')))

    def test_invariance_workflow(self):
        from confspace_tools.suspension_tower import InvarianceWorkflow
        from confspace_tools.complex_core import cycle_graph
        from confspace_tools.utils.task_utils import read_table
        input_a = self.write_input(cycle_graph(4), 'a.txt')
        input_b = self.write_input(cycle_graph(8), 'b.txt')
        self.assertTrue(self.run_workflow(InvarianceWorkflow, input_a=input_a, input_b=input_b, k=2,
                                          output_path=self.output_path))
        rows = read_table(self.output_path)
        self.assertEqual(rows[1], ['tower', '1 3 2', '1 3 2', 'ok'])
        self.assertEqual(rows[-1], ['verdict', 'pass'])


if __name__ == '__main__':
    unittest.main()
