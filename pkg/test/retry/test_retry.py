import os
import unittest
import sys

import luigi

try:
    from ..base import BaseTest
except (ValueError, ImportError):
    sys.path.append('..')
    from base import BaseTest


try:
    from .failing_task import FailingTaskLocal
except ImportError:
    from failing_task import FailingTaskLocal


class TestRetry(BaseTest):
    max_jobs = 4

    def setUp(self):
        super().setUp()
        self.update_global_config(max_num_retries=2)

    def _run(self):
        from confspace_tools.complex_core import path_graph
        nodes_folder = os.path.join(self.tmp_folder, 'nodes')
        ret = luigi.build([FailingTaskLocal(input_path=self.write_input(path_graph(3)),
                                            k=3, nodes_folder=nodes_folder,
                                            config_dir=self.config_folder,
                                            tmp_folder=self.tmp_folder,
                                            max_jobs=self.max_jobs)], local_scheduler=True)
        return ret, nodes_folder

    def test_retry(self):
        from confspace_tools.tower_builder import leaf_constraints
        ret, nodes_folder = self._run()
        self.assertTrue(ret)
        n_nodes = len(leaf_constraints(3))
        self.assertEqual(sorted(os.listdir(nodes_folder)), sorted('node_%i.txt' % i for i in range(n_nodes)))

    def test_no_retry(self):
        self.update_global_config(max_num_retries=0)
        ret, nodes_folder = self._run()
        self.assertFalse(ret)
        self.assertFalse(os.path.exists(os.path.join(nodes_folder, 'node_1.txt')))
        self.assertTrue(os.path.exists(os.path.join(self.tmp_folder, 'failing_task_failed.log')))


if __name__ == '__main__':
    unittest.main()
