import os
import json
import unittest
import sys


try:
    from ..base import BaseTest
except (ValueError, ImportError):
    sys.path.append('..')
    from base import BaseTest


class TestTowerWorkflow(BaseTest):

    def _run(self, K, k):
        from confspace_tools.tower_builder import TowerWorkflow
        input_path = self.write_input(K)
        return self.run_workflow(TowerWorkflow, input_path=input_path, k=k,
                                 output_path=self.output_path)

    def test_tower_workflow(self):
        from confspace_tools.complex_core import path_graph
        from confspace_tools.utils.task_utils import read_table
        self.assertTrue(self._run(path_graph(3), 2))
        rows = dict((row[0], row[1]) for row in read_table(self.output_path))
        self.assertEqual(rows['k'], '2')
        self.assertEqual(rows['betti'], '1 1')
        self.assertEqual(rows['euler'], '0')
        self.assertNotIn('torsion', rows)
        nodes_folder = os.path.join(self.tmp_folder, 'nodes_k2')
        self.assertEqual(len(os.listdir(nodes_folder)), 3)

    def test_integral_with_complex(self):
        from confspace_tools.complex_core import cycle_graph
        from confspace_tools.tower_builder import TowerWorkflow
        from confspace_tools.chain_algebra import read_chain_complex, homology
        from confspace_tools.utils.task_utils import read_table
        self.update_global_config(coeff='z')
        config = TowerWorkflow.get_config()['tower_homology']
        config.update({'write_complex': True})
        with open(os.path.join(self.config_folder, 'tower_homology.config'), 'w') as f:
            json.dump(config, f)

        self.assertTrue(self._run(cycle_graph(6), 2))
        rows = dict((row[0], row[1]) for row in read_table(self.output_path))
        self.assertEqual(rows['betti'], '1 3 2')
        self.assertEqual(rows['torsion'], '-')
        C = read_chain_complex(os.path.splitext(self.output_path)[0] + '.chains')
        self.assertEqual(homology(C).betti, (1, 3, 2))

    def test_repeated_runs(self):
        import luigi
        from confspace_tools.complex_core import cycle_graph
        from confspace_tools.tower_builder import TowerWorkflow
        self.update_global_config(coeff='z')
        input_path = self.write_input(cycle_graph(6))
        tables = []
        # a fresh tmp folder and a different job split for every run
        for run_id, max_jobs in enumerate((1, self.max_jobs)):
            output_path = os.path.join(self.tmp_folder, 'table_%i.tsv' % run_id)
            task = TowerWorkflow(config_dir=self.config_folder, target=self.target, max_jobs=max_jobs,
                                 tmp_folder=os.path.join(self.tmp_folder, 'run_%i' % run_id),
                                 input_path=input_path, k=2, output_path=output_path)
            self.assertTrue(luigi.build([task], local_scheduler=True))
            with open(output_path, 'rb') as f:
                tables.append(f.read())
        self.assertEqual(tables[0], tables[1])

    def test_resource_cap(self):
        from confspace_tools.complex_core import path_graph
        self.update_global_config(max_k=2)
        self.assertFalse(self._run(path_graph(3), 3))
        self.assertFalse(os.path.exists(self.output_path))
        failed_log = os.path.join(self.tmp_folder, 'realize_nodes_failed.log')
        self.assertTrue(os.path.exists(failed_log))

    def test_get_config(self):
        from confspace_tools.tower_builder import TowerWorkflow
        configs = TowerWorkflow.get_config()
        self.assertEqual(set(configs), {'global', 'realize_nodes', 'tower_homology'})
        self.assertFalse(configs['tower_homology']['write_complex'])
        self.assertEqual(configs['global']['realization'], 'cellular')


if __name__ == '__main__':
    unittest.main()
