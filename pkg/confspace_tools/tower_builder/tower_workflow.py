import os
import luigi

from ..cluster_tasks import WorkflowBase
from . import realize_nodes as realize_tasks
from . import tower_homology as homology_tasks


class TowerWorkflow(WorkflowBase):
    input_path = luigi.Parameter()
    k = luigi.IntParameter()
    output_path = luigi.Parameter()

    def requires(self):
        nodes_folder = os.path.join(self.tmp_folder, 'nodes_k%i' % self.k)
        realize_task = getattr(realize_tasks,
                               self._get_task_name('RealizeNodes'))
        dep = realize_task(tmp_folder=self.tmp_folder,
                           max_jobs=self.max_jobs,
                           config_dir=self.config_dir,
                           input_path=self.input_path,
                           k=self.k,
                           nodes_folder=nodes_folder,
                           dependency=self.dependency)
        homology_task = getattr(homology_tasks,
                                self._get_task_name('TowerHomology'))
        dep = homology_task(tmp_folder=self.tmp_folder,
                            max_jobs=self.max_jobs,
                            config_dir=self.config_dir,
                            input_path=self.input_path,
                            k=self.k,
                            nodes_folder=nodes_folder,
                            output_path=self.output_path,
                            dependency=dep)
        return dep

    @staticmethod
    def get_config():
        configs = super(TowerWorkflow, TowerWorkflow).get_config()
        configs.update({'realize_nodes': realize_tasks.RealizeNodesLocal.default_task_config(),
                        'tower_homology': homology_tasks.TowerHomologyLocal.default_task_config()})
        return configs
