import luigi

from ..cluster_tasks import WorkflowBase
from . import suspension_table as suspension_tasks
from . import invariance_table as invariance_tasks


class SuspensionWorkflow(WorkflowBase):
    input_path = luigi.Parameter()
    output_path = luigi.Parameter()

    def requires(self):
        suspension_task = getattr(suspension_tasks,
                                  self._get_task_name('SuspensionTable'))
        return suspension_task(tmp_folder=self.tmp_folder,
                               max_jobs=self.max_jobs,
                               config_dir=self.config_dir,
                               input_path=self.input_path,
                               output_path=self.output_path,
                               dependency=self.dependency)

    @staticmethod
    def get_config():
        configs = super(SuspensionWorkflow, SuspensionWorkflow).get_config()
        configs.update({'suspension_table': suspension_tasks.SuspensionTableLocal.default_task_config()})
        return configs


class InvarianceWorkflow(WorkflowBase):
    input_a = luigi.Parameter()
    input_b = luigi.Parameter()
    k = luigi.IntParameter()
    output_path = luigi.Parameter()

    def requires(self):
        invariance_task = getattr(invariance_tasks,
                                  self._get_task_name('InvarianceTable'))
        return invariance_task(tmp_folder=self.tmp_folder,
                               max_jobs=self.max_jobs,
                               config_dir=self.config_dir,
                               input_a=self.input_a,
                               input_b=self.input_b,
                               k=self.k,
                               output_path=self.output_path,
                               dependency=self.dependency)

    @staticmethod
    def get_config():
        configs = super(InvarianceWorkflow, InvarianceWorkflow).get_config()
        configs.update({'invariance_table': invariance_tasks.InvarianceTableLocal.default_task_config()})
        return configs
