#! /bin/python

import os
import sys
import json

import luigi

import confspace_tools.utils.function_utils as fu
from confspace_tools.utils.task_utils import write_table
from confspace_tools.cluster_tasks import LocalTask
from confspace_tools.complex_core import read_complex
from confspace_tools.suspension_tower.suspension import suspension_report, suspension_rows


#
# Suspension Tasks
#

class SuspensionTableBase(luigi.Task):
    """ SuspensionTable base class
    """

    task_name = 'suspension_table'
    src_file = os.path.abspath(__file__)
    allow_retry = False

    input_path = luigi.Parameter()
    output_path = luigi.Parameter()
    dependency = luigi.TaskParameter()

    def requires(self):
        return self.dependency

    @staticmethod
    def default_task_config():
        # the simplicial product projection check is the expensive part
        config = LocalTask.default_task_config()
        config.update({'product_check': True})
        return config

    def run_impl(self):
        # get the global config and init configs
        shebang, _, _ = self.global_config_values()
        self.init(shebang)
        coeff, realization = self.model_config_values()

        # load the task config
        config = self.get_task_config()
        config.update({'input_path': self.input_path, 'output_path': self.output_path,
                       'coeff': coeff, 'realization': realization})

        n_jobs = 1
        self.prepare_jobs(n_jobs, None, config)
        self.submit_jobs(n_jobs)

        # wait till jobs finish and check for job success
        self.wait_for_jobs()
        self.check_jobs(n_jobs)


class SuspensionTableLocal(SuspensionTableBase, LocalTask):
    """ SuspensionTable on local machine
    """
    pass


#
# Implementation
#

def suspension_table(job_id, config_path):

    fu.log("start processing job %i" % job_id)
    fu.log("reading config from %s" % config_path)

    # get the config
    with open(config_path) as f:
        config = json.load(f)

    K = read_complex(config['input_path'])
    report = suspension_report(K, mode=config['coeff'], realization=config['realization'],
                               product_check=config.get('product_check', True))
    if not report.consistent:
        fu.log("suspension pieces are inconsistent: %s" % (report,))
    write_table(config['output_path'], suspension_rows(report))

    fu.log_job_success(job_id)


if __name__ == '__main__':
    path = sys.argv[1]
    assert os.path.exists(path), path
    job_id = fu.job_id_from_config(path)
    suspension_table(job_id, path)
