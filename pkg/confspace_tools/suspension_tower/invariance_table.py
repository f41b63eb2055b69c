#! /bin/python

import os
import sys
import json

import luigi

import confspace_tools.utils.function_utils as fu
from confspace_tools.utils.task_utils import write_table
from confspace_tools.cluster_tasks import LocalTask
from confspace_tools.complex_core import read_complex
from confspace_tools.suspension_tower.suspension import invariance_check, invariance_rows


#
# Invariance Tasks
#

class InvarianceTableBase(luigi.Task):
    """ InvarianceTable base class
    """

    task_name = 'invariance_table'
    src_file = os.path.abspath(__file__)
    allow_retry = False

    input_a = luigi.Parameter()
    input_b = luigi.Parameter()
    k = luigi.IntParameter()
    output_path = luigi.Parameter()
    dependency = luigi.TaskParameter()

    def requires(self):
        return self.dependency

    def run_impl(self):
        # get the global config and init configs
        shebang, max_k, max_simplices = self.global_config_values()
        self.init(shebang)
        coeff, realization = self.model_config_values()

        # load the task config
        config = self.get_task_config()
        config.update({'input_a': self.input_a, 'input_b': self.input_b, 'k': self.k,
                       'output_path': self.output_path, 'max_k': max_k,
                       'max_simplices': max_simplices, 'coeff': coeff,
                       'realization': realization})

        n_jobs = 1
        self.prepare_jobs(n_jobs, None, config)
        self.submit_jobs(n_jobs)

        # wait till jobs finish and check for job success
        self.wait_for_jobs()
        self.check_jobs(n_jobs)


class InvarianceTableLocal(InvarianceTableBase, LocalTask):
    """ InvarianceTable on local machine
    """
    pass


#
# Implementation
#

def invariance_table(job_id, config_path):

    fu.log("start processing job %i" % job_id)
    fu.log("reading config from %s" % config_path)

    # get the config
    with open(config_path) as f:
        config = json.load(f)

    K, L = read_complex(config['input_a']), read_complex(config['input_b'])
    report = invariance_check(K, L, config['k'], mode=config['coeff'], max_k=config['max_k'],
                              max_simplices=config['max_simplices'], realization=config['realization'])
    # a failed verdict is a result, not a failed job
    fu.log("verdict %s" % ('pass' if report.verdict else 'fail'))
    write_table(config['output_path'], invariance_rows(report))

    fu.log_job_success(job_id)


if __name__ == '__main__':
    path = sys.argv[1]
    assert os.path.exists(path), path
    job_id = fu.job_id_from_config(path)
    invariance_table(job_id, path)
