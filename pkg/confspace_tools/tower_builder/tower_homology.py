#! /bin/python

import os
import sys
import json

import luigi

import confspace_tools.utils.function_utils as fu
from confspace_tools.utils.task_utils import write_table
from confspace_tools.cluster_tasks import LocalTask
from confspace_tools.complex_core import read_complex
from confspace_tools.chain_algebra import homology, read_chain_complex, write_chain_complex
from confspace_tools.tower_builder.assembly import (NodeRealizer, assemble_tower, leaf_constraints,
                                                    tower_rows)
from confspace_tools.tower_builder.realize_nodes import node_path


#
# Tower Tasks
#

class TowerHomologyBase(luigi.Task):
    """ TowerHomology base class
    """

    task_name = 'tower_homology'
    src_file = os.path.abspath(__file__)
    allow_retry = False

    input_path = luigi.Parameter()
    k = luigi.IntParameter()
    nodes_folder = luigi.Parameter()
    output_path = luigi.Parameter()
    dependency = luigi.TaskParameter()

    def requires(self):
        return self.dependency

    @staticmethod
    def default_task_config():
        # serialize the assembled chain complex next to the table
        config = LocalTask.default_task_config()
        config.update({'write_complex': False})
        return config

    def run_impl(self):
        # get the global config and init configs
        shebang, max_k, max_simplices = self.global_config_values()
        self.init(shebang)
        coeff, realization = self.model_config_values()

        # load the task config
        config = self.get_task_config()
        config.update({'input_path': self.input_path, 'k': self.k,
                       'nodes_folder': self.nodes_folder, 'output_path': self.output_path,
                       'max_k': max_k, 'max_simplices': max_simplices,
                       'coeff': coeff, 'realization': realization})

        # assembly is a single reduction job
        n_jobs = 1
        self.prepare_jobs(n_jobs, None, config)
        self.submit_jobs(n_jobs)

        # wait till jobs finish and check for job success
        self.wait_for_jobs()
        self.check_jobs(n_jobs)


class TowerHomologyLocal(TowerHomologyBase, LocalTask):
    """ TowerHomology on local machine
    """
    pass


#
# Implementation
#

def tower_homology(job_id, config_path):

    fu.log("start processing job %i" % job_id)
    fu.log("reading config from %s" % config_path)

    # get the config
    with open(config_path) as f:
        config = json.load(f)
    k = config['k']
    nodes_folder = config['nodes_folder']
    output_path = config['output_path']

    K = read_complex(config['input_path'])
    realizer = NodeRealizer(K, config['realization'])
    constraints = leaf_constraints(k)
    for node_id, node_constraints in enumerate(constraints):
        realizer.preload(node_constraints, read_chain_complex(node_path(nodes_folder, node_id)))
    fu.log("loaded %i realized nodes" % len(constraints))

    result = assemble_tower(K, k, max_k=config['max_k'], max_simplices=config['max_simplices'],
                            realization=config['realization'], realizer=realizer)
    fu.log("assembled tower with %i cells" % result.complex.size)
    summary = homology(result.complex, config['coeff'])
    write_table(output_path, tower_rows(k, result.complex, summary))
    if config.get('write_complex', False):
        write_chain_complex(os.path.splitext(output_path)[0] + '.chains', result.complex)
    fu.log("betti numbers %s" % summary.betti_row())

    fu.log_job_success(job_id)


if __name__ == '__main__':
    path = sys.argv[1]
    assert os.path.exists(path), path
    job_id = fu.job_id_from_config(path)
    tower_homology(job_id, path)
