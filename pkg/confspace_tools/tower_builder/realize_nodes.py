#! /bin/python

import os
import sys
import json

import luigi

import confspace_tools.utils.function_utils as fu
from confspace_tools.cluster_tasks import LocalTask
from confspace_tools.complex_core import read_complex
from confspace_tools.chain_algebra import write_chain_complex
from confspace_tools.tower_builder.assembly import (NodeRealizer, leaf_constraints, constraints_from_list,
                                                    check_tower_size)


#
# Node Tasks
#

class RealizeNodesBase(luigi.Task):
    """ RealizeNodes base class
    """

    task_name = 'realize_nodes'
    src_file = os.path.abspath(__file__)

    # input complex and number of particles
    input_path = luigi.Parameter()
    k = luigi.IntParameter()
    nodes_folder = luigi.Parameter()
    dependency = luigi.TaskParameter()

    def requires(self):
        return self.dependency

    def run_impl(self):
        # get the global config and init configs
        shebang, max_k, max_simplices = self.global_config_values()
        self.init(shebang)
        _, realization = self.model_config_values()
        # refuse towers beyond the caps before any job is submitted
        check_tower_size(read_complex(self.input_path), self.k, max_k, max_simplices, realization)

        # load the task config
        config = self.get_task_config()

        constraints = leaf_constraints(self.k)
        os.makedirs(self.nodes_folder, exist_ok=True)
        config.update({'input_path': self.input_path, 'nodes_folder': self.nodes_folder,
                       'realization': realization,
                       'constraints': [[c.arity, c.as_list()] for c in constraints]})

        if self.n_retries == 0:
            node_list = list(range(len(constraints)))
        else:
            node_list = self.node_list
        self._write_log("realizing %i of %i distinct nodes" % (len(node_list), len(constraints)))

        n_jobs = min(len(node_list), self.max_jobs)
        # prime and run the jobs
        self.prepare_jobs(n_jobs, node_list, config)
        self.submit_jobs(n_jobs)

        # wait till jobs finish and check for job success
        self.wait_for_jobs()
        self.check_jobs(n_jobs)


class RealizeNodesLocal(RealizeNodesBase, LocalTask):
    """ RealizeNodes on local machine
    """
    pass


#
# Implementation
#

def node_path(nodes_folder, node_id):
    return os.path.join(nodes_folder, 'node_%i.txt' % node_id)


def realize_nodes(job_id, config_path):

    fu.log("start processing job %i" % job_id)
    fu.log("reading config from %s" % config_path)

    # get the config
    with open(config_path) as f:
        config = json.load(f)
    input_path = config['input_path']
    nodes_folder = config['nodes_folder']
    constraints = config['constraints']
    node_list = config['node_list']

    K = read_complex(input_path)
    realizer = NodeRealizer(K, config['realization'])
    for node_id in node_list:
        arity, pairs = constraints[node_id]
        C = realizer(constraints_from_list(arity, pairs))
        write_chain_complex(node_path(nodes_folder, node_id), C)
        fu.log("node %i has %i cells" % (node_id, C.size))
        fu.log_node_success(node_id)

    fu.log_job_success(job_id)


if __name__ == '__main__':
    path = sys.argv[1]
    assert os.path.exists(path), path
    job_id = fu.job_id_from_config(path)
    realize_nodes(job_id, path)
