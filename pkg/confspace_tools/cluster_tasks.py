import os
import shutil
import stat
import json
import sys
from concurrent import futures
from subprocess import call
from datetime import datetime
from multiprocessing import cpu_count

import luigi

from .utils.parse_utils import parse_nodes_task, parse_job
from .utils.task_utils import DummyTask


class FailedJobsError(Exception):
    """ Raised when jobs of a task failed and no retry is possible
    """
    pass


class BaseClusterTask(luigi.Task):
    """
    Base class for tasks that split the nodes of a diagram over jobs.

    Every job is a copy of the task module (`src_file`) executed as a script
    with a json config; it logs to `tmp_folder/logs` and marks every
    finished node and finally the finished job in its log.
    Deriving classes implement `run_impl`, which calls the API in this order:

        def run_impl(self):
            shebang, max_k, max_simplices = self.global_config_values()
            self.init(shebang)
            config = self.get_task_config()

            # on a retry only the unfinished nodes are scheduled
            node_list = list(range(n_nodes)) if self.n_retries == 0 else self.node_list
            n_jobs = min(self.max_jobs, len(node_list))

            self.prepare_jobs(n_jobs, node_list, config)
            self.submit_jobs(n_jobs)
            self.wait_for_jobs()
            self.check_jobs(n_jobs)

    Tasks that reduce over the whole diagram pass `node_list=None` and run a single job.
    """
    tmp_folder = luigi.Parameter()
    max_jobs = luigi.IntParameter()
    config_dir = luigi.Parameter()
    # set to False in tasks whose jobs can not be resumed node by node
    allow_retry = True
    n_retries = 0
    # fraction of failed jobs up to which a retry is attempted
    retry_threshold = 0.5

    #
    # API
    #

    def run(self):
        self.make_dirs()
        self._write_log("Start task %s" % self.task_name)
        try:
            self.run_impl()
        except FailedJobsError:
            # the log was already moved by `check_jobs`
            raise
        except Exception as e:
            self._write_log("task failed in `run_impl` with %s" % str(e))
            self._move_failed_log()
            raise
        self._write_log("Done task %s" % self.task_name)

    def init(self, shebang):
        """ Copy the task module to the tmp folder as an executable job script.

        Must be the first call in `run_impl`.
        """
        executable = shebang[2:].strip() if shebang.startswith('#!') else shebang
        if not os.path.exists(executable):
            raise RuntimeError("The python executable %s is not valid" % executable)
        assert os.path.exists(self.src_file), self.src_file
        with open(self.src_file) as f:
            lines = f.readlines()
        # the first line of every task module is a shebang placeholder
        lines[0] = '#! %s\n' % executable
        script_path = self._script_path()
        with open(script_path, 'w') as f:
            f.writelines(lines)
        os.chmod(script_path, os.stat(script_path).st_mode | stat.S_IEXEC)
        self._write_log('copied job script from %s to %s' % (self.src_file, script_path))

    def check_jobs(self, n_jobs):
        """ Check the job logs and retry the unfinished nodes if allowed
        """
        passed = [job_id for job_id in range(n_jobs) if parse_job(self._log_path(job_id), job_id)]
        if len(passed) == n_jobs:
            self._write_log("%s finished successfully" % self.task_name)
            return

        failed = sorted(set(range(n_jobs)) - set(passed))
        self._write_log("%s failed for jobs: %s" % (self.task_name, ', '.join(map(str, failed))))
        if self._can_retry(len(failed), n_jobs):
            self.node_list = self._unfinished_nodes(n_jobs, passed)
            self.n_retries += 1
            self._write_log("retry %i for %i unfinished nodes" % (self.n_retries, len(self.node_list)))
            self.run()
            return

        self._move_failed_log()
        raise FailedJobsError("Task: %s failed for %i / %i jobs" % (self.task_name, len(failed), n_jobs))

    def get_task_config(self):
        """ Task config from `config_dir/<task_name>.config`, defaults if it does not exist
        """
        return self._read_config(self.task_name, self.default_task_config)

    @staticmethod
    def default_task_config():
        """ Default task config, deriving classes extend it with their own options
        """
        # time limit in minutes, memory limit in GB
        return {"threads_per_job": 1, "time_limit": 60, "mem_limit": 1.}

    def get_global_config(self):
        """ Global config from `config_dir/global.config`, defaults if it does not exist
        """
        return self._read_config('global', self.default_global_config)

    @staticmethod
    def default_global_config():
        """ Default global config: the job interpreter, retries, the tower caps and
            the coefficient and realization modes
        """
        return {"shebang": sys.executable,
                "max_num_retries": 0,
                "max_k": 4,
                "max_simplices": 2000000,
                "coeff": "q",
                "realization": "cellular"}

    def global_config_values(self):
        """ The job interpreter and the tower caps
        """
        config = {**self.default_global_config(), **self.get_global_config()}
        return config["shebang"], config["max_k"], config["max_simplices"]

    def model_config_values(self):
        """ Coefficient mode and node realization
        """
        config = {**self.default_global_config(), **self.get_global_config()}
        return config["coeff"], config["realization"]

    # part of the luigi API
    def output(self):
        return luigi.LocalTarget(os.path.join(self.tmp_folder, self.task_name + '.log'))

    #
    # Must implement API
    #

    def prepare_jobs(self, n_jobs, node_list, config):
        raise NotImplementedError("BaseClusterTask does not implement this functionality")

    def submit_jobs(self, n_jobs):
        raise NotImplementedError("BaseClusterTask does not implement this functionality")

    def wait_for_jobs(self):
        raise NotImplementedError("BaseClusterTask does not implement this functionality")

    #
    # Helper functions
    #

    def make_dirs(self):
        for folder in ('logs', 'error_logs'):
            os.makedirs(os.path.join(self.tmp_folder, folder), exist_ok=True)
        self._write_log('created tmp-folder and log dirs @ %s' % self.tmp_folder)

    def _write_log(self, msg):
        with open(self.output().path, 'a') as f:
            f.write('%s: %s\n' % (str(datetime.now()), msg))

    def _move_failed_log(self):
        out_path = self.output().path
        fail_path = out_path[:-4] + '_failed.log'
        self._write_log("move log from %s to %s" % (out_path, fail_path))
        shutil.move(out_path, fail_path)

    def _read_config(self, name, default):
        config_path = os.path.join(self.config_dir, name + '.config')
        if not os.path.exists(config_path):
            self._write_log("reading default %s config" % name)
            return default()
        self._write_log("reading %s config from %s" % (name, config_path))
        with open(config_path) as f:
            return json.load(f)

    def _can_retry(self, n_failed, n_jobs):
        max_num_retries = self.get_global_config().get('max_num_retries', 0)
        return self.allow_retry and self.n_retries < max_num_retries and n_failed / n_jobs < self.retry_threshold

    def _unfinished_nodes(self, n_jobs, passed_jobs):
        finished = []
        for job_id in passed_jobs:
            with open(self._config_path(job_id)) as f:
                finished.extend(json.load(f)['node_list'])
        # failed jobs may have finished some of their nodes
        finished.extend(parse_nodes_task(self._log_prefix(), n_jobs, passed_jobs))
        return sorted(set(self.node_list) - set(finished))

    def _script_path(self):
        return os.path.join(self.tmp_folder, self.task_name + '.py')

    def _config_path(self, job_id):
        return os.path.join(self.tmp_folder, '%s_job_%i.config' % (self.task_name, job_id))

    def _log_prefix(self):
        return os.path.join(self.tmp_folder, 'logs', '%s_' % self.task_name)

    def _log_path(self, job_id):
        return self._log_prefix() + '%i.log' % job_id

    def _err_path(self, job_id):
        return os.path.join(self.tmp_folder, 'error_logs', '%s_%i.err' % (self.task_name, job_id))

    def _write_job_configs(self, n_jobs, node_list, config):
        if node_list is None:
            assert n_jobs == 1, "a task without node list runs a single job"
            job_configs = [config]
        else:
            # remembered for the retry of unfinished nodes
            self.node_list = node_list
            # round robin, expensive nodes come late in the diagram order
            job_configs = [{'node_list': node_list[job_id::n_jobs], **config} for job_id in range(n_jobs)]
        for job_id, job_config in enumerate(job_configs):
            with open(self._config_path(job_id), 'w') as f:
                json.dump(job_config, f)
        self._write_log('written config for %i jobs' % n_jobs)


class LocalTask(BaseClusterTask):
    """
    Task running its jobs as local sub-processes
    """
    max_local_jobs = cpu_count()

    def prepare_jobs(self, n_jobs, node_list, config):
        self._write_job_configs(n_jobs, node_list, config)

    def _submit(self, job_id):
        script_path, config_path = self._script_path(), self._config_path(job_id)
        assert os.path.exists(script_path), script_path
        assert os.path.exists(config_path), config_path
        with open(self._log_path(job_id), 'w') as f_out, open(self._err_path(job_id), 'w') as f_err:
            call([script_path, config_path], stdout=f_out, stderr=f_err)

    def submit_jobs(self, n_jobs):
        assert n_jobs <= self.max_local_jobs,\
            "Trying to submit %i local jobs but limit is %i" % (n_jobs, self.max_local_jobs)
        with futures.ProcessPoolExecutor(n_jobs) as pp:
            tasks = [pp.submit(self._submit, job_id) for job_id in range(n_jobs)]
            [t.result() for t in tasks]

    # jobs are finished once the process pool is closed
    def wait_for_jobs(self):
        pass


class WorkflowBase(luigi.Task):
    """
    Base class for workflows chaining the tasks of one computation.
    """
    tmp_folder = luigi.Parameter()
    max_jobs = luigi.IntParameter()
    config_dir = luigi.Parameter()
    # only local execution is supported (case insensitive)
    target = luigi.Parameter(default='local')
    # per default the workflow depends on a task that is always complete
    dependency = luigi.TaskParameter(default=DummyTask())

    _target_dict = {'local': 'Local'}

    def _get_task_name(self, task_base_name):
        target = self.target.lower()
        if target not in self._target_dict:
            raise ValueError("Unsupported target %s, only local execution is available" % self.target)
        return task_base_name + self._target_dict[target]

    def output(self):
        # mirror the target of the last task
        return luigi.LocalTarget(self.input().path)

    @staticmethod
    def get_config():
        """ Default configs of all tasks in the workflow, indexed by task name
        """
        return {'global': BaseClusterTask.default_global_config()}
