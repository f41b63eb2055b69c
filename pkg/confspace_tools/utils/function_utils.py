import os
import sys
from datetime import datetime
from subprocess import check_output


# stdout of the job scripts is piped to file, so we can use it as logging
def log(msg):
    print("%s: %s" % (str(datetime.now()), msg))


# library code must not write to stdout, the cli reports live there
def warn(msg):
    print("%s: WARNING: %s" % (str(datetime.now()), msg), file=sys.stderr)


def log_node_success(node_id):
    print("%s: processed node %i" % (str(datetime.now()), node_id))


def log_job_success(job_id):
    print("%s: processed job %i" % (str(datetime.now()), job_id))


def tail(path, n_lines):
    line_str = '-%i' % n_lines
    return check_output(['tail', line_str, path]).decode().split('\n')[:-1]


def job_id_from_config(path):
    """ Parse the job id from a job config path like `task_job_3.config`
    """
    return int(os.path.basename(path).split('.')[0].split('_')[-1])
