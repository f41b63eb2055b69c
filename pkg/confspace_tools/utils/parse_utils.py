import os
from subprocess import CalledProcessError

from .function_utils import tail


def _message(line):
    # drop the date and time prefix written by `function_utils.log`
    return ' '.join(line.split()[2:])


def parse_job(log_file, job_id):
    """ Check whether the last line of a job log marks the job as finished
    """
    # a missing log raises `CalledProcessError`, an empty one `IndexError`
    try:
        last_line = tail(log_file, 1)[0]
    except (IndexError, CalledProcessError):
        return False
    return _message(last_line) == "processed job %i" % job_id


def parse_nodes(log_file):
    """ Diagram nodes marked as processed in a job log
    """
    with open(log_file) as f:
        messages = [_message(line) for line in f]
    return [int(msg.split()[-1]) for msg in messages if msg.startswith('processed node')]


def parse_nodes_task(log_prefix, max_jobs, complete_job_list=()):
    """ Processed nodes of all jobs of a task that are not complete
    """
    nodes = []
    for job_id in range(max_jobs):
        log_file = log_prefix + '%i.log' % job_id
        # a job may have died before writing its log
        if job_id in complete_job_list or not os.path.exists(log_file):
            continue
        nodes.extend(parse_nodes(log_file))
    return nodes
