import luigi


class DummyTarget(luigi.Target):
    """ Dummy target that always exists
    """
    def exists(self):
        return True


class DummyTask(luigi.Task):
    """ Dummy Task for dependencies that are always true
    """
    def output(self):
        return DummyTarget()


def write_table(path, rows):
    """ Write a tsv table, one row per tuple
    """
    with open(path, 'w') as f:
        for row in rows:
            f.write('\t'.join(str(val) for val in row) + '\n')


def read_table(path):
    with open(path) as f:
        return [line.rstrip('\n').split('\t') for line in f if line.strip()]
