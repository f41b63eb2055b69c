import json

import numpy as np
from scipy import sparse

from .complexes import ChainComplex, ChainComplexError

# Line based format:
#   degree <n> <rank>      followed by <rank> lines `label <json>`
#   boundary <n> <row> <col> <value>


def _to_tuple(obj):
    if isinstance(obj, list):
        return tuple(_to_tuple(x) for x in obj)
    return obj


def format_chain_complex(C):
    lines = []
    for deg in C.degrees():
        lines.append('degree %i %i' % (deg, C.rank(deg)))
        lines.extend('label %s' % json.dumps(label, separators=(',', ':')) for label in C.basis(deg))
    for deg in range(1, C.top_degree + 1):
        mat = C.d(deg).tocoo()
        order = np.lexsort((mat.row, mat.col))
        for i in order:
            lines.append('boundary %i %i %i %i' % (deg, mat.row[i], mat.col[i], mat.data[i]))
    return '\n'.join(lines) + '\n'


def write_chain_complex(path, C):
    with open(path, 'w') as f:
        f.write(format_chain_complex(C))


def parse_chain_complex(lines):
    bases = {}
    triples = {}
    current, expected = None, 0
    for line_id, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        keyword, _, rest = line.partition(' ')
        if keyword == 'degree':
            if current is not None and len(bases[current]) != expected:
                raise ChainComplexError("line %i: degree %i has %i labels, expected %i"
                                        % (line_id, current, len(bases[current]), expected))
            current, expected = map(int, rest.split())
            bases[current] = []
        elif keyword == 'label':
            if current is None:
                raise ChainComplexError("line %i: label before the first degree line" % line_id)
            bases[current].append(_to_tuple(json.loads(rest)))
        elif keyword == 'boundary':
            deg, row, col, val = map(int, rest.split())
            triples.setdefault(deg, []).append((row, col, val))
        else:
            raise ChainComplexError("line %i: unknown keyword %s" % (line_id, keyword))
    if current is not None and len(bases[current]) != expected:
        raise ChainComplexError("degree %i has %i labels, expected %i" % (current, len(bases[current]), expected))

    differentials = {}
    for deg, entries in triples.items():
        rows, cols, vals = zip(*entries)
        shape = (len(bases.get(deg - 1, [])), len(bases.get(deg, [])))
        differentials[deg] = sparse.csr_matrix((np.array(vals, dtype='int64'), (rows, cols)),
                                               shape=shape, dtype='int64')
    return ChainComplex(bases, differentials)


def read_chain_complex(path):
    with open(path) as f:
        return parse_chain_complex(f)
