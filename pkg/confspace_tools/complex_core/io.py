import os
from itertools import combinations

from .complexes import OrderedComplex


class ComplexFormatError(Exception):
    """ Custom exception for malformed complex files
    """
    def __init__(self, msg, line=None):
        if line is not None:
            msg = "line %i: %s" % (line, msg)
        super().__init__(msg)
        self.line = line


def parse_complex(lines):
    """ Parse the line based complex format.

    `# comment`, `vertex <token>` and `simplex <token> <token> ...`;
    vertex order is the declaration order and faces are closed automatically.
    """
    vertices = []
    declared = set()
    simplices = set()
    for line_id, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        tokens = line.split()
        keyword, args = tokens[0], tokens[1:]
        if keyword == 'vertex':
            if len(args) != 1:
                raise ComplexFormatError("expected exactly one token after 'vertex'", line_id)
            if args[0] in declared:
                raise ComplexFormatError("vertex %s declared twice" % args[0], line_id)
            declared.add(args[0])
            vertices.append(args[0])
        elif keyword == 'simplex':
            if not args:
                raise ComplexFormatError("empty simplex", line_id)
            for token in args:
                if token not in declared:
                    raise ComplexFormatError("simplex references undeclared vertex %s" % token, line_id)
            if len(set(args)) != len(args):
                raise ComplexFormatError("simplex lists a vertex twice", line_id)
            for d in range(1, len(args) + 1):
                simplices.update(combinations(args, d))
        else:
            raise ComplexFormatError("unknown keyword %s" % keyword, line_id)
    simplices.update((v,) for v in vertices)
    return OrderedComplex(vertices, simplices)


def read_complex(path):
    if not os.path.exists(path):
        raise ComplexFormatError("complex file %s does not exist" % path)
    with open(path, encoding='utf-8') as f:
        return parse_complex(f)


def _token(vertex):
    token = str(vertex).replace(' ', '')
    assert token and not token.startswith('#'), "Vertex %s has no valid token" % (vertex,)
    return token


def format_complex(K):
    """ Serialize a complex; only maximal simplices are written
    """
    lines = ['vertex %s' % _token(v) for v in K.vertices]
    maximal = set(K.simplices)
    for s in K.simplices:
        for d in range(1, len(s)):
            maximal.difference_update(combinations(s, d))
    for s in sorted(maximal, key=K.key):
        if len(s) > 1:
            lines.append('simplex %s' % ' '.join(_token(v) for v in s))
    return '\n'.join(lines) + '\n'


def write_complex(path, K):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(format_complex(K))
