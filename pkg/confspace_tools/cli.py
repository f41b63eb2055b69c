""" Command line entry point.

Every command is a thin wrapper around the library: it reads its inputs,
calls one operation and prints a table, tab separated by default.
Exit codes: 0 ok, 1 failed verdict or domain error, 2 malformed input, 3 resource cap.
"""
import argparse
import json
import os
import sys
from collections import namedtuple

from .chain_algebra import ChainComplexError, homology, read_chain_complex, write_chain_complex, RATIONAL, INTEGRAL
from .cluster_tasks import BaseClusterTask
from .complex_core import (ComplexFormatError, ComplexValidationError, ConstraintSet, GraphError,
                           chains, constrained_subcomplex, read_complex, staircase_product, validate,
                           write_complex)
from .config_combinatorics import IndexTupleError, enumerate_index_tuples, heights, ranks, format_fraction
from .config_models import REALIZATIONS, SIMPLICIAL, abrams_condition, deleted_product_model
from .suspension_tower import (CertificationError, InvarianceInputError, invariance_check, invariance_rows,
                               suspension_report, suspension_rows)
from .tower_builder import (ResourceCapError, TowerConsistencyError, assemble_tower, boundary_model,
                            check_product_size, check_tower_size, fiber_homology, tower_rows)
from .chain_algebra.homology import betti_convolution
from .version import __version__

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_CAP = 3

RunConfig = namedtuple('RunConfig', ['command', 'inputs', 'k', 'coeff', 'max_k', 'max_simplices',
                                     'output_format', 'realization', 'options'])

INPUT_ERRORS = (ComplexFormatError, ComplexValidationError, ChainComplexError, IndexTupleError, ValueError)
DOMAIN_ERRORS = (CertificationError, InvarianceInputError, GraphError, TowerConsistencyError)


#
# commands
#

def _complex_validate(config):
    K = read_complex(config.inputs[0])
    report = validate(K)
    return EXIT_OK, [('vertices', report.n_vertices),
                     ('f_vector', ' '.join(map(str, report.f_vector))),
                     ('euler', report.euler_characteristic)]


def _complex_product(config):
    factors = [read_complex(path) for path in config.inputs]
    if len(factors) == 1:
        factors = factors * config.k
    check_product_size(factors, config.max_simplices)
    P = staircase_product(factors)
    pairs = config.options.get('constraints') or []
    if pairs:
        P = constrained_subcomplex(P, ConstraintSet(len(factors), pairs))
    if config.options.get('output'):
        write_complex(config.options['output'], P)
    return EXIT_OK, [('factors', len(factors)),
                     ('f_vector', ' '.join(map(str, P.f_vector))),
                     ('euler', P.euler_characteristic)]


def _config_model(config):
    K = read_complex(config.inputs[0])
    # the model is always built on the staircase product
    check_tower_size(K, config.k, config.max_k, config.max_simplices, SIMPLICIAL)
    model = deleted_product_model(K, config.k)
    summary = homology(model.chain_complex(config.realization), config.coeff)
    rows = [('k', config.k), ('exactness', model.exactness),
            ('f_vector', ' '.join(map(str, model.complex.f_vector))),
            ('betti', summary.betti_row())]
    if K.is_graph:
        report = abrams_condition(K, config.k)
        rows.append(('abrams', 'holds' if report.holds else '%s %s' % (report.kind,
                                                                      ' '.join(map(str, report.witness)))))
    return EXIT_OK, rows


def _combinatorics_enum(config):
    rows = []
    for i in enumerate_index_tuples(config.k):
        rows.append((' '.join(map(str, i)) or '-',
                     ' '.join(format_fraction(t) for t in heights(i)),
                     ' '.join(map(str, ranks(i)))))
    return EXIT_OK, rows


def _tower_build(config):
    K = read_complex(config.inputs[0])
    result = assemble_tower(K, config.k, max_k=config.max_k, max_simplices=config.max_simplices,
                            realization=config.realization)
    if config.options.get('output'):
        write_chain_complex(config.options['output'], result.complex)
    summary = homology(result.complex, config.coeff)
    return EXIT_OK, tower_rows(config.k, result.complex, summary)


def _tower_boundary(config):
    K = read_complex(config.inputs[0])
    model = boundary_model(K, config.k, max_k=config.max_k, max_simplices=config.max_simplices,
                           realization=config.realization)
    summary = homology(model.complex, config.coeff)
    expected = betti_convolution(homology(model.tower).betti, homology(model.factor).betti)
    return EXIT_OK, [('k', config.k), ('betti', summary.betti_row()),
                     ('kunneth', 'ok' if summary.betti == expected else 'failed')]


def _tower_fiber(config):
    K = read_complex(config.inputs[0])
    points = config.options.get('points') or []
    summary = fiber_homology(K, points, config.coeff)
    return EXIT_OK, [('points', len(points)), ('betti', summary.betti_row())]


def _homology(config):
    path = config.inputs[0]
    C = read_chain_complex(path) if config.options.get('chains') else chains(read_complex(path))
    summary = homology(C, config.coeff)
    rows = [('betti', summary.betti_row()), ('euler', summary.euler_characteristic)]
    if summary.torsion is not None:
        rows.append(('torsion', summary.torsion_row()))
    return EXIT_OK, rows


def _suspension_cofiber(config):
    K = read_complex(config.inputs[0])
    report = suspension_report(K, mode=config.coeff, realization=config.realization,
                               product_check=not config.options.get('skip_product_check', False))
    return (EXIT_OK if report.consistent else EXIT_FAILED), suspension_rows(report)


def _invariance(config):
    K, L = read_complex(config.inputs[0]), read_complex(config.inputs[1])
    report = invariance_check(K, L, config.k, mode=config.coeff, max_k=config.max_k,
                              max_simplices=config.max_simplices, realization=config.realization)
    return (EXIT_OK if report.verdict else EXIT_FAILED), invariance_rows(report)


COMMANDS = {('complex', 'validate'): _complex_validate,
            ('complex', 'product'): _complex_product,
            ('config', 'model'): _config_model,
            ('combinatorics', 'enum'): _combinatorics_enum,
            ('tower', 'build'): _tower_build,
            ('tower', 'boundary'): _tower_boundary,
            ('tower', 'fiber'): _tower_fiber,
            ('homology',): _homology,
            ('suspension', 'cofiber'): _suspension_cofiber,
            ('invariance',): _invariance}


def run(config):
    """ Execute a command, returns the exit status and the report rows
    """
    if config.k is not None and config.k < 1:
        raise ValueError("k must be positive, got %i" % config.k)
    if config.max_simplices <= 0:
        raise ValueError("the simplex budget must be positive, got %i" % config.max_simplices)
    for path in config.inputs:
        if not os.path.exists(path):
            raise ComplexFormatError("input file %s does not exist" % path)
    return COMMANDS[config.command](config)


def format_rows(rows, output_format='tsv'):
    if output_format == 'tsv':
        return ''.join('\t'.join(str(val) for val in row) + '\n' for row in rows)
    return ''.join('%s: %s\n' % (row[0], '  '.join(str(val) for val in row[1:])) for row in rows)


#
# argument parsing
#

def _pairs(value):
    """ `2,1;3,1` -> [(2, 1), (3, 1)]
    """
    try:
        return [tuple(int(x) for x in pair.split(',')) for pair in value.split(';') if pair]
    except ValueError:
        raise argparse.ArgumentTypeError("constraints must look like 2,1;3,1, got %s" % value)


def _add_common(parser, k=False, k_default=None):
    parser.add_argument('--format', dest='output_format', choices=('tsv', 'text'), default='tsv')
    parser.add_argument('--coeff', choices=(RATIONAL, INTEGRAL), default=None)
    parser.add_argument('--max-k', type=int, default=None)
    parser.add_argument('--max-simplices', type=int, default=None)
    parser.add_argument('--realization', choices=REALIZATIONS, default=None)
    parser.add_argument('--config-dir', default=None,
                        help="directory with a global.config providing defaults for the flags above")
    if k:
        parser.add_argument('--k', type=int, required=k_default is None, default=k_default)


def build_parser():
    parser = argparse.ArgumentParser(prog='confspace',
                                     description="Configuration space models from iterated homotopy colimits")
    parser.add_argument('--version', action='version', version=__version__)
    groups = parser.add_subparsers(dest='group')
    groups.required = True

    complex_parser = groups.add_parser('complex').add_subparsers(dest='action')
    complex_parser.required = True
    p = complex_parser.add_parser('validate')
    p.add_argument('--input', required=True)
    _add_common(p)
    p = complex_parser.add_parser('product')
    p.add_argument('--input', required=True, nargs='+')
    p.add_argument('--constraints', type=_pairs, default=None)
    p.add_argument('--output', default=None)
    _add_common(p, k=True, k_default=2)

    config_parser = groups.add_parser('config').add_subparsers(dest='action')
    config_parser.required = True
    p = config_parser.add_parser('model')
    p.add_argument('--input', required=True)
    _add_common(p, k=True)

    comb_parser = groups.add_parser('combinatorics').add_subparsers(dest='action')
    comb_parser.required = True
    p = comb_parser.add_parser('enum')
    _add_common(p, k=True)

    tower_parser = groups.add_parser('tower').add_subparsers(dest='action')
    tower_parser.required = True
    p = tower_parser.add_parser('build')
    p.add_argument('--input', required=True)
    p.add_argument('--output', default=None, help="write the assembled chain complex")
    _add_common(p, k=True)
    p = tower_parser.add_parser('boundary')
    p.add_argument('--input', required=True)
    _add_common(p, k=True)
    p = tower_parser.add_parser('fiber')
    p.add_argument('--input', required=True)
    p.add_argument('--points', nargs='*', default=[])
    _add_common(p)

    p = groups.add_parser('homology')
    p.add_argument('--input', required=True)
    p.add_argument('--chains', action='store_true', help="the input is a serialized chain complex")
    _add_common(p)

    susp_parser = groups.add_parser('suspension').add_subparsers(dest='action')
    susp_parser.required = True
    p = susp_parser.add_parser('cofiber')
    p.add_argument('--input', required=True)
    p.add_argument('--skip-product-check', action='store_true')
    _add_common(p)

    p = groups.add_parser('invariance')
    p.add_argument('--a', required=True)
    p.add_argument('--b', required=True)
    _add_common(p, k=True)
    return parser


def _global_config(config_dir):
    defaults = BaseClusterTask.default_global_config()
    if config_dir is None:
        return defaults
    path = os.path.join(config_dir, 'global.config')
    if os.path.exists(path):
        with open(path) as f:
            defaults.update(json.load(f))
    return defaults


def run_config(args):
    """ RunConfig from parsed arguments, explicit flags override the global config
    """
    defaults = _global_config(args.config_dir)

    def _pick(value, key):
        return defaults[key] if value is None else value

    command = (args.group,) if args.group in ('homology', 'invariance') else (args.group, args.action)
    if args.group == 'invariance':
        inputs = [args.a, args.b]
    elif args.group == 'combinatorics':
        inputs = []
    else:
        inputs = args.input if isinstance(args.input, list) else [args.input]
    options = {key: getattr(args, key) for key in ('constraints', 'output', 'points', 'chains',
                                                   'skip_product_check') if hasattr(args, key)}
    return RunConfig(command, inputs, getattr(args, 'k', None), _pick(args.coeff, 'coeff'),
                     _pick(args.max_k, 'max_k'), _pick(args.max_simplices, 'max_simplices'),
                     args.output_format, _pick(args.realization, 'realization'), options)


def _error(msg):
    print("error: %s" % msg, file=sys.stderr)


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = run_config(args)
        status, rows = run(config)
    except ResourceCapError as e:
        _error(e)
        return EXIT_CAP
    except INPUT_ERRORS as e:
        _error(e)
        return EXIT_INPUT
    except DOMAIN_ERRORS as e:
        _error(e)
        return EXIT_FAILED
    out.write(format_rows(rows, config.output_format))
    return status


def cli():
    sys.exit(main())


if __name__ == '__main__':
    cli()
