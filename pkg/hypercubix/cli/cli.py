"""
hypercubix.cli.cli
==================

The `hypercubix` command: density grids, verification suites, Khintchine
samples, posterior curves and Bayes factors, emitted as reproducible CSV or
JSON documents.

Usage
-----

    hypercubix grid -p 2 --range=-3:3 --steps 61 --format csv
    hypercubix verify --suites mixture,laplace --tol 1e-10
    hypercubix sample -p 2 -n 1000 --seed 7 --out sample.csv
    hypercubix verify --suites sampler --sample-file sample.csv
    hypercubix posterior 2 1 64 --format json
    hypercubix bf 0 0

Exit status is 0 on success, 1 when a verification check fails, 2 for invalid
arguments and 3 when a numerical computation could not be completed.
Diagnostics go to stderr; -v raises the log level to INFO, -vv or --debug to
DEBUG.

Legal
-----

This file is part of hypercubix.
hypercubix is free software; you can redistribute it and/or modify
it under the terms of the GNU Lesser General Public License as published
by the Free Software Foundation; either version 3 of the License, or
(at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU Lesser General Public License for more details.

You should have received a copy of the GNU General Public License and
GNU Lesser General Public License along with this program. If not, see
<http://www.gnu.org/licenses/>.
"""
import argparse
import collections
import concurrent.futures
import itertools
import logging
import sys

import numpy as np
import scipy

import hypercubix
from hypercubix.numerics import NumericsError, MINIMUM_TOLERANCE
from hypercubix.model import (
 ModelError,
 as_point, density_profile,
 posterior_curve, bayes_factor_rho0,
 sample_joint, SampleBatch,
 MINIMUM_GRID_SIZE, DEFAULT_GRID_SIZE, NORMALIZATION_RESIDUAL_LIMIT,
)
from hypercubix.cli import transforms
from hypercubix.cli.transforms import (
 Document, UsageError, CLIException,
 FORMAT_CSV, FORMATS,
)
from hypercubix.cli import verify

EXIT_SUCCESS = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_USAGE = 2
EXIT_NUMERICAL_FAILURE = 3

MAXIMUM_GRID_DIMENSION = 6
MAXIMUM_GRID_CELLS = 1000000
DEFAULT_RANGE = '-3:3'
DEFAULT_STEPS = 61
DEFAULT_SEED = 0

LOGGER_NAME = 'hypercubix'

_VERBOSITY_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


#Commands
###############################################################################
def _versions():
    return collections.OrderedDict((
     ('hypercubix', hypercubix.VERSION),
     ('numpy', np.__version__),
     ('scipy', scipy.__version__),
    ))

def _require_at_least(name, value, minimum):
    if not value >= minimum:
        raise UsageError("--%(name)s must be at least %(minimum)r; received %(value)r" % {
         'name': name,
         'minimum': minimum,
         'value': value,
        }, {name: value})

def _coordinate_names(p):
    return ['x%i' % (i + 1) for i in range(p)]

def cmd_grid(args, logger):
    """
    Evaluates f_p over a p-dimensional lattice with `steps` points per axis.
    Cells are evaluated once per distinct max-norm.
    """
    if not 1 <= args.dim <= MAXIMUM_GRID_DIMENSION:
        raise UsageError("--dim must lie in [1, %(maximum)i] for grids; received %(p)r" % {
         'maximum': MAXIMUM_GRID_DIMENSION,
         'p': args.dim,
        }, {'dim': args.dim})
    _require_at_least('steps', args.steps, 2)
    (lo, hi) = transforms.parse_range(args.range)
    cell_count = args.steps ** args.dim
    if cell_count > MAXIMUM_GRID_CELLS:
        raise UsageError("--steps %(steps)i in dimension %(p)i gives %(cells)i cells; at most %(maximum)i are written" % {
         'steps': args.steps,
         'p': args.dim,
         'cells': cell_count,
         'maximum': MAXIMUM_GRID_CELLS,
        }, {'steps': args.steps, 'dim': args.dim})
    axis = transforms.lattice_axis(lo, hi, args.steps)
    norms = sorted(set(abs(c) for c in axis))
    logger.info("Evaluating %(cells)i cells over %(norms)i distinct max-norms" % {
     'cells': cell_count,
     'norms': len(norms),
    })

    def evaluate(m):
        try:
            return density_profile(args.dim, m, tol=args.tol, logger=logger)
        except NumericsError as e:
            e.items['max_norm'] = m
            raise
    if args.jobs > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=args.jobs) as executor:
            values = dict(zip(norms, executor.map(evaluate, norms)))
    else:
        values = dict((m, evaluate(m)) for m in norms)

    fields = _coordinate_names(args.dim) + ['value']
    data = []
    for cell in itertools.product(axis, repeat=args.dim):
        record = collections.OrderedDict(zip(fields, cell))
        record['value'] = values[max(abs(c) for c in cell)].value
        data.append(record)
    meta = collections.OrderedDict((
     ('command', 'grid'),
     ('p', args.dim),
     ('range', [lo, hi]),
     ('steps', args.steps),
     ('tol', args.tol),
     ('versions', _versions()),
    ))
    return Document(meta, fields, data)

def cmd_sample(args, logger):
    """
    Draws `n` rows in dimension `p` from the Khintchine construction.
    """
    batch = sample_joint(args.dim, args.n, args.seed, workers=args.jobs, logger=logger)
    fields = _coordinate_names(batch.p)
    data = [collections.OrderedDict(zip(fields, row)) for row in batch.data.tolist()]
    meta = collections.OrderedDict((
     ('command', 'sample'),
     ('generator_id', batch.generator_id),
     ('n', batch.n),
     ('p', batch.p),
     ('seed', batch.seed),
     ('versions', _versions()),
    ))
    return Document(meta, fields, data)

def read_sample_file(path):
    """
    Loads a document written by the `sample` command as a `SampleBatch`.
    """
    try:
        with open(path, 'r') as stream:
            document = transforms.read_document(stream)
    except (IOError, OSError) as e:
        raise UsageError("Unable to read sample file %(path)r: %(error)s" % {
         'path': path,
         'error': str(e),
        }, {'path': path})
    meta = dict(document.meta)
    if meta.get('command') != 'sample':
        raise UsageError("%(path)r was not written by the sample command" % {
         'path': path,
        }, {'path': path})
    transforms.to_int(meta, ('n', 'p', 'seed'))
    fields = _coordinate_names(meta['p'])
    if len(document.data) != meta['n'] or meta['n'] < 1:
        raise UsageError("%(path)r declares %(n)r rows but holds %(rows)i" % {
         'path': path,
         'n': meta['n'],
         'rows': len(document.data),
        }, {'path': path})
    rows = []
    for record in document.data:
        record = dict(record)
        transforms.to_float(record, fields)
        rows.append([record[field] for field in fields])
    return SampleBatch(np.array(rows, dtype=float), meta['n'], meta['p'], meta['seed'], meta.get('generator_id'))

def cmd_verify(args, logger):
    """
    Runs the selected verification suites and reports every check.
    """
    suites = transforms.parse_list(args.suites, verify.SUITES)
    batch = None
    if args.sample_file:
        batch = read_sample_file(args.sample_file)
        if verify.SUITE_SAMPLER not in suites:
            logger.warning("--sample-file is only used by the sampler suite")
    checks = verify.run_suites(
     verify.build_suites(suites, args.tol, logger=logger, batch=batch),
     jobs=args.jobs, logger=logger,
    )
    failures = sum(1 for check in checks if not check.passed)
    fields = list(verify.Check._fields)
    meta = collections.OrderedDict((
     ('command', 'verify'),
     ('suites', list(suites)),
     ('tol', args.tol),
     ('checks', len(checks)),
     ('failures', failures),
     ('versions', _versions()),
    ))
    return Document(meta, fields, [check._asdict() for check in checks])

def cmd_posterior(args, logger):
    """
    Evaluates the posterior of rho given (x1, x2) on a Chebyshev grid.
    """
    grid_size = args.grid_size_option if args.grid_size_option is not None else args.grid_size
    if grid_size is None:
        grid_size = DEFAULT_GRID_SIZE
    _require_at_least('grid-size', grid_size, MINIMUM_GRID_SIZE)
    point = as_point((args.x1, args.x2))
    curve = posterior_curve(point, grid_size, tol=max(args.tol, 1e-14), logger=logger)
    if not abs(curve.normalization_residual) <= NORMALIZATION_RESIDUAL_LIMIT:
        raise NumericsError("The posterior could not be normalised at %(point)r: residual %(residual)r" % {
         'point': tuple(point),
         'residual': curve.normalization_residual,
        }, {'x1': args.x1, 'x2': args.x2, 'normalization_residual': curve.normalization_residual})
    data = [
     collections.OrderedDict((('rho', rho), ('density', value)))
     for (rho, value) in zip(curve.rho_grid.tolist(), curve.density_values.tolist())
    ]
    meta = collections.OrderedDict((
     ('command', 'posterior'),
     ('x1', args.x1),
     ('x2', args.x2),
     ('grid_size', grid_size),
     ('normalization_residual', curve.normalization_residual),
     ('versions', _versions()),
    ))
    return Document(meta, ['rho', 'density'], data)

def cmd_bf(args, logger):
    """
    The Bayes factor for rho = 0, printed with 15 significant digits.
    """
    return '%.15g' % bayes_factor_rho0((args.x1, args.x2))


#Argument handling
###############################################################################
def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=0, help='Increase logging verbosity on stderr (repeatable)')
    common.add_argument('--debug', action='store_true', default=False, help='Log everything, including quadrature progress')
    common.add_argument('--out', metavar='PATH', default=None, help='Write output to PATH instead of stdout')
    common.add_argument('--tol', type=float, default=verify.DEFAULT_TOLERANCE, help='Absolute tolerance (default = %(default)r)')
    common.add_argument('-j', '--jobs', type=int, default=1, help='Concurrent evaluations; output is identical for any value (default = %(default)d)')

    formatted = argparse.ArgumentParser(add_help=False)
    formatted.add_argument('--format', choices=FORMATS, default=FORMAT_CSV, help='Output format (default = %(default)s)')

    parser = argparse.ArgumentParser(prog='hypercubix', description="Hypercubically-contoured densities with normal marginals.")
    parser.add_argument('--version', action='version', version='%(prog)s ' + hypercubix.VERSION)
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    grid = commands.add_parser('grid', parents=[common, formatted], help='Tabulate f_p on a lattice')
    grid.add_argument('-p', '--dim', type=int, default=2, help='Dimension, 1 to %i (default = %%(default)d)' % MAXIMUM_GRID_DIMENSION)
    grid.add_argument('--range', default=DEFAULT_RANGE, metavar='LO:HI', help='Axis range (default = %(default)s)')
    grid.add_argument('--steps', type=int, default=DEFAULT_STEPS, help='Points per axis, at least 2 (default = %(default)d)')
    grid.set_defaults(handler=cmd_grid)

    verification = commands.add_parser('verify', parents=[common], help='Run verification suites; emits a JSON report')
    verification.add_argument('--suites', default=','.join(verify.DEFAULT_SUITES), metavar='LIST',
     help='Comma-separated subset of %s (default = %%(default)s)' % ','.join(verify.SUITES))
    verification.add_argument('--sample-file', default=None, metavar='PATH', help='Check a file written by the sample command instead of a fresh sample')
    verification.set_defaults(handler=cmd_verify, format='json')

    sample = commands.add_parser('sample', parents=[common, formatted], help='Draw from the Khintchine construction')
    sample.add_argument('-p', '--dim', type=int, default=2, help='Dimension (default = %(default)d)')
    sample.add_argument('-n', type=int, required=True, help='Number of rows, at least 1')
    sample.add_argument('--seed', type=int, default=DEFAULT_SEED, help='Unsigned 64-bit seed (default = %(default)d)')
    sample.set_defaults(handler=cmd_sample)

    posterior = commands.add_parser('posterior', parents=[common, formatted], help='Posterior density of rho given one observation')
    posterior.add_argument('x1', type=float)
    posterior.add_argument('x2', type=float)
    posterior.add_argument('grid_size', type=int, nargs='?', default=None, help='Chebyshev grid size, at least %i' % MINIMUM_GRID_SIZE)
    posterior.add_argument('--grid-size', type=int, dest='grid_size_option', default=None, help='Alternative to the positional grid size')
    posterior.set_defaults(handler=cmd_posterior)

    bf = commands.add_parser('bf', parents=[common], help='Bayes factor for rho = 0')
    bf.add_argument('x1', type=float)
    bf.add_argument('x2', type=float)
    bf.set_defaults(handler=cmd_bf)
    return parser

def _configure_logging(args):
    logger = logging.getLogger(LOGGER_NAME)
    level = logging.DEBUG if args.debug else _VERBOSITY_LEVELS[min(args.verbose, len(_VERBOSITY_LEVELS) - 1)]
    logger.setLevel(level)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(name)s: %(levelname)s: %(message)s'))
    logger.addHandler(handler)
    logger.propagate = False
    return logger

def _emit(args, output):
    stream = sys.stdout
    if args.out:
        stream = open(args.out, 'w', newline='')
    try:
        if isinstance(output, Document):
            transforms.write_document(stream, output, args.format)
        else:
            stream.write(output + '\n')
    finally:
        if args.out:
            stream.close()

def main(argv=None):
    """
    Runs the command line in `argv` (default: sys.argv[1:]), returning the
    exit status.
    """
    parser = _build_parser()
    args = parser.parse_args(argv)
    logger = _configure_logging(args)
    try:
        _require_at_least('jobs', args.jobs, 1)
        _require_at_least('tol', args.tol, MINIMUM_TOLERANCE)
        output = args.handler(args, logger)
        _emit(args, output)
        if args.command == 'verify' and output.meta['failures']:
            raise verify.VerificationFailure("%(failures)i of %(checks)i checks failed" % output.meta, {
             'failures': output.meta['failures'],
            })
    except verify.VerificationFailure as e:
        logger.error(str(e))
        return EXIT_VERIFICATION_FAILURE
    except (UsageError, verify.VerificationError, ModelError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except NumericsError as e:
        logger.error("Numerical failure: %(error)s %(items)r" % {
         'error': str(e),
         'items': e.items,
        })
        return EXIT_NUMERICAL_FAILURE
    except CLIException as e:
        logger.error(str(e))
        return EXIT_USAGE
    return EXIT_SUCCESS
