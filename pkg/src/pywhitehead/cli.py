# -*- coding: utf-8 -*-
""" Command line interface

    whitehead-sl3 verify --seed 42 --samples 1000
    whitehead-sl3 eval --point t=3,tbar=3,s=3,sbar=3,r=3
    whitehead-sl3 sample --fix t=1,tbar=1,sbar=0,r=0 --free s
    whitehead-sl3 solve --input point.json > report.json
    whitehead-sl3 check --input report.json
    whitehead-sl3 lift --input point.json

Results go to stdout as JSON, a readable summary and the log go to stderr. Exit codes: 0 success,
1 mathematical failure, 2 usage or input error.

"""

import argparse
import logging
import sys
from dataclasses import dataclass

import pandas as pd

from . import __version__
from .constants import DEFAULT_SEED, VARIABLES, DET_GUARD
from .coordinates import create_coords, parse_fix
from .data import (dumps, load, document, encode_coords, encode_complex, encode_report, encode_lifts,
                   decode_coords, decode_representation)
from .hypersurface import f_eval, f_scale, on_hypersurface, sample
from .reconstruct import (SolveOptions, solve_point, enumerate_lifts, check_relation, is_irreducible,
                          coords_of_representation, symmetric_slice_residual, Representation)
from .utilities import ClassLoggingMixin, SchemaError, ConvergenceError, AssumptionError, NUMERICAL_ERRORS, substream
from .verify import run_suites, suite_names

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


@dataclass
class RunConfig(object):
    """ Options shared by all subcommands

    Attributes:
        seed (int): Master seed, unsigned 64-bit
        samples (int): Number of random cases
        tol (float): Tolerance of the subcommand
        restarts (int): Restarts of the trace fit
        max_iter (int): Iterations per start
        json (bool): Suppress the summary on stderr

    """
    seed: int = DEFAULT_SEED
    samples: int = 100
    tol: float = 1e-10
    restarts: int = 20
    max_iter: int = 200
    json: bool = False

    def __post_init__(self):
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        for name in ('samples', 'restarts', 'max_iter'):
            if getattr(self, name) <= 0:
                raise ValueError("%s must be positive" % name)
        if not self.tol > 0:
            raise ValueError("tol must be positive")

    def solve_options(self):
        return SolveOptions(restarts=self.restarts, max_iter=self.max_iter, tol=self.tol)


def positive_int(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("%s is not a positive integer" % text)
    return value


def positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("%s is not positive" % text)
    return value


def seed_type(text):
    value = int(text)
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("%s is not an unsigned 64-bit integer" % text)
    return value


def parse_args(args):
    """ Parse command line parameters

    Args:
        args ([str]): command line parameters as list of strings

    Returns:
        :obj:`argparse.Namespace`: command line parameters namespace

    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', type=seed_type, default=DEFAULT_SEED, help="master seed")
    common.add_argument('--samples', type=positive_int, default=100, help="number of random cases")
    common.add_argument('--tol', type=positive_float, default=1e-10, help="tolerance")
    common.add_argument('--restarts', type=positive_int, default=20, help="restarts of the trace fit")
    common.add_argument('--max-iter', dest='max_iter', type=positive_int, default=200,
                        help="iterations per start")
    common.add_argument('--json', action='store_true', help="no summary on stderr")
    common.add_argument('--input', help="JSON payload, a path or - for stdin")
    common.add_argument('-v', '--verbose', dest='loglevel', action='store_const', const=logging.INFO,
                        help="set loglevel to INFO")
    common.add_argument('-vv', '--very-verbose', dest='loglevel', action='store_const', const=logging.DEBUG,
                        help="set loglevel to DEBUG")
    common.set_defaults(loglevel=logging.WARNING)

    parser = argparse.ArgumentParser(prog='whitehead-sl3',
                                     description="SL(3,C) representations of the Whitehead link, symmetric slice")
    parser.add_argument('--version', action='version', version='pywhitehead {ver}'.format(ver=__version__))
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    verify = commands.add_parser('verify', parents=[common], help="run the verification suites")
    verify.add_argument('--suite', action='append', choices=suite_names(), help="run only this suite")

    for name, text in (('eval', "evaluate F at a point"),
                       ('solve', "reconstruct a representation over a point"),
                       ('lift', "enumerate the six lifts over a point")):
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.add_argument('--point', help="coordinates like t=3,tbar=3,s=3,sbar=3,r=3")

    sampler = commands.add_parser('sample', parents=[common], help="points of F = 0")
    sampler.add_argument('--fix', help="four coordinates like t=1,tbar=1,sbar=0,r=0")
    sampler.add_argument('--free', choices=['s', 'sbar'], default='s', help="the coordinate solved for")

    commands.add_parser('check', parents=[common], help="verify a representation (y, z)")

    parser.set_defaults(loglevel=logging.WARNING)
    return parser.parse_args(args)


def setup_logging(loglevel):
    """ Setup basic logging on stderr

    Args:
      loglevel (int): minimum loglevel for emitting messages

    """
    ClassLoggingMixin.setup_basic_config(loglevel)
    logging.getLogger().setLevel(loglevel)


class Command(ClassLoggingMixin):
    """ A subcommand, writes JSON to stdout and a summary to stderr

    Args:
        args (argparse.Namespace): Parsed command line
        config (RunConfig): Validated common options

    """
    def __init__(self, args, config):
        super(Command, self).__init__()
        self.args = args
        self.config = config

    def emit(self, payload, summary=None):
        sys.stdout.write(dumps(payload) + '\n')
        if summary is not None and not self.config.json:
            sys.stderr.write(str(summary) + '\n')

    def point(self):
        """ Target coordinates from --point or --input"""
        if getattr(self.args, 'point', None):
            try:
                return create_coords(self.args.point)
            except (ValueError, AssertionError) as err:
                raise SchemaError(str(err))
        if self.args.input is None:
            raise SchemaError("Give the point by --point or --input")
        payload = load(self.args.input)
        for key in ('coords', 'target'):
            if isinstance(payload.get(key), dict):
                return decode_coords(payload[key])
        return decode_coords(payload)

    def __call__(self):
        raise NotImplementedError


class VerifyCommand(Command):
    def __call__(self):
        frame, results = run_suites(self.config.seed, self.config.samples, self.args.suite)
        failed = [r.name for r in results if not r.ok]
        payload = document('verify',
                           seed=self.config.seed,
                           samples=self.config.samples,
                           suites=[{'suite': r.name, 'passed': r.passed, 'failed': r.failed,
                                    'max_error': r.max_error if r.max_error != float('inf') else None,
                                    'tol': r.tol} for r in results],
                           failed_suites=failed,
                           failures=[f for r in results for f in r.failures],
                           passed=not failed)
        self.emit(payload, frame.to_string(index=False))
        return EXIT_FAILURE if failed else EXIT_OK


class EvalCommand(Command):
    def __call__(self):
        c = self.point()
        payload = document('eval', coords=encode_coords(c), F=encode_complex(f_eval(c)),
                           f_scale=f_scale(c), on_hypersurface=on_hypersurface(c, self.config.tol))
        self.emit(payload, "F = %s" % f_eval(c))
        return EXIT_OK


class SampleCommand(Command):
    def __call__(self):
        free = self.args.free
        if self.args.fix:
            try:
                fixed = parse_fix(self.args.fix)
            except ValueError as err:
                raise SchemaError(str(err))
            expected = set(VARIABLES) - {free}
            if set(fixed) != expected:
                raise SchemaError("--fix must give exactly %s" % ', '.join(sorted(expected)))
            batches = [sample(fixed, free, tol=self.config.tol)]
        else:
            rng = substream(self.config.seed, 'sample')
            batches = [sample(None, free, rng, tol=self.config.tol) for _ in range(self.config.samples)]

        points, rows = [], []
        for index, batch in enumerate(batches):
            for point in batch:
                ok = on_hypersurface(point.coords, self.config.tol)
                entry = encode_coords(point.coords, point.residual)
                entry.update({'batch': index, 'multiplicity': point.multiplicity, 'on_hypersurface': ok})
                points.append(entry)
                rows.append({'batch': index, free: complex(getattr(point.coords, free)),
                             'multiplicity': point.multiplicity, 'residual': point.residual})
        payload = document('sample', free=free, points=points)
        self.emit(payload, pd.DataFrame(rows).to_string(index=False))
        return EXIT_OK if all(p['on_hypersurface'] for p in points) else EXIT_FAILURE


def _flag_table(report):
    return pd.DataFrame([{'flag': key, 'value': value} for key, value in report.flags.items()]).to_string(index=False)


class SolveCommand(Command):
    def solve(self):
        target = self.point()
        rng = substream(self.config.seed, 'solve')
        return solve_point(target, rng, self.config.solve_options())

    def __call__(self):
        try:
            report = self.solve()
        except ConvergenceError as err:
            self.emit(document('solve', success=False, failure='no convergence',
                               best_residual=float(err.best_residual)), str(err))
            return EXIT_FAILURE
        self.emit(encode_report(report),
                  _flag_table(report) + '\n' + ('success' if report.success else 'failure: %s' % report.failure))
        return EXIT_OK if report.success else EXIT_FAILURE


class LiftCommand(SolveCommand):
    def __call__(self):
        try:
            report = self.solve()
        except ConvergenceError as err:
            self.emit(document('lift', success=False, failure='no convergence',
                               best_residual=float(err.best_residual)), str(err))
            return EXIT_FAILURE
        try:
            lifts = enumerate_lifts(report, self.config.solve_options())
        except AssumptionError as err:
            payload = encode_report(report)
            payload.update({'kind': 'lift', 'success': False, 'failure': report.failure or err.reason})
            self.emit(payload, str(err))
            return EXIT_FAILURE
        payload = encode_lifts(lifts, report)
        payload['success'] = lifts.valid
        rows = [{'sheet': lift.sheet, 'k': lift.k, 'tr_y': lift.tr_y, 't1212bar': lift.t1212bar,
                 'relation': lift.representation.relation_residual} for lift in lifts]
        self.emit(payload, pd.DataFrame(rows).to_string(index=False))
        return EXIT_OK if lifts.valid else EXIT_FAILURE


class CheckCommand(Command):
    def __call__(self):
        if self.args.input is None:
            raise SchemaError("check needs --input")
        y, z = decode_representation(load(self.args.input))
        representation = Representation(y, z)
        opts = SolveOptions()
        irreducible = is_irreducible(y, z, opts.rank_tol)
        unimodular = max(representation.det_residuals) <= DET_GUARD
        passed = representation.relation_residual <= opts.relation_tol and irreducible and unimodular
        payload = document('check',
                           relation_residual=representation.relation_residual,
                           irreducible=irreducible,
                           unimodular=unimodular,
                           det_residuals=list(representation.det_residuals),
                           symmetry_residuals=list(representation.symmetry_residuals),
                           passed=passed)
        if unimodular:
            payload['symmetric_slice_residual'] = symmetric_slice_residual(y, z)
            payload['coords'] = encode_coords(coords_of_representation(y, z))
        else:
            self.warn("det y, det z are %s away from 1" % (representation.det_residuals,))
        self.emit(payload, "relation residual %.3e, irreducible %s, unimodular %s"
                  % (representation.relation_residual, irreducible, unimodular))
        return EXIT_OK if passed else EXIT_FAILURE


COMMANDS = {'verify': VerifyCommand, 'eval': EvalCommand, 'sample': SampleCommand, 'solve': SolveCommand,
            'check': CheckCommand, 'lift': LiftCommand}


def main(args):
    """ Main entry point allowing external calls

    Args:
      args ([str]): command line parameter list

    Returns:
        int: exit code

    """
    try:
        args = parse_args(args)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_USAGE
    setup_logging(args.loglevel)
    try:
        config = RunConfig(seed=args.seed, samples=args.samples, tol=args.tol, restarts=args.restarts,
                           max_iter=args.max_iter, json=args.json)
        return COMMANDS[args.command](args, config)()
    except NUMERICAL_ERRORS as err:
        _logger.error(str(err))
        sys.stdout.write(dumps(document(args.command, success=False, failure=err.reason, message=str(err))) + '\n')
        return EXIT_FAILURE
    except (SchemaError, ValueError) as err:
        _logger.error(str(err))
        sys.stderr.write("whitehead-sl3: error: %s\n" % err)
        return EXIT_USAGE


def run():
    """ Entry point for console_scripts"""
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    run()
