import argparse
import datetime
import logging
import os
import sys

from .. import __version__
from ..constants import OUTPUT_ENV
from ..exceptions import ConfigError, InvalidArgument, NotApplicable, NumericalFailure
from .config import ExperimentConfig
from .experiments import ExperimentRunner
from .io import write_field, write_series, write_summary

#: exit statuses
PASSED, CHECK_FAILED, CONFIG_FAILED, NUMERICAL_FAILED = 0, 1, 2, 3


def build_parser():
    parser = argparse.ArgumentParser(prog='nlselab', description="Numerical laboratory for nonlinear "
                                                                 "Schroedinger equations")
    commands = parser.add_subparsers(dest='command')
    run = commands.add_parser('run', help="run the experiment described by a JSON config")
    run.add_argument('config', help="path of the JSON config")
    run.add_argument('--out', help="output directory (overrides output.directory and ${})".format(OUTPUT_ENV))
    run.add_argument('--seed', type=int, help="overrides run.seed")
    run.add_argument('--quiet', action='store_true', help="log warnings and errors only")
    commands.add_parser('list', help="list the experiments")
    return parser


def list_experiments():
    """ catalog text, one experiment per line

    >>> list_experiments().splitlines()[0].split()[0]
    'dispersion'
    """
    catalog = ExperimentRunner.catalog()
    width = max(len(name) for name, _ in catalog)
    return ''.join("{}  {}\n".format(name.ljust(width), description) for name, description in catalog)


def _summary(runner, status, outcome=None, error=None):
    summary = {'experiment': runner.config.experiment,
               'status': status,
               'passed': status == PASSED,
               'checks': outcome.checks if outcome else {},
               'results': outcome.results if outcome else {},
               'parameters': runner.parameters(),
               'version': __version__,
               'metadata': {'timestamp': datetime.datetime.now(datetime.timezone.utc).isoformat()}}
    if error is not None:
        summary['error'] = {'type': type(error).__name__, 'message': str(error)}
    return summary


def run(config_path, out=None, seed=None, environ=None):
    """ Runs one experiment and writes its outputs.

    :return: exit status 0 (all checks passed), 1 (a check failed), 2 (config error) or 3 (numerical failure)
    """
    environ = os.environ if environ is None else environ
    try:
        config = ExperimentConfig.load(config_path)
        runner = ExperimentRunner(config, seed)
    except ConfigError as e:
        logging.error("config error: {}".format(e))
        return CONFIG_FAILED

    directory = config.output_directory(out, environ)
    os.makedirs(directory, exist_ok=True)
    formats = config.formats
    try:
        outcome = runner.run()
    except (ConfigError, InvalidArgument, NotApplicable) as e:
        logging.error("config error: {}".format(e))
        return CONFIG_FAILED
    except NumericalFailure as e:
        logging.error("{} failed: {}: {}".format(config.experiment, type(e).__name__, e))
        if 'json' in formats:
            write_summary(directory, _summary(runner, NUMERICAL_FAILED, error=e))
        return NUMERICAL_FAILED

    status = PASSED if outcome.passed else CHECK_FAILED
    if 'json' in formats:
        write_summary(directory, _summary(runner, status, outcome))
    if 'csv' in formats and outcome.columns:
        write_series(directory, outcome.columns, outcome.rows)
    if 'fields' in formats:
        for k, psi in enumerate(outcome.fields):
            write_field(directory, k, psi)
    logging.info("{}: {} checks, {} in {}".format(config.experiment, len(outcome.checks),
                                                 'passed' if status == PASSED else 'FAILED', directory))
    return status


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        sys.stdout.write(parser.format_usage())
        sys.stdout.write("\nexperiments:\n")
        sys.stdout.write(list_experiments())
        return PASSED
    if args.command == 'list':
        sys.stdout.write(list_experiments())
        return PASSED
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO, format="%(levelname)s %(message)s")
    return run(args.config, args.out, args.seed)


if __name__ == '__main__':
    sys.exit(main())
