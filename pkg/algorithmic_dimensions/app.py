"""
Copyright (C) 2020-2026 The Algorithmic Dimensions authors

This file is part of "Algorithmic Dimensions".

"Algorithmic Dimensions" is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by the
Free Software Foundation, either version 3 of the License, or (at your
option) any later version.

"Algorithmic Dimensions" is distributed in the hope that it will be useful, but
WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY
or FITNESS FOR A PARTICULAR PURPOSE. See the GNU General Public License for
more details.

You should have received a copy of the GNU General Public License along
with this program. If not, see <http://www.gnu.org/licenses/>.
"""
import argparse
import logging
import os
import sys

from algorithmic_dimensions import BudgetError, ConfigError
from algorithmic_dimensions.config import RunConfig, parse_override
from algorithmic_dimensions.services.experiments import AXIOM_MEASURES, ExperimentRunner
from algorithmic_dimensions.storage import get_storage

EXIT_SUCCESS = 0
EXIT_UNEXPECTED = 1
EXIT_CONFIG = 2
EXIT_BUDGET = 3
EXIT_VERDICT = 4


def setup_logger(logging_level=logging.INFO):
    logger = logging.getLogger()
    logger.handlers.clear()
    stream_handler = logging.StreamHandler()
    formatter = logging.Formatter('[%(levelname)s] %(name)s: %(message)s')
    stream_handler.setFormatter(formatter)
    logger.addHandler(stream_handler)

    logger = logging.getLogger('algorithmic_dimensions')
    logger.setLevel(logging_level)
    return logger


def _integer_list(text):
    return [int(part) for part in text.split(',') if part.strip()]


def build_parser():
    parser = argparse.ArgumentParser(
        description='Desk-scale algorithmic dimensions and optimal outer measures.'
    )
    parser.add_argument('--config', type=str, default=None, help='Configuration JSON file')
    parser.add_argument(
        '--set',
        dest='overrides',
        action='append',
        default=[],
        metavar='KEY=VALUE',
        help='Override one configuration key for this run',
    )
    parser.add_argument('--seed', type=int, default=None, help='Experiment seed')
    parser.add_argument('--output', type=str, default=None, help='Output directory')
    parser.add_argument('--verbose', action='store_true', help='Log at DEBUG level')
    commands = parser.add_subparsers(dest='command', required=True)

    table = commands.add_parser('table', help='Complexity tables')
    table_commands = table.add_subparsers(dest='table_command', required=True)
    build = table_commands.add_parser('build', help='Enumerate programs and persist the table')
    build.add_argument('--max-length', type=int, default=None, help='L, max program bits')
    build.add_argument('--step-budget', type=int, default=None, help='T, steps per program')

    kdim = commands.add_parser('kdim', help='K_r profile and slopes of a point')
    kdim.add_argument('point', help='"1/3,0", "random:SEED" or "periodic:BITS"')

    measure = commands.add_parser('measure', help='Outer measures')
    measure_commands = measure.add_subparsers(dest='measure_command', required=True)
    evaluate = measure_commands.add_parser('eval', help='Evaluate a measure on a set')
    evaluate.add_argument('name', help='kappa, nu, m, theta, example, zero, kappa_even, theta:NAME')
    evaluate.add_argument(
        'set', help='empty, all, point:..., cube:R:..., ball:R:... or complement:...'
    )
    evaluate.add_argument(
        '--candidates', action='store_true', help='Include the dyadic candidate grids'
    )

    dominate = commands.add_parser('dominate', help='Sampled domination of nu by mu')
    dominate.add_argument('mu')
    dominate.add_argument('nu')
    dominate.add_argument('--family', choices=['cubes', 'balls'], default='cubes')

    counterexample = commands.add_parser('counterexample', help='kappa is not globally optimal')
    counterexample.add_argument('--alphas', type=_integer_list, default=None, help='e.g. 4,6,8')

    ballcube = commands.add_parser('ballcube', help='Ball versus cube complexity constant')
    ballcube.add_argument(
        '--seeds', type=_integer_list, default=None, help='Several seeds to compare'
    )

    axioms = commands.add_parser('axioms', help='Outer measure axioms on random families')
    axioms.add_argument(
        '--measures',
        type=lambda text: [part for part in text.split(',') if part],
        default=list(AXIOM_MEASURES),
    )

    commands.add_parser('report', help='Bundle all artifacts with an index')
    return parser


def load_config(args):
    storage = get_storage(args.config)
    overrides = dict(parse_override(assignment) for assignment in args.overrides)
    config = RunConfig.from_storage(storage, overrides)
    return config.with_values(seed=args.seed, output_directory=args.output)


def run_command(args, logger):
    config = load_config(args)
    if args.command == 'table':
        config = config.with_values(max_length=args.max_length, step_budget=args.step_budget)
    runner = ExperimentRunner(config)
    logger.info(f'Started| {args.command}')

    if args.command == 'table':
        result = runner.build_table()
        print(f'entries: {result["entries"]}')
        print(f'kraft_sum: {result["kraft_sum"]} ({result["kraft_sum_float"]:.12g})')
    elif args.command == 'kdim':
        result = runner.kdim(args.point)
        for sample in result['profile']['samples']:
            print(f'{sample["r"]}\t{sample["value"]}')
        slopes = result['slopes']
        print(f'lower: {slopes["lower"]:.6f} upper: {slopes["upper"]:.6f}')
    elif args.command == 'measure':
        result = runner.measure_eval(args.name, args.set, args.candidates)
        print(f'{result["value"]} ({result["value_float"]:.12g})')
    elif args.command == 'dominate':
        report = runner.dominate(args.mu, args.nu, args.family)
        for r, gap, _ in report.rows():
            print(f'{r}\t{gap}')
        print(f'verdict: {report.verdict} ({report.label})')
        if not report.dominates:
            return EXIT_VERDICT
    elif args.command == 'counterexample':
        rows = runner.counterexample(args.alphas)
        for row in rows:
            print('\t'.join(f'{key}={value}' for key, value in row.items()))
        if not all(row.get('holds', True) for row in rows):
            return EXIT_VERDICT
    elif args.command == 'ballcube':
        result = runner.ballcube(args.seeds)
        print(f'constant: {result["constant"]} spread: {result["spread"]}')
        if not result['within_bound']:
            return EXIT_VERDICT
    elif args.command == 'axioms':
        reports = runner.axioms(args.measures)
        for name, report in reports.items():
            print(f'{name}: {len(report["violations"])} violations')
        if any(not report['passed'] for report in reports.values()):
            return EXIT_VERDICT
    elif args.command == 'report':
        index = runner.report()
        print(f'suites: {sorted(index["suites"])} missing: {index["missing"]}')
    logger.info(f'Finished| {args.command}')
    return EXIT_SUCCESS


def main(argv=None):
    args = build_parser().parse_args(argv)
    level = logging.DEBUG if args.verbose else os.environ.get('LOGGING_LEVEL', 'INFO')
    logger = setup_logger(level)
    try:
        return run_command(args, logger)
    except ConfigError as e:
        logger.exception(f'Configuration error: {e}', exc_info=e)
        return EXIT_CONFIG
    except BudgetError as e:
        logger.exception(f'Budget exceeded: {e}', exc_info=e)
        return EXIT_BUDGET
    except (KeyboardInterrupt, SystemExit):
        raise
    except Exception as e:
        logger.exception('Command failed after exception!', exc_info=e)
        return EXIT_UNEXPECTED


if __name__ == '__main__':
    sys.exit(main())
