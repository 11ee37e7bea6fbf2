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
import glob
import logging
import math
import os
import shutil
from fractions import Fraction

from algorithmic_dimensions import ConfigError
from algorithmic_dimensions.config import versions
from algorithmic_dimensions.models.dimension import estimate_slopes, k_profile, resolutions
from algorithmic_dimensions.models.domination import (
    BallSampler,
    CubeSampler,
    EmptyCounterexampleError,
    ball_cube_bound_check,
    counterexample_holds,
    dominate_on_balls,
    dominate_on_cubes,
    kappa_not_global_counterexample,
)
from algorithmic_dimensions.models.measures import (
    AlgorithmicProbabilityMeasure,
    ExampleMeasure,
    KappaMeasure,
    NuMeasure,
    RestrictedMeasure,
    ScaledMeasure,
    ZeroMeasure,
    check_outer_measure_axioms,
    cube_families,
    even_half_length,
    random_families,
)
from algorithmic_dimensions.models.staged import (
    MAX_SUBSET_POINTS,
    MeasureRegistry,
    MixtureMeasure,
    theta_k_eval,
)
from algorithmic_dimensions.models.support import CandidateSupport, TableSupport
from algorithmic_dimensions.models.table import ComplexityTable, build_table
from algorithmic_dimensions.services.specs import parse_point, parse_set
from algorithmic_dimensions.utils import format_fraction, write_csv, write_json

logger = logging.getLogger(__name__)

REPORT_DIRECTORY = 'report'
SUITES = {
    'table': ['table_build.json'],
    'kdim': ['kdim_*.json', 'kdim_*.csv'],
    'measure': ['measure_*.json'],
    'dominate': ['dominate_*.json', 'dominate_*.csv'],
    'counterexample': ['counterexample.json', 'counterexample.csv'],
    'ballcube': ['ballcube.json'],
    'axioms': ['axioms.json'],
}
AXIOM_MEASURES = ('kappa', 'nu', 'm', 'theta')


def _slug(text):
    return ''.join(character if character.isalnum() else '_' for character in text).strip('_')


class ExperimentRunner:
    """One method per command; every artifact carries the full configuration echo."""

    def __init__(self, config):
        self.config = config
        self._table = None
        self._support = None
        self._registry = None

    @property
    def output_directory(self):
        return self.config.output_directory

    def _artifact(self, name, result):
        payload = dict(self.config.to_json())
        payload['result'] = result
        path = os.path.join(self.output_directory, name)
        write_json(path, payload)
        return path

    def table(self):
        if self._table is None:
            path = self.config.table_path
            if not (os.path.exists(f'{path}.bin') or os.path.exists(f'{path}.json')):
                raise ConfigError(
                    f'No complexity table at {path}.bin; run "table build" first '
                    f'or point table.path at an existing table'
                )
            self._table = ComplexityTable.load(path, self.config.machine_version)
            logger.info(f'Loaded table| {self._table}')
        return self._table

    def support(self):
        if self._support is None:
            self._support = TableSupport(self.table(), self.config.dimension)
        return self._support

    def registry(self):
        if self._registry is None:
            if self.config.registry_path:
                self._registry = MeasureRegistry.from_file(
                    self.config.registry_path, self.support()
                )
            else:
                self._registry = MeasureRegistry.default(self.support())
        return self._registry

    def measure(self, name, candidates=False):
        """kappa, nu, m, theta, example, zero, kappa_even; NAME*FACTOR scales any of them."""
        base, _, factor = name.partition('*')
        if factor:
            try:
                return ScaledMeasure(self.measure(base, candidates), Fraction(factor))
            except (ValueError, ZeroDivisionError) as e:
                raise ConfigError(f'Bad scale factor in "{name}"') from e
        support = self.support()
        if candidates:
            support = CandidateSupport(support, self.config.guard)
        if base == 'kappa':
            return KappaMeasure(support)
        if base == 'nu':
            return NuMeasure(support)
        if base == 'm':
            return AlgorithmicProbabilityMeasure(support)
        if base == 'theta':
            return MixtureMeasure(
                self.registry(), support, min(self.config.theta_points, MAX_SUBSET_POINTS)
            )
        if base == 'example':
            return ExampleMeasure(support)
        if base == 'zero':
            return ZeroMeasure()
        if base == 'kappa_even':
            return RestrictedMeasure(KappaMeasure, support, even_half_length, 'kappa_even')
        raise ConfigError(f'Unknown measure "{name}"')

    def build_table(self):
        config = self.config
        table = build_table(config.max_length, config.step_budget, config.max_programs)
        table.save(config.table_path)
        self._table = table
        self._support = None
        self._registry = None
        kraft = table.kraft_sum()
        result = {
            'path': config.table_path,
            'entries': len(table),
            'kraft_sum': str(kraft),
            'kraft_sum_float': float(kraft),
            'header': table.header(),
        }
        self._artifact('table_build.json', result)
        logger.info(f'Table| {len(table)} entries, Kraft sum {format_fraction(kraft)}')
        return result

    def kdim(self, point_spec):
        config = self.config
        point = parse_point(point_spec, config.dimension)
        if point_spec.startswith('random:'):
            config.require_seed('kdim')
        r_values = resolutions(config.r_min, config.r_max, config.r_step)
        profile = k_profile(point, r_values, config.guard, self.support())
        slopes = estimate_slopes(profile, config.r0)
        name = f'kdim_{_slug(point_spec)}'
        write_csv(
            os.path.join(self.output_directory, f'{name}.csv'),
            ['r', 'k_r', 'ratio'],
            [(r, value, value / r if r else '') for r, value in profile.samples],
        )
        result = {'point': point_spec, 'profile': profile.to_json(), 'slopes': slopes.to_json()}
        self._artifact(f'{name}.json', result)
        return result

    def measure_eval(self, name, set_spec, candidates=False):
        config = self.config
        query = parse_set(set_spec, config.dimension)
        if name.startswith('theta:'):
            registry = self.registry()
            evaluation = theta_k_eval(
                registry,
                registry.index_of(name.split(':', 1)[1]),
                query,
                self.support(),
                config.theta_points,
                config.theta_stage,
            )
            value = evaluation.value
            details = evaluation.to_json()
        else:
            value = self.measure(name, candidates).evaluate(query)
            details = None
        result = {
            'measure': name,
            'set': set_spec,
            'candidates': candidates,
            'value': str(value),
            'value_float': float(value),
            'log2_inverse': -math.log2(value) if value > 0 else None,
        }
        if details is not None:
            result['theta'] = details
        self._artifact(f'measure_{_slug(name)}_{_slug(set_spec)}.json', result)
        return result

    def _range(self):
        return resolutions(self.config.domination_r_min, self.config.domination_r_max)

    def dominate(self, mu_name, nu_name, family):
        config = self.config
        seed = config.require_seed('dominate')
        mu = self.measure(mu_name)
        nu = self.measure(nu_name)
        if family == 'cubes':
            sampler = CubeSampler(self.support(), seed, config.random_sets)
            report = dominate_on_cubes(
                mu, nu, self._range(), sampler, config.slope_tol, config.gap_tol
            )
        elif family == 'balls':
            sampler = BallSampler(self.support(), seed, config.random_sets)
            report = dominate_on_balls(
                mu, nu, self._range(), sampler, config.slope_tol, config.gap_tol
            )
        else:
            raise ConfigError(f'Unknown family "{family}", expected cubes or balls')
        name = f'dominate_{_slug(mu_name)}_{_slug(nu_name)}_{family}'
        write_csv(
            os.path.join(self.output_directory, f'{name}.csv'),
            ['r', 'worst_gap', 'counted'],
            report.rows(),
        )
        self._artifact(f'{name}.json', report.to_json())
        return report

    def counterexample(self, alphas=None):
        config = self.config
        rows = []
        records = []
        for alpha in alphas or config.alphas:
            try:
                record = kappa_not_global_counterexample(
                    alpha, self.support(), config.machine_constant
                )
            except EmptyCounterexampleError as e:
                logger.warning(f'Counterexample| alpha={alpha}: {e}')
                rows.append({'alpha': alpha, 'empty': True})
                continue
            records.append(record)
            rows.append(record.to_json())
        verdicts = iter(counterexample_holds(records))
        for row in rows:
            if row.get('empty'):
                continue
            row['holds'] = next(verdicts)
            if not row['holds']:
                logger.warning(f'Counterexample| alpha={row["alpha"]}: bound or ratio trend fails')
        write_csv(
            os.path.join(self.output_directory, 'counterexample.csv'),
            ['alpha', 'size', 'kappa', 'nu', 'ratio', 'gamma', 'holds'],
            [
                [row.get(column, '') for column in ('alpha', 'size', 'kappa', 'nu')]
                + [row.get('ratio_float', ''), row.get('gamma', ''), row.get('holds', '')]
                for row in rows
            ],
        )
        self._artifact('counterexample.json', rows)
        return rows

    def ballcube(self, seeds=None):
        config = self.config
        seeds = seeds or [config.require_seed('ballcube')]
        r_values = resolutions(0, config.ballcube_r_max)
        estimates = [
            ball_cube_bound_check(
                self.support(), r_values, config.ballcube_samples, seed, config.guard
            )
            for seed in seeds
        ]
        constants = [estimate.constant for estimate in estimates]
        result = {
            'constants': constants,
            'constant': max(constants),
            'spread': max(constants) - min(constants),
            'within_bound': max(constants) <= config.ballcube_max_constant,
            'estimates': [estimate.to_json() for estimate in estimates],
        }
        self._artifact('ballcube.json', result)
        return result

    def axioms(self, names=AXIOM_MEASURES):
        config = self.config
        seed = config.require_seed('axioms')
        support = self.support()
        families = random_families(support.points(), config.axiom_families, seed)
        cubes = CubeSampler(support, seed, 0).sample(config.domination_r_min)
        families += cube_families(cubes)
        reports = {}
        for name in names:
            reports[name] = check_outer_measure_axioms(self.measure(name), families).to_json()
        self._artifact('axioms.json', reports)
        return reports

    def report(self):
        """Copies every suite's artifacts into one bundle with an index; never timestamps."""
        bundle = os.path.join(self.output_directory, REPORT_DIRECTORY)
        os.makedirs(bundle, exist_ok=True)
        suites = {}
        missing = []
        for suite, patterns in SUITES.items():
            files = sorted(
                {
                    path
                    for pattern in patterns
                    for path in glob.glob(os.path.join(self.output_directory, pattern))
                }
            )
            if not files:
                missing.append(suite)
            for path in files:
                shutil.copyfile(path, os.path.join(bundle, os.path.basename(path)))
            suites[suite] = [os.path.basename(path) for path in files]
        if missing:
            logger.warning(f'Report| missing suites {missing}, writing a partial bundle')
        index = {
            'config': self.config.to_json()['config'],
            'versions': versions(),
            'suites': suites,
            'missing': missing,
            'complete': not missing,
        }
        write_json(os.path.join(bundle, 'index.json'), index)
        return index
