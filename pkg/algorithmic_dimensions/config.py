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
import json
import logging
from dataclasses import asdict, dataclass, fields, replace

from algorithmic_dimensions import ENCODING_VERSION, MACHINE_VERSION, ConfigError

logger = logging.getLogger(__name__)

# Storage key -> RunConfig attribute
CONFIG_KEYS = {
    'machine.version': 'machine_version',
    'space.dimension': 'dimension',
    'table.max_length': 'max_length',
    'table.step_budget': 'step_budget',
    'table.max_programs': 'max_programs',
    'table.path': 'table_path',
    'precision.guard': 'guard',
    'dimension.r_min': 'r_min',
    'dimension.r_max': 'r_max',
    'dimension.r_step': 'r_step',
    'dimension.r0': 'r0',
    'dimension.epsilon': 'epsilon',
    'domination.r_min': 'domination_r_min',
    'domination.r_max': 'domination_r_max',
    'domination.slope_tol': 'slope_tol',
    'domination.gap_tol': 'gap_tol',
    'domination.random_sets': 'random_sets',
    'ballcube.r_max': 'ballcube_r_max',
    'ballcube.samples': 'ballcube_samples',
    'ballcube.max_constant': 'ballcube_max_constant',
    'counterexample.alphas': 'alphas',
    'counterexample.machine_constant': 'machine_constant',
    'measures.registry': 'registry_path',
    'theta.points': 'theta_points',
    'theta.stage': 'theta_stage',
    'axioms.families': 'axiom_families',
    'output.directory': 'output_directory',
    'experiment.seed': 'seed',
}


@dataclass(frozen=True)
class RunConfig:
    machine_version: str = MACHINE_VERSION
    dimension: int = 1
    max_length: int = 18
    step_budget: int = 4096
    max_programs: int = 5_000_000
    table_path: str = 'tables/table'
    guard: int = 2
    r_min: int = 68
    r_max: int = 124
    r_step: int = 8
    r0: int = 68
    epsilon: float = 1e-6
    domination_r_min: int = 0
    domination_r_max: int = 16
    slope_tol: float = 0.1
    gap_tol: float = 0.2
    random_sets: int = 32
    ballcube_r_max: int = 10
    ballcube_samples: int = 500
    ballcube_max_constant: int = 64
    alphas: tuple = (4, 6, 8, 10, 12)
    machine_constant: int = 16
    registry_path: str = None
    theta_points: int = 6
    theta_stage: int = 64
    axiom_families: int = 200
    output_directory: str = 'results'
    seed: int = None

    def __post_init__(self):
        object.__setattr__(self, 'alphas', tuple(self.alphas))

    @staticmethod
    def from_storage(storage, overrides=None):
        values = {}
        for key, value in list(storage.items()) + list((overrides or {}).items()):
            if key not in CONFIG_KEYS:
                raise ConfigError(f'Unknown configuration key "{key}"')
            values[CONFIG_KEYS[key]] = value
        try:
            config = RunConfig(**values)
        except TypeError as e:
            raise ConfigError(str(e)) from e
        config.validate()
        return config

    def with_values(self, **values):
        present = {name: value for name, value in values.items() if value is not None}
        config = replace(self, **present)
        config.validate()
        return config

    def validate(self):
        integers = {
            attribute.name
            for attribute in fields(self)
            if attribute.type is int and attribute.name != 'seed'
        }
        for name in integers:
            if not isinstance(getattr(self, name), int):
                raise ConfigError(f'"{name}" must be an integer, got {getattr(self, name)!r}')
        if self.seed is not None and not isinstance(self.seed, int):
            raise ConfigError(f'experiment.seed must be an integer, got {self.seed!r}')
        if self.machine_version != MACHINE_VERSION:
            raise ConfigError(
                f'machine.version "{self.machine_version}" is not the built-in "{MACHINE_VERSION}"'
            )
        if not 1 <= self.dimension <= 4:
            raise ConfigError(f'space.dimension must be within 1..4, got {self.dimension}')
        positive = {
            'table.max_length': self.max_length,
            'table.step_budget': self.step_budget,
            'table.max_programs': self.max_programs,
            'dimension.r_step': self.r_step,
            'dimension.epsilon': self.epsilon,
            'domination.slope_tol': self.slope_tol,
            'domination.gap_tol': self.gap_tol,
            'ballcube.samples': self.ballcube_samples,
            'theta.points': self.theta_points,
            'theta.stage': self.theta_stage,
            'axioms.families': self.axiom_families,
        }
        for key, value in positive.items():
            if value <= 0:
                raise ConfigError(f'{key} must be positive, got {value}')
        if self.guard < 0 or self.random_sets < 0 or self.machine_constant < 0:
            raise ConfigError('precision.guard, random_sets and machine_constant must be >= 0')
        for low, high, name in (
            (self.r_min, self.r_max, 'dimension'),
            (self.domination_r_min, self.domination_r_max, 'domination'),
            (0, self.ballcube_r_max, 'ballcube'),
        ):
            if low < 0 or high < low:
                raise ConfigError(f'Bad {name} resolution range {low}..{high}')

    def require_seed(self, command):
        if self.seed is None:
            raise ConfigError(f'"{command}" samples at random: set experiment.seed or pass --seed')
        return self.seed

    def to_json(self):
        """Every key with its effective value, plus version stamps."""
        values = asdict(self)
        echo = {key: values[attribute] for key, attribute in CONFIG_KEYS.items()}
        echo['counterexample.alphas'] = list(self.alphas)
        return {'config': echo, 'versions': versions()}


def versions():
    return {'machine': MACHINE_VERSION, 'encoding': ENCODING_VERSION}


def parse_override(assignment):
    """KEY=VALUE with VALUE read as JSON, falling back to the raw string."""
    if '=' not in assignment:
        raise ConfigError(f'Expected KEY=VALUE, got "{assignment}"')
    key, raw = assignment.split('=', 1)
    key = key.strip()
    if key not in CONFIG_KEYS:
        raise ConfigError(f'Unknown configuration key "{key}"')
    try:
        value = json.loads(raw)
    except ValueError:
        value = raw
    return key, value
