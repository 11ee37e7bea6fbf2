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
import math
from dataclasses import dataclass, field
from fractions import Fraction

from algorithmic_dimensions import AlgorithmicDimensionsError, BudgetError, ConfigError
from algorithmic_dimensions.models.measures import OuterMeasure

logger = logging.getLogger(__name__)

MAX_SUBSET_POINTS = 12
SQUARE_COUNT_SCALE = MAX_SUBSET_POINTS ** 2
DEFAULT_HORIZON = 48


class StageMonotonicityError(AlgorithmicDimensionsError):
    pass


COST_MODELS = {
    'linear': lambda size, stage: size * (stage + 1),
    'quadratic': lambda size, stage: size * size * (stage + 1),
    'exponential': lambda size, stage: (1 << size) + stage,
}


class StagedMeasure:
    """
    A lower semicomputable outer measure given by approximator(A, t), nondecreasing in the stage
    t, together with a simulated cost model: evaluating (A, t) takes cost(|A|, t) steps, and the
    empty set is free.
    """

    def __init__(self, name, approximator, saturation, cost='linear', support_points=()):
        if cost not in COST_MODELS:
            raise ConfigError(f'Unknown cost model "{cost}", expected one of {sorted(COST_MODELS)}')
        self.name = name
        self.cost_name = cost
        self._approximator = approximator
        self._saturation = saturation
        self._cost = COST_MODELS[cost]
        self._support_points = list(support_points)
        self._history = {}

    def approximate(self, points, stage):
        points = frozenset(points)
        if not points:
            return Fraction(0)
        value = Fraction(self._approximator(points, stage))
        self._check_stage(points, stage, value)
        return value

    def _check_stage(self, points, stage, value):
        history = self._history.setdefault(points, {})
        for seen_stage, seen_value in history.items():
            if (seen_stage < stage and seen_value > value) or (
                seen_stage > stage and seen_value < value
            ):
                raise StageMonotonicityError(
                    f'{self.name}: stage {seen_stage} gave {seen_value}, stage {stage} gave {value}'
                )
        history[stage] = value

    def cost(self, points, stage):
        size = len(points)
        return 0 if size == 0 else self._cost(size, stage)

    def completed_stage(self, points, budget):
        """Largest s <= budget whose evaluation fits the budget, -1 if not even stage 0 does."""
        if self.cost(points, 0) > budget:
            return -1
        low, high = 0, budget
        while low < high:
            middle = (low + high + 1) // 2
            if self.cost(points, middle) <= budget:
                low = middle
            else:
                high = middle - 1
        return low

    def saturation_stage(self, points):
        """A stage from which the approximation of points no longer changes."""
        return self._saturation(frozenset(points)) if points else 0

    def limit(self, points):
        return self.approximate(points, self.saturation_stage(points))

    def support_points(self):
        return list(self._support_points)

    def __repr__(self):
        return f'StagedMeasure({self.name}, cost={self.cost_name})'


def kappa_staged(support, cost='linear', name='kappa'):
    def approximator(points, stage):
        known = [support.k_of(point) for point in points if support.k_of(point) <= stage]
        return Fraction(1, 1 << min(known)) if known else Fraction(0)

    def saturation(points):
        return max(support.k_of(point) for point in points)

    return StagedMeasure(name, approximator, saturation, cost, support.points_by_weight())


def nu_staged(support, cost='linear', name='nu'):
    def approximator(points, stage):
        weights = [support.weight(point) for point in points if support.k_of(point) <= stage]
        return sum(weights, Fraction(0))

    def saturation(points):
        return max(support.k_of(point) for point in points)

    return StagedMeasure(name, approximator, saturation, cost, support.points_by_weight())


def m_staged(support, cost='quadratic', name='m'):
    def found(point, stage):
        length = support.min_len(point)
        return length is not None and length <= stage

    def approximator(points, stage):
        masses = [support.algorithmic_prob(point) for point in points if found(point, stage)]
        return sum(masses, Fraction(0))

    def saturation(points):
        return max((support.min_len(point) or 0) for point in points)

    return StagedMeasure(name, approximator, saturation, cost, support.points_by_weight())


def example_staged(support, cost='linear', name='example'):
    return StagedMeasure(
        name,
        lambda points, stage: 1 - Fraction(1, 1 << len(points)),
        lambda points: 0,
        cost,
        support.points_by_weight(),
    )


def geometric_staged(support, cost='exponential', name='geometric', horizon=DEFAULT_HORIZON):
    """nu(A) * (1 - 2^-min(t, horizon)); its limit is nu(A) * (1 - 2^-horizon)."""

    def approximator(points, stage):
        total = sum((support.weight(point) for point in points), Fraction(0))
        return total * (1 - Fraction(1, 1 << min(stage, horizon)))

    return StagedMeasure(
        name, approximator, lambda points: horizon, cost, support.points_by_weight()
    )


def square_count_staged(support, cost='linear', name='square_count'):
    def approximator(points, stage):
        return Fraction(min(len(points), stage) ** 2, SQUARE_COUNT_SCALE)

    return StagedMeasure(name, approximator, len, cost, support.points_by_weight())


BUILTIN_STAGED = {
    'kappa': kappa_staged,
    'nu': nu_staged,
    'm': m_staged,
    'example': example_staged,
    'geometric': geometric_staged,
    'square_count': square_count_staged,
}

DEFAULT_REGISTRY = {
    'measures': [
        {'kind': 'kappa', 'cost': 'linear'},
        {'kind': 'nu', 'cost': 'linear'},
        {'kind': 'm', 'cost': 'quadratic'},
        {'kind': 'geometric', 'cost': 'exponential', 'horizon': DEFAULT_HORIZON},
        {'kind': 'square_count', 'cost': 'linear'},
        {'kind': 'example', 'cost': 'linear'},
    ]
}


class MeasureRegistry:
    def __init__(self, entries):
        self._entries = list(entries)
        if len(self._entries) < 3:
            raise ConfigError(f'A registry needs at least 3 measures, got {len(self._entries)}')
        names = [entry.name for entry in self._entries]
        if len(set(names)) != len(names):
            raise ConfigError(f'Duplicate measure names in registry: {names}')

    def __len__(self):
        return len(self._entries)

    def __getitem__(self, index):
        return self._entries[index]

    def __iter__(self):
        return iter(self._entries)

    @property
    def last_index(self):
        return len(self._entries) - 1

    def index_of(self, name):
        for index, entry in enumerate(self._entries):
            if entry.name == name:
                return index
        raise ConfigError(f'Unknown staged measure "{name}"')

    @staticmethod
    def from_json(payload, support):
        entries = []
        for raw in payload.get('measures', []):
            raw = dict(raw)
            kind = raw.pop('kind', None)
            if kind not in BUILTIN_STAGED:
                raise ConfigError(f'Unknown staged measure kind "{kind}"')
            raw.setdefault('name', kind)
            try:
                entries.append(BUILTIN_STAGED[kind](support, **raw))
            except TypeError as e:
                raise ConfigError(f'Bad parameters for "{kind}": {e}') from e
        return MeasureRegistry(entries)

    @staticmethod
    def from_file(path, support):
        try:
            with open(path, 'r') as file:
                payload = json.load(file)
        except (OSError, ValueError) as e:
            raise ConfigError(f'Cannot read measure registry {path}: {e}') from e
        return MeasureRegistry.from_json(payload, support)

    @staticmethod
    def default(support):
        return MeasureRegistry.from_json(DEFAULT_REGISTRY, support)


def _ordered(points):
    ordered = tuple(sorted(frozenset(points)))
    if len(ordered) > MAX_SUBSET_POINTS:
        raise BudgetError(f'Subset search over {len(ordered)} points, cap is {MAX_SUBSET_POINTS}')
    return ordered


def _subset(ordered, mask):
    return frozenset(point for i, point in enumerate(ordered) if mask >> i & 1)


def _tau(measure, ordered, t):
    stage = t
    for mask in range(1, 1 << len(ordered)):
        completed = measure.completed_stage(_subset(ordered, mask), t)
        if completed < 0:
            return 0
        stage = min(stage, completed)
    return stage


def _eta_table(measure, ordered, stage_bound, budget):
    """eta over every subset of ordered, indexed by bit mask."""
    size = len(ordered)
    table = [Fraction(0)] * (1 << size)
    for mask in range(1, 1 << size):
        subset = _subset(ordered, mask)
        stage = min(stage_bound, measure.completed_stage(subset, budget))
        if stage >= 0:
            table[mask] = measure.approximate(subset, stage)
    for bit in range(size):
        for mask in range(1 << size):
            if mask >> bit & 1 and table[mask ^ (1 << bit)] > table[mask]:
                table[mask] = table[mask ^ (1 << bit)]
    return table


def _min_partition(weights):
    """
    Minimum total weight over set partitions of the full mask. Blocks containing the lowest
    element are tried in increasing mask order and only a strictly smaller sum replaces the
    current choice. Returns (value, blocks as masks).
    """
    size = len(weights).bit_length() - 1
    denominator = 1
    for value in weights:
        denominator = denominator * value.denominator // math.gcd(denominator, value.denominator)
    scaled = [value.numerator * (denominator // value.denominator) for value in weights]

    best = [0] * (1 << size)
    choice = [0] * (1 << size)
    for mask in range(1, 1 << size):
        low = mask & -mask
        rest = mask ^ low
        best_value = None
        sub = 0
        while True:
            block = sub | low
            value = scaled[block] + best[mask ^ block]
            if best_value is None or value < best_value:
                best_value = value
                choice[mask] = block
            if sub == rest:
                break
            sub = (sub - rest) & rest
        best[mask] = best_value

    blocks = []
    mask = (1 << size) - 1
    while mask:
        blocks.append(choice[mask])
        mask ^= choice[mask]
    return Fraction(best[-1], denominator), blocks


def tau_k(registry, k, points, t):
    return _tau(registry[k], _ordered(points), t)


def eta_k(registry, k, points, t, budget):
    ordered = _ordered(points)
    return _eta_table(registry[k], ordered, t, budget)[-1]


def theta_hat_partition(registry, k, points, t):
    """theta_hat_k(A, t) with the partition of A attaining it."""
    ordered = _ordered(points)
    if not ordered:
        return Fraction(0), []
    measure = registry[k]
    eta = _eta_table(measure, ordered, _tau(measure, ordered, t), t)
    value, blocks = _min_partition(eta)
    return value, [_subset(ordered, block) for block in blocks]


def theta_hat_k(registry, k, points, t):
    return theta_hat_partition(registry, k, points, t)[0]


def mixture_terms(registry, points, t):
    """The weighted terms 2^-(k+1) theta_hat_k(A, t) for k <= min(t, K)."""
    return [
        Fraction(1, 1 << (k + 1)) * theta_hat_k(registry, k, points, t)
        for k in range(min(t, registry.last_index) + 1)
    ]


def mixture_theta(registry, points, t):
    return sum(mixture_terms(registry, points, t), Fraction(0))


def saturating_stage(registry, points):
    """A stage at which every theta_hat_k(A, t) with k <= K has reached its limit."""
    points = frozenset(points)
    stage = registry.last_index
    for measure in registry:
        saturation = measure.saturation_stage(points)
        stage = max(stage, saturation, measure.cost(points, saturation))
    return stage


@dataclass
class ThetaEvaluation:
    measure: str
    query: str
    points: list
    stage: int
    value: Fraction
    partition: list
    trace: list = field(default_factory=list)

    def to_json(self):
        return {
            'measure': self.measure,
            'query': self.query,
            'points': [str(point) for point in self.points],
            'stage': self.stage,
            'value': str(self.value),
            'partition': [sorted(str(point) for point in block) for block in self.partition],
            'trace': [
                {'points': size, 'stage': stage, 'value': str(value)}
                for size, stage, value in self.trace
            ],
        }


def _stage_ladder(max_stage):
    stages = []
    stage = 1
    while stage < max_stage:
        stages.append(stage)
        stage *= 2
    stages.append(max_stage)
    return stages


def theta_k_eval(registry, k, query, support, max_points, max_stage):
    if max_points < 1 or max_stage < 1:
        raise ValueError(f'Budgets must be positive, got {max_points} points, {max_stage} stages')
    points = sorted(support.points_in(query), key=lambda point: (support.k_of(point), point))
    points = points[: min(max_points, MAX_SUBSET_POINTS)]
    trace = []
    for stage in _stage_ladder(max_stage):
        trace.append((len(points), stage, theta_hat_k(registry, k, points, stage)))
    for size in range(len(points)):
        trace.append((size, max_stage, theta_hat_k(registry, k, points[:size], max_stage)))

    value, partition = theta_hat_partition(registry, k, points, max_stage)
    logger.info(
        f'Theta| {registry[k].name} on {query}: {value} with {len(points)} points at t={max_stage}'
    )
    return ThetaEvaluation(registry[k].name, str(query), points, max_stage, value, partition, trace)


def heaviest_points(measure, points, max_points):
    """The max_points points with the largest singleton limits, ties broken by point order."""
    ranked = sorted(frozenset(points), key=lambda point: (-measure.limit([point]), point))
    return ranked[:max_points]


class MixtureMeasure(OuterMeasure):
    """
    The mixture evaluated on the support points of a set at their saturating stage. Each term
    sees only the max_points points its own staged measure weighs most, which keeps
    subadditivity exact; monotonicity holds for limits that are a maximum, a sum of point
    weights or a function of the size, as for every built-in fixture.
    """

    name = 'theta'

    def __init__(self, registry, support, max_points=MAX_SUBSET_POINTS):
        if not 1 <= max_points <= MAX_SUBSET_POINTS:
            raise ValueError(f'max_points must be in 1..{MAX_SUBSET_POINTS}, got {max_points}')
        self.registry = registry
        self.support = support
        self.max_points = max_points

    def evaluate(self, query):
        candidates = self.support.points_in(query)
        total = Fraction(0)
        for k, measure in enumerate(self.registry):
            points = heaviest_points(measure, candidates, self.max_points)
            stage = saturating_stage(self.registry, points)
            total += Fraction(1, 1 << (k + 1)) * theta_hat_k(self.registry, k, points, stage)
        return total

    def support_points(self):
        return self.support.points_by_weight()
