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
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from algorithmic_dimensions import AlgorithmicDimensionsError
from algorithmic_dimensions.models.complexity import DEFAULT_GUARD, k_at_precision
from algorithmic_dimensions.models.geometry import Ball
from algorithmic_dimensions.utils import log2_inverse

logger = logging.getLogger(__name__)

SUPPORT_EXHAUSTED = 'support-exhausted'
TRUE_ZERO = 'true-zero'
MIN_TAIL_SAMPLES = 3


class InsufficientDataError(AlgorithmicDimensionsError):
    pass


class UndefinedDimensionError(AlgorithmicDimensionsError):
    pass


def resolutions(r_min, r_max, r_step=1):
    if r_min < 0 or r_max < r_min or r_step < 1:
        raise ValueError(f'Bad resolution range {r_min}..{r_max} step {r_step}')
    return list(range(r_min, r_max + 1, r_step))


@dataclass
class DimensionProfile:
    subject: str
    samples: list
    flags: dict = field(default_factory=dict)

    def __post_init__(self):
        r_values = [r for r, _ in self.samples]
        if any(later <= earlier for earlier, later in zip(r_values, r_values[1:])):
            raise ValueError(f'Profile resolutions must strictly increase: {r_values}')

    @property
    def r_range(self):
        if not self.samples:
            return None
        return self.samples[0][0], self.samples[-1][0]

    def values(self):
        return [value for _, value in self.samples]

    def rows(self):
        return [(r, value, self.flags.get(r, '')) for r, value in self.samples]

    def to_json(self):
        return {
            'subject': self.subject,
            'samples': [
                {'r': r, 'value': None if value == math.inf else value, 'flag': flag}
                for r, value, flag in self.rows()
            ],
        }


@dataclass(frozen=True)
class SlopeEstimate:
    """
    lower and upper are the extreme ratios value/r on the tail. The corrected pair takes the same
    extremes after removing the fitted intercept, so an additive description overhead (the
    encoding frame of a point) does not count towards the dimension.
    """

    lower: float
    upper: float
    r0: int
    regression_slope: float
    samples: int
    intercept: float = math.nan
    corrected_lower: float = math.nan
    corrected_upper: float = math.nan

    def to_json(self):
        return {
            'lower': self.lower,
            'upper': self.upper,
            'r0': self.r0,
            'regression_slope': self.regression_slope,
            'intercept': self.intercept,
            'corrected_lower': self.corrected_lower,
            'corrected_upper': self.corrected_upper,
            'samples': self.samples,
        }


def k_profile(point, r_values, guard=DEFAULT_GUARD, support=None):
    samples = [(r, k_at_precision(point, r, guard, support)) for r in r_values]
    return DimensionProfile(f'K_r {point}', samples)


def local_dim_profile(measure, point, r_values):
    samples = []
    flags = {}
    for r in r_values:
        value = log2_inverse(measure.evaluate(Ball(point, r)))
        if value == math.inf:
            flags[r] = TRUE_ZERO if measure.exhaustive else SUPPORT_EXHAUSTED
        samples.append((r, value))
    if flags:
        logger.debug(f'Profile| {measure.name} at {point}: zero mass at r={sorted(flags)}')
    return DimensionProfile(f'{measure.name} {point}', samples, flags)


def estimate_slopes(profile, r0):
    tail = [(r, value) for r, value in profile.samples if r >= r0 and r > 0]
    if len(tail) < MIN_TAIL_SAMPLES:
        raise InsufficientDataError(
            f'{profile.subject}: {len(tail)} samples with r >= {r0}, need {MIN_TAIL_SAMPLES}'
        )
    ratios = [value / r for r, value in tail]
    finite = [(r, value) for r, value in tail if value != math.inf]
    if len(finite) < 2:
        return SlopeEstimate(min(ratios), max(ratios), r0, math.nan, len(tail))
    slope, intercept = np.polyfit([r for r, _ in finite], [value for _, value in finite], 1)
    corrected = [(value - intercept) / r for r, value in tail]
    return SlopeEstimate(
        min(ratios),
        max(ratios),
        r0,
        float(slope),
        len(tail),
        float(intercept),
        float(min(corrected)),
        float(max(corrected)),
    )


@dataclass(frozen=True)
class GlobalDimensions:
    lower_hausdorff: float
    upper_hausdorff: float
    lower_packing: float
    upper_packing: float
    atoms: int
    epsilon: float

    def values(self):
        return self.lower_hausdorff, self.upper_hausdorff, self.lower_packing, self.upper_packing

    def to_json(self):
        return {
            'dim_H': self.lower_hausdorff,
            'Dim_H': self.upper_hausdorff,
            'dim_P': self.lower_packing,
            'Dim_P': self.upper_packing,
            'atoms': self.atoms,
            'epsilon': self.epsilon,
        }


def _lower_quantile(pairs, threshold):
    """Least v whose weight at or below v exceeds threshold."""
    weight = 0.0
    for value, atom_weight in sorted(pairs, key=lambda pair: pair[0]):
        weight += atom_weight
        if weight > threshold:
            return value
    return max(value for value, _ in pairs)


def _upper_quantile(pairs, threshold):
    """Greatest v whose weight at or above v exceeds threshold."""
    weight = 0.0
    for value, atom_weight in sorted(pairs, key=lambda pair: pair[0], reverse=True):
        weight += atom_weight
        if weight > threshold:
            return value
    return min(value for value, _ in pairs)


def global_dims(measure, atoms, r_values, r0, epsilon=1e-6):
    """
    Essential infimum and supremum style dimensions of a measure over weighted atoms, taking
    each atom's lower and upper slopes of its local profile. Atoms are (point, weight) pairs.
    """
    atoms = [(point, float(weight)) for point, weight in atoms if weight > 0]
    total = sum(weight for _, weight in atoms)
    if not atoms or total <= 0:
        raise UndefinedDimensionError(f'{measure.name}: no atoms with positive weight')
    lowers = []
    uppers = []
    for point, weight in atoms:
        estimate = estimate_slopes(local_dim_profile(measure, point, r_values), r0)
        lowers.append((estimate.lower, weight))
        uppers.append((estimate.upper, weight))

    threshold = epsilon * total
    dimensions = GlobalDimensions(
        _lower_quantile(lowers, threshold),
        _upper_quantile(lowers, threshold),
        _lower_quantile(uppers, threshold),
        _upper_quantile(uppers, threshold),
        len(atoms),
        epsilon,
    )
    logger.info(f'Global dimensions| {measure.name}: {dimensions.values()}')
    return dimensions
