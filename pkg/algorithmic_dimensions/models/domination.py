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
from fractions import Fraction

import numpy as np

from algorithmic_dimensions import BudgetError
from algorithmic_dimensions.models.complexity import (
    DEFAULT_GUARD,
    ball_candidates,
    k_enc,
    k_of_cube,
    k_of_point,
)
from algorithmic_dimensions.models.geometry import (
    Ball,
    DyadicCube,
    RationalPoint,
    ball_intersects_cube,
    cube_of_point,
    neighbor_addresses,
)
from algorithmic_dimensions.models.measures import KappaMeasure, NuMeasure, check_strong_finiteness
from algorithmic_dimensions.models.support import FinitePointSet
from algorithmic_dimensions.utils import log2_fraction

logger = logging.getLogger(__name__)

DOMINATES = 'dominates'
FAILS = 'fails'
INCONCLUSIVE = 'inconclusive'
CUBES = 'cubes'
BALLS = 'balls'
EMPIRICAL_LABEL = 'empirical, sampled'

DEFAULT_SLOPE_TOL = 0.1
DEFAULT_GAP_TOL = 0.2
DEFAULT_RANDOM_SETS = 32
DEFAULT_MACHINE_CONSTANT = 16


class EmptyCounterexampleError(BudgetError):
    pass


def _bounding_addresses(points, r, margin=2):
    n = points[0].n if points else 1
    scale = 1 << r
    ranges = []
    for coordinate in range(n):
        values = [point.coords[coordinate] for point in points] or [Fraction(0)]
        ranges.append(
            (math.floor(min(values) * scale) - margin, math.floor(max(values) * scale) + margin)
        )
    return ranges


class CubeSampler:
    """Every r-dyadic cube holding a support point plus seeded random cubes near the support."""

    def __init__(self, support, seed, random_count=DEFAULT_RANDOM_SETS):
        self.support = support
        self.seed = seed
        self.random_count = random_count

    def sample(self, r):
        points = self.support.points()
        cubes = {cube_of_point(point, r) for point in points}
        rng = np.random.default_rng([self.seed, r])
        ranges = _bounding_addresses(points, r)
        for _ in range(self.random_count):
            address = tuple(int(rng.integers(low, high + 1)) for low, high in ranges)
            cubes.add(DyadicCube(r, address))
        return sorted(cubes)


class BallSampler:
    """Balls of radius 2^-r centred at support points and at seeded random rationals."""

    def __init__(self, support, seed, random_count=DEFAULT_RANDOM_SETS):
        self.support = support
        self.seed = seed
        self.random_count = random_count

    def sample(self, r):
        points = self.support.points()
        balls = [Ball(point, r) for point in points]
        rng = np.random.default_rng([self.seed, r, 1])
        ranges = _bounding_addresses(points, r)
        denominator = 1 << (r + 3)
        for _ in range(self.random_count):
            coords = tuple(
                Fraction(int(rng.integers(low * 8, (high + 1) * 8)), denominator)
                for low, high in ranges
            )
            balls.append(Ball(RationalPoint(coords), r))
        return balls


@dataclass
class ResolutionRecord:
    r: int
    sampled: int
    counted: int
    worst_gap: float = None
    worst_set: str = ''

    @property
    def inconclusive(self):
        return self.worst_gap is None

    def to_json(self):
        gap = self.worst_gap
        return {
            'r': self.r,
            'sampled': self.sampled,
            'counted': self.counted,
            'worst_gap': 'inf' if gap == math.inf else gap,
            'worst_set': self.worst_set,
        }


@dataclass
class DominationReport:
    dominant: str
    dominated: str
    family: str
    records: list
    slope: float = None
    growth: float = None
    verdict: str = INCONCLUSIVE
    slope_tol: float = DEFAULT_SLOPE_TOL
    gap_tol: float = DEFAULT_GAP_TOL
    label: str = EMPIRICAL_LABEL

    @property
    def dominates(self):
        return self.verdict == DOMINATES

    def gaps(self):
        return {record.r: record.worst_gap for record in self.records}

    def rows(self):
        return [(record.r, record.worst_gap, record.counted) for record in self.records]

    def to_json(self):
        return {
            'dominant': self.dominant,
            'dominated': self.dominated,
            'family': self.family,
            'records': [record.to_json() for record in self.records],
            'slope': self.slope,
            'growth': self.growth,
            'verdict': self.verdict,
            'slope_tol': self.slope_tol,
            'gap_tol': self.gap_tol,
            'label': self.label,
        }


def _worst_gap(mu, nu, sets):
    worst = None
    worst_set = ''
    counted = 0
    for query in sets:
        dominated = nu.evaluate(query)
        if dominated <= 0:
            continue
        counted += 1
        dominant = mu.evaluate(query)
        gap = math.inf if dominant == 0 else log2_fraction(dominated / dominant)
        if worst is None or gap > worst:
            worst = gap
            worst_set = str(query)
    return worst, worst_set, counted


def _fit_verdict(report):
    """
    Gaps below zero count as zero (mu already exceeds nu). Dominates when every sampled gap is
    finite, the tail slope of the gaps is at most slope_tol and the growth
    (last gap - min gap) / r_max is at most gap_tol.
    """
    measured = [record for record in report.records if not record.inconclusive]
    if not measured:
        report.verdict = INCONCLUSIVE
        return report
    if any(record.worst_gap == math.inf for record in measured):
        report.verdict = FAILS
        return report

    r_values = [record.r for record in measured]
    effective = [max(record.worst_gap, 0.0) for record in measured]
    tail = len(measured) // 2 if len(measured) >= 4 else 0
    if len(measured) - tail >= 2:
        report.slope = float(np.polyfit(r_values[tail:], effective[tail:], 1)[0])
    else:
        report.slope = 0.0
    r_max = r_values[-1]
    report.growth = (effective[-1] - min(effective)) / r_max if r_max > 0 else 0.0
    if report.slope <= report.slope_tol and report.growth <= report.gap_tol:
        report.verdict = DOMINATES
    else:
        report.verdict = FAILS
    return report


def _dominate(mu, nu, r_values, sampler, family, slope_tol, gap_tol):
    records = []
    for r in r_values:
        sets = sampler.sample(r)
        worst, worst_set, counted = _worst_gap(mu, nu, sets)
        record = ResolutionRecord(r, len(sets), counted, worst, worst_set)
        if record.inconclusive:
            logger.warning(f'Domination| {mu.name} vs {nu.name} on {family}: r={r} inconclusive')
        else:
            logger.debug(f'Domination| {mu.name} vs {nu.name} r={r} gap={worst} at {worst_set}')
        records.append(record)
    report = DominationReport(
        mu.name, nu.name, family, records, slope_tol=slope_tol, gap_tol=gap_tol
    )
    _fit_verdict(report)
    logger.info(f'Domination| {mu.name} over {nu.name} on {family}: {report.verdict}')
    return report


def dominate_on_cubes(
    mu, nu, r_values, sampler, slope_tol=DEFAULT_SLOPE_TOL, gap_tol=DEFAULT_GAP_TOL
):
    return _dominate(mu, nu, r_values, sampler, CUBES, slope_tol, gap_tol)


def dominate_on_balls(
    mu, nu, r_values, sampler, slope_tol=DEFAULT_SLOPE_TOL, gap_tol=DEFAULT_GAP_TOL
):
    return _dominate(mu, nu, r_values, sampler, BALLS, slope_tol, gap_tol)


@dataclass
class TwoSidedGap:
    measure: str
    records: list = field(default_factory=list)

    @property
    def max_gap(self):
        return max((gap for _, gap in self.records), default=0.0)

    @property
    def growth_ratio(self):
        r_max = self.records[-1][0] if self.records else 0
        return self.max_gap / r_max if r_max > 0 else 0.0

    def to_json(self):
        return {
            'measure': self.measure,
            'records': [{'r': r, 'gap': gap} for r, gap in self.records],
            'max_gap': self.max_gap,
            'growth_ratio': self.growth_ratio,
        }


def two_sided_ball_gap(mu, kappa_measure, r_values, sampler):
    """Per r, the larger of the worst gaps in both directions: beta(r) = min(beta_1, beta_2)."""
    result = TwoSidedGap(mu.name)
    for r in r_values:
        balls = sampler.sample(r)
        forward = _worst_gap(mu, kappa_measure, balls)[0]
        backward = _worst_gap(kappa_measure, mu, balls)[0]
        gaps = [gap for gap in (forward, backward) if gap is not None]
        if gaps:
            result.records.append((r, max(max(gaps), 0.0)))
    return result


@dataclass
class BallCubeEstimate:
    constant: float
    seed: int
    gaps: list
    outside_product_set: int = 0

    def to_json(self):
        return {
            'constant': self.constant,
            'seed': self.seed,
            'samples': len(self.gaps),
            'outside_product_set': self.outside_product_set,
            'gaps': [
                {'r': r, 'cube': str(cube), 'ball': str(ball), 'k_ball': k_ball, 'k_cube': k_cube}
                for r, cube, ball, k_ball, k_cube in self.gaps
            ],
        }


def _intersecting_ball(cube, rng):
    """A ball of the cube's radius with a random dyadic centre within half a side of the cube."""
    denominator = 1 << (cube.r + 3)
    while True:
        coords = tuple(
            Fraction(int(rng.integers(8 * m - 4, 8 * m + 12)), denominator) for m in cube.address
        )
        ball = Ball(RationalPoint(coords), cube.r)
        if ball_intersects_cube(ball, cube):
            return ball


def ball_cube_bound_check(support, r_values, samples, seed, guard=DEFAULT_GUARD):
    """
    Estimates the constant c with |K(B) - K(Q)| <= K_enc(r) + c over sampled r-dyadic cubes Q
    and intersecting balls B of radius 2^-r.
    """
    points = support.points()
    rng = np.random.default_rng(seed)
    gaps = []
    outside = 0
    constant = -math.inf
    for _ in range(samples):
        r = int(rng.choice(r_values))
        if points and rng.random() < 0.5:
            cube = cube_of_point(points[int(rng.integers(len(points)))], r)
        else:
            ranges = _bounding_addresses(points, r)
            cube = DyadicCube(r, tuple(int(rng.integers(low, high + 1)) for low, high in ranges))
        ball = _intersecting_ball(cube, rng)

        candidates = ball_candidates(ball, guard, support)
        k_ball, witness = min((k_of_point(point), point) for point in candidates)
        k_cube = k_of_cube(cube, guard, support)
        if cube.address not in neighbor_addresses(witness, r):
            outside += 1
        constant = max(constant, abs(k_ball - k_cube) - k_enc(r))
        gaps.append((r, cube, ball, k_ball, k_cube))

    logger.info(f'Ball-cube| seed={seed}: c={constant} over {samples} samples')
    return BallCubeEstimate(constant, seed, gaps, outside)


@dataclass(frozen=True)
class CounterexampleRecord:
    alpha: int
    size: int
    kappa: Fraction
    nu: Fraction
    ratio: Fraction
    gamma: float
    strict: bool

    def to_json(self):
        return {
            'alpha': self.alpha,
            'size': self.size,
            'kappa': str(self.kappa),
            'nu': str(self.nu),
            'ratio': str(self.ratio),
            'ratio_float': float(self.ratio),
            'gamma': self.gamma,
            'strict': self.strict,
        }


def kappa_not_global_counterexample(alpha, support, machine_constant=DEFAULT_MACHINE_CONSTANT):
    """E_alpha holds the support points with K > alpha; kappa(E_alpha) <= 2^-alpha < nu-scale."""
    chosen = FinitePointSet(point for point in support.points() if support.k_of(point) > alpha)
    if not chosen.points:
        raise EmptyCounterexampleError(f'No support point with K > {alpha} at this table budget')
    kappa_value = KappaMeasure(support).evaluate(chosen)
    nu_value = NuMeasure(support).evaluate(chosen)
    record = CounterexampleRecord(
        alpha,
        len(chosen.points),
        kappa_value,
        nu_value,
        kappa_value / nu_value,
        2 + 2 * math.log2(alpha + 2) + machine_constant,
        kappa_value < Fraction(1, 1 << alpha),
    )
    logger.info(f'Counterexample| alpha={alpha}: |E|={record.size} ratio={float(record.ratio)}')
    return record


def counterexample_holds(records):
    """
    Per record, in the given order: kappa(E_alpha) <= 2^-alpha and the kappa/nu ratio does not
    rise over the records with smaller alpha.
    """
    verdicts = []
    for record in records:
        bounded = record.kappa <= Fraction(1, 1 << record.alpha)
        earlier = [other.ratio for other in records if other.alpha < record.alpha]
        verdicts.append(bounded and all(record.ratio <= ratio for ratio in earlier))
    return verdicts


@dataclass
class LocalOptimalityVerdict:
    measure: str
    cube_report: DominationReport
    ball_report: DominationReport
    strongly_finite: bool

    @property
    def agree(self):
        return self.cube_report.verdict == self.ball_report.verdict

    @property
    def locally_optimal(self):
        return self.strongly_finite and self.cube_report.dominates and self.ball_report.dominates

    def to_json(self):
        return {
            'measure': self.measure,
            'locally_optimal': self.locally_optimal,
            'families_agree': self.agree,
            'strongly_finite': self.strongly_finite,
            'cubes': self.cube_report.to_json(),
            'balls': self.ball_report.to_json(),
            'label': EMPIRICAL_LABEL,
        }


def local_optimality_verdict(
    mu,
    kappa_measure,
    r_values,
    cube_sampler,
    ball_sampler,
    slope_tol=DEFAULT_SLOPE_TOL,
    gap_tol=DEFAULT_GAP_TOL,
    support_budget=64,
):
    strongly_finite = check_strong_finiteness(mu, support_budget).bounded
    cubes = dominate_on_cubes(mu, kappa_measure, r_values, cube_sampler, slope_tol, gap_tol)
    balls = dominate_on_balls(mu, kappa_measure, r_values, ball_sampler, slope_tol, gap_tol)
    verdict = LocalOptimalityVerdict(mu.name, cubes, balls, strongly_finite)
    if not verdict.agree:
        logger.warning(f'Local optimality| {mu.name}: cube and ball verdicts disagree')
    return verdict
