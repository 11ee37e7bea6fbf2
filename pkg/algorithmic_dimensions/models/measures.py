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

from algorithmic_dimensions.models.geometry import encode_point
from algorithmic_dimensions.models.support import FinitePointSet, is_finite_query

logger = logging.getLogger(__name__)


class OuterMeasure:
    name = 'measure'
    # False when a zero value may only mean the support is not enumerated that far
    exhaustive = False

    def evaluate(self, query):
        raise NotImplementedError()

    def singleton(self, point):
        return self.evaluate(FinitePointSet({point}))

    def support_points(self):
        """Support points in decreasing singleton weight."""
        raise NotImplementedError()

    def __repr__(self):
        return f'{type(self).__name__}({self.name})'


class KappaMeasure(OuterMeasure):
    name = 'kappa'

    def __init__(self, support):
        self.support = support

    def complexity(self, query):
        points = self.support.points_in(query)
        return min((self.support.k_of(point) for point in points), default=math.inf)

    def evaluate(self, query):
        k = self.complexity(query)
        return Fraction(0) if k == math.inf else Fraction(1, 1 << k)

    def support_points(self):
        return self.support.points_by_weight()


class NuMeasure(OuterMeasure):
    name = 'nu'

    def __init__(self, support):
        self.support = support

    def evaluate(self, query):
        points = self.support.points_in(query)
        return sum((self.support.weight(point) for point in points), Fraction(0))

    def support_points(self):
        return self.support.points_by_weight()


class AlgorithmicProbabilityMeasure(OuterMeasure):
    name = 'm'

    def __init__(self, support):
        self.support = support

    def evaluate(self, query):
        return sum(
            (self.support.algorithmic_prob(point) for point in self.support.points_in(query)),
            Fraction(0),
        )

    def support_points(self):
        return sorted(
            self.support.points_by_weight(),
            key=lambda point: (-self.support.algorithmic_prob(point), point),
        )


class ScaledMeasure(OuterMeasure):
    def __init__(self, base, factor):
        if Fraction(factor) <= 0:
            raise ValueError(f'Scale factor must be positive, got {factor}')
        self.base = base
        self.factor = Fraction(factor)
        self.name = f'{base.name}*{self.factor}'

    def evaluate(self, query):
        return self.factor * self.base.evaluate(query)

    def support_points(self):
        return self.base.support_points()


class ZeroMeasure(OuterMeasure):
    name = 'zero'
    exhaustive = True

    def evaluate(self, query):
        return Fraction(0)

    def support_points(self):
        return []


def even_half_length(point):
    return (len(encode_point(point)) // 2) % 2 == 0


class RestrictedMeasure(OuterMeasure):
    """A measure built on the sub-support selected by a point predicate."""

    def __init__(self, base_class, support, predicate, name):
        self.base = base_class(_FilteredSupport(support, predicate))
        self.name = name

    def evaluate(self, query):
        return self.base.evaluate(query)

    def support_points(self):
        return self.base.support_points()


class _FilteredSupport:
    def __init__(self, support, predicate):
        self._support = support
        self._predicate = predicate

    def __getattr__(self, attribute):
        return getattr(self._support, attribute)

    def points_in(self, query):
        return [point for point in self._support.points_in(query) if self._predicate(point)]

    def points_by_weight(self):
        return [point for point in self._support.points_by_weight() if self._predicate(point)]


class ExampleMeasure(OuterMeasure):
    """
    1 - 2^-|E| on finite sets and 2 on every set holding infinitely many rationals. Supported on
    the rationals yet every singleton weighs 1/2, so it is not strongly finite.
    """

    name = 'example'

    def __init__(self, support):
        self.support = support

    def evaluate(self, query):
        if not is_finite_query(query):
            return Fraction(2)
        return 1 - Fraction(1, 1 << len(query.points))

    def support_points(self):
        return self.support.points_by_weight()


def kappa(query, support):
    return KappaMeasure(support).evaluate(query)


def nu(query, support):
    return NuMeasure(support).evaluate(query)


def m_measure(query, support):
    return AlgorithmicProbabilityMeasure(support).evaluate(query)


@dataclass(frozen=True)
class SetFamily:
    """Members together with a query for exactly their union."""

    members: tuple
    union: object


@dataclass
class AxiomReport:
    measure: str
    families: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.violations

    def to_json(self):
        return {
            'measure': self.measure,
            'families': self.families,
            'passed': self.passed,
            'violations': self.violations,
        }


def check_outer_measure_axioms(measure, families):
    report = AxiomReport(measure.name)
    empty = measure.evaluate(FinitePointSet())
    if empty != 0:
        report.violations.append({'axiom': 'empty', 'value': str(empty)})

    for index, family in enumerate(families):
        report.families += 1
        total = measure.evaluate(family.union)
        parts = [measure.evaluate(member) for member in family.members]
        for member, value in zip(family.members, parts):
            if value > total:
                report.violations.append(
                    {
                        'axiom': 'monotone',
                        'family': index,
                        'set': str(member),
                        'value': str(value),
                        'superset_value': str(total),
                    }
                )
        if total > sum(parts, Fraction(0)):
            report.violations.append(
                {
                    'axiom': 'subadditive',
                    'family': index,
                    'union_value': str(total),
                    'sum': str(sum(parts, Fraction(0))),
                }
            )

    if report.violations:
        logger.warning(f'Axioms| {measure.name}: {len(report.violations)} violations')
    else:
        logger.info(f'Axioms| {measure.name}: {report.families} families passed')
    return report


def random_families(points, count, seed, max_members=3, max_size=4):
    """Seeded families of finite subsets of points, each paired with its exact union."""
    points = sorted(points)
    rng = np.random.default_rng([seed, len(points)])
    families = []
    for _ in range(count):
        members = []
        for _ in range(int(rng.integers(1, max_members + 1))):
            size = int(rng.integers(0, min(max_size, len(points)) + 1))
            chosen = rng.choice(len(points), size=size, replace=False) if size else []
            members.append(FinitePointSet(points[int(i)] for i in chosen))
        union = FinitePointSet(frozenset().union(*(member.points for member in members)))
        families.append(SetFamily(tuple(members), union))
    return families


def cube_families(cubes):
    """Each cube covered by its children."""
    return [SetFamily(tuple(cube.children()), cube) for cube in cubes]


@dataclass
class StrongFinitenessReport:
    measure: str
    partial_sums: list

    @property
    def bounded(self):
        return all(value <= 1 for value in self.partial_sums)

    def to_json(self):
        return {
            'measure': self.measure,
            'bounded_by_one': self.bounded,
            'partial_sums': [str(value) for value in self.partial_sums],
        }


def check_strong_finiteness(measure, budget):
    total = Fraction(0)
    partial_sums = []
    for point in measure.support_points()[:budget]:
        total += measure.singleton(point)
        partial_sums.append(total)
    report = StrongFinitenessReport(measure.name, partial_sums)
    logger.info(
        f'Strong finiteness| {measure.name}: {len(partial_sums)} points, '
        f'bounded={report.bounded}'
    )
    return report

