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
from fractions import Fraction
from functools import lru_cache

from algorithmic_dimensions.models.geometry import RationalPoint
from algorithmic_dimensions.models.measures import OuterMeasure
from algorithmic_dimensions.models.staged import BUILTIN_STAGED, MeasureRegistry
from algorithmic_dimensions.models.support import (
    Complement,
    FinitePointSet,
    PointIndex,
    TableSupport,
)
from algorithmic_dimensions.models.table import build_table

TEST_STEP_BUDGET = 4096


@lru_cache(maxsize=None)
def cached_table(max_length, step_budget=TEST_STEP_BUDGET):
    return build_table(max_length, step_budget)


@lru_cache(maxsize=None)
def cached_support(max_length, n=1):
    return TableSupport(cached_table(max_length), n)


def point(*values):
    return RationalPoint(tuple(Fraction(value) for value in values))


class FakeSupport:
    """A support with hand-picked complexities and masses."""

    def __init__(self):
        self._k = {}
        self._mass = {}
        self._min_len = {}

    def add(self, value, k, mass=None, min_len=None):
        self._k[value] = k
        self._mass[value] = Fraction(1, 1 << k) if mass is None else Fraction(mass)
        self._min_len[value] = k if min_len is None else min_len
        return self

    @property
    def n(self):
        return 1

    def points(self):
        return sorted(self._k)

    def points_by_weight(self):
        return sorted(self._k, key=lambda value: (self._k[value], value))

    def k_of(self, value):
        return self._k[value]

    def weight(self, value):
        return Fraction(1, 1 << self._k[value])

    def algorithmic_prob(self, value):
        return self._mass.get(value, Fraction(0))

    def min_len(self, value):
        return self._min_len.get(value)

    def points_in(self, query):
        if isinstance(query, FinitePointSet):
            return sorted(query.points)
        if isinstance(query, Complement):
            return [value for value in self.points() if value not in query.excluded]
        return [value for value in PointIndex(self._k) if query.contains(value)]


def fake_support(count=6, first_k=9):
    support = FakeSupport()
    for index in range(count):
        support.add(point(Fraction(index, count)), first_k + index)
    return support


class RegistryBuilder:
    def __init__(self, support):
        self.support = support
        self._entries = []

    def add(self, kind, **parameters):
        self._entries.append(BUILTIN_STAGED[kind](self.support, **parameters))
        return self

    def add_staged(self, staged):
        self._entries.append(staged)
        return self

    def with_all_fixtures(self):
        return (
            self.add('kappa', cost='linear')
            .add('nu', cost='linear')
            .add('m', cost='quadratic')
            .add('geometric', cost='exponential', horizon=12)
            .add('square_count', cost='linear')
            .add('example', cost='linear')
        )

    def create_registry(self):
        return MeasureRegistry(self._entries)


class CenterMeasure(OuterMeasure):
    """Assigns each ball the mass 2^(-slope * r) chosen by its centre."""

    name = 'center'

    def __init__(self, slopes):
        self.slopes = slopes

    def evaluate(self, query):
        slope = self.slopes[query.center]
        return Fraction(1, 1 << (slope * query.r))

    def support_points(self):
        return sorted(self.slopes)
