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
import bisect
import logging
from dataclasses import dataclass
from fractions import Fraction

from algorithmic_dimensions.models.complexity import (
    DEFAULT_GUARD,
    ball_candidates,
    cube_candidates,
    k_of_point,
)
from algorithmic_dimensions.models.geometry import (
    Ball,
    DyadicCube,
    PointDecodeError,
    decode_point,
    encode_point,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FinitePointSet:
    points: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, 'points', frozenset(self.points))

    def contains(self, point):
        return point in self.points

    def __str__(self):
        return '{' + ', '.join(str(point) for point in sorted(self.points)) + '}'


@dataclass(frozen=True)
class Complement:
    """Everything except a finite set of points."""

    excluded: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, 'excluded', frozenset(self.excluded))

    def contains(self, point):
        return point not in self.excluded

    def __str__(self):
        if not self.excluded:
            return 'R^n'
        return 'R^n \\ ' + str(FinitePointSet(self.excluded))


EMPTY = FinitePointSet()
EVERYTHING = Complement()


def is_finite_query(query):
    return isinstance(query, FinitePointSet)


class PointIndex:
    """Points sorted lexicographically, queried by a closed range on the first coordinate."""

    def __init__(self, points):
        self._points = sorted(set(points))
        self._keys = [point.coords[0] for point in self._points]

    def __len__(self):
        return len(self._points)

    def __iter__(self):
        return iter(self._points)

    def in_range(self, low, high):
        start = bisect.bisect_left(self._keys, low)
        stop = bisect.bisect_right(self._keys, high)
        return self._points[start:stop]


class TableSupport:
    """Rational points whose encodings a complexity table has seen halting programs for."""

    def __init__(self, table, n):
        self.table = table
        self.n = n
        points = []
        for word in table.outputs():
            try:
                points.append(decode_point(word, n))
            except PointDecodeError:
                continue
        self._index = PointIndex(points)
        self._k = {point: k_of_point(point) for point in self._index}
        self._by_weight = sorted(self._index, key=lambda point: (self._k[point], point))
        logger.info(f'Support| {len(self._index)} points in n={n} from {len(table)} outputs')

    def __len__(self):
        return len(self._index)

    def __contains__(self, point):
        return point in self._k

    def points(self):
        return list(self._index)

    def points_by_weight(self):
        return list(self._by_weight)

    def k_of(self, point):
        known = self._k.get(point)
        return k_of_point(point) if known is None else known

    def weight(self, point):
        return Fraction(1, 1 << self.k_of(point))

    def algorithmic_prob(self, point):
        return self.table.algorithmic_prob(encode_point(point))

    def min_len(self, point):
        return self.table.min_length(encode_point(point))

    def points_in(self, query):
        if isinstance(query, FinitePointSet):
            return sorted(query.points)
        if isinstance(query, Complement):
            return [point for point in self._index if point not in query.excluded]
        if isinstance(query, DyadicCube):
            lower, upper = query.lower()[0], query.upper()[0]
            return [point for point in self._index.in_range(lower, upper) if query.contains(point)]
        if isinstance(query, Ball):
            if query.center.is_rational:
                low = high = query.center.coords[0]
            else:
                low, high = query.center.approximation(2 * query.r + 8)[0]
            candidates = self._index.in_range(low - query.radius, high + query.radius)
            return [point for point in candidates if query.contains(point)]
        raise TypeError(f'Unsupported set query {query!r}')


class CandidateSupport:
    """Table points plus the dyadic candidate grids used by the precision complexity K_r."""

    def __init__(self, table_support, guard=DEFAULT_GUARD):
        self.table_support = table_support
        self.guard = guard

    @property
    def n(self):
        return self.table_support.n

    def __len__(self):
        return len(self.table_support)

    def points_by_weight(self):
        return self.table_support.points_by_weight()

    def k_of(self, point):
        return self.table_support.k_of(point)

    def weight(self, point):
        return self.table_support.weight(point)

    def algorithmic_prob(self, point):
        return self.table_support.algorithmic_prob(point)

    def min_len(self, point):
        return self.table_support.min_len(point)

    def points_in(self, query):
        if isinstance(query, Ball):
            return ball_candidates(query, self.guard, self.table_support)
        if isinstance(query, DyadicCube):
            return cube_candidates(query, self.guard, self.table_support)
        return self.table_support.points_in(query)
