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
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from algorithmic_dimensions import AlgorithmicDimensionsError
from algorithmic_dimensions.models.machine import ParseError, _gamma, _raw, gamma_decode
from algorithmic_dimensions.utils import ceil_log2_sqrt, fraction_from_json, fraction_to_json

logger = logging.getLogger(__name__)

MAX_DIMENSION = 4
NEIGHBOR_OFFSETS = (-2, -1, 0, 1, 2)
RANDOM_BLOCK_BITS = 64


class PointDecodeError(AlgorithmicDimensionsError):
    pass


def _check_dimension(n):
    if not 1 <= n <= MAX_DIMENSION:
        raise ValueError(f'Dimension must be within 1..{MAX_DIMENSION}, got {n}')


def _check_resolution(r):
    if r < 0:
        raise ValueError(f'Resolution must be non-negative, got {r}')


@dataclass(frozen=True, order=True)
class RationalPoint:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, 'coords', tuple(Fraction(value) for value in self.coords))
        _check_dimension(len(self.coords))

    @staticmethod
    def of(*values):
        return RationalPoint(tuple(values))

    @property
    def n(self):
        return len(self.coords)

    @property
    def is_rational(self):
        return True

    def to_json(self):
        return {'kind': 'rational', 'coords': [fraction_to_json(value) for value in self.coords]}

    @staticmethod
    def from_json(raw):
        return RationalPoint(tuple(fraction_from_json(value) for value in raw['coords']))

    def __str__(self):
        return '(' + ', '.join(str(value) for value in self.coords) + ')'


@lru_cache(maxsize=4096)
def _pseudorandom_block(seed, coordinate, block):
    rng = np.random.default_rng([seed, coordinate, block])
    return ''.join('1' if bit else '0' for bit in rng.integers(0, 2, size=RANDOM_BLOCK_BITS))


@dataclass(frozen=True)
class PseudorandomBits:
    seed: int
    coordinate: int = 0

    def prefix(self, count):
        blocks = (count + RANDOM_BLOCK_BITS - 1) // RANDOM_BLOCK_BITS
        bits = ''.join(
            _pseudorandom_block(self.seed, self.coordinate, block) for block in range(blocks)
        )
        return bits[:count]

    def describe(self):
        return f'random:{self.seed}'


@dataclass(frozen=True)
class PeriodicBits:
    pattern: str

    def __post_init__(self):
        if not self.pattern or self.pattern.strip('01'):
            raise ValueError(f'Periodic pattern must be a non-empty bit string: "{self.pattern}"')

    def prefix(self, count):
        return (self.pattern * (count // len(self.pattern) + 1))[:count]

    def describe(self):
        return f'periodic:{self.pattern}'


@dataclass(frozen=True)
class BinaryExpansionPoint:
    """
    A point whose i-th coordinate is integer_parts[i] + 0.b1b2b3... in binary, the bits being
    read lazily from sources[i]. Only finite prefixes are ever inspected.
    """

    integer_parts: tuple
    sources: tuple

    def __post_init__(self):
        _check_dimension(len(self.integer_parts))
        if len(self.sources) != len(self.integer_parts):
            raise ValueError('One bit source per coordinate is required')

    @staticmethod
    def pseudorandom(seed, n=1):
        return BinaryExpansionPoint((0,) * n, tuple(PseudorandomBits(seed, i) for i in range(n)))

    @staticmethod
    def periodic(pattern, n=1):
        return BinaryExpansionPoint((0,) * n, (PeriodicBits(pattern),) * n)

    @property
    def n(self):
        return len(self.integer_parts)

    @property
    def is_rational(self):
        return False

    def fractional_prefix(self, coordinate, count):
        return self.sources[coordinate].prefix(count)

    def approximation(self, precision):
        """Per coordinate (low, high) with low <= x_i <= high and high - low = 2^-precision."""
        scale = 1 << precision
        intervals = []
        for integer, source in zip(self.integer_parts, self.sources):
            bits = source.prefix(precision)
            low = integer + Fraction(int(bits, 2) if bits else 0, scale)
            intervals.append((low, low + Fraction(1, scale)))
        return tuple(intervals)

    def to_json(self):
        return {
            'kind': 'expansion',
            'integer_parts': list(self.integer_parts),
            'sources': [source.describe() for source in self.sources],
        }

    def __str__(self):
        return '<' + ', '.join(source.describe() for source in self.sources) + '>'


@dataclass(frozen=True, order=True)
class DyadicCube:
    r: int
    address: tuple

    def __post_init__(self):
        object.__setattr__(self, 'address', tuple(int(value) for value in self.address))
        _check_resolution(self.r)
        _check_dimension(len(self.address))

    @property
    def n(self):
        return len(self.address)

    @property
    def side(self):
        return Fraction(1, 1 << self.r)

    def lower(self):
        return tuple(m * self.side for m in self.address)

    def upper(self):
        return tuple((m + 1) * self.side for m in self.address)

    def center(self):
        return RationalPoint(tuple(Fraction(2 * m + 1, 1 << (self.r + 1)) for m in self.address))

    def contains(self, point):
        return cube_of_point(point, self.r) == self

    def parent(self):
        if self.r == 0:
            raise ValueError('Resolution 0 cubes have no dyadic parent')
        return DyadicCube(self.r - 1, tuple(m >> 1 for m in self.address))

    def children(self):
        halves = [(2 * m, 2 * m + 1) for m in self.address]
        return [DyadicCube(self.r + 1, address) for address in itertools.product(*halves)]

    def to_json(self):
        return {'r': self.r, 'address': [str(m) for m in self.address]}

    def __str__(self):
        return f'Q^({self.r})[' + ','.join(str(m) for m in self.address) + ']'


@dataclass(frozen=True)
class Ball:
    """Open Euclidean ball of radius 2^-r."""

    center: object
    r: int

    def __post_init__(self):
        _check_resolution(self.r)

    @property
    def n(self):
        return self.center.n

    @property
    def radius(self):
        return Fraction(1, 1 << self.r)

    def contains(self, point):
        return in_open_ball(point, self.center, self.r)

    def to_json(self):
        return {'r': self.r, 'center': self.center.to_json()}

    def __str__(self):
        return f'B({self.center}, 2^-{self.r})'


def encode_point(point):
    chunks = []
    for value in point.coords:
        chunks.append('1' if value < 0 else '0')
        chunks.append(_gamma(abs(value.numerator) + 1))
        chunks.append(_gamma(value.denominator))
    return ''.join(chunks)


def decode_point(bits, n):
    """Inverse of encode_point on its image; any other string raises PointDecodeError."""
    _check_dimension(n)
    bits = _raw(bits)
    position = 0
    coords = []
    try:
        for _ in range(n):
            if position >= len(bits):
                raise PointDecodeError(f'Missing sign bit at {position}')
            negative = bits[position] == '1'
            magnitude, position = gamma_decode(bits, position + 1)
            denominator, position = gamma_decode(bits, position)
            numerator = magnitude - 1
            if math.gcd(numerator, denominator) != 1 or (negative and numerator == 0):
                raise PointDecodeError(f'Non-canonical coordinate {numerator}/{denominator}')
            coords.append(Fraction(-numerator if negative else numerator, denominator))
    except ParseError as e:
        raise PointDecodeError(str(e)) from e
    if position != len(bits):
        raise PointDecodeError(f'Trailing bits after {n} coordinates')
    return RationalPoint(tuple(coords))


def _floor_scaled(point, r):
    if point.is_rational:
        return tuple(math.floor(value * (1 << r)) for value in point.coords)
    address = []
    for coordinate, integer in enumerate(point.integer_parts):
        bits = point.fractional_prefix(coordinate, r)
        address.append(integer * (1 << r) + (int(bits, 2) if bits else 0))
    return tuple(address)


def cube_of_point(point, r):
    _check_resolution(r)
    return DyadicCube(r, _floor_scaled(point, r))


def _interval_square(low, high):
    if low >= 0:
        return low * low, high * high
    if high <= 0:
        return high * high, low * low
    return Fraction(0), max(low * low, high * high)


def squared_distance_bounds(point, center, precision):
    """Bounds on |point - center|^2 with center approximated at the given precision."""
    if center.is_rational:
        exact = sum((a - b) ** 2 for a, b in zip(point.coords, center.coords))
        return exact, exact
    lower = Fraction(0)
    upper = Fraction(0)
    for value, (low, high) in zip(point.coords, center.approximation(precision)):
        square_low, square_high = _interval_square(value - high, value - low)
        lower += square_low
        upper += square_high
    return lower, upper


def in_open_ball(point, center, r):
    if point.n != center.n:
        raise ValueError(f'Dimension mismatch {point.n} != {center.n}')
    bound = Fraction(1, 1 << (2 * r))
    if center.is_rational:
        return squared_distance_bounds(point, center, 0)[0] < bound

    precision = 2 * r + 8
    limit = 4 * r + 64
    while True:
        lower, upper = squared_distance_bounds(point, center, precision)
        if upper < bound:
            return True
        if lower >= bound:
            return False
        if precision >= limit:
            break
        precision = min(2 * precision, limit)
    logger.debug(f'Uncertified| {point} vs {center} at r={r}, excluded')
    return False


def _require_rational_center(ball):
    if not ball.center.is_rational:
        raise TypeError(f'Exact incidence needs a rational centre, got {ball.center}')


def ball_intersects_cube(ball, cube):
    _require_rational_center(ball)
    distance = Fraction(0)
    for c, a, b in zip(ball.center.coords, cube.lower(), cube.upper()):
        if c < a:
            distance += (a - c) ** 2
        elif c > b:
            distance += (c - b) ** 2
    # Closure distance < radius means points of the half-open box come arbitrarily close too.
    return distance < ball.radius ** 2


def cube_subset_of_ball(cube, ball):
    _require_rational_center(ball)
    farthest = Fraction(0)
    attained = True
    for c, a, b in zip(ball.center.coords, cube.lower(), cube.upper()):
        closed_side = (a - c) ** 2
        open_side = (b - c) ** 2
        farthest += max(closed_side, open_side)
        if open_side > closed_side:
            attained = False
    bound = ball.radius ** 2
    return farthest < bound or (farthest == bound and not attained)


def ball_subset_of_cube(ball, cube):
    _require_rational_center(ball)
    radius = ball.radius
    return all(
        c - radius >= a and c + radius <= b
        for c, a, b in zip(ball.center.coords, cube.lower(), cube.upper())
    )


def inner_cube_of_point(point, r):
    """The finer cube around point that lies inside B(point, 2^-r)."""
    return cube_of_point(point, r + ceil_log2_sqrt(point.n))


def neighbor_addresses(point, r):
    base = _floor_scaled(point, r)
    return list(itertools.product(*[[m + d for d in NEIGHBOR_OFFSETS] for m in base]))


def neighbor_product_set(point, r):
    scale = Fraction(1, 1 << r)
    return [
        RationalPoint(tuple(m * scale for m in address))
        for address in neighbor_addresses(point, r)
    ]


def _coordinate_range(center, coordinate, radius, level):
    scale = 1 << level
    if center.is_rational:
        low = high = center.coords[coordinate]
    else:
        low, high = center.approximation(2 * level + 8)[coordinate]
    first = math.floor((low - radius) * scale)
    last = math.ceil((high + radius) * scale)
    return range(first, last + 1)


def grid_points_in_ball(ball, level):
    """All points of the 2^-level grid inside the open ball, in lexicographic order."""
    _check_resolution(level)
    scale = Fraction(1, 1 << level)
    ranges = [
        _coordinate_range(ball.center, coordinate, ball.radius, level)
        for coordinate in range(ball.n)
    ]
    points = []
    for address in itertools.product(*ranges):
        point = RationalPoint(tuple(m * scale for m in address))
        if ball.contains(point):
            points.append(point)
    return points


def grid_points_in_cube(cube, level):
    if level < cube.r:
        raise ValueError(f'Grid level {level} is coarser than the cube resolution {cube.r}')
    shift = level - cube.r
    scale = Fraction(1, 1 << level)
    ranges = [range(m << shift, (m + 1) << shift) for m in cube.address]
    return [
        RationalPoint(tuple(k * scale for k in address))
        for address in itertools.product(*ranges)
    ]
