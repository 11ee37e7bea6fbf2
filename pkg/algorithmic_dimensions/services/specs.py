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

from algorithmic_dimensions import ConfigError
from algorithmic_dimensions.models.geometry import (
    Ball,
    BinaryExpansionPoint,
    DyadicCube,
    RationalPoint,
)
from algorithmic_dimensions.models.support import EMPTY, EVERYTHING, Complement, FinitePointSet


def _rational_point(text, n):
    try:
        coords = tuple(Fraction(part.strip()) for part in text.split(','))
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigError(f'Bad rational point "{text}": {e}') from e
    if len(coords) != n:
        raise ConfigError(f'Point "{text}" has {len(coords)} coordinates, expected {n}')
    return RationalPoint(coords)


def _points(text, n):
    return frozenset(_rational_point(part, n) for part in text.split(';') if part.strip())


def parse_point(spec, n):
    """'1/3,0', 'random:SEED' or 'periodic:BITS'."""
    kind, _, rest = spec.partition(':')
    if kind == 'random':
        try:
            return BinaryExpansionPoint.pseudorandom(int(rest), n)
        except ValueError as e:
            raise ConfigError(f'Bad seed in "{spec}"') from e
    if kind == 'periodic':
        try:
            return BinaryExpansionPoint.periodic(rest, n)
        except ValueError as e:
            raise ConfigError(str(e)) from e
    return _rational_point(spec, n)


def parse_set(spec, n):
    """
    'empty', 'all', 'point:P;P', 'complement:P;P', 'cube:R:M1,M2' or 'ball:R:X1,X2', where each
    P is a comma separated rational point.
    """
    kind, _, rest = spec.partition(':')
    if kind == 'empty':
        return EMPTY
    if kind == 'all':
        return EVERYTHING
    if kind == 'point':
        return FinitePointSet(_points(rest, n))
    if kind == 'complement':
        return Complement(_points(rest, n))
    if kind in ('cube', 'ball'):
        resolution, _, location = rest.partition(':')
        try:
            r = int(resolution)
        except ValueError as e:
            raise ConfigError(f'Bad resolution in "{spec}"') from e
        if r < 0:
            raise ConfigError(f'Negative resolution in "{spec}"')
        if kind == 'ball':
            return Ball(_rational_point(location, n), r)
        try:
            address = tuple(int(part) for part in location.split(','))
        except ValueError as e:
            raise ConfigError(f'Bad cube address in "{spec}"') from e
        if len(address) != n:
            raise ConfigError(f'Cube address "{location}" needs {n} integers')
        return DyadicCube(r, address)
    raise ConfigError(f'Unknown set "{spec}"')
