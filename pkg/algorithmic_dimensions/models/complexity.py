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

from algorithmic_dimensions.models.geometry import (
    Ball,
    encode_point,
    grid_points_in_ball,
    grid_points_in_cube,
)
from algorithmic_dimensions.models.machine import _gamma, exact_k

logger = logging.getLogger(__name__)

DEFAULT_GUARD = 2


def k_of_point(point):
    return exact_k(encode_point(point))


def k_of_set(points):
    """Least complexity over the points, +inf for the empty set."""
    return min((k_of_point(point) for point in points), default=math.inf)


def k_enc(r):
    return exact_k(_gamma(r + 1))


def ball_candidates(ball, guard=DEFAULT_GUARD, support=None):
    """
    Candidate rationals for K_r: the 2^-(r+guard) grid inside the ball (which holds every coarser
    dyadic level too), the centre when rational and the support points inside the ball.
    """
    candidates = set(grid_points_in_ball(ball, ball.r + guard))
    if ball.center.is_rational:
        candidates.add(ball.center)
    if support is not None:
        candidates.update(support.points_in(ball))
    return sorted(candidates)


def cube_candidates(cube, guard=DEFAULT_GUARD, support=None):
    # One level finer than balls of the same r, so inscribed balls never see more candidates.
    candidates = set(grid_points_in_cube(cube, cube.r + guard + 1))
    if support is not None:
        candidates.update(support.points_in(cube))
    return sorted(candidates)


def _minimum_with_witness(candidates):
    best = math.inf
    witness = None
    for point in candidates:
        value = k_of_point(point)
        if value < best:
            best = value
            witness = point
    return best, witness


def precision_witness(point, r, guard=DEFAULT_GUARD, support=None):
    """(K_r(point), q) with q the first candidate attaining the minimum."""
    best, witness = _minimum_with_witness(ball_candidates(Ball(point, r), guard, support))
    if witness is None:
        raise ValueError(f'No candidate rational near {point} at r={r}')
    return best, witness


def k_at_precision(point, r, guard=DEFAULT_GUARD, support=None):
    return precision_witness(point, r, guard, support)[0]


def k_of_cube(cube, guard=DEFAULT_GUARD, support=None):
    return _minimum_with_witness(cube_candidates(cube, guard, support))[0]


def k_of_ball(ball, guard=DEFAULT_GUARD, support=None):
    return _minimum_with_witness(ball_candidates(ball, guard, support))[0]
