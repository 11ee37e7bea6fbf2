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
import math
from fractions import Fraction
from unittest.case import TestCase

from algorithmic_dimensions.models.dimension import (
    SUPPORT_EXHAUSTED,
    TRUE_ZERO,
    DimensionProfile,
    InsufficientDataError,
    UndefinedDimensionError,
    estimate_slopes,
    global_dims,
    k_profile,
    local_dim_profile,
    resolutions,
)
from algorithmic_dimensions.models.geometry import BinaryExpansionPoint
from algorithmic_dimensions.models.measures import KappaMeasure, ZeroMeasure
from algorithmic_dimensions.tests.models.builders import (
    CenterMeasure,
    cached_support,
    fake_support,
    point,
)


class ProfileTests(TestCase):
    def test_resolutions(self):
        self.assertEqual(resolutions(2, 10, 4), [2, 6, 10])
        for bad in [(-1, 4, 1), (5, 4, 1), (0, 4, 0)]:
            with self.assertRaises(ValueError):
                resolutions(*bad)

    def test_resolutions_must_increase(self):
        with self.assertRaises(ValueError):
            DimensionProfile('broken', [(3, 1.0), (3, 2.0)])

    def test_linear_profile_slopes(self):
        profile = DimensionProfile('line', [(r, 0.5 * r + 3) for r in range(32, 49)])
        estimate = estimate_slopes(profile, 32)
        self.assertAlmostEqual(estimate.regression_slope, 0.5)
        self.assertAlmostEqual(estimate.lower, 0.5 + 3 / 48)
        self.assertAlmostEqual(estimate.upper, 0.5 + 3 / 32)
        self.assertEqual(estimate.samples, 17)
        self.assertAlmostEqual(estimate.intercept, 3)
        self.assertAlmostEqual(estimate.corrected_lower, 0.5)
        self.assertAlmostEqual(estimate.corrected_upper, 0.5)

    def test_additive_overhead_is_removed(self):
        profile = DimensionProfile('framed', [(r, r + 60) for r in resolutions(68, 124, 8)])
        estimate = estimate_slopes(profile, 68)
        self.assertAlmostEqual(estimate.lower, 1 + 60 / 124)
        self.assertAlmostEqual(estimate.upper, 1 + 60 / 68)
        self.assertAlmostEqual(estimate.corrected_lower, 1)
        self.assertAlmostEqual(estimate.corrected_upper, 1)

    def test_short_tail(self):
        profile = DimensionProfile('short', [(0, 1.0), (1, 2.0), (2, 3.0)])
        with self.assertRaises(InsufficientDataError):
            estimate_slopes(profile, 0)

    def test_measure_profile(self):
        profile = local_dim_profile(CenterMeasure({point(0): 1}), point(0), resolutions(1, 8))
        self.assertEqual(profile.values(), list(range(1, 9)))
        self.assertEqual(profile.flags, {})

    def test_zero_mass_flags(self):
        zero = local_dim_profile(ZeroMeasure(), point(0), [1, 2, 3])
        self.assertEqual(set(zero.flags.values()), {TRUE_ZERO})
        self.assertIsNone(zero.to_json()['samples'][0]['value'])
        self.assertTrue(math.isnan(estimate_slopes(zero, 1).regression_slope))

        far = local_dim_profile(KappaMeasure(fake_support()), point(5), [1, 2, 3])
        self.assertEqual(set(far.flags.values()), {SUPPORT_EXHAUSTED})


class ComplexityProfileTests(TestCase):
    def test_origin(self):
        profile = k_profile(point(0), resolutions(1, 12))
        self.assertEqual(profile.values(), [9] * 12)
        self.assertLessEqual(estimate_slopes(profile, 4).upper, 9 / 4)

    def test_periodic_point_has_dimension_zero(self):
        periodic = BinaryExpansionPoint.periodic('01')
        profile = k_profile(periodic, range(64, 81, 4), support=cached_support(18))
        self.assertTrue(all(value <= 15 for value in profile.values()))
        self.assertLessEqual(estimate_slopes(profile, 64).upper, 0.25)

    def test_pseudorandom_points_have_dimension_one(self):
        for seed in [1, 2, 3]:
            with self.subTest(seed=seed):
                generator = BinaryExpansionPoint.pseudorandom(seed)
                profile = k_profile(generator, resolutions(68, 124, 8))
                estimate = estimate_slopes(profile, 68)
                self.assertGreaterEqual(estimate.lower, 0.75)
                self.assertGreaterEqual(estimate.regression_slope, 0.75)
                self.assertLessEqual(estimate.regression_slope, 1.35)
                self.assertGreaterEqual(estimate.corrected_lower, 0.75)
                self.assertLessEqual(estimate.corrected_upper, 1.35)


class GlobalDimensionTests(TestCase):
    def test_two_atoms(self):
        measure = CenterMeasure({point(0): 1, point(Fraction(1, 2)): 2})
        atoms = [(point(0), Fraction(1, 2)), (point(Fraction(1, 2)), Fraction(1, 2))]
        dimensions = global_dims(measure, atoms, resolutions(4, 12), 4)
        self.assertEqual(dimensions.values(), (1, 2, 1, 2))
        self.assertEqual(dimensions.atoms, 2)

    def test_negligible_atoms_are_ignored(self):
        measure = CenterMeasure({point(0): 1, point(Fraction(1, 2)): 2})
        atoms = [(point(0), 1), (point(Fraction(1, 2)), Fraction(1, 10 ** 9))]
        dimensions = global_dims(measure, atoms, resolutions(4, 12), 4, epsilon=1e-6)
        self.assertEqual(dimensions.values(), (1, 1, 1, 1))

    def test_no_atoms(self):
        with self.assertRaises(UndefinedDimensionError):
            global_dims(ZeroMeasure(), [(point(0), 0)], [1, 2, 3], 1)

    def test_kappa_is_trivial(self):
        support = cached_support(18)
        kappa = KappaMeasure(support)
        atoms = [(value, kappa.singleton(value)) for value in support.points()]
        dimensions = global_dims(kappa, atoms, resolutions(128, 192, 32), 128)
        self.assertTrue(all(value <= 0.15 for value in dimensions.values()))
