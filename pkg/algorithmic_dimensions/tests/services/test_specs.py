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
from unittest.case import TestCase

from algorithmic_dimensions import ConfigError
from algorithmic_dimensions.models.geometry import Ball, BinaryExpansionPoint, DyadicCube
from algorithmic_dimensions.models.support import EMPTY, EVERYTHING, Complement, FinitePointSet
from algorithmic_dimensions.services.specs import parse_point, parse_set
from algorithmic_dimensions.tests.models.builders import point


class PointSpecTests(TestCase):
    def test_rational(self):
        self.assertEqual(parse_point('1/3', 1), point(Fraction(1, 3)))
        self.assertEqual(parse_point('-1/2, 3', 2), point(Fraction(-1, 2), 3))

    def test_generators(self):
        self.assertEqual(parse_point('random:7', 2), BinaryExpansionPoint.pseudorandom(7, 2))
        self.assertEqual(parse_point('periodic:01', 1), BinaryExpansionPoint.periodic('01'))

    def test_errors(self):
        for spec, n in [('1/0', 1), ('x', 1), ('1,2', 1), ('random:abc', 1), ('periodic:2', 1)]:
            with self.assertRaises(ConfigError, msg=spec):
                parse_point(spec, n)


class SetSpecTests(TestCase):
    def test_kinds(self):
        self.assertEqual(parse_set('empty', 1), EMPTY)
        self.assertEqual(parse_set('all', 1), EVERYTHING)
        self.assertEqual(
            parse_set('point:0;1/3', 1), FinitePointSet({point(0), point(Fraction(1, 3))})
        )
        self.assertEqual(parse_set('complement:1', 1), Complement({point(1)}))
        self.assertEqual(parse_set('cube:3:1,-2', 2), DyadicCube(3, (1, -2)))
        self.assertEqual(parse_set('ball:4:1/3', 1), Ball(point(Fraction(1, 3)), 4))

    def test_errors(self):
        bad = ['cube:x:1', 'cube:-1:0', 'cube:2:1,2', 'cube:2:a', 'ball:2:1,2', 'square:1']
        for spec in bad:
            with self.assertRaises(ConfigError, msg=spec):
                parse_set(spec, 1)
