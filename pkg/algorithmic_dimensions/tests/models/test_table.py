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
import os
import tempfile
from fractions import Fraction
from unittest.case import TestCase

from algorithmic_dimensions import BudgetError
from algorithmic_dimensions.models.machine import BitString, exact_k
from algorithmic_dimensions.models.table import (
    ComplexityTable,
    MachineVersionError,
    algorithmic_prob,
    build_table,
)
from algorithmic_dimensions.tests.models.builders import cached_table


class BuildTableTests(TestCase):
    def test_halt_only_table(self):
        table = build_table(2, 8)
        self.assertEqual(len(table), 1)
        self.assertEqual(table.min_length(''), 2)
        self.assertEqual(table.algorithmic_prob(BitString('')), Fraction(1, 4))
        self.assertEqual(table.kraft_sum(), Fraction(1, 4))

    def test_five_bit_table(self):
        table = build_table(5, 8)
        self.assertEqual(table.min_length('0'), 5)
        self.assertEqual(table.census['1'], Fraction(1, 32))
        self.assertEqual(table.kraft_sum(), Fraction(1, 4) + Fraction(2, 32))

    def test_min_len_matches_dynamic_programming(self):
        table = cached_table(18)
        mismatches = [word for word in table.outputs() if table.min_length(word) != exact_k(word)]
        self.assertEqual(mismatches, [])

    def test_kraft_and_bounds(self):
        table = cached_table(18)
        self.assertLessEqual(table.kraft_sum(), 1)
        self.assertTrue(all(length <= 18 for length in table.min_len.values()))

    def test_shortest_program_in_census(self):
        table = cached_table(14)
        for word in table.outputs():
            self.assertGreaterEqual(
                algorithmic_prob(word, table), Fraction(1, 1 << exact_k(word))
            )

    def test_absent_output(self):
        self.assertEqual(cached_table(10).algorithmic_prob('1' * 40), 0)
        self.assertNotIn('1' * 40, cached_table(10))

    def test_budget_monotonicity(self):
        small = build_table(12, 16)
        self.assertTrue(small.is_refined_by(build_table(12, 4096)))
        self.assertTrue(small.is_refined_by(build_table(14, 16)))
        self.assertFalse(build_table(14, 16).is_refined_by(small))

    def test_immutable(self):
        table = build_table(5, 8)
        with self.assertRaises(TypeError):
            table.min_len['1'] = 1

    def test_program_cap(self):
        with self.assertRaises(BudgetError):
            build_table(12, 4096, max_programs=10)

    def test_length_cap(self):
        with self.assertRaises(BudgetError):
            build_table(40, 8)


class TablePersistenceTests(TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.directory.name, 'tables', 'table')

    def tearDown(self):
        self.directory.cleanup()

    def test_binary_round_trip(self):
        table = cached_table(12)
        loaded = ComplexityTable.from_bytes(table.to_bytes())
        self.assertEqual(dict(loaded.min_len), dict(table.min_len))
        self.assertEqual(dict(loaded.census), dict(table.census))
        self.assertEqual(loaded.header(), table.header())

    def test_json_mirror(self):
        table = cached_table(10)
        loaded = ComplexityTable.from_json(table.to_json())
        self.assertEqual(dict(loaded.census), dict(table.census))
        self.assertEqual(table.to_json()['records'][0]['output'], '0:')

    def test_save_and_load(self):
        table = cached_table(10)
        table.save(self.path)
        self.assertTrue(os.path.exists(f'{self.path}.json'))
        loaded = ComplexityTable.load(self.path)
        self.assertEqual(dict(loaded.min_len), dict(table.min_len))
        os.remove(f'{self.path}.bin')
        self.assertEqual(dict(ComplexityTable.load(self.path).census), dict(table.census))

    def test_rebuild_is_byte_identical(self):
        self.assertEqual(build_table(12, 64).to_bytes(), build_table(12, 64).to_bytes())

    def test_machine_version_mismatch(self):
        table = ComplexityTable(2, 8, {'': 2}, {'': Fraction(1, 4)}, machine_version='tpm-0')
        table.save(self.path)
        with self.assertRaises(MachineVersionError):
            ComplexityTable.load(self.path)
        with self.assertRaises(MachineVersionError):
            build_table(2, 8).check_compatible(table)

    def test_rejects_foreign_file(self):
        with self.assertRaises(ValueError):
            ComplexityTable.from_bytes(b'JUNK' + bytes(16))
