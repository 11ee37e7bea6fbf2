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
from fractions import Fraction
from unittest.case import TestCase

from algorithmic_dimensions.models.machine import (
    BitString,
    NonHalting,
    ParseError,
    Program,
    copy_block,
    enumerate_programs,
    exact_k,
    gamma_decode,
    gamma_encode,
    iter_halting_programs,
    parse_run,
    shortest_program,
)


def _all_strings(max_length):
    for length in range(max_length + 1):
        for bits in itertools.product('01', repeat=length):
            yield ''.join(bits)


def _halts(bits, budget):
    try:
        parse_run(bits, budget)
        return True
    except (ParseError, NonHalting):
        return False


class GammaCodeTests(TestCase):
    def test_examples(self):
        self.assertEqual(str(gamma_encode(1)), '1')
        self.assertEqual(str(gamma_encode(2)), '010')
        self.assertEqual(str(gamma_encode(5)), '00101')

    def test_zero_rejected(self):
        with self.assertRaises(ValueError):
            gamma_encode(0)

    def test_decode_inverts_encode(self):
        for value in range(1, 300):
            code = str(gamma_encode(value))
            self.assertEqual(gamma_decode(code + '0110'), (value, len(code)))

    def test_codes_prefix_free(self):
        codes = [str(gamma_encode(value)) for value in range(1, 130)]
        for first, second in itertools.permutations(codes, 2):
            self.assertFalse(second.startswith(first), (first, second))

    def test_truncated_code(self):
        with self.assertRaises(ParseError) as context:
            gamma_decode('001')
        self.assertEqual(context.exception.reason, ParseError.TRUNCATED_GAMMA)


class BitStringTests(TestCase):
    def test_hex_round_trip(self):
        for bits in ['', '0', '1', '0001', '101100111']:
            self.assertEqual(BitString.from_hex(BitString(bits).to_hex()), BitString(bits))
        self.assertEqual(BitString('0001').to_hex(), '4:1')

    def test_rejects_non_binary(self):
        with self.assertRaises(ValueError):
            BitString('012')

    def test_concatenation(self):
        self.assertEqual(BitString('01') + BitString('1'), BitString('011'))
        self.assertEqual(len(BitString('0110')), 4)


class ParseRunTests(TestCase):
    def test_halt_only(self):
        result = parse_run('11', 8)
        self.assertEqual(result.output, BitString(''))
        self.assertEqual(result.consumed, 2)
        self.assertEqual(result.steps, 1)

    def test_literal_then_halt(self):
        result = parse_run(Program(BitString('01111')), 8)
        self.assertEqual(str(result.output), '1')
        self.assertEqual(result.consumed, 5)
        self.assertEqual(result.steps, 3)

    def test_truncated_halt(self):
        with self.assertRaises(ParseError) as context:
            parse_run('0111', 8)
        self.assertEqual(context.exception.reason, ParseError.TRUNCATED_OPCODE)

    def test_trailing_bits(self):
        with self.assertRaises(ParseError) as context:
            parse_run('110', 8)
        self.assertEqual(context.exception.reason, ParseError.TRAILING_BITS)

    def test_copy_offset_beyond_output(self):
        # LITERAL "1", then COPY offset 2 length 1
        with self.assertRaises(ParseError) as context:
            parse_run('011' + '10' + '010' + '1' + '11', 64)
        self.assertEqual(context.exception.reason, ParseError.COPY_OFFSET)

    def test_overlapping_copy(self):
        # LITERAL "01", COPY offset 2 length 5, HALT
        program = '0' + '010' + '01' + '10' + '010' + '00101' + '11'
        self.assertEqual(str(parse_run(program, 64).output), '0101010')

    def test_budget_exhausted(self):
        program = '0' + '00101' + '10110' + '11'
        self.assertEqual(str(parse_run(program, 7).output), '10110')
        with self.assertRaises(NonHalting):
            parse_run(program, 6)

    def test_deterministic(self):
        program = '0' + '010' + '01' + '10' + '1' + '011' + '11'
        self.assertEqual(parse_run(program, 64), parse_run(program, 64))

    def test_copy_block(self):
        self.assertEqual(copy_block('0110', 2, 2), '10')
        self.assertEqual(copy_block('01', 1, 4), '1111')
        self.assertEqual(copy_block('011', 3, 7), '0110110')


class EnumerationTests(TestCase):
    def test_two_bits_only_halt(self):
        self.assertEqual(list(iter_halting_programs(2, 8)), [('11', '')])

    def test_four_bits_only_halt(self):
        self.assertEqual(list(iter_halting_programs(4, 8)), [('11', '')])

    def test_five_bits(self):
        programs = sorted(iter_halting_programs(5, 8))
        self.assertEqual(programs, [('01011', '0'), ('01111', '1'), ('11', '')])

    def test_matches_brute_force(self):
        enumerated = sorted(program for program, _ in iter_halting_programs(12, 64))
        brute_force = sorted(bits for bits in _all_strings(12) if _halts(bits, 64))
        self.assertEqual(enumerated, brute_force)

    def test_outputs_match_runs(self):
        for program, output in enumerate_programs(12, 64):
            self.assertEqual(parse_run(program, 64).output, output)

    def test_prefix_free_and_kraft(self):
        programs = sorted(program for program, _ in iter_halting_programs(16, 4096))
        for first, second in zip(programs, programs[1:]):
            self.assertFalse(second.startswith(first), (first, second))
        kraft = sum((Fraction(1, 1 << len(program)) for program in programs), Fraction(0))
        self.assertLessEqual(kraft, 1)

    def test_each_program_once(self):
        programs = [program for program, _ in iter_halting_programs(14, 4096)]
        self.assertEqual(len(programs), len(set(programs)))

    def test_budget_limits_enumeration(self):
        small = {program for program, _ in iter_halting_programs(14, 4)}
        large = {program for program, _ in iter_halting_programs(14, 4096)}
        self.assertLess(len(small), len(large))
        self.assertTrue(small.issubset(large))


class ExactComplexityTests(TestCase):
    def test_examples(self):
        self.assertEqual(exact_k(''), 2)
        self.assertEqual(exact_k('1'), 5)
        self.assertEqual(exact_k(BitString('0101')), 12)
        self.assertEqual(exact_k('011'), 9)

    def test_matches_enumeration(self):
        best = {}
        for program, output in iter_halting_programs(14, 4096):
            best[output] = min(best.get(output, len(program)), len(program))
        for output, length in best.items():
            self.assertEqual(exact_k(output), length, output)

    def test_witness_program(self):
        for word in ['', '1', '0101', '0000000000000000', '0110100110010110', '1011' * 9]:
            program = shortest_program(word)
            self.assertEqual(len(program), exact_k(word))
            self.assertEqual(str(parse_run(program, 1 << 16).output), word)

    def test_repetition_is_cheap(self):
        self.assertLess(exact_k('0' * 256), 40)
        self.assertLess(exact_k('01' * 64), exact_k('0110100110010110' * 8))

    def test_literal_bound(self):
        word = '1101001110100100111011'
        self.assertLessEqual(exact_k(word), 1 + 2 * 4 + 1 + len(word) + 2)
