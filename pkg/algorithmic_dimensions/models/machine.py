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
from dataclasses import dataclass
from functools import lru_cache

from algorithmic_dimensions import AlgorithmicDimensionsError

logger = logging.getLogger(__name__)

MAX_BITS = 2 ** 20
RECOMMENDED_MAX_LENGTH = 32

OPCODE_LITERAL = '0'
OPCODE_COPY = '10'
OPCODE_HALT = '11'
HALT_COST = len(OPCODE_HALT)


class ParseError(AlgorithmicDimensionsError):
    TRUNCATED_OPCODE = 'truncated opcode'
    TRUNCATED_GAMMA = 'truncated gamma code'
    TRUNCATED_PAYLOAD = 'truncated literal payload'
    COPY_OFFSET = 'copy offset exceeding output'
    TRAILING_BITS = 'trailing bits after halt'

    def __init__(self, reason, position):
        super().__init__(f'{reason} at bit {position}')
        self.reason = reason
        self.position = position


class NonHalting(AlgorithmicDimensionsError):
    def __init__(self, steps, budget):
        super().__init__(f'step budget {budget} exhausted at step {steps}')
        self.steps = steps
        self.budget = budget


@dataclass(frozen=True)
class BitString:
    bits: str = ''

    def __post_init__(self):
        if len(self.bits) > MAX_BITS:
            raise ValueError(f'Bit string longer than the {MAX_BITS} bit cap')
        if self.bits.strip('01'):
            raise ValueError(f'Not a bit string: "{self.bits[:32]}"')

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return self.bits

    def __add__(self, other):
        return BitString(self.bits + str(other))

    def to_hex(self):
        if not self.bits:
            return '0:'
        return f'{len(self.bits)}:{int(self.bits, 2):x}'

    @staticmethod
    def from_hex(encoded):
        length, digits = encoded.split(':')
        length = int(length)
        if length == 0:
            return BitString('')
        return BitString(format(int(digits, 16), f'0{length}b'))


@dataclass(frozen=True)
class Program:
    bits: BitString

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return str(self.bits)


@dataclass(frozen=True)
class RunResult:
    output: BitString
    steps: int
    consumed: int


def _raw(bits):
    if isinstance(bits, Program):
        return bits.bits.bits
    if isinstance(bits, BitString):
        return bits.bits
    return bits


def gamma_length(value):
    return 2 * (value.bit_length() - 1) + 1


def _gamma(value):
    if value < 1:
        raise ValueError(f'Gamma code needs a positive integer, got {value}')
    return '0' * (value.bit_length() - 1) + format(value, 'b')


def gamma_encode(value):
    return BitString(_gamma(value))


def gamma_decode(bits, position=0):
    """Reads one gamma code starting at position, returns (value, next_position)."""
    bits = _raw(bits)
    zeros = 0
    while position + zeros < len(bits) and bits[position + zeros] == '0':
        zeros += 1
    end = position + 2 * zeros + 1
    if end > len(bits):
        raise ParseError(ParseError.TRUNCATED_GAMMA, position)
    return int(bits[position + zeros : end], 2), end


def copy_block(output, offset, length):
    source = output[len(output) - offset :]
    if length <= offset:
        return source[:length]
    return (source * (length // offset + 1))[:length]


def parse_run(program, budget):
    if budget < 1:
        raise ValueError(f'Step budget must be positive, got {budget}')
    bits = _raw(program)
    position = 0
    output = ''
    steps = 0
    while True:
        if position >= len(bits):
            raise ParseError(ParseError.TRUNCATED_OPCODE, position)
        if bits[position] == '0':
            length, position = gamma_decode(bits, position + 1)
            if position + length > len(bits):
                raise ParseError(ParseError.TRUNCATED_PAYLOAD, position)
            if steps + 1 + length > budget:
                raise NonHalting(steps + 1 + length, budget)
            output += bits[position : position + length]
            position += length
            steps += 1 + length
            continue

        if position + 1 >= len(bits):
            raise ParseError(ParseError.TRUNCATED_OPCODE, position)
        if bits[position + 1] == '1':
            steps += 1
            if steps > budget:
                raise NonHalting(steps, budget)
            position += HALT_COST
            if position != len(bits):
                raise ParseError(ParseError.TRAILING_BITS, position)
            return RunResult(BitString(output), steps, position)

        offset, position = gamma_decode(bits, position + 2)
        length, position = gamma_decode(bits, position)
        if offset > len(output):
            raise ParseError(ParseError.COPY_OFFSET, position)
        # The output cap is treated like an exhausted budget.
        if steps + 1 + length > budget or len(output) + length > MAX_BITS:
            raise NonHalting(steps + 1 + length, budget)
        output += copy_block(output, offset, length)
        steps += 1 + length


def iter_halting_programs(max_length, budget):
    """
    Depth-first walk of the prefix tree one instruction at a time. Only complete, well formed
    instructions are ever appended, so every ParseError subtree is skipped and every visited
    node has its HALT extension as a halting descendant. Yields (program, output) as str.
    """
    if max_length < 0 or budget < 1:
        raise ValueError(f'Invalid enumeration bounds L={max_length}, T={budget}')
    stack = [('', '', 0)]
    while stack:
        program, output, steps = stack.pop()
        room = max_length - len(program) - HALT_COST
        if steps + 1 <= budget:
            yield program + OPCODE_HALT, output

        children = []
        length = 1
        while 1 + gamma_length(length) + length <= room and steps + 1 + length <= budget:
            prefix = program + OPCODE_LITERAL + _gamma(length)
            for value in range(2 ** length):
                payload = format(value, f'0{length}b')
                children.append((prefix + payload, output + payload, steps + 1 + length))
            length += 1

        for offset in range(1, len(output) + 1):
            head = len(OPCODE_COPY) + gamma_length(offset)
            if head + 1 > room:
                break
            prefix = program + OPCODE_COPY + _gamma(offset)
            length = 1
            while head + gamma_length(length) <= room and steps + 1 + length <= budget:
                children.append(
                    (
                        prefix + _gamma(length),
                        output + copy_block(output, offset, length),
                        steps + 1 + length,
                    )
                )
                length += 1

        stack.extend(reversed(children))


def enumerate_programs(max_length, budget):
    if max_length > RECOMMENDED_MAX_LENGTH:
        logger.warning(f'Enumeration| L={max_length} exceeds {RECOMMENDED_MAX_LENGTH} bits')
    for program, output in iter_halting_programs(max_length, budget):
        yield Program(BitString(program)), BitString(output)


def _shortest_parse(word):
    """
    Shortest path over output positions. Edge i -> i+l is a LITERAL block or a COPY block
    whose source lies inside word[:i]. Returns (distance, parent) arrays; distance excludes HALT.
    """
    size = len(word)
    infinity = float('inf')
    gamma_lengths = [0] + [gamma_length(value) for value in range(1, size + 1)]
    distance = [infinity] * (size + 1)
    parent = [None] * (size + 1)
    distance[0] = 0

    # matches[offset][i] is the longest l with word[i:i+l] == word[i-offset:i-offset+l]
    matches = [None] * (size + 1)
    for offset in range(1, size):
        column = [0] * (size + 1)
        run = 0
        for i in range(size - 1, offset - 1, -1):
            run = run + 1 if word[i] == word[i - offset] else 0
            column[i] = run
        matches[offset] = column

    for i in range(size):
        base = distance[i]
        if base == infinity:
            continue
        for length in range(1, size - i + 1):
            cost = base + 1 + gamma_lengths[length] + length
            if cost < distance[i + length]:
                distance[i + length] = cost
                parent[i + length] = (i, 'literal', length, 0)

        cheapest_offset = {}
        longest = 0
        for offset in range(1, i + 1):
            match = matches[offset][i]
            if match:
                best = cheapest_offset.get(match)
                if best is None or gamma_lengths[offset] < gamma_lengths[best]:
                    cheapest_offset[match] = offset
                longest = max(longest, match)
        chosen = None
        for length in range(longest, 0, -1):
            candidate = cheapest_offset.get(length)
            if candidate is not None and (
                chosen is None or gamma_lengths[candidate] < gamma_lengths[chosen]
            ):
                chosen = candidate
            cost = base + len(OPCODE_COPY) + gamma_lengths[chosen] + gamma_lengths[length]
            if cost < distance[i + length]:
                distance[i + length] = cost
                parent[i + length] = (i, 'copy', length, chosen)
    return distance, parent


@lru_cache(maxsize=1 << 16)
def _exact_k_raw(word):
    distance, _ = _shortest_parse(word)
    return distance[len(word)] + HALT_COST


def exact_k(word):
    word = _raw(word)
    if len(word) > MAX_BITS:
        raise ValueError(f'Bit string longer than the {MAX_BITS} bit cap')
    return _exact_k_raw(word)


def shortest_program(word):
    word = _raw(word)
    distance, parent = _shortest_parse(word)
    blocks = []
    position = len(word)
    while position > 0:
        start, kind, length, offset = parent[position]
        if kind == 'literal':
            blocks.append(OPCODE_LITERAL + _gamma(length) + word[start:position])
        else:
            blocks.append(OPCODE_COPY + _gamma(offset) + _gamma(length))
        position = start
    return Program(BitString(''.join(reversed(blocks)) + OPCODE_HALT))
