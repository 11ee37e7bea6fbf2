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
import json
import logging
import os
import struct
from fractions import Fraction
from types import MappingProxyType

from algorithmic_dimensions import MACHINE_VERSION, AlgorithmicDimensionsError, BudgetError
from algorithmic_dimensions.models.machine import (
    RECOMMENDED_MAX_LENGTH,
    BitString,
    _raw,
    iter_halting_programs,
)
from algorithmic_dimensions.utils import ensure_directory

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
MAGIC = b'TPMT'
DEFAULT_MAX_PROGRAMS = 5_000_000


class MachineVersionError(AlgorithmicDimensionsError):
    pass


def _int_to_bytes(value):
    return value.to_bytes((value.bit_length() + 7) // 8, 'big')


class ComplexityTable:
    def __init__(self, max_length, step_budget, min_len, census, machine_version=MACHINE_VERSION):
        self.max_length = max_length
        self.step_budget = step_budget
        self.machine_version = machine_version
        self._min_len = MappingProxyType(dict(min_len))
        self._census = MappingProxyType(dict(census))

    @property
    def min_len(self):
        return self._min_len

    @property
    def census(self):
        return self._census

    def __len__(self):
        return len(self._min_len)

    def __contains__(self, word):
        return _raw(word) in self._min_len

    def outputs(self):
        return sorted(self._min_len, key=lambda word: (len(word), word))

    def min_length(self, word):
        return self._min_len.get(_raw(word))

    def algorithmic_prob(self, word):
        return self._census.get(_raw(word), Fraction(0))

    def kraft_sum(self):
        return sum(self._census.values(), Fraction(0))

    def header(self):
        return {
            'format_version': FORMAT_VERSION,
            'max_length': self.max_length,
            'step_budget': self.step_budget,
            'machine_version': self.machine_version,
        }

    def check_compatible(self, other):
        if other.machine_version != self.machine_version:
            raise MachineVersionError(
                f'Cannot mix tables of machine versions '
                f'"{self.machine_version}" and "{other.machine_version}"'
            )

    def is_refined_by(self, other):
        """True when other (a larger budget) never has a longer minimal program or less mass."""
        self.check_compatible(other)
        for word, length in self._min_len.items():
            if word not in other:
                return False
            if other.min_len[word] > length or other.census[word] < self._census[word]:
                return False
        return True

    def to_json(self):
        return {
            'header': self.header(),
            'records': [
                {
                    'output': BitString(word).to_hex(),
                    'min_len': self._min_len[word],
                    'census_numerator': str(self._census[word].numerator),
                    'census_denominator': str(self._census[word].denominator),
                }
                for word in self.outputs()
            ],
        }

    @staticmethod
    def from_json(payload, expected_version=MACHINE_VERSION):
        header = payload['header']
        _check_header(header['format_version'], header['machine_version'], expected_version)
        min_len = {}
        census = {}
        for record in payload['records']:
            word = BitString.from_hex(record['output']).bits
            min_len[word] = record['min_len']
            census[word] = Fraction(
                int(record['census_numerator']), int(record['census_denominator'])
            )
        return ComplexityTable(
            header['max_length'], header['step_budget'], min_len, census, header['machine_version']
        )

    def to_bytes(self):
        version = self.machine_version.encode()
        chunks = [
            MAGIC,
            struct.pack('>HHI', FORMAT_VERSION, self.max_length, self.step_budget),
            struct.pack('>H', len(version)),
            version,
            struct.pack('>I', len(self)),
        ]
        for word in self.outputs():
            value = int(word, 2) if word else 0
            chunks.append(struct.pack('>I', len(word)))
            chunks.append(value.to_bytes((len(word) + 7) // 8, 'big'))
            chunks.append(struct.pack('>H', self._min_len[word]))
            for part in (self._census[word].numerator, self._census[word].denominator):
                encoded = _int_to_bytes(part)
                chunks.append(struct.pack('>H', len(encoded)))
                chunks.append(encoded)
        return b''.join(chunks)

    @staticmethod
    def from_bytes(data, expected_version=MACHINE_VERSION):
        if data[:4] != MAGIC:
            raise ValueError('Not a complexity table file')
        offset = 4
        format_version, max_length, step_budget = struct.unpack_from('>HHI', data, offset)
        offset += 8
        (version_length,) = struct.unpack_from('>H', data, offset)
        offset += 2
        machine_version = data[offset : offset + version_length].decode()
        offset += version_length
        _check_header(format_version, machine_version, expected_version)
        (count,) = struct.unpack_from('>I', data, offset)
        offset += 4
        min_len = {}
        census = {}
        for _ in range(count):
            (bit_length,) = struct.unpack_from('>I', data, offset)
            offset += 4
            byte_length = (bit_length + 7) // 8
            value = int.from_bytes(data[offset : offset + byte_length], 'big')
            offset += byte_length
            word = format(value, f'0{bit_length}b') if bit_length else ''
            (length,) = struct.unpack_from('>H', data, offset)
            offset += 2
            parts = []
            for _ in range(2):
                (size,) = struct.unpack_from('>H', data, offset)
                offset += 2
                parts.append(int.from_bytes(data[offset : offset + size], 'big'))
                offset += size
            min_len[word] = length
            census[word] = Fraction(*parts)
        return ComplexityTable(max_length, step_budget, min_len, census, machine_version)

    def save(self, path):
        """Writes path + '.bin' and its JSON mirror path + '.json'."""
        ensure_directory(os.path.dirname(path))
        with open(f'{path}.bin', 'wb') as file:
            file.write(self.to_bytes())
        with open(f'{path}.json', 'w') as file:
            json.dump(self.to_json(), file, indent=1, sort_keys=True)
        logger.info(f'Saved table| {path} ({len(self)} entries)')

    @staticmethod
    def load(path, expected_version=MACHINE_VERSION):
        if os.path.exists(f'{path}.bin'):
            with open(f'{path}.bin', 'rb') as file:
                return ComplexityTable.from_bytes(file.read(), expected_version)
        with open(f'{path}.json', 'r') as file:
            return ComplexityTable.from_json(json.load(file), expected_version)

    def __repr__(self):
        return (
            f'ComplexityTable(L={self.max_length}, T={self.step_budget}, '
            f'entries={len(self)}, machine={self.machine_version})'
        )


def _check_header(format_version, machine_version, expected_version):
    if format_version != FORMAT_VERSION:
        raise ValueError(f'Unsupported table format version {format_version}')
    if expected_version is not None and machine_version != expected_version:
        raise MachineVersionError(
            f'Table built for machine "{machine_version}", expected "{expected_version}"'
        )


def build_table(max_length, step_budget, max_programs=DEFAULT_MAX_PROGRAMS):
    if max_length > RECOMMENDED_MAX_LENGTH:
        raise BudgetError(f'L={max_length} exceeds the {RECOMMENDED_MAX_LENGTH} bit table cap')
    min_len = {}
    weights = {}
    programs = 0
    for program, output in iter_halting_programs(max_length, step_budget):
        programs += 1
        if programs > max_programs:
            raise BudgetError(f'More than {max_programs} halting programs at L={max_length}')
        size = len(program)
        known = min_len.get(output)
        if known is None or size < known:
            min_len[output] = size
        weights[output] = weights.get(output, 0) + (1 << (max_length - size))

    denominator = 1 << max_length
    census = {word: Fraction(weight, denominator) for word, weight in weights.items()}
    table = ComplexityTable(max_length, step_budget, min_len, census)
    logger.info(
        f'Built table| L={max_length} T={step_budget} programs={programs} outputs={len(table)}'
    )
    return table


def algorithmic_prob(word, table):
    return table.algorithmic_prob(word)
