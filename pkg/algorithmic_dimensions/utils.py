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
import csv
import json
import logging
import math
import os
from fractions import Fraction

logger = logging.getLogger(__name__)


def log2_fraction(value):
    value = Fraction(value)
    if value <= 0:
        raise ValueError(f'log2 of non-positive value: {value}')
    return math.log2(value.numerator) - math.log2(value.denominator)


def log2_inverse(value):
    """log2(1/value) with +inf for zero."""
    value = Fraction(value)
    if value == 0:
        return math.inf
    return -log2_fraction(value)


def ceil_log2_sqrt(n):
    j = 0
    while 4 ** j < n:
        j += 1
    return j


def fraction_to_json(value):
    value = Fraction(value)
    return {'numerator': str(value.numerator), 'denominator': str(value.denominator)}


def fraction_from_json(raw):
    return Fraction(int(raw['numerator']), int(raw['denominator']))


def format_fraction(value):
    value = Fraction(value)
    return f'{value} ({float(value):.12g})'


def ensure_directory(path):
    if path:
        os.makedirs(path, exist_ok=True)


def write_json(path, payload):
    ensure_directory(os.path.dirname(path))
    with open(path, 'w') as file:
        json.dump(payload, file, indent=2, sort_keys=True)
    logger.debug(f'Wrote JSON| {path}')


def write_csv(path, header, rows):
    ensure_directory(os.path.dirname(path))
    with open(path, 'w', newline='') as file:
        writer = csv.writer(file)
        writer.writerow(header)
        for row in rows:
            writer.writerow(row)
    logger.debug(f'Wrote CSV| {path}')
