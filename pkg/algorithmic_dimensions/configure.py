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
import argparse
import json

from algorithmic_dimensions.config import CONFIG_KEYS, RunConfig, parse_override
from algorithmic_dimensions.storage import LocalKeyValueStorage, get_storage

INTERACTIVE_KEYS = [
    'space.dimension',
    'table.max_length',
    'table.step_budget',
    'table.path',
    'experiment.seed',
    'output.directory',
]

parser = argparse.ArgumentParser(description='Configure the experiments.')
parser.add_argument('--config', type=str, default=None, help='Configuration JSON file to edit')
parser.add_argument('--set', dest='assignments', action='append', default=[], metavar='KEY=VALUE')
parser.add_argument('--unset', action='append', default=[], metavar='KEY')
parser.add_argument('--show', action='store_true', help='Print the effective configuration')
parser.add_argument(
    '--copy_from', type=str, default=None, help='Replace all keys with those of another file'
)


def manual_flow(storage):
    defaults = RunConfig()
    for key in INTERACTIVE_KEYS:
        current = storage.get_value(key, getattr(defaults, CONFIG_KEYS[key]))
        print(f'Enter {key} (leave empty to keep {json.dumps(current)}):')
        answer = input().strip()
        if answer:
            storage.set_value(*parse_override(f'{key}={answer}'))
    RunConfig.from_storage(storage)
    print('Setup Successful!')


def copy_flow(source_path, destination):
    source = LocalKeyValueStorage(source_path)
    RunConfig.from_storage(source)
    for key in list(destination.store.keys()):
        destination.unset_key(key)
    for key, value in source.store.items():
        destination.set_value(key, value)


def show_flow(storage):
    print(json.dumps(RunConfig.from_storage(storage).to_json(), indent=2, sort_keys=True))


def main(argv=None):
    args = parser.parse_args(argv)
    storage = get_storage(args.config)
    if args.copy_from:
        copy_flow(args.copy_from, storage)
    for assignment in args.assignments:
        storage.set_value(*parse_override(assignment))
    for key in args.unset:
        storage.unset_key(key)
    if args.show:
        show_flow(storage)
    elif not (args.copy_from or args.assignments or args.unset):
        manual_flow(storage)


if __name__ == '__main__':
    main()
