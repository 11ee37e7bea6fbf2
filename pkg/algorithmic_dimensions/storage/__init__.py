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

from algorithmic_dimensions.storage.storage import LocalKeyValueStorage

DEFAULT_STORAGE = 'dimensions.json'
CONFIG_ENVIRONMENT = 'DIMENSIONS_CONFIG'

_storage = None


def get_storage(path=None):
    global _storage
    if _storage is not None and (path is None or _storage.store_path == path):
        return _storage
    if path is None:
        path = os.environ.get(CONFIG_ENVIRONMENT, DEFAULT_STORAGE)
    _storage = LocalKeyValueStorage(path)
    return _storage


def reinitialize_storage(path=None):
    global _storage
    if _storage is not None:
        _storage.close()
        _storage = None
    return get_storage(path)

