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
import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="Algorithmic Dimensions",
    version="0.1.0",
    author="The Algorithmic Dimensions authors",
    description="Desk-scale algorithmic dimensions and optimal outer measures",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=['examples', 'examples.*']),
    py_modules=['run_lint'],
    python_requires='>=3.8',
    install_requires=[
        'numpy>=1.22',
    ],
    extras_require={'test': ['flake8>=6.0', 'pytest>=7.0', 'isort>=5.12', 'black>=23.1']},
    entry_points={
        'console_scripts': [
            'dimensions=algorithmic_dimensions.app:main',
            'dimensions_configure=algorithmic_dimensions.configure:main',
            'dimensions_lint=run_lint:main',
        ]
    },
)
