# -*- coding: utf-8 -*-
# The ExtremalCliques library provides exact tools to study the minimum number
# of cliques in graphs of given order and minimum degree.
#
# Copyright (C) 2022 The QC-Devs Community
#
# This file is part of ExtremalCliques.
#
# ExtremalCliques is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 3
# of the License, or (at your option) any later version.
#
# ExtremalCliques is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, see <http://www.gnu.org/licenses/>
#
# --
"""Setup and Install Script."""

import sys

from setuptools import setup

short_description = "Exact clique counts in graphs of given order and minimum degree".split("\n")[0]

# from https://github.com/pytest-dev/pytest-runner#conditional-requirement
needs_pytest = {"pytest", "test", "ptr"}.intersection(sys.argv)
pytest_runner = ["pytest-runner"] if needs_pytest else []

try:
    with open("README.md", "r") as handle:
        long_description = handle.read()
except ValueError:
    long_description = short_description

# the version string lives in one place
version = {}
with open("ExtremalCliques/_version.py", "r") as handle:
    for line in handle:
        if line.startswith("version = "):
            version["version"] = line.split("=", 1)[1].strip().strip('"')


setup(
    name="ExtremalCliques",
    author="QC-Devs Community",
    author_email="qcdevs@gmail.com",
    description=short_description,
    long_description=long_description,
    long_description_content_type="text/markdown",
    version=version["version"],
    license="GNU (Version 3)",

    package_dir={"ExtremalCliques": "ExtremalCliques"},
    packages=["ExtremalCliques", "ExtremalCliques.test"],
    include_package_data=True,

    # Allows `setup.py test` to work correctly with pytest
    setup_requires=["numpy>=1.21.2",
                    "scipy>=1.7.3",
                    "pandas>=1.3.5",
                    "bitarray",
                    ] + pytest_runner,
    tests_require=["pytest>=6.2.4", "hypothesis>=6.0", "networkx>=2.5"],

    url="https://github.com/theochem/ExtremalCliques",
    install_requires=["numpy>=1.21.2",
                      "scipy>=1.7.3",
                      "pandas>=1.3.5",
                      "bitarray",
                      ],
    entry_points={
        "console_scripts": ["extremal-cliques=ExtremalCliques.cli:main"],
    },
    python_requires=">=3.7",
)
