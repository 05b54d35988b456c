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

"""Allow ``python -m ExtremalCliques``."""

import sys

from ExtremalCliques.cli import main

if __name__ == "__main__":
    sys.exit(main())
