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

"""The main ExtremalCliques Package."""

from ExtremalCliques.cliques import CliqueCalculus, count_cliques, is_heavy_free, iter_cliques
from ExtremalCliques.construction import (build_extremal,
                                          extremal_params,
                                          is_member_of_family,
                                          )
from ExtremalCliques.formulas import g_r, predicted_k_r
from ExtremalCliques.graph import Graph, graph_loader, parse_graph6, serialize_graph6
from ExtremalCliques.oracle import are_isomorphic, brute_force_k_r, check_extremal_uniqueness
from ExtremalCliques.verifier import run_suite

from ._version import get_versions

versions = get_versions()
__version__ = versions["version"]
__git_revision__ = versions["full-revisionid"]
del get_versions, versions
