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

"""Common graphs and factories for the tests."""

from fractions import Fraction
import math

from ExtremalCliques.graph import (
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    Graph,
    graph_from_edges,
    petersen_graph,
    turan_graph,
)
from ExtremalCliques.oracle import random_graph_min_degree
import numpy as np

__all__ = [
    "BAD_QUAD",
    "C5",
    "C6",
    "K4",
    "K5",
    "K33",
    "K222",
    "K444",
    "OCTAHEDRON",
    "PETERSEN",
    "PRISM",
    "T4_8",
    "random_graph",
    "random_min_degree_graphs",
]

K4 = complete_graph(4)
K5 = complete_graph(5)
C5 = cycle_graph(5)
C6 = cycle_graph(6)
K33 = complete_multipartite_graph([3, 3])
K222 = complete_multipartite_graph([2, 2, 2])
K444 = turan_graph(12, 3)
# T_4(8), the Turan graph K_{2,2,2,2}
T4_8 = turan_graph(8, 4)
PETERSEN = petersen_graph()
# octahedron with a labelling different from K222
OCTAHEDRON = graph_from_edges(
    6, [(0, 1), (0, 2), (0, 3), (0, 4), (5, 1), (5, 2), (5, 3), (5, 4), (1, 2), (2, 3), (3, 4),
        (4, 1)]
)
# pentagonal prism, 3-regular on 10 vertices like the Petersen graph
PRISM = graph_from_edges(
    10,
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i + 5, (i + 1) % 5 + 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)],
)
# K20 minus the non-neighbourhoods {4..8} of 0 and 1, {9..13} of 2 and {14..18} of 3;
# at beta = 3/10 the clique (0, 1, 2, 3) has one heavy edge and negative eta
BAD_QUAD = graph_from_edges(
    20,
    [(u, v) for u in range(20) for v in range(u + 1, 20)
     if not (u < 2 and 4 <= v <= 8) and not (u == 2 and 9 <= v <= 13)
     and not (u == 3 and 14 <= v <= 18)],
)


def random_graph(n: int, density: float, seed: int) -> Graph:
    """Erdos-Renyi graph drawn with a seeded generator."""
    rng = np.random.default_rng(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    return graph_from_edges(n, edges)


def random_min_degree_graphs(n: int, beta: Fraction, count: int, seed: int = 0):
    """Seeded edge-minimal graphs of minimum degree ceil((1 - beta)n)."""
    delta = math.ceil((1 - beta) * n)
    return [random_graph_min_degree(n, delta, seed + i) for i in range(count)]
