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

"""Members of the extremal family: parameters, feasibility, construction and recognition."""

from dataclasses import asdict, dataclass
from enum import Enum
from fractions import Fraction
import logging
from typing import List, Optional, Tuple
import warnings

from bitarray import bitarray
from ExtremalCliques.cliques import count_cliques
from ExtremalCliques.graph import (
    cycle_graph,
    Graph,
    graph_from_edges,
    induced_subgraph,
    members,
    vertex_set,
)
from ExtremalCliques.utils import (
    binomial,
    check_beta,
    derive_p,
    DomainError,
    FamilyUndefinedError,
    MEMBERSHIP_MAX_ORDER,
    RationalLike,
    REGULAR_SEARCH_MAX_ORDER,
    require_integral,
    SearchRefusedError,
    UnsupportedConstructionError,
)

__all__ = [
    "Feasibility",
    "ExtremalParams",
    "extremal_params",
    "triangle_free_regular",
    "extremal_partition",
    "build_extremal",
    "k3_reg_min_bruteforce",
    "is_member_of_family",
]

logger = logging.getLogger(__name__)


class Feasibility(Enum):
    """Whether the class V_0 can carry a triangle-free regular graph."""

    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ExtremalParams:
    """Class sizes of a member of the family at (n, beta)."""

    n: int
    beta: Fraction
    p: int
    delta: int
    v0_size: int
    class_size: int
    v0_degree: int
    feasibility: Feasibility
    parity_ok: bool

    def to_dict(self):
        data = asdict(self)
        data["beta"] = str(self.beta)
        data["feasibility"] = self.feasibility.value
        return data


def _sizes(n: int, beta: Fraction) -> Tuple[int, int, int, int, int]:
    if n < 1:
        raise DomainError(f"Order must be positive, got {n}.")
    class_size = require_integral(beta * n, "beta * n")
    p = derive_p(beta)
    delta = n - class_size
    return p, delta, n - (p - 1) * class_size, class_size, n - p * class_size


def _triangle_free_known(n0: int, d0: int) -> bool:
    return d0 == 0 or n0 % 2 == 0 or (d0 == 2 and n0 >= 4)


def _bipartite_forced(n0: int, d0: int) -> bool:
    # triangle-free with minimum degree above 2n0/5 forces bipartite, hence even order if regular
    return n0 % 2 == 1 and 5 * d0 > 2 * n0


def extremal_params(n: int, beta: RationalLike, max_order: int = REGULAR_SEARCH_MAX_ORDER,
                    strict: bool = True) -> ExtremalParams:
    """Derive the class sizes and feasibility of the family at (n, beta).

    Parameters
    ----------
    n : int
        Order of the graph.
    beta : Fraction, int or str
        Degree deficiency; beta * n must be an integer.
    max_order : int, optional
        Largest |V_0| for which feasibility is decided by exhaustive search.
    strict : bool, optional
        Raise FamilyUndefinedError when n and (1 - beta)n are both odd. Otherwise the
        parameters are returned with ``parity_ok`` false and INFEASIBLE. Default=True.

    Returns
    -------
    ExtremalParams
        Derived sizes and feasibility.
    """
    return _derive_params(n, beta, max_order, strict)[0]


def _derive_params(n: int, beta: RationalLike, max_order: int,
                   strict: bool) -> Tuple[ExtremalParams, Optional[Graph]]:
    """Parameters plus the inner graph when feasibility was decided by search."""
    beta = check_beta(beta)
    p, delta, n0, class_size, d0 = _sizes(n, beta)
    searched = None
    parity_ok = not (n % 2 == 1 and delta % 2 == 1)
    if not parity_ok:
        if strict:
            raise FamilyUndefinedError(f"n = {n} and (1 - beta)n = {delta} are both odd.")
        feasibility = Feasibility.INFEASIBLE
    elif _triangle_free_known(n0, d0):
        feasibility = Feasibility.FEASIBLE
    elif _bipartite_forced(n0, d0):
        feasibility = Feasibility.INFEASIBLE
    elif n0 <= max_order:
        minimum, searched = k3_reg_min_bruteforce(n0, d0, max_order)
        feasibility = Feasibility.FEASIBLE if minimum == 0 else Feasibility.INFEASIBLE
    else:
        warnings.warn(
            f"Feasibility of (n, beta) = ({n}, {beta}) is unknown: |V_0| = {n0} is odd and "
            f"exceeds the search threshold {max_order}."
        )
        feasibility = Feasibility.UNKNOWN
    params = ExtremalParams(n, beta, p, delta, n0, class_size, d0, feasibility, parity_ok)
    return params, searched


def triangle_free_regular(n0: int, d0: int) -> Graph:
    """Triangle-free d0-regular graph on n0 vertices.

    Builds the empty graph for d0 = 0, the cycle for d0 = 2, and otherwise for even n0 the
    bipartite circulant with a_i adjacent to b_((i + j) mod n0/2) for 0 <= j < d0.
    """
    if d0 == 0 and n0 >= 1:
        return Graph(n0)
    if d0 == 2 and n0 >= 4:
        return cycle_graph(n0)
    if n0 % 2 == 0 and 0 < d0 <= n0 // 2:
        half = n0 // 2
        return graph_from_edges(
            n0, [(i, half + (i + j) % half) for i in range(half) for j in range(d0)]
        )
    raise UnsupportedConstructionError(
        f"No triangle-free {d0}-regular graph on {n0} vertices is constructible here."
    )


def extremal_partition(n: int, beta: RationalLike) -> List[List[int]]:
    """Vertex classes [V_0, V_1, ..., V_(p-1)] of the member built by ``build_extremal``."""
    beta = check_beta(beta)
    p, delta, n0, class_size, _ = _sizes(n, beta)
    if n % 2 == 1 and delta % 2 == 1:
        raise FamilyUndefinedError(f"n = {n} and (1 - beta)n = {delta} are both odd.")
    classes = [list(range(n0))]
    for k in range(p - 1):
        start = n0 + k * class_size
        classes.append(list(range(start, start + class_size)))
    return classes


def build_extremal(n: int, beta: RationalLike,
                   max_order: int = REGULAR_SEARCH_MAX_ORDER) -> Graph:
    """Build a member of the extremal family.

    Parameters
    ----------
    n : int
        Order of the graph.
    beta : Fraction, int or str
        Degree deficiency; beta * n must be an integer.
    max_order : int, optional
        Largest |V_0| searched exhaustively when no triangle-free inner graph is constructible.

    Returns
    -------
    Graph
        A (1 - beta)n-regular graph whose classes are listed by ``extremal_partition``.
    """
    params, inner = _derive_params(n, beta, max_order, strict=True)
    n0, d0 = params.v0_size, params.v0_degree
    try:
        if inner is None:
            inner = triangle_free_regular(n0, d0)
    except UnsupportedConstructionError:
        if n0 > max_order:
            raise UnsupportedConstructionError(
                f"|V_0| = {n0} is odd and exceeds the search threshold {max_order}; "
                f"no inner graph for (n, beta) = ({n}, {params.beta})."
            ) from None
        triangles, inner = k3_reg_min_bruteforce(n0, d0, max_order)
        logger.debug("Inner graph on %d vertices found by search with %d triangles.",
                     n0, triangles)

    outside = bitarray(n)
    outside.setall(1)
    outside[:n0] = 0
    rows = []
    for v in range(n0):
        row = bitarray(n)
        row.setall(0)
        row[:n0] = inner.adj[v]
        rows.append(row | outside)
    for classes in extremal_partition(n, params.beta)[1:]:
        row = bitarray(n)
        row.setall(1)
        row[classes[0]:classes[-1] + 1] = 0
        rows.extend(bitarray(row) for _ in classes)
    return Graph._from_rows(rows)


class _RegularSearch:
    """Depth-first search for the d0-regular graph with fewest triangles."""

    def __init__(self, n0: int, d0: int):
        self.n0 = n0
        self.d0 = d0
        self.rows = [vertex_set(n0) for _ in range(n0)]
        self.deg = [0] * n0
        self.remaining = [n0 - 1] * n0
        self.pairs = [(i, j) for i in range(1, n0) for j in range(i + 1, n0)]
        self.best = None
        self.witness = None
        # neighbourhood of vertex 0 is the last d0 vertices
        for j in range(1, n0):
            self.remaining[0] -= 1
            self.remaining[j] -= 1
            if j >= n0 - d0:
                self._add(0, j)

    def _add(self, i, j):
        added = (self.rows[i] & self.rows[j]).count()
        self.rows[i][j] = 1
        self.rows[j][i] = 1
        self.deg[i] += 1
        self.deg[j] += 1
        return added

    def _remove(self, i, j):
        self.rows[i][j] = 0
        self.rows[j][i] = 0
        self.deg[i] -= 1
        self.deg[j] -= 1

    def run(self):
        self._search(0, 0)
        return self.best, Graph._from_rows(self.witness)

    def _search(self, k, triangles):
        if self.best is not None and (triangles >= self.best or self.best == 0):
            return
        if k == len(self.pairs):
            self.best = triangles
            self.witness = [bitarray(row) for row in self.rows]
            return
        i, j = self.pairs[k]
        self.remaining[i] -= 1
        self.remaining[j] -= 1
        deg, remaining, d0 = self.deg, self.remaining, self.d0
        if deg[i] + remaining[i] >= d0 and deg[j] + remaining[j] >= d0:
            self._search(k + 1, triangles)
        if deg[i] < d0 and deg[j] < d0:
            added = self._add(i, j)
            self._search(k + 1, triangles + added)
            self._remove(i, j)
        self.remaining[i] += 1
        self.remaining[j] += 1


def k3_reg_min_bruteforce(n0: int, d0: int,
                          max_order: int = REGULAR_SEARCH_MAX_ORDER) -> Tuple[int, Graph]:
    """Fewest triangles over all d0-regular graphs on n0 vertices, by exhaustive search.

    Parameters
    ----------
    n0 : int
        Number of vertices.
    d0 : int
        Common degree, 0 <= d0 < n0 with n0 * d0 even.
    max_order : int, optional
        Largest n0 searched.

    Returns
    -------
    minimum : int
        Fewest triangles.
    witness : Graph
        The minimiser with the lexicographically least row-major adjacency encoding.
    """
    if n0 < 1 or not 0 <= d0 < n0 or (n0 * d0) % 2:
        raise DomainError(f"No {d0}-regular graph on {n0} vertices exists.")
    if n0 > max_order:
        raise SearchRefusedError(
            f"Regular search on {n0} vertices exceeds threshold {max_order}",
            2 ** binomial(n0, 2),
        )
    if d0 == 0:
        return 0, Graph(n0)
    logger.debug("Searching %d-regular graphs on %d vertices.", d0, n0)
    return _RegularSearch(n0, d0).run()


def _count_triangles(graph: Graph) -> int:
    return count_cliques(graph, 3).k(3)


def is_member_of_family(graph: Graph, beta: RationalLike,
                        max_order: int = MEMBERSHIP_MAX_ORDER,
                        regular_max_order: int = REGULAR_SEARCH_MAX_ORDER) -> bool:
    """Whether a graph belongs to the extremal family at beta.

    Every vertex of a class V_i with i >= 1 misses exactly its own class, so the candidate
    classes are the independent non-neighbourhoods; V_0 is what remains after choosing p - 1
    disjoint candidates. G[V_0] must then have the fewest triangles possible.

    Parameters
    ----------
    graph : Graph
        Graph to test.
    beta : Fraction, int or str
        Degree deficiency; beta * n must be an integer.
    max_order : int, optional
        Largest order tested.
    regular_max_order : int, optional
        Largest |V_0| for the exhaustive triangle minimum, needed only when G[V_0] has
        triangles and feasibility is not settled otherwise.

    Returns
    -------
    bool
        Membership.
    """
    beta = check_beta(beta)
    n = graph.n
    p, delta, n0, class_size, d0 = _sizes(n, beta)
    if n > max_order:
        raise SearchRefusedError(
            f"Membership test on {n} vertices exceeds threshold {max_order}",
            binomial(n, class_size) ** (p - 1),
        )
    if n % 2 == 1 and delta % 2 == 1:
        return False
    if any(degree != delta for degree in graph.degrees()):
        return False

    candidates = []
    for v in range(n):
        missing = ~graph.adj[v]
        if missing in candidates:
            continue
        if all(not (graph.adj[u] & missing).any() for u in members(missing)):
            candidates.append(missing)

    minimum = [None]

    def v0_is_minimal(chosen):
        v0 = bitarray(n)
        v0.setall(1)
        for cls in chosen:
            v0 &= ~cls
        if v0.count() != n0:
            return False
        triangles = _count_triangles(induced_subgraph(graph, v0))
        if triangles == 0:
            return True
        if _triangle_free_known(n0, d0):
            return False
        if minimum[0] is None:
            minimum[0], _ = k3_reg_min_bruteforce(n0, d0, regular_max_order)
        return triangles == minimum[0]

    def choose(start, chosen, used):
        if len(chosen) == p - 1:
            return v0_is_minimal(chosen)
        for k in range(start, len(candidates)):
            cls = candidates[k]
            if (cls & used).any():
                continue
            if choose(k + 1, chosen + [cls], used | cls):
                return True
        return False

    return choose(0, [], vertex_set(n))
