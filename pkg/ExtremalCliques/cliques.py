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

"""Clique enumeration and the clique-degree calculus."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
import logging
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple, Union

from bitarray import bitarray
from ExtremalCliques.graph import common_neighbors, Graph, members, min_degree
from ExtremalCliques.utils import (
    check_beta,
    derive_p,
    DomainError,
    GraphInputError,
    RationalLike,
    resolve_workers,
)

__all__ = [
    "CliqueStats",
    "CliqueDegreeRecord",
    "ClaimConstants",
    "BadFourClique",
    "BadFiveClique",
    "CliqueCalculus",
    "forward_masks",
    "count_cliques",
    "iter_cliques",
    "clique_degree",
    "degree_record",
    "is_heavy_free",
    "widetilde_D",
    "eta",
    "eta_tilde",
    "claim_constants",
    "classify_bad_4cliques",
    "bad_5cliques",
]

logger = logging.getLogger(__name__)

Clique = Tuple[int, ...]
CliqueLike = Union[bitarray, Iterable[int]]


@dataclass(frozen=True)
class CliqueStats:
    """Clique counts of a graph.

    ``counts[t - 1]`` is k_t, the number of t-cliques, for 1 <= t <= r_max.
    """

    counts: Tuple[int, ...]
    n: int

    @property
    def r_max(self) -> int:
        return len(self.counts)

    def k(self, t: int) -> int:
        """Number of t-cliques; zero above the clique number."""
        if t < 1:
            raise DomainError(f"Clique order must be positive, got {t}.")
        if t <= len(self.counts):
            return self.counts[t - 1]
        if 0 in self.counts:
            return 0
        raise DomainError(f"k_{t} was not computed; counts stop at t = {len(self.counts)}.")

    @property
    def clique_number(self) -> int:
        if 0 not in self.counts:
            raise DomainError(
                f"Clique number is at least {len(self.counts)}; recount with a larger r_max."
            )
        return self.counts.index(0)

    def as_dict(self) -> Dict[int, int]:
        return {t: count for t, count in enumerate(self.counts, start=1)}


@dataclass(frozen=True)
class CliqueDegreeRecord:
    """Degree data of a t-clique T: d(T), D(T) = d(T)/n and its split at (p - t + 1)beta."""

    clique: Clique
    d: int
    D: Fraction
    D_minus: Fraction
    D_plus: Fraction
    heavy: bool

    @property
    def size(self) -> int:
        return len(self.clique)


@dataclass(frozen=True)
class ClaimConstants:
    """Constants of the bad 4-clique structure for 1/4 <= beta < 1/3."""

    Delta: Fraction
    epsilon: Fraction
    gamma: Fraction
    epsilon_denominator: Fraction

    @property
    def denominator_positive(self) -> bool:
        return self.epsilon_denominator > 0


@dataclass(frozen=True)
class BadFourClique:
    """A 4-clique with negative eta and its structural diagnostics."""

    clique: Clique
    eta: Fraction
    D: Fraction
    heavy_edges: Tuple[Clique, ...]
    heavy_triangles: Tuple[Clique, ...]
    claim_i: bool
    claim_ii: bool
    claim_iii: bool

    @property
    def claims_hold(self) -> bool:
        return self.claim_i and self.claim_ii and self.claim_iii


@dataclass(frozen=True)
class BadFiveClique:
    """A 5-clique containing at least one bad 4-clique.

    ``b`` counts its bad 4-cliques and ``h`` its heavy edges.
    """

    clique: Clique
    b: int
    h: int
    share_vertex: bool
    eta_tilde_sum: Fraction

    @property
    def bound_holds(self) -> bool:
        if self.h >= 2 and self.b * (self.h - 1) > 2 * self.h:
            return False
        return not (self.share_vertex and self.b > 3)

    @property
    def positive(self) -> bool:
        return self.eta_tilde_sum > 0


def forward_masks(graph: Graph) -> List[bitarray]:
    """Neighbours of each vertex with a larger index."""
    masks = []
    for v in range(graph.n):
        mask = bitarray(graph.n)
        mask.setall(0)
        mask[v + 1:] = 1
        masks.append(graph.adj[v] & mask)
    return masks


def _count_from(forward, candidates, size, r_max, counts):
    # candidates extend a clique of the given size
    counts[size] += candidates.count()
    if size + 1 == r_max:
        return
    for v in members(candidates):
        extension = candidates & forward[v]
        if extension.any():
            _count_from(forward, extension, size + 1, r_max, counts)


def _count_chunk(graph: Graph, r_max: int, vertices: Sequence[int]) -> List[int]:
    forward = forward_masks(graph)
    counts = [0] * r_max
    for v in vertices:
        counts[0] += 1
        if r_max > 1 and forward[v].any():
            _count_from(forward, forward[v], 1, r_max, counts)
    return counts


def count_cliques(graph: Graph, r_max: int, n_jobs: int = 1) -> CliqueStats:
    """Count the t-cliques of a graph for every 1 <= t <= r_max.

    Parameters
    ----------
    graph : Graph
        Input graph.
    r_max : int
        Largest clique order to count, at least 1.
    n_jobs : int, optional
        Number of worker processes; the vertices are split by lowest clique vertex and the
        partial counts added. ``-1`` uses every CPU. Default=1.

    Returns
    -------
    CliqueStats
        Exact clique counts.
    """
    if r_max < 1:
        raise DomainError(f"r_max must be at least 1, got {r_max}.")
    workers = min(resolve_workers(n_jobs), graph.n)
    if workers == 1:
        return CliqueStats(tuple(_count_chunk(graph, r_max, range(graph.n))), graph.n)

    chunks = [list(range(graph.n))[k::workers] for k in range(workers)]
    logger.debug("Counting cliques up to order %d with %d workers.", r_max, workers)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        partial = list(executor.map(_count_chunk, [graph] * workers, [r_max] * workers, chunks))
    return CliqueStats(tuple(sum(column) for column in zip(*partial)), graph.n)


def iter_cliques(graph: Graph, t: int) -> Iterator[Clique]:
    """Yield every t-clique as an ascending tuple, in lexicographic order."""
    if t < 1:
        raise DomainError(f"Clique order must be positive, got {t}.")
    forward = forward_masks(graph)

    def extend(prefix, candidates):
        if len(prefix) == t:
            yield tuple(prefix)
            return
        if candidates.count() < t - len(prefix):
            return
        for v in members(candidates):
            yield from extend(prefix + [v], candidates & forward[v])

    everything = bitarray(graph.n)
    everything.setall(1)
    yield from extend([], everything)


def _as_clique(graph: Graph, clique: CliqueLike) -> Clique:
    if isinstance(clique, bitarray):
        vertices = tuple(members(clique))
    else:
        vertices = tuple(sorted(clique))
    if not vertices:
        raise GraphInputError("A clique must have at least one vertex.")
    if not graph.is_clique(vertices):
        raise GraphInputError(f"Vertices {list(vertices)} do not form a clique.")
    return vertices


def clique_degree(graph: Graph, clique: CliqueLike) -> int:
    """Number of (t+1)-cliques containing the t-clique, d(T)."""
    return common_neighbors(graph, _as_clique(graph, clique)).count()


class CliqueCalculus:
    """Clique-degree calculus of a graph at a fixed beta.

    Records are cached per clique, so repeated checks over the same graph share work.

    Parameters
    ----------
    graph : Graph
        Host graph.
    beta : Fraction, int or str
        Degree deficiency, 0 < beta < 1; p is derived from it.
    """

    def __init__(self, graph: Graph, beta: RationalLike):
        self.graph = graph
        self.beta = check_beta(beta)
        self.p = derive_p(self.beta)
        self.n = graph.n
        self._records = {}
        self._eta = {}
        self._stats = None

    def satisfies_min_degree(self) -> bool:
        return min_degree(self.graph) >= (1 - self.beta) * self.n

    def require_min_degree(self):
        """Raise DomainError unless the minimum degree is at least (1 - beta)n."""
        if not self.satisfies_min_degree():
            raise DomainError(
                f"Minimum degree {min_degree(self.graph)} is below (1 - beta)n = "
                f"{(1 - self.beta) * self.n} for beta = {self.beta}."
            )

    def threshold(self, t: int) -> Fraction:
        """The cap (p - t + 1)beta separating D_minus from D_plus."""
        return (self.p - t + 1) * self.beta

    def record(self, clique: CliqueLike) -> CliqueDegreeRecord:
        key = _as_clique(self.graph, clique)
        cached = self._records.get(key)
        if cached is not None:
            return cached
        t = len(key)
        if t > self.p + 1:
            raise DomainError(
                f"D_minus is defined for cliques of size at most p + 1 = {self.p + 1}, got {t}."
            )
        d = common_neighbors(self.graph, key).count()
        value = Fraction(d, self.n)
        cap = self.threshold(t)
        d_minus = min(value, cap)
        record = CliqueDegreeRecord(key, d, value, d_minus, value - d_minus, value > cap)
        self._records[key] = record
        return record

    def degree(self, clique: CliqueLike) -> int:
        return common_neighbors(self.graph, _as_clique(self.graph, clique)).count()

    def D(self, clique: CliqueLike) -> Fraction:
        return Fraction(self.degree(clique), self.n)

    def D_minus(self, clique: CliqueLike) -> Fraction:
        return self.record(clique).D_minus

    def D_plus(self, clique: CliqueLike) -> Fraction:
        return self.record(clique).D_plus

    def is_heavy(self, clique: CliqueLike) -> bool:
        return self.record(clique).heavy

    def tilde_D(self, clique: CliqueLike) -> Fraction:
        """Slack of the D_minus subclique sum at a (t+1)-clique S, for 2 <= t <= p."""
        key = _as_clique(self.graph, clique)
        t = len(key) - 1
        if not 2 <= t <= self.p:
            raise DomainError(
                f"tilde D needs a (t+1)-clique with 2 <= t <= p = {self.p}, got t = {t}."
            )
        subtotal = sum((self.D_minus(sub) for sub in combinations(key, t)), Fraction(0))
        return subtotal - (2 - (t + 1) * self.beta + (t - 1) * self.D_minus(key))

    def require_p3(self):
        if self.p != 3:
            raise DomainError(f"eta is defined for 1/4 <= beta < 1/3, got beta = {self.beta}.")

    def eta(self, clique: CliqueLike) -> Fraction:
        self.require_p3()
        key = _as_clique(self.graph, clique)
        if len(key) != 4:
            raise DomainError(f"eta is defined on 4-cliques, got {len(key)} vertices.")
        cached = self._eta.get(key)
        if cached is not None:
            return cached
        beta = self.beta
        coefficient = (4 * beta - 1) / (29 - 75 * beta)
        heavy_part = Fraction(0)
        for triangle in combinations(key, 3):
            plus = self.D_plus(triangle)
            heavy_part += plus / (plus + beta)
        value = self.tilde_D(key) - coefficient * heavy_part
        self._eta[key] = value
        return value

    def eta_tilde(self, clique: CliqueLike) -> Fraction:
        value = self.D(clique)
        if value == 0:
            raise DomainError("eta tilde needs a 4-clique with D(S) > 0.")
        return self.eta(clique) / value

    def counts(self, r_max: int) -> CliqueStats:
        if self._stats is None or self._stats.r_max < r_max:
            self._stats = count_cliques(self.graph, r_max)
        return self._stats

    def k(self, t: int) -> int:
        return self.counts(max(t, self.p + 2)).k(t)


def degree_record(graph: Graph, clique: CliqueLike, beta: RationalLike) -> CliqueDegreeRecord:
    """Degree record of a clique of size at most p + 1."""
    return CliqueCalculus(graph, beta).record(clique)


def is_heavy_free(graph: Graph, beta: RationalLike) -> bool:
    """Whether no clique of size at most p + 1 is heavy.

    Under the minimum-degree hypothesis this holds exactly when the graph has no (p+2)-clique.
    """
    calculus = CliqueCalculus(graph, beta)
    calculus.require_min_degree()
    for t in range(1, calculus.p + 2):
        for clique in iter_cliques(graph, t):
            if calculus.is_heavy(clique):
                return False
    return True


def widetilde_D(graph: Graph, clique: CliqueLike, beta: RationalLike) -> Fraction:
    return CliqueCalculus(graph, beta).tilde_D(clique)


def eta(graph: Graph, clique: CliqueLike, beta: RationalLike) -> Fraction:
    return CliqueCalculus(graph, beta).eta(clique)


def eta_tilde(graph: Graph, clique: CliqueLike, beta: RationalLike) -> Fraction:
    return CliqueCalculus(graph, beta).eta_tilde(clique)


def claim_constants(beta: RationalLike) -> ClaimConstants:
    """Delta, epsilon and gamma bounding bad 4-cliques, for 1/4 <= beta < 1/3.

    The sign of the epsilon denominator is reported rather than assumed.
    """
    beta = check_beta(beta)
    if derive_p(beta) != 3:
        raise DomainError(f"Claim constants need 1/4 <= beta < 1/3, got {beta}.")
    denominator = 150 * beta ** 2 - 137 * beta + 30
    epsilon = (4 * beta - 1) / denominator
    return ClaimConstants(
        Delta=(1 - 3 * beta) * (1 + epsilon),
        epsilon=epsilon,
        gamma=2 * (4 * beta - 1) / ((29 - 75 * beta) * beta),
        epsilon_denominator=denominator,
    )


def _classify(calculus: CliqueCalculus, clique: Clique, constants: ClaimConstants) -> BadFourClique:
    heavy_edges = tuple(e for e in combinations(clique, 2) if calculus.is_heavy(e))
    triangles = list(combinations(clique, 3))
    heavy_triangles = tuple(tri for tri in triangles if calculus.is_heavy(tri))
    light = [tri for tri in triangles if not calculus.is_heavy(tri)]
    value = calculus.D(clique)
    claim_iii = (
        len(light) == 2 and calculus.D(light[0]) + calculus.D(light[1]) < 2 * constants.Delta
    )
    return BadFourClique(
        clique=clique,
        eta=calculus.eta(clique),
        D=value,
        heavy_edges=heavy_edges,
        heavy_triangles=heavy_triangles,
        claim_i=len(heavy_edges) == 1 and len(heavy_triangles) == 2,
        claim_ii=0 < value < constants.Delta,
        claim_iii=claim_iii,
    )


def classify_bad_4cliques(graph: Graph, beta: RationalLike,
                          calculus: CliqueCalculus = None) -> List[BadFourClique]:
    """List the 4-cliques with negative eta, with their heavy structure.

    Parameters
    ----------
    graph : Graph
        Graph with minimum degree at least (1 - beta)n.
    beta : Fraction, int or str
        Degree deficiency with 1/4 <= beta < 1/3.
    calculus : CliqueCalculus, optional
        Shared calculus for the same graph and beta.

    Returns
    -------
    list of BadFourClique
        Bad 4-cliques in lexicographic order.
    """
    calculus = calculus or CliqueCalculus(graph, beta)
    calculus.require_p3()
    calculus.require_min_degree()
    constants = claim_constants(calculus.beta)
    return [
        _classify(calculus, clique, constants)
        for clique in iter_cliques(graph, 4)
        if calculus.eta(clique) < 0
    ]


def bad_5cliques(graph: Graph, beta: RationalLike,
                 calculus: CliqueCalculus = None) -> List[BadFiveClique]:
    """List the 5-cliques containing a bad 4-clique, with heavy-edge and bad counts."""
    calculus = calculus or CliqueCalculus(graph, beta)
    calculus.require_p3()
    calculus.require_min_degree()
    found = []
    for clique in iter_cliques(graph, 5):
        quads = list(combinations(clique, 4))
        b = sum(1 for quad in quads if calculus.eta(quad) < 0)
        if b == 0:
            continue
        heavy_edges = [e for e in combinations(clique, 2) if calculus.is_heavy(e)]
        share = any(set(e) & set(f) for e, f in combinations(heavy_edges, 2))
        total = sum((calculus.eta_tilde(quad) for quad in quads), Fraction(0))
        found.append(BadFiveClique(clique, b, len(heavy_edges), share, total))
    return found
