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

"""Exhaustive searches, random test graphs and isomorphism testing."""

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
import logging
import math
from typing import Any, Dict, List, Optional, Tuple
import warnings

from bitarray import bitarray
from ExtremalCliques.base import VerificationReport
from ExtremalCliques.cliques import count_cliques, is_heavy_free
from ExtremalCliques.construction import extremal_params, Feasibility, is_member_of_family
from ExtremalCliques.formulas import g_r
from ExtremalCliques.graph import (
    Graph,
    members,
    parse_graph6,
    serialize_graph6,
    vertex_set,
)
from ExtremalCliques.utils import (
    binomial,
    BRUTE_FORCE_MAX_ORDER,
    check_beta,
    derive_p,
    DomainError,
    ISOMORPHISM_MAX_ORDER,
    RationalLike,
    require_integral,
    resolve_workers,
    SearchRefusedError,
)
from ExtremalCliques.verifier import run_suite
import numpy as np
import pandas as pd

__all__ = [
    "MinDegreeMode",
    "SearchResult",
    "brute_force_k_r",
    "naive_clique_counts",
    "random_graph_min_degree",
    "are_isomorphic",
    "check_extremal_uniqueness",
    "sweep",
]

logger = logging.getLogger(__name__)


class MinDegreeMode(Enum):
    """Which graphs an exhaustive search ranges over."""

    EXACTLY = "exactly"
    AT_LEAST = "at-least"


@dataclass
class SearchResult:
    """Outcome of an exhaustive k_r(n, delta) search.

    ``minimum`` is None when no graph has the requested minimum degree. ``witnesses`` are
    pairwise non-isomorphic graphs attaining the minimum.
    """

    n: int
    delta: int
    r: int
    mode: MinDegreeMode
    minimum: Optional[int]
    witnesses: List[Graph] = field(default_factory=list)
    graphs_scanned: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "delta": self.delta,
            "r": self.r,
            "mode": self.mode.value,
            "minimum": self.minimum,
            "witnesses": [serialize_graph6(graph) for graph in self.witnesses],
            "graphs_scanned": self.graphs_scanned,
        }


class _MinCliqueSearch:
    """Branch and bound over the upper-triangle pairs, row by row.

    Vertex 0 has a fixed neighbourhood; vertex degrees must be non-increasing in index order,
    so every isomorphism class keeps at least one labelling.
    """

    def __init__(self, n: int, delta: int, r: int, exact: bool, row0: Tuple[int, ...]):
        self.n = n
        self.delta = delta
        self.r = r
        self.exact = exact
        self.rows = [vertex_set(n) for _ in range(n)]
        self.deg = [0] * n
        self.remaining = [n - 1] * n
        self.pairs = [(i, j) for i in range(1, n) for j in range(i + 1, n)]
        self.value = n if r == 1 else 0
        self.best = None
        self.witnesses = []
        self.scanned = 0
        for j in range(1, n):
            self.remaining[0] -= 1
            self.remaining[j] -= 1
            if j in row0:
                self.value += self._add(0, j)

    def _within(self, candidates: bitarray, t: int) -> int:
        if t == 0:
            return 1
        if t == 1:
            return candidates.count()
        total = 0
        for v in members(candidates):
            rest = candidates & self.rows[v]
            rest[:v + 1] = 0
            total += self._within(rest, t - 1)
        return total

    def _add(self, i: int, j: int) -> int:
        if self.r == 1:
            added = 0
        elif self.r == 2:
            added = 1
        else:
            added = self._within(self.rows[i] & self.rows[j], self.r - 2)
        self.rows[i][j] = 1
        self.rows[j][i] = 1
        self.deg[i] += 1
        self.deg[j] += 1
        return added

    def _remove(self, i: int, j: int):
        self.rows[i][j] = 0
        self.rows[j][i] = 0
        self.deg[i] -= 1
        self.deg[j] -= 1

    def _ordered(self, i: int) -> bool:
        return i == 0 or self.deg[i] <= self.deg[i - 1]

    def run(self):
        self._search(0)
        return self

    def _search(self, k: int):
        if self.best is not None and self.value > self.best:
            return
        if k == len(self.pairs):
            self._leaf()
            return
        n, delta, deg, remaining = self.n, self.delta, self.deg, self.remaining
        i, j = self.pairs[k]
        remaining[i] -= 1
        remaining[j] -= 1
        row_done = j == n - 1
        if (deg[i] + remaining[i] >= delta and deg[j] + remaining[j] >= delta
                and (not row_done or self._ordered(i))):
            self._search(k + 1)
        added = self._add(i, j)
        self.value += added
        if self._ordered(i) and not (self.exact and deg[n - 1] > delta):
            self._search(k + 1)
        self.value -= added
        self._remove(i, j)
        remaining[i] += 1
        remaining[j] += 1

    def _leaf(self):
        n, deg = self.n, self.deg
        if n > 1 and deg[n - 1] > deg[n - 2]:
            return
        self.scanned += 1
        if min(deg) < self.delta or (self.exact and deg[n - 1] != self.delta):
            return
        graph = Graph._from_rows([bitarray(row) for row in self.rows])
        if self.best is None or self.value < self.best:
            self.best = self.value
            self.witnesses = [graph]
        elif not any(are_isomorphic(graph, other) for other in self.witnesses):
            self.witnesses.append(graph)


def _search_chunk(n: int, delta: int, r: int, exact: bool,
                  row0: Tuple[int, ...]) -> Tuple[Optional[int], List[str], int]:
    search = _MinCliqueSearch(n, delta, r, exact, row0).run()
    return search.best, [serialize_graph6(graph) for graph in search.witnesses], search.scanned


def brute_force_k_r(n: int, delta: int, r: int, mode: MinDegreeMode = MinDegreeMode.EXACTLY,
                    max_order: int = BRUTE_FORCE_MAX_ORDER, n_jobs: int = 1) -> SearchResult:
    """Minimum number of r-cliques over all graphs on n vertices with minimum degree delta.

    Parameters
    ----------
    n : int
        Number of vertices.
    delta : int
        Minimum degree, 0 <= delta < n.
    r : int
        Clique order, at least 1.
    mode : MinDegreeMode, optional
        EXACTLY ranges over graphs of minimum degree exactly delta, AT_LEAST over minimum degree
        at least delta. Default=EXACTLY.
    max_order : int, optional
        Largest n searched.
    n_jobs : int, optional
        Number of worker processes; the search is split by the neighbourhood of vertex 0.

    Returns
    -------
    SearchResult
        Exact minimum and its non-isomorphic witnesses.
    """
    if n < 1 or not 0 <= delta < n:
        raise DomainError(f"Need n >= 1 and 0 <= delta < n, got n = {n}, delta = {delta}.")
    if r < 1:
        raise DomainError(f"Clique order must be at least 1, got {r}.")
    mode = MinDegreeMode(mode)
    if n > max_order:
        raise SearchRefusedError(
            f"Exhaustive search on {n} vertices exceeds threshold {max_order}",
            2 ** binomial(n, 2),
        )
    exact = mode is MinDegreeMode.EXACTLY
    chunks = [
        row0
        for size in range(n - 1, max(delta, 0) - 1, -1)
        for row0 in combinations(range(1, n), size)
    ]
    workers = min(resolve_workers(n_jobs), max(len(chunks), 1))
    logger.info("Searching k_%d(%d, %d) in mode %s over %d first rows with %d workers.",
                r, n, delta, mode.value, len(chunks), workers)
    arguments = ([n] * len(chunks), [delta] * len(chunks), [r] * len(chunks),
                 [exact] * len(chunks), chunks)
    if workers == 1:
        partial = list(map(_search_chunk, *arguments))
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            partial = list(executor.map(_search_chunk, *arguments))

    found = [best for best, _, _ in partial if best is not None]
    minimum = min(found) if found else None
    witnesses = []
    for best, encoded, _ in partial:
        if best is None or best != minimum:
            continue
        for text in encoded:
            graph = parse_graph6(text)
            if not any(are_isomorphic(graph, other) for other in witnesses):
                witnesses.append(graph)
    scanned = sum(count for _, _, count in partial)
    logger.debug("Scanned %d graphs; minimum %s with %d witnesses.",
                 scanned, minimum, len(witnesses))
    return SearchResult(n, delta, r, mode, minimum, witnesses, scanned)


def naive_clique_counts(graph: Graph, r_max: int) -> Tuple[int, ...]:
    """k_1, ..., k_(r_max) by testing every vertex subset."""
    return tuple(
        sum(1 for subset in combinations(range(graph.n), t) if graph.is_clique(subset))
        for t in range(1, r_max + 1)
    )


def random_graph_min_degree(n: int, delta: int, seed: int = None) -> Graph:
    """Random edge-minimal graph of minimum degree exactly delta.

    Starting from K_n, edges whose endpoints both have degree above delta are removed one at a
    time, chosen uniformly with a seeded generator, until none is left.
    """
    if n < 1 or not 0 <= delta < n:
        raise DomainError(f"Need n >= 1 and 0 <= delta < n, got n = {n}, delta = {delta}.")
    rng = np.random.default_rng(seed)
    rows = [vertex_set(n, (u for u in range(n) if u != v)) for v in range(n)]
    deg = [n - 1] * n
    while True:
        removable = [
            (u, v)
            for u in range(n) if deg[u] > delta
            for v in members(rows[u]) if v > u and deg[v] > delta
        ]
        if not removable:
            break
        u, v = removable[int(rng.integers(len(removable)))]
        rows[u][v] = 0
        rows[v][u] = 0
        deg[u] -= 1
        deg[v] -= 1
    return Graph._from_rows(rows)


def _refine(first: Graph, second: Graph):
    # colour refinement run on both graphs with a shared palette
    colours = (first.degrees(), second.degrees())
    classes = len(set(colours[0]) | set(colours[1]))
    while True:
        signatures = [
            [(colour[v], tuple(sorted(colour[u] for u in graph.neighbors(v))))
             for v in range(graph.n)]
            for graph, colour in zip((first, second), colours)
        ]
        palette = {
            signature: index
            for index, signature in enumerate(sorted(set(signatures[0]) | set(signatures[1])))
        }
        colours = tuple([palette[signature] for signature in sigs] for sigs in signatures)
        if Counter(colours[0]) != Counter(colours[1]):
            return None
        if len(palette) == classes:
            return colours
        classes = len(palette)


def are_isomorphic(first: Graph, second: Graph,
                   max_order: int = ISOMORPHISM_MAX_ORDER) -> bool:
    """Decide isomorphism by colour refinement followed by backtracking.

    Parameters
    ----------
    first, second : Graph
        Graphs to compare.
    max_order : int, optional
        Orders above this still get an exact answer, with a warning about running time.

    Returns
    -------
    bool
        Whether some bijection of the vertices maps the edges of one graph onto the other.
    """
    if first.n != second.n or first.edge_count() != second.edge_count():
        return False
    if sorted(first.degrees()) != sorted(second.degrees()):
        return False
    n = first.n
    if n > max_order:
        warnings.warn(f"Isomorphism test on {n} vertices may be slow (advised limit {max_order}).")
    colours = _refine(first, second)
    if colours is None:
        return False
    left, right = colours
    sizes = Counter(left)
    order = sorted(range(n), key=lambda v: (sizes[left[v]], left[v], v))
    mapping = {}
    used = [False] * n

    def extend(k):
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used[w] or right[w] != left[v]:
                continue
            if all(first.has_edge(v, u) == second.has_edge(w, mapping[u]) for u in order[:k]):
                mapping[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                used[w] = False
                del mapping[v]
        return False

    return extend(0)


def check_extremal_uniqueness(n: int, beta: RationalLike, r: int,
                              mode: MinDegreeMode = MinDegreeMode.EXACTLY,
                              max_order: int = BRUTE_FORCE_MAX_ORDER,
                              n_jobs: int = 1) -> VerificationReport:
    """Compare k_r(n, (1 - beta)n) with g_r(beta)n^r by exhaustive search.

    Parameters
    ----------
    n : int
        Order; beta * n must be an integer.
    beta : Fraction, int or str
        Degree deficiency.
    r : int
        Clique order.
    mode : MinDegreeMode, optional
        Minimum degree interpretation of the search.
    max_order : int, optional
        Largest n searched.
    n_jobs : int, optional
        Worker processes for the search.

    Returns
    -------
    VerificationReport
        lhs is the minimum and rhs is g_r(beta)n^r. For 3 <= r <= p + 1, equality must hold
        exactly when (n, beta) is feasible, and every witness of an equality must be a member
        of the family. Each witness count is recounted independently.
    """
    beta = check_beta(beta)
    p = derive_p(beta)
    require_integral(beta * n, "beta * n")
    delta = int((1 - beta) * n)
    result = brute_force_k_r(n, delta, r, mode, max_order, n_jobs)
    if result.minimum is None:
        raise DomainError(f"No graph on {n} vertices has minimum degree {delta} in mode "
                          f"{result.mode.value}.")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        params = extremal_params(n, beta, strict=False)
    report = VerificationReport(
        "extremal_uniqueness",
        params={"n": n, "beta": beta, "r": r, "delta": delta, "mode": result.mode,
                "feasibility": params.feasibility, "graphs_scanned": result.graphs_scanned},
        lhs=Fraction(result.minimum),
        rhs=g_r(beta, r) * n ** r,
        witnesses=list(result.witnesses),
    )
    report.equalities = int(report.equality)
    report.conditions["witness_counts_verified"] = all(
        count_cliques(graph, r).k(r) == result.minimum for graph in result.witnesses
    )
    if 3 <= r <= p + 1 and params.feasibility is not Feasibility.UNKNOWN:
        report.conditions["equality_iff_feasible"] = (
            report.equality == (params.feasibility is Feasibility.FEASIBLE)
        )
    if report.equality:
        report.conditions["witnesses_in_family"] = all(
            is_member_of_family(graph, beta) for graph in result.witnesses
        )
    return report


def _label(report: VerificationReport) -> str:
    keys = [key for key in ("t", "s", "variant", "theorem") if key in report.params]
    if not keys:
        return report.check_id
    return f"{report.check_id}[" + ",".join(f"{key}={report.params[key]}" for key in keys) + "]"


def sweep(n: int, beta: RationalLike, trials: int, seed: int = 0,
          suite: str = "all") -> pd.DataFrame:
    """Run a check suite on seeded random graphs of minimum degree ceil((1 - beta)n).

    Trial ``i`` uses seed ``seed + i``. Alongside the suite, each trial records whether
    ``is_heavy_free`` agrees with k_(p+2) = 0.

    Returns
    -------
    pd.DataFrame
        One row per check with the number of runs, failures, equality cases and the seeds of the
        failing trials.
    """
    beta = check_beta(beta)
    if trials < 1:
        raise DomainError(f"A sweep needs at least one trial, got {trials}.")
    p = derive_p(beta)
    delta = math.ceil((1 - beta) * n)
    records = []
    for trial in range(trials):
        trial_seed = seed + trial
        graph = random_graph_min_degree(n, delta, trial_seed)
        for report in run_suite(graph, beta, suite):
            records.append({"check": _label(report), "seed": trial_seed,
                            "passed": report.passed, "equalities": report.equalities})
        agree = is_heavy_free(graph, beta) == (count_cliques(graph, p + 2).k(p + 2) == 0)
        records.append({"check": "heavy_free_equivalence", "seed": trial_seed,
                        "passed": agree, "equalities": 0})
        logger.debug("Sweep trial %d of %d done (seed %d).", trial + 1, trials, trial_seed)

    frame = pd.DataFrame(records, columns=["check", "seed", "passed", "equalities"])
    frame["failed"] = ~frame["passed"].astype(bool)
    summary = frame.groupby("check", sort=True).agg(
        runs=("seed", "size"), failures=("failed", "sum"), equalities=("equalities", "sum")
    )
    failing = frame[frame["failed"]].groupby("check")["seed"].apply(
        lambda seeds: " ".join(str(value) for value in seeds)
    )
    summary["failing_seeds"] = failing.reindex(summary.index).fillna("")
    summary = summary.reset_index()
    logger.info("Sweep at n = %d, beta = %s: %d checks, %d failures.",
                n, beta, len(summary), int(summary["failures"].sum()))
    return summary
