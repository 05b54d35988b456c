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

"""Exact verification of the clique-degree inequalities on concrete graphs."""

from fractions import Fraction
from itertools import combinations
import json
import logging
from typing import Dict, List, Sequence, Tuple
import warnings

from ExtremalCliques.base import CliqueCheck, reduce_reports, to_jsonable, VerificationReport
from ExtremalCliques.cliques import (
    bad_5cliques,
    claim_constants,
    classify_bad_4cliques,
    CliqueCalculus,
    iter_cliques,
)
from ExtremalCliques.construction import extremal_params, Feasibility, is_member_of_family
from ExtremalCliques.formulas import (
    coefficient_bound_applicable,
    coefficient_table,
    g_r,
    varphi,
)
from ExtremalCliques.graph import Graph
from ExtremalCliques.utils import (
    binomial,
    DomainError,
    factorial_ratio,
    RationalLike,
    SearchRefusedError,
)
import pandas as pd

__all__ = [
    "SUITES",
    "THEOREMS",
    "verify_keyprp",
    "verify_subclique_degree_sum",
    "verify_tilde_nonnegative",
    "verify_degree_bounds",
    "verify_tilde_sum_upper",
    "verify_clique_recurrence",
    "verify_heavy_sum_identity",
    "verify_p2_chain",
    "verify_p3_strengthened",
    "verify_eta_aggregate",
    "phi",
    "verify_phi",
    "verify_ratio_chain",
    "verify_coefficient_bound",
    "run_suite",
    "report_to_json",
    "report_to_rows",
    "reports_to_frame",
]

logger = logging.getLogger(__name__)

SUITES = ("basic", "p2", "p3", "phi", "ratio", "all")
THEOREMS = ("auto", "kp2_free", "p3", "top")


def _prepared(graph: Graph, beta: RationalLike, calculus: CliqueCalculus = None) -> CliqueCalculus:
    if calculus is None:
        calculus = CliqueCalculus(graph, beta)
    calculus.require_min_degree()
    return calculus


def _require_p(calculus: CliqueCalculus, p: int):
    if calculus.p != p:
        low, high = Fraction(1, p + 1), Fraction(1, p)
        raise DomainError(f"Check needs {low} <= beta < {high}, got beta = {calculus.beta}.")


def _total(calculus: CliqueCalculus, size: int, value) -> Fraction:
    return sum((value(clique) for clique in iter_cliques(calculus.graph, size)), Fraction(0))


def _all_degrees_delta(calculus: CliqueCalculus, vertices) -> bool:
    delta = (1 - calculus.beta) * calculus.n
    return all(calculus.graph.degree(v) == delta for v in vertices)


def _feasible_member(calculus: CliqueCalculus):
    """Membership of a feasible pair, or None when the search was refused."""
    graph, beta = calculus.graph, calculus.beta
    if (beta * graph.n).denominator != 1:
        return False
    try:
        if not is_member_of_family(graph, beta):
            return False
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            params = extremal_params(graph.n, beta, strict=False)
    except SearchRefusedError as err:
        logger.warning("Membership undecided: %s", err)
        return None
    return params.feasibility is Feasibility.FEASIBLE


def _equality_member_condition(report: VerificationReport, calculus: CliqueCalculus,
                               name: str = "equality_implies_feasible_member"):
    if not report.equality:
        report.conditions[name] = True
        return
    member = _feasible_member(calculus)
    if member is None:
        report.params["membership"] = "undecided"
    else:
        report.conditions[name] = member


def verify_keyprp(values: Sequence[Tuple[RationalLike, RationalLike]], M: RationalLike,
                  m: RationalLike) -> VerificationReport:
    """Check sum f g <= m sum f + M sum g - m M |A| for f <= M and g >= m.

    Parameters
    ----------
    values : sequence of (f, g)
        Values of the two functions on each element of A.
    M : Fraction
        Upper bound of f.
    m : Fraction
        Lower bound of g.

    Returns
    -------
    VerificationReport
        Slack equals the sum of (M - f)(g - m); equality holds exactly when every element has
        f = M or g = m.
    """
    M, m = Fraction(M), Fraction(m)
    pairs = [(Fraction(f), Fraction(g)) for f, g in values]
    for index, (f, g) in enumerate(pairs):
        if f > M or g < m:
            raise DomainError(f"Pair {index} = ({f}, {g}) violates f <= {M} or g >= {m}.")
    lhs = (m * sum((f for f, _ in pairs), Fraction(0)) + M * sum((g for _, g in pairs), Fraction(0))
           - m * M * len(pairs))
    rhs = sum((f * g for f, g in pairs), Fraction(0))
    report = VerificationReport("keyprp", params={"M": M, "m": m, "size": len(pairs)},
                                lhs=lhs, rhs=rhs)
    extremes = all(f == M or g == m for f, g in pairs)
    report.conditions["equality_iff_extremes"] = (lhs == rhs) == extremes
    report.conditions["slack_is_product_sum"] = lhs - rhs == sum(
        ((M - f) * (g - m) for f, g in pairs), Fraction(0)
    )
    report.equalities = int(lhs == rhs)
    return report


class _SubcliqueDegreeSum(CliqueCheck):
    check_id = "subclique_degree_sum"

    def __init__(self, calculus, t, variant):
        super().__init__(calculus)
        self.t = t
        self.variant = variant
        self.value = calculus.D if variant == "D" else calculus.D_minus

    def evaluate(self, clique):
        s, t, beta = len(clique), self.t, self.beta
        lhs = sum((self.value(sub) for sub in combinations(clique, t)), Fraction(0))
        rhs = ((1 - beta) * s * binomial(s - 2, t - 1) - (t - 1) * binomial(s - 1, t)
               + binomial(s - 2, t - 2) * self.value(clique))
        flags = {}
        if self.variant == "D":
            flags["equality_implies_degree_delta"] = (
                lhs != rhs or _all_degrees_delta(self.calculus, clique)
            )
        return lhs, rhs, flags


def verify_subclique_degree_sum(graph: Graph, beta: RationalLike, s: int, t: int,
                                variant: str = "D",
                                calculus: CliqueCalculus = None) -> VerificationReport:
    """Lower bound on the sum of D(T) over the t-subcliques T of every s-clique.

    The ``D_minus`` variant replaces D with D_minus and needs s <= p + 1. For the ``D``
    variant, equality forces every vertex of S to have degree (1 - beta)n.
    """
    calculus = _prepared(graph, beta, calculus)
    if variant not in ("D", "D_minus"):
        raise DomainError(f"Unknown variant {variant!r}; expected 'D' or 'D_minus'.")
    if not 2 <= t < s:
        raise DomainError(f"Subclique sums need 2 <= t < s, got t = {t}, s = {s}.")
    if variant == "D_minus" and s > calculus.p + 1:
        raise DomainError(f"The D_minus variant needs s <= p + 1 = {calculus.p + 1}, got {s}.")
    check = _SubcliqueDegreeSum(calculus, t, variant)
    return check.run(s, {"beta": calculus.beta, "s": s, "t": t, "variant": variant})


class _TildeNonnegative(CliqueCheck):
    check_id = "tilde_nonnegative"

    def evaluate(self, clique):
        return self.calculus.tilde_D(clique), Fraction(0), {}


def verify_tilde_nonnegative(graph: Graph, beta: RationalLike, t: int,
                             calculus: CliqueCalculus = None) -> VerificationReport:
    """tilde D(S) >= 0 on every (t+1)-clique, 2 <= t <= p."""
    calculus = _prepared(graph, beta, calculus)
    if not 2 <= t <= calculus.p:
        raise DomainError(f"tilde D needs 2 <= t <= p = {calculus.p}, got {t}.")
    return _TildeNonnegative(calculus).run(t + 1, {"beta": calculus.beta, "t": t})


class _DegreeBounds(CliqueCheck):
    check_id = "degree_bounds"

    def evaluate(self, clique):
        calculus, beta, p = self.calculus, self.beta, self.calculus.p
        s = len(clique)
        value = calculus.D(clique)
        flags = {"ii": True}
        bounded = s <= p + 1
        if bounded:
            flags.update({"iii": True, "iv": True, "v": True})
            plus_s = calculus.D_plus(clique)
        for t in range(1, s):
            for sub in combinations(clique, t):
                flags["ii"] &= value >= calculus.D(sub) - (s - t) * beta
                if not bounded:
                    continue
                plus_t = calculus.D_plus(sub)
                flags["iii"] &= plus_t <= plus_s <= plus_t + (s - t) * beta
                if calculus.is_heavy(sub):
                    flags["iv"] &= calculus.is_heavy(clique)
                else:
                    flags["v"] &= plus_s <= (s - t) * beta
        return value, 1 - s * beta, flags


def verify_degree_bounds(graph: Graph, beta: RationalLike, s: int,
                         calculus: CliqueCalculus = None) -> VerificationReport:
    """Basic bounds on D over every s-clique and its subcliques.

    The inequality is D(S) >= 1 - s beta. The flags record D(S) >= D(T) - (s - t)beta
    (``ii``), D_plus(T) <= D_plus(S) <= D_plus(T) + (s - t)beta (``iii``), heaviness passing
    up from T to S (``iv``) and D_plus(S) <= (s - t)beta below a light T (``v``). The last three
    apply for s <= p + 1.
    """
    calculus = _prepared(graph, beta, calculus)
    if s < 2:
        raise DomainError(f"Degree bounds need s >= 2, got {s}.")
    return _DegreeBounds(calculus).run(s, {"beta": calculus.beta, "s": s})


def _dichotomy_terms(calculus: CliqueCalculus, t: int):
    cap, floor = calculus.threshold(t), 1 - t * calculus.beta
    products = []
    for clique in iter_cliques(calculus.graph, t):
        record = calculus.record(clique)
        products.append((cap - record.D_minus) * (record.D - floor))
    return products


def verify_tilde_sum_upper(graph: Graph, beta: RationalLike, t: int,
                           calculus: CliqueCalculus = None) -> VerificationReport:
    """Upper bound on the sum of tilde D(S) over all (t+1)-cliques, 2 <= t <= p.

    Equality holds exactly when every t-clique has D_minus(T) = 1 - t beta or
    D_minus(T) = (p - t + 1)beta; the slack equals n times the sum of the products
    ((p - t + 1)beta - D_minus(T))(D(T) - (1 - t beta)).
    """
    calculus = _prepared(graph, beta, calculus)
    p, n, beta = calculus.p, calculus.n, calculus.beta
    if not 2 <= t <= p:
        raise DomainError(f"tilde D sums need 2 <= t <= p = {p}, got {t}.")
    k = calculus.k
    tilde_sum = _total(calculus, t + 1, calculus.tilde_D)
    plus_upper = _total(calculus, t + 1, calculus.D_plus)
    plus_lower = _total(calculus, t, calculus.D_plus)
    recurrence = ((t - 1 + (p - 2 * t + 2) * (t + 1) * beta) * k(t + 1)
                  - (1 - t * beta) * (p - t + 1) * beta * n * k(t)
                  - Fraction((t - 1) * (t + 2) * k(t + 2), n))
    bound = recurrence + (t - 1) * plus_upper - (1 - t * beta) * n * plus_lower

    products = _dichotomy_terms(calculus, t)
    report = VerificationReport("tilde_sum_upper", params={"beta": beta, "t": t},
                                lhs=bound, rhs=tilde_sum)
    report.equalities = int(report.equality)
    report.conditions["equality_iff_dichotomy"] = report.equality == all(
        product == 0 for product in products
    )
    report.conditions["slack_is_product_sum"] = report.slack == n * sum(products, Fraction(0))
    report.conditions["degree_sum_identity"] = (
        _total(calculus, t + 1, calculus.D) == Fraction((t + 2) * k(t + 2), n)
    )
    if k(p + 2) == 0:
        report.conditions["heavy_free_matches_recurrence"] = bound == recurrence
    return report


def verify_clique_recurrence(graph: Graph, beta: RationalLike, t: int,
                             calculus: CliqueCalculus = None) -> VerificationReport:
    """k_(t+1) lower bound from k_t and k_(t+2) in (p+2)-clique-free graphs."""
    calculus = _prepared(graph, beta, calculus)
    p, n, beta = calculus.p, calculus.n, calculus.beta
    if not 2 <= t <= p:
        raise DomainError(f"The recurrence needs 2 <= t <= p = {p}, got {t}.")
    k = calculus.k
    if k(p + 2) != 0:
        raise DomainError(f"The recurrence needs a K_{p + 2}-free graph.")
    lhs = (t - 1 + (p - 2 * t + 2) * (t + 1) * beta) * k(t + 1)
    rhs = ((1 - t * beta) * (p - t + 1) * beta * n * k(t)
           + Fraction((t - 1) * (t + 2) * k(t + 2), n))
    report = VerificationReport("clique_recurrence", params={"beta": beta, "t": t},
                                lhs=lhs, rhs=rhs)
    report.equalities = int(report.equality)
    return report


def verify_heavy_sum_identity(graph: Graph, beta: RationalLike,
                              calculus: CliqueCalculus = None) -> VerificationReport:
    """Sum of D_plus over (p+1)-cliques equals (p + 2)k_(p+2)/n, as D_minus vanishes there."""
    calculus = _prepared(graph, beta, calculus)
    p, n = calculus.p, calculus.n
    lhs = _total(calculus, p + 1, calculus.D_plus)
    rhs = Fraction((p + 2) * calculus.k(p + 2), n)
    report = VerificationReport("heavy_sum_identity", params={"beta": calculus.beta},
                                lhs=lhs, rhs=rhs)
    report.conditions["exact"] = lhs == rhs
    report.equalities = int(lhs == rhs)
    return report


class _TriangleEdgeSum(CliqueCheck):
    check_id = "triangle_edge_sum"

    def evaluate(self, clique):
        lhs = sum((self.calculus.D_minus(e) for e in combinations(clique, 2)), Fraction(0))
        return lhs, 2 - 3 * self.beta, {}


def verify_p2_chain(graph: Graph, beta: RationalLike,
                    calculus: CliqueCalculus = None) -> VerificationReport:
    """Chain of inequalities giving k_3 >= g_3(beta)n^3 for 1/3 <= beta < 1/2.

    Children, in order: the D_minus edge sum of every triangle, its aggregate over all
    triangles, the upper bound on n sum D_minus(e)D(e), k_3 >= (1 - 2beta)beta n k_2 and
    k_3 >= g_3 n^3. Equality in the last two forces a member of the family at a feasible pair.
    """
    calculus = _prepared(graph, beta, calculus)
    _require_p(calculus, 2)
    n, beta, k = calculus.n, calculus.beta, calculus.k
    params = {"beta": beta}

    per_triangle = _TriangleEdgeSum(calculus).run(3, params)
    weighted = n * _total(calculus, 2, lambda e: calculus.D_minus(e) * calculus.D(e))
    aggregate = VerificationReport("triangle_edge_sum_total", params=params,
                                   lhs=weighted, rhs=(2 - 3 * beta) * k(3))
    upper = VerificationReport("edge_product_upper", params=params,
                               lhs=3 * (1 - beta) * k(3) - (1 - 2 * beta) * beta * n * k(2),
                               rhs=weighted)
    ratio = VerificationReport("k3_k2", params=params,
                               lhs=Fraction(k(3)), rhs=(1 - 2 * beta) * beta * n * k(2))
    final = VerificationReport("k3_bound", params=params,
                               lhs=Fraction(k(3)), rhs=g_r(beta, 3) * n ** 3)
    children = [per_triangle, aggregate, upper, ratio, final]
    for child in children[1:]:
        child.equalities = int(child.equality)
    for child in (ratio, final):
        _equality_member_condition(child, calculus)
    return reduce_reports("p2_chain", children, params)


class _TriangleStrengthened(CliqueCheck):
    check_id = "triangle_strengthened"

    def evaluate(self, clique):
        calculus, beta = self.calculus, self.beta
        coefficient = (1 - Fraction(2) / (29 - 75 * beta)) * (4 * beta - 1) / (1 - 2 * beta)
        edge_part = Fraction(0)
        for e in combinations(clique, 2):
            plus = calculus.D_plus(e)
            edge_part += plus / (plus + beta)
        lhs = calculus.tilde_D(clique)
        rhs = coefficient * calculus.D_plus(clique) - (1 - 2 * beta) * edge_part
        equal = lhs == rhs
        return lhs, rhs, {
            "equality_implies_light_regular": not equal or (
                not calculus.is_heavy(clique) and _all_degrees_delta(calculus, clique)
            )
        }


def verify_p3_strengthened(graph: Graph, beta: RationalLike,
                           calculus: CliqueCalculus = None) -> VerificationReport:
    """Strengthened inequalities for 1/4 <= beta < 1/3.

    Children: (a) the per-triangle lower bound on tilde D(T) with the heavy-edge correction;
    (b) the k_3, k_2, k_4 aggregate, whose equality forces a (1 - beta)n-regular graph with
    D(e) in {1 - 2beta, 2beta} on every edge; (c) the k_4, k_3 bound, whose equality forces a
    member of the family at a feasible pair.
    """
    calculus = _prepared(graph, beta, calculus)
    _require_p(calculus, 3)
    n, beta, k = calculus.n, calculus.beta, calculus.k
    params = {"beta": beta}
    shift = (4 * beta - 1) / (29 - 75 * beta)
    plus_triangles = _total(calculus, 3, calculus.D_plus)

    per_triangle = _TriangleStrengthened(calculus).run(3, params)

    aggregate = VerificationReport(
        "k3_k2_k4", params=params,
        lhs=(1 + 3 * beta) * k(3) + 2 / (1 - 2 * beta) * (1 - 3 * beta + shift) * plus_triangles,
        rhs=2 * (1 - 2 * beta) * beta * n * k(2) + Fraction(4 * k(4), n),
    )
    aggregate.equalities = int(aggregate.equality)
    if aggregate.equality:
        edges_ok = all(
            calculus.D(e) in (1 - 2 * beta, 2 * beta) for e in iter_cliques(graph, 2)
        )
        aggregate.conditions["equality_implies_regular_two_edge_degrees"] = (
            _all_degrees_delta(calculus, range(n)) and edges_ok
        )
    else:
        aggregate.conditions["equality_implies_regular_two_edge_degrees"] = True

    top = VerificationReport(
        "k4_k3", params=params,
        lhs=(2 - 4 * beta) * k(4),
        rhs=(1 - 3 * beta) * beta * n * k(3) + (1 - 3 * beta + shift) * n * plus_triangles,
    )
    top.equalities = int(top.equality)
    _equality_member_condition(top, calculus)

    conditions = {
        "heavy_sum_identity": _total(calculus, 4, calculus.D_plus) == Fraction(5 * k(5), n)
    }
    return reduce_reports("p3_strengthened", [per_triangle, aggregate, top], params, conditions)


def verify_eta_aggregate(graph: Graph, beta: RationalLike,
                         calculus: CliqueCalculus = None) -> VerificationReport:
    """Sum of eta over all 4-cliques is nonnegative, for 1/4 <= beta < 1/3.

    Side conditions cover the structure of every bad 4-clique, positivity of the eta tilde sum
    and the bad-count bounds on every bad 5-clique, the sign of the epsilon denominator, the
    decomposition of n times the eta sum over 5-cliques, and that the eta sum never exceeds the
    slack of the k_4, k_3 bound.
    """
    calculus = _prepared(graph, beta, calculus)
    _require_p(calculus, 3)
    n, beta, k = calculus.n, calculus.beta, calculus.k
    constants = claim_constants(beta)
    eta_sum = _total(calculus, 4, calculus.eta)
    bad_fours = classify_bad_4cliques(graph, beta, calculus)
    bad_fives = bad_5cliques(graph, beta, calculus)

    isolated = sum(
        (calculus.eta(clique) for clique in iter_cliques(graph, 4) if calculus.D(clique) == 0),
        Fraction(0),
    )
    five_sum = sum(
        (sum((calculus.eta_tilde(quad) for quad in combinations(five, 4)), Fraction(0))
         for five in iter_cliques(graph, 5)),
        Fraction(0),
    )
    shift = (4 * beta - 1) / (29 - 75 * beta)
    top_slack = ((2 - 4 * beta) * k(4) - (1 - 3 * beta) * beta * n * k(3)
                 - (1 - 3 * beta + shift) * n * _total(calculus, 3, calculus.D_plus))

    report = VerificationReport(
        "eta_aggregate",
        params={"beta": beta, "bad_4cliques": len(bad_fours), "bad_5cliques": len(bad_fives),
                "Delta": constants.Delta, "epsilon": constants.epsilon,
                "gamma": constants.gamma},
        lhs=eta_sum, rhs=Fraction(0),
    )
    report.equalities = int(report.equality)
    report.conditions.update({
        "bad_4clique_structure": all(bad.claims_hold for bad in bad_fours),
        "bad_5clique_positive": all(bad.positive for bad in bad_fives),
        "bad_5clique_count_bound": all(bad.bound_holds for bad in bad_fives),
        "epsilon_denominator_positive": constants.denominator_positive,
        "heavy_sum_identity": _total(calculus, 4, calculus.D_plus) == Fraction(5 * k(5), n),
        "eta_decomposition": n * eta_sum == five_sum + n * isolated,
        "eta_sum_within_k4_k3_slack": eta_sum <= top_slack,
    })
    report.witnesses.extend(bad for bad in bad_fours if not bad.claims_hold)
    report.witnesses.extend(
        bad for bad in bad_fives if not (bad.positive and bad.bound_holds)
    )
    return report


def _phi_value(calculus: CliqueCalculus, clique: Tuple[int, ...], t: int,
               memo: Dict) -> Fraction:
    key = (clique, t)
    value = memo.get(key)
    if value is None:
        if len(clique) == t:
            value = calculus.D_minus(clique)
        else:
            value = sum(
                (_phi_value(calculus, sub, t, memo)
                 for sub in combinations(clique, len(clique) - 1)),
                Fraction(0),
            )
        memo[key] = value
    return value


def phi(graph: Graph, clique: Sequence[int], t: int, beta: RationalLike,
        calculus: CliqueCalculus = None) -> Fraction:
    """phi_t^s(S): D_minus(S) when |S| = t, else the sum of phi_t^(s-1) over (s-1)-subcliques."""
    calculus = calculus or CliqueCalculus(graph, beta)
    clique = tuple(sorted(clique))
    if not graph.is_clique(clique):
        raise DomainError(f"Vertices {list(clique)} do not form a clique.")
    if not 2 <= t <= len(clique) <= calculus.p + 1:
        raise DomainError(
            f"phi needs 2 <= t <= s <= p + 1 = {calculus.p + 1}, got t = {t}, s = {len(clique)}."
        )
    return _phi_value(calculus, clique, t, {})


class _PhiBase(CliqueCheck):
    check_id = "phi_base"

    def __init__(self, calculus, t):
        super().__init__(calculus)
        self.t = t

    def evaluate(self, clique):
        value = _phi_value(self.calculus, clique, self.t, {})
        expected = self.calculus.D_minus(clique)
        return value, expected, {"exact": value == expected}


class _PhiLowerBound(CliqueCheck):
    check_id = "phi_lower"

    def __init__(self, calculus, t, s, v0=None):
        super().__init__(calculus)
        self.t = t
        self.s = s
        self.v0 = set(v0) if v0 is not None else None
        self.cap = varphi(calculus.beta, t, s)
        self.memo = {}
        self.total = Fraction(0)

    def evaluate(self, clique):
        calculus, beta, t, s = self.calculus, self.beta, self.t, self.s
        value = _phi_value(calculus, clique, t, self.memo)
        capped = min(value, self.cap)
        self.total += capped
        rhs = (1 - t * beta) * factorial_ratio(s, t) + (
            calculus.D_minus(clique) - (1 - s * beta)
        ) * factorial_ratio(s - 2, t - 2)
        subclique_sum = sum(
            (calculus.D_minus(sub) for sub in combinations(clique, t)), Fraction(0)
        )
        matches = value == factorial_ratio(s - t, 0) * subclique_sum
        flags = {"recursion_matches_subclique_sum": matches}
        if self.v0 is not None:
            inside = len(self.v0.intersection(clique))
            if inside <= 1:
                flags["member_closed_form"] = value == (1 - t * beta) * factorial_ratio(s, t)
            elif inside == 2:
                flags["member_closed_form"] = value == self.cap
        return capped, rhs, flags


def _phi_upper(calculus: CliqueCalculus, t: int, s: int) -> Fraction:
    beta, p, n, k = calculus.beta, calculus.p, calculus.n, calculus.k

    def product(start):
        value = Fraction(1)
        for j in range(start, s):
            value *= 1 - j * beta
        return value

    factor = (p + 1) * beta - 1
    bound = varphi(beta, t, s - 1) * s * k(s)
    for i in range(t + 1, s):
        bound += 2 * factor * factorial_ratio(i - 3, t - 2) * k(i) * n ** (s - i) * product(i)
    bound += ((t + 1) * k(t + 1) - (p - t + 1) * beta * k(t) * n) * n ** (s - t - 1) * product(t)
    return bound


def verify_phi(graph: Graph, beta: RationalLike, t: int, s: int,
               partition: Sequence[Sequence[int]] = None,
               calculus: CliqueCalculus = None) -> VerificationReport:
    """Bounds on Phi_t^s = min(phi_t^s, varphi_t^s) over the s-cliques.

    Parameters
    ----------
    graph : Graph
        Graph with minimum degree at least (1 - beta)n.
    beta : Fraction, int or str
        Degree deficiency.
    t, s : int
        Orders with 2 <= t <= s <= p + 1.
    partition : sequence of sequences, optional
        Classes [V_0, V_1, ...] of a family member; when given, phi is compared against its
        closed form on the member.
    calculus : CliqueCalculus, optional
        Shared calculus for the same graph and beta.

    Returns
    -------
    VerificationReport
        For t = s, phi_t^t = D_minus on every clique. For t < s, children check the per-clique
        lower bound, the aggregate upper bound and, when s = p + 1, the aggregate lower bound.
    """
    calculus = _prepared(graph, beta, calculus)
    p, beta = calculus.p, calculus.beta
    if not 2 <= t <= s <= p + 1:
        raise DomainError(f"phi needs 2 <= t <= s <= p + 1 = {p + 1}, got t = {t}, s = {s}.")
    params = {"beta": beta, "t": t, "s": s}
    if t == s:
        return _PhiBase(calculus, t).run(s, params)

    lower_check = _PhiLowerBound(calculus, t, s, partition[0] if partition else None)
    lower = lower_check.run(s, params)
    upper = VerificationReport("phi_sum_upper", params=params,
                               lhs=_phi_upper(calculus, t, s), rhs=lower_check.total)
    upper.equalities = int(upper.equality)
    children = [lower, upper]
    if s == p + 1:
        coefficient = ((1 - t * beta) * factorial_ratio(p + 1, t)
                       - (1 - (p + 1) * beta) * factorial_ratio(p - 1, t - 2))
        top = VerificationReport("phi_sum_lower", params=params, lhs=lower_check.total,
                                 rhs=coefficient * calculus.k(p + 1))
        top.equalities = int(top.equality)
        children.append(top)
    return reduce_reports("phi", children, params)


def _select_theorem(calculus: CliqueCalculus, t: int, s: int, theorem: str) -> str:
    p = calculus.p
    heavy_free = calculus.k(p + 2) == 0
    if theorem == "auto":
        if heavy_free and 2 <= t < s <= p + 1:
            return "kp2_free"
        if s == p + 1 and 2 <= t <= p:
            return "top"
        if p == 3 and 2 <= t < s <= 4:
            return "p3"
        raise DomainError(
            f"No ratio theorem covers (t, s) = ({t}, {s}) at beta = {calculus.beta}: the graph "
            f"contains K_{p + 2} and s != p + 1."
        )
    if theorem == "kp2_free":
        if not heavy_free:
            raise DomainError(f"The K_{p + 2}-free chain needs a graph without K_{p + 2}.")
        if not 2 <= t < s <= p + 1:
            raise DomainError(f"The K_{p + 2}-free chain needs 2 <= t < s <= {p + 1}.")
    elif theorem == "p3":
        if p != 3 or not 2 <= t < s <= 4:
            raise DomainError("The p = 3 chain needs 1/4 <= beta < 1/3 and 2 <= t < s <= 4.")
    elif theorem == "top":
        if s != p + 1 or not 2 <= t <= p:
            raise DomainError(f"The (p+1)-clique chain needs s = p + 1 = {p + 1} and t <= p.")
    else:
        raise DomainError(f"Unknown theorem {theorem!r}; expected one of {THEOREMS}.")
    return theorem


def verify_ratio_chain(graph: Graph, beta: RationalLike,
                       pairs: Sequence[Tuple[int, int]] = None, theorem: str = "auto",
                       calculus: CliqueCalculus = None) -> VerificationReport:
    """Check k_s/(g_s n^s) >= k_t/(g_t n^t) for each requested pair.

    Parameters
    ----------
    graph : Graph
        Graph with minimum degree at least (1 - beta)n.
    beta : Fraction, int or str
        Degree deficiency.
    pairs : sequence of (t, s), optional
        Pairs to check. Default is every 2 <= t < s <= p + 1 for K_(p+2)-free graphs and
        (t, p + 1) for 2 <= t <= p otherwise.
    theorem : str, optional
        ``kp2_free``, ``p3``, ``top`` or ``auto``, which picks the first applicable in that
        order. Equality forces a member of the family for ``kp2_free`` and ``p3``, and for
        ``top`` when t = 2.
    calculus : CliqueCalculus, optional
        Shared calculus for the same graph and beta.

    Returns
    -------
    VerificationReport
        One child per pair.
    """
    calculus = _prepared(graph, beta, calculus)
    p, n, beta, k = calculus.p, calculus.n, calculus.beta, calculus.k
    if pairs is None:
        if k(p + 2) == 0:
            pairs = [(t, s) for s in range(3, p + 2) for t in range(2, s)]
        else:
            pairs = [(t, p + 1) for t in range(2, p + 1)]
    children = []
    for t, s in pairs:
        chosen = _select_theorem(calculus, t, s, theorem)
        child = VerificationReport(
            "ratio", params={"beta": beta, "t": t, "s": s, "theorem": chosen},
            lhs=Fraction(k(s)) / (g_r(beta, s) * n ** s),
            rhs=Fraction(k(t)) / (g_r(beta, t) * n ** t),
        )
        child.equalities = int(child.equality)
        if chosen != "top" or t == 2:
            _equality_member_condition(child, calculus)
        children.append(child)
    return reduce_reports("ratio_chain", children, {"beta": beta, "theorem": theorem})


def verify_coefficient_bound(graph: Graph, beta: RationalLike, t: int, s: int,
                             calculus: CliqueCalculus = None) -> VerificationReport:
    """Ratio bound strengthened by the D_plus mass of the t-cliques.

    Applies for 1/(p+1) < beta with r(beta) = 2 and 2 <= t < s <= p + 1.
    """
    calculus = _prepared(graph, beta, calculus)
    p, n, beta, k = calculus.p, calculus.n, calculus.beta, calculus.k
    if not coefficient_bound_applicable(beta):
        raise DomainError(f"The coefficient bound needs beta > 1/(p+1) and r(beta) = 2, "
                          f"got beta = {beta}.")
    if not 2 <= t < s <= p + 1:
        raise DomainError(f"The coefficient bound needs 2 <= t < s <= {p + 1}.")
    B = coefficient_table(beta).B[t]
    g_t = g_r(beta, t)
    mass = _total(calculus, t, calculus.D_plus)
    lhs = Fraction(k(s)) / (g_r(beta, s) * n ** s)
    rhs = (Fraction(k(t)) / (g_t * n ** t)
           + (1 - t * beta - B) / ((1 - t * beta) * (p - t + 1) * beta * g_t * n ** t) * mass)
    report = VerificationReport("coefficient_bound",
                                params={"beta": beta, "t": t, "s": s, "B_t": B},
                                lhs=lhs, rhs=rhs)
    report.equalities = int(report.equality)
    report.conditions["coefficient_nonnegative"] = 1 - t * beta - B >= 0
    return report


def run_suite(graph: Graph, beta: RationalLike, suite: str = "all",
              partition: Sequence[Sequence[int]] = None) -> List[VerificationReport]:
    """Run a named group of checks on one graph.

    ``basic`` covers the subclique sums, tilde D, the degree bounds and the aggregate identities;
    ``p2`` and ``p3`` the range-specific chains; ``phi`` the Phi bounds; ``ratio`` the ratio
    chain; ``all`` every group that applies at this beta.
    """
    if suite not in SUITES:
        raise DomainError(f"Unknown suite {suite!r}; expected one of {SUITES}.")
    calculus = _prepared(graph, beta)
    p = calculus.p
    heavy_free = calculus.k(p + 2) == 0
    reports = []
    if suite in ("basic", "all"):
        for s in range(3, p + 2):
            for t in range(2, s):
                for variant in ("D", "D_minus"):
                    reports.append(verify_subclique_degree_sum(graph, beta, s, t, variant,
                                                               calculus=calculus))
        for t in range(2, p + 1):
            reports.append(verify_tilde_nonnegative(graph, beta, t, calculus=calculus))
            reports.append(verify_tilde_sum_upper(graph, beta, t, calculus=calculus))
            if heavy_free:
                reports.append(verify_clique_recurrence(graph, beta, t, calculus=calculus))
        for s in range(2, p + 2):
            reports.append(verify_degree_bounds(graph, beta, s, calculus=calculus))
        reports.append(verify_heavy_sum_identity(graph, beta, calculus=calculus))
    if suite == "p2" or (suite == "all" and p == 2):
        reports.append(verify_p2_chain(graph, beta, calculus=calculus))
    if suite == "p3" or (suite == "all" and p == 3):
        reports.append(verify_p3_strengthened(graph, beta, calculus=calculus))
        reports.append(verify_eta_aggregate(graph, beta, calculus=calculus))
        reports.append(verify_ratio_chain(graph, beta, [(2, 3), (3, 4), (2, 4)], "p3",
                                          calculus=calculus))
    if suite in ("phi", "all"):
        for s in range(2, p + 2):
            for t in range(2, s + 1):
                reports.append(verify_phi(graph, beta, t, s, partition, calculus=calculus))
    if suite in ("ratio", "all"):
        reports.append(verify_ratio_chain(graph, beta, calculus=calculus))
    logger.debug("Suite %s ran %d checks on %r.", suite, len(reports), graph)
    return reports


def report_to_json(report: VerificationReport) -> str:
    """Stable JSON encoding: sorted keys, exact fractions as strings."""
    return json.dumps(report.to_dict(), sort_keys=True, indent=2)


def report_to_rows(report: VerificationReport, prefix: str = "") -> List[Dict]:
    """Flatten a report and its children into table rows."""
    check_id = f"{prefix}{report.check_id}"
    rows = [{
        "check_id": check_id,
        "params": json.dumps(to_jsonable(report.params), sort_keys=True),
        "lhs": str(report.lhs),
        "rhs": str(report.rhs),
        "slack": str(report.slack),
        "holds": report.holds,
        "equality": report.equality,
        "passed": report.passed,
        "instances": report.instances,
        "equalities": report.equalities,
        "violations": len(report.witnesses),
    }]
    for child in report.children:
        rows.extend(report_to_rows(child, f"{check_id}/"))
    return rows


def reports_to_frame(reports: Sequence[VerificationReport]) -> pd.DataFrame:
    rows = [row for report in reports for row in report_to_rows(report)]
    return pd.DataFrame(rows, columns=[
        "check_id", "params", "lhs", "rhs", "slack", "holds", "equality", "passed",
        "instances", "equalities", "violations",
    ])
