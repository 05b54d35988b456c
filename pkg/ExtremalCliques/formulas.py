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

"""Exact formulas for extremal clique counts and their coefficient functions."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict

from ExtremalCliques.base import VerificationReport
from ExtremalCliques.utils import (
    as_fraction,
    binomial,
    check_beta,
    derive_p,
    DomainError,
    factorial_ratio,
    FamilyUndefinedError,
    RationalLike,
    require_integral,
)

__all__ = [
    "g_r",
    "predicted_k_r",
    "check_identity_g",
    "varphi",
    "CoefficientTable",
    "coefficient_table",
    "explicit_C",
    "r_of_beta",
    "epsilon_p",
    "coefficient_bound_applicable",
]


def g_r(beta: RationalLike, r: int) -> Fraction:
    r"""Leading coefficient of the r-clique count of the extremal family.

    .. math::
        g_r(\beta) = \binom{p-1}{r}\beta^r + \binom{p-1}{r-1}(1-(p-1)\beta)\beta^{r-1}
        + \frac12\binom{p-1}{r-2}(1-p\beta)(1-(p-1)\beta)\beta^{r-2}

    Parameters
    ----------
    beta : Fraction, int or str
        Degree deficiency, 0 < beta < 1.
    r : int
        Clique order, at least 1. g_1 = 1 and g_r = 0 for r > p + 1.

    Returns
    -------
    Fraction
        Exact value.
    """
    beta = check_beta(beta)
    if r < 1:
        raise DomainError(f"Clique order must be at least 1, got {r}.")
    p = derive_p(beta)
    # a vanishing binomial drops its term, so negative powers of beta never appear
    value = Fraction(0)
    coefficient = binomial(p - 1, r)
    if coefficient:
        value += coefficient * beta ** r
    coefficient = binomial(p - 1, r - 1)
    if coefficient:
        value += coefficient * (1 - (p - 1) * beta) * beta ** (r - 1)
    coefficient = binomial(p - 1, r - 2)
    if coefficient:
        value += Fraction(coefficient, 2) * (1 - p * beta) * (1 - (p - 1) * beta) * beta ** (r - 2)
    return value


def predicted_k_r(n: int, beta: RationalLike, r: int, k3_V0: int = 0) -> Fraction:
    """Number of r-cliques of a member of the extremal family.

    Parameters
    ----------
    n : int
        Order of the graph; beta * n must be an integer.
    beta : Fraction, int or str
        Degree deficiency.
    r : int
        Clique order, at least 1.
    k3_V0 : int, optional
        Number of triangles inside the class V_0. Default=0, the feasible case.

    Returns
    -------
    Fraction
        g_r(beta) n^r + C(p-1, r-3) (beta n)^(r-3) k3_V0: each triangle of V_0 extends by one
        vertex from each of r - 3 classes of size beta n.
    """
    beta = check_beta(beta)
    class_size = require_integral(beta * n, "beta * n")
    if n % 2 and (n - class_size) % 2:
        raise FamilyUndefinedError(f"n = {n} and (1 - beta)n = {n - class_size} are both odd.")
    if k3_V0 < 0:
        raise DomainError(f"k3_V0 must be nonnegative, got {k3_V0}.")
    p = derive_p(beta)
    value = g_r(beta, r) * n ** r
    coefficient = binomial(p - 1, r - 3)
    if coefficient and k3_V0:
        value += coefficient * class_size ** (r - 3) * k3_V0
    return value


def check_identity_g(beta: RationalLike, t: int, which: int) -> VerificationReport:
    """Evaluate one of the three identities relating consecutive g_t.

    Parameters
    ----------
    beta : Fraction, int or str
        Degree deficiency.
    t : int
        Order; 2 <= t <= p for identities 1 and 2, t = p >= 2 for identity 3.
    which : int
        1: (t+1)g_{t+1} = (1 - t beta)g_t + correction vanishing at beta = 1/(p+1);
        2: g_{t+1} in terms of g_t and g_{t+2};
        3: g_p/g_{p+1} in terms of g at beta' = beta/(1 - beta).

    Returns
    -------
    VerificationReport
        Both sides; the condition ``exact`` requires zero slack.
    """
    beta = check_beta(beta)
    p = derive_p(beta)
    params = {"beta": beta, "p": p, "t": t, "which": which}
    if which in (1, 2):
        if not 2 <= t <= p:
            raise DomainError(f"Identity {which} needs 2 <= t <= p = {p}, got t = {t}.")
    elif which == 3:
        if p < 2 or t != p:
            raise DomainError(f"Identity 3 needs t = p >= 2, got t = {t}, p = {p}.")
    else:
        raise DomainError(f"Unknown identity {which}; expected 1, 2 or 3.")

    if which == 1:
        lhs = (t + 1) * g_r(beta, t + 1)
        correction = (Fraction(binomial(p - 1, t - 2), 2) * ((p + 1) * beta - 1)
                      * (1 - (p - 1) * beta) * (1 - p * beta) * beta ** (t - 2))
        rhs = (1 - t * beta) * g_r(beta, t) + correction
    elif which == 2:
        denominator = t - 1 + (t + 1) * (p - 2 * t + 2) * beta
        if denominator == 0:
            raise DomainError(f"Identity 2 is singular at beta = {beta}, t = {t}.")
        lhs = g_r(beta, t + 1)
        rhs = ((1 - t * beta) * (p - t + 1) * beta * g_r(beta, t)
               + (t - 1) * (t + 2) * g_r(beta, t + 2)) / denominator
    else:
        shifted = beta / (1 - beta)
        params["beta_prime"] = shifted
        lhs = g_r(beta, p) / g_r(beta, p + 1)
        rhs = (1 + beta * g_r(shifted, p - 1) / ((1 - beta) * g_r(shifted, p))) / beta

    report = VerificationReport(f"identity_g{which}", params=params, lhs=lhs, rhs=rhs)
    report.conditions["exact"] = lhs == rhs
    report.equalities = int(lhs == rhs)
    return report


def varphi(beta: RationalLike, t: int, s: int) -> Fraction:
    """Threshold (1 - t beta) s!/t! + ((p+1)beta - 1)(s-2)!/(t-2)! for 2 <= t <= s <= p + 1."""
    beta = check_beta(beta)
    p = derive_p(beta)
    if not 2 <= t <= s <= p + 1:
        raise DomainError(f"varphi needs 2 <= t <= s <= p + 1 = {p + 1}, got t = {t}, s = {s}.")
    return ((1 - t * beta) * factorial_ratio(s, t)
            + ((p + 1) * beta - 1) * factorial_ratio(s - 2, t - 2))


@dataclass(frozen=True)
class CoefficientTable:
    """Coefficient functions C_t, A_t and B_t for 2 <= t <= p at a fixed beta."""

    p: int
    beta: Fraction
    C: Dict[int, Fraction]
    A: Dict[int, Fraction]
    B: Dict[int, Fraction]

    def rows(self):
        return [
            {"t": t, "C": self.C[t], "A": self.A[t], "B": self.B[t]}
            for t in range(2, self.p + 1)
        ]


def explicit_C(beta: RationalLike, t: int) -> Fraction:
    """Closed form of C_t: with j = p - t, the sum of i! beta^(i-j) / j! over 0 <= i < j."""
    beta = check_beta(beta)
    p = derive_p(beta)
    if not 2 <= t <= p:
        raise DomainError(f"C_t is defined for 2 <= t <= p = {p}, got t = {t}.")
    j = p - t
    return sum(
        (factorial_ratio(i, j) * beta ** (i - j) for i in range(j)), Fraction(0)
    )


def coefficient_table(beta: RationalLike) -> CoefficientTable:
    """Compute C_t downward from C_p = 0 and cross-check it against the closed form."""
    beta = check_beta(beta)
    p = derive_p(beta)
    if p < 2:
        raise DomainError(f"Coefficient functions need p >= 2, got p = {p} at beta = {beta}.")
    C = {p: Fraction(0)}
    for t in range(p, 2, -1):
        C[t - 1] = (C[t] + 1) / ((p - t + 1) * beta)
    for t in range(2, p + 1):
        if C[t] != explicit_C(beta, t):
            raise ArithmeticError(f"C_{t} recurrence and closed form disagree at beta = {beta}.")
    factor = (p + 1) * beta - 1
    A = {t: (t - 1) * factor * C[t] for t in range(2, p + 1)}
    B = {t: factor * C[t] for t in range(2, p + 1)}
    return CoefficientTable(p=p, beta=beta, C=C, A=A, B=B)


def r_of_beta(beta: RationalLike) -> int:
    """Smallest r >= 2 with A_t < 1 and B_t < (p - t)beta for every r <= t <= p.

    At t = p both B_p and (p - t)beta vanish, so only the A condition is applied there.
    """
    table = coefficient_table(beta)
    p = table.p

    def good(t):
        if table.A[t] >= 1:
            return False
        return t == p or table.B[t] < (p - t) * table.beta

    for r in range(2, p + 1):
        if all(good(t) for t in range(r, p + 1)):
            return r
    return p + 1


def epsilon_p(p: int, resolution: RationalLike = Fraction(1, 10000)) -> Fraction:
    """Lower estimate of epsilon_p by scanning beta upward from 1/(p+1).

    The scan moves in steps of ``resolution`` while r(beta) = 2 and beta < 1/p, and returns the
    distance from 1/(p+1) to the last grid point with r(beta) = 2.
    """
    if p < 2:
        raise DomainError(f"epsilon_p needs p >= 2, got {p}.")
    resolution = as_fraction(resolution)
    if resolution <= 0:
        raise DomainError(f"Resolution must be positive, got {resolution}.")
    start = Fraction(1, p + 1)
    beta = start
    last_good = start
    while beta < Fraction(1, p):
        if r_of_beta(beta) != 2:
            break
        last_good = beta
        beta += resolution
    return last_good - start


def coefficient_bound_applicable(beta: RationalLike) -> bool:
    """Whether the strengthened ratio bound applies: beta > 1/(p+1) and r(beta) = 2."""
    beta = check_beta(beta)
    p = derive_p(beta)
    if p < 2:
        return False
    return beta > Fraction(1, p + 1) and r_of_beta(beta) == 2
