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

"""Utils module."""

from fractions import Fraction
import math
import os
import re
from typing import Union
import warnings

from scipy.special import comb, factorial

__all__ = [
    "RationalLike",
    "GraphInputError",
    "Graph6ParseError",
    "DomainError",
    "FamilyUndefinedError",
    "UnsupportedConstructionError",
    "SearchRefusedError",
    "ParameterParseError",
    "BRUTE_FORCE_MAX_ORDER",
    "REGULAR_SEARCH_MAX_ORDER",
    "MEMBERSHIP_MAX_ORDER",
    "ISOMORPHISM_MAX_ORDER",
    "MAX_WORKERS_ENV",
    "as_fraction",
    "parse_beta",
    "check_beta",
    "derive_p",
    "binomial",
    "factorial_ratio",
    "require_integral",
    "resolve_workers",
]


RationalLike = Union[Fraction, int, str]

# exhaustive k_r(n, delta) search; callers may raise it to 10
BRUTE_FORCE_MAX_ORDER = 8
# exhaustive search over regular graphs for the inner class V_0
REGULAR_SEARCH_MAX_ORDER = 10
MEMBERSHIP_MAX_ORDER = 400
ISOMORPHISM_MAX_ORDER = 16
MAX_WORKERS_ENV = "EXTREMALCLIQUES_MAX_WORKERS"

_FRACTION_PATTERN = re.compile(r"^\s*(\d+)\s*/\s*(\d+)\s*$")
_INTEGER_PATTERN = re.compile(r"^\s*(\d+)\s*$")


class GraphInputError(ValueError):
    """Raised for malformed graph input."""


class Graph6ParseError(GraphInputError):
    """Raised when a graph6 payload cannot be decoded.

    Parameters
    ----------
    message : str
        Description of the failure.
    offset : int
        Byte offset in the payload where decoding failed.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class DomainError(ValueError):
    """Raised when a parameter lies outside the range where a quantity is defined."""


class FamilyUndefinedError(DomainError):
    """Raised when n and (1 - beta)n are both odd."""


class UnsupportedConstructionError(ValueError):
    """Raised when no triangle-minimal regular inner graph can be built."""


class SearchRefusedError(RuntimeError):
    """Raised when an exhaustive search exceeds its configured threshold.

    Parameters
    ----------
    message : str
        Description of the refused search.
    estimate : int
        Size of the unpruned search space.
    """

    def __init__(self, message: str, estimate: int):
        super().__init__(f"{message}; unpruned search space has {estimate} candidates")
        self.estimate = estimate


class ParameterParseError(ValueError):
    """Raised when a command-line parameter cannot be parsed."""


def as_fraction(value: RationalLike) -> Fraction:
    """Convert a value to an exact fraction.

    Parameters
    ----------
    value : Fraction, int or str
        Value to convert. Strings must be integers or "p/q". Floats are rejected since they
        cannot represent most rationals exactly.

    Returns
    -------
    Fraction
        The exact value.
    """
    if isinstance(value, bool):
        raise DomainError("Boolean values are not rationals.")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_beta(value)
    raise DomainError(f"Expected an exact rational, got {type(value).__name__} {value!r}.")


def parse_beta(text: str) -> Fraction:
    """Parse an exact fraction string such as "5/12".

    Decimal strings are refused so that the central parameter is never rounded.
    """
    match = _FRACTION_PATTERN.match(text)
    if match:
        numerator, denominator = int(match.group(1)), int(match.group(2))
        if denominator == 0:
            raise ParameterParseError(f"Zero denominator in {text!r}.")
        return Fraction(numerator, denominator)
    match = _INTEGER_PATTERN.match(text)
    if match:
        return Fraction(int(match.group(1)))
    raise ParameterParseError(f"Expected a fraction 'p/q', got {text!r}.")


def check_beta(beta: RationalLike) -> Fraction:
    """Return beta as a fraction, checking 0 < beta < 1."""
    beta = as_fraction(beta)
    if not 0 < beta < 1:
        raise DomainError(f"beta must lie in (0, 1), got {beta}.")
    return beta


def derive_p(beta: RationalLike) -> int:
    r"""Compute :math:`p = \lceil 1/\beta \rceil - 1` in exact arithmetic.

    The result satisfies :math:`1/(p+1) \le \beta < 1/p`.
    """
    beta = check_beta(beta)
    return math.ceil(1 / beta) - 1


def binomial(x: int, y: int) -> int:
    """Binomial coefficient with C(x, y) = 0 whenever x < y or y < 0."""
    if y < 0 or x < y or x < 0:
        return 0
    return int(comb(x, y, exact=True))


def factorial_ratio(a: int, b: int) -> Fraction:
    """Return a!/b! exactly for nonnegative integers a and b."""
    if a < 0 or b < 0:
        raise DomainError(f"Factorials of negative integers are undefined: {a}!/{b}!.")
    return Fraction(int(factorial(a, exact=True)), int(factorial(b, exact=True)))


def require_integral(value: Fraction, name: str) -> int:
    """Return value as an int, raising DomainError if it is not integral."""
    if Fraction(value).denominator != 1:
        raise DomainError(f"{name} must be an integer, got {value}.")
    return int(value)


def resolve_workers(n_jobs: int) -> int:
    """Resolve an sklearn-style ``n_jobs`` value to a worker count.

    ``-1`` means one worker per CPU. The environment variable named by ``MAX_WORKERS_ENV``
    caps the result.
    """
    if n_jobs == 0:
        raise DomainError("n_jobs must be nonzero.")
    cpus = os.cpu_count() or 1
    workers = cpus if n_jobs < 0 else n_jobs
    cap = os.environ.get(MAX_WORKERS_ENV)
    if cap:
        try:
            cap = int(cap)
        except ValueError as err:
            raise ParameterParseError(
                f"{MAX_WORKERS_ENV} must be an integer, got {cap!r}."
            ) from err
        if cap >= 1 and workers > cap:
            warnings.warn(f"Worker count {workers} capped to {cap} by {MAX_WORKERS_ENV}.")
            workers = cap
    return max(1, workers)
