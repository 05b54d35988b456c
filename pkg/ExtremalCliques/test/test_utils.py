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

"""Testing for the rational parsing, binomial and worker helpers."""

from fractions import Fraction

from ExtremalCliques.utils import (
    as_fraction,
    binomial,
    check_beta,
    derive_p,
    DomainError,
    factorial_ratio,
    MAX_WORKERS_ENV,
    ParameterParseError,
    parse_beta,
    require_integral,
    resolve_workers,
)
from numpy.testing import assert_equal, assert_raises
import pytest


def test_parse_beta():
    """Testing exact parsing of fractions and integers."""
    assert_equal(parse_beta("5/12"), Fraction(5, 12))
    assert_equal(parse_beta(" 2 / 6 "), Fraction(1, 3))
    assert_equal(parse_beta("3"), Fraction(3))
    # decimals are ambiguous and rejected
    assert_raises(ParameterParseError, parse_beta, "0.25")
    assert_raises(ParameterParseError, parse_beta, "1/0")
    assert_raises(ParameterParseError, parse_beta, "-1/3")
    assert_raises(ParameterParseError, parse_beta, "one third")


def test_as_fraction():
    """Testing conversion of accepted rational types."""
    assert_equal(as_fraction(Fraction(1, 4)), Fraction(1, 4))
    assert_equal(as_fraction(2), Fraction(2))
    assert_equal(as_fraction("1/4"), Fraction(1, 4))
    assert_raises(DomainError, as_fraction, 0.25)
    assert_raises(DomainError, as_fraction, True)


def test_check_beta():
    """Testing the open unit interval for beta."""
    assert_equal(check_beta("1/3"), Fraction(1, 3))
    assert_raises(DomainError, check_beta, 0)
    assert_raises(DomainError, check_beta, 1)
    assert_raises(DomainError, check_beta, Fraction(3, 2))


def test_derive_p():
    """Testing p = ceil(1/beta) - 1 on interval ends and interiors."""
    cases = {
        Fraction(1, 2): 1,
        Fraction(2, 3): 1,
        Fraction(1, 3): 2,
        Fraction(2, 5): 2,
        Fraction(5, 12): 2,
        Fraction(1, 4): 3,
        Fraction(2, 7): 3,
        Fraction(9, 32): 3,
        Fraction(1, 5): 4,
        Fraction(1, 6): 5,
    }
    for beta, p in cases.items():
        assert_equal(derive_p(beta), p)
        # 1/(p+1) <= beta < 1/p
        assert Fraction(1, p + 1) <= beta < Fraction(1, p)


def test_binomial_and_factorial_ratio():
    """Testing exact binomials and factorial ratios."""
    assert_equal(binomial(5, 2), 10)
    assert_equal(binomial(2, 5), 0)
    assert_equal(binomial(3, -1), 0)
    assert_equal(binomial(0, 0), 1)
    assert_equal(factorial_ratio(5, 3), Fraction(20))
    assert_equal(factorial_ratio(3, 5), Fraction(1, 20))
    assert_equal(factorial_ratio(0, 0), Fraction(1))
    assert_raises(DomainError, factorial_ratio, -1, 2)


def test_require_integral():
    """Testing integrality of beta n."""
    assert_equal(require_integral(Fraction(1, 3) * 12, "beta * n"), 4)
    with pytest.raises(DomainError, match="beta \\* n"):
        require_integral(Fraction(1, 3) * 10, "beta * n")


def test_resolve_workers(monkeypatch):
    """Testing the worker count and its environment cap."""
    monkeypatch.delenv(MAX_WORKERS_ENV, raising=False)
    assert_equal(resolve_workers(1), 1)
    assert_equal(resolve_workers(3), 3)
    assert resolve_workers(-1) >= 1
    assert_raises(DomainError, resolve_workers, 0)
    monkeypatch.setenv(MAX_WORKERS_ENV, "2")
    with pytest.warns(UserWarning):
        assert_equal(resolve_workers(8), 2)
    assert_equal(resolve_workers(2), 2)
