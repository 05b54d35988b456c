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

"""Verification reports and the base class for per-clique checks."""

from abc import ABC, abstractmethod
from dataclasses import asdict, dataclass, field, is_dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

from ExtremalCliques.cliques import CliqueCalculus, iter_cliques
from ExtremalCliques.graph import Graph, serialize_graph6
import numpy as np

__all__ = [
    "VerificationReport",
    "CliqueCheck",
    "reduce_reports",
    "to_jsonable",
]


def to_jsonable(value: Any) -> Any:
    """Convert report values to JSON types; fractions become exact strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Graph):
        return serialize_graph6(value)
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if hasattr(value, "to_dict"):
        return value.to_dict()
    if is_dataclass(value) and not isinstance(value, type):
        return to_jsonable(asdict(value))
    return value


@dataclass
class VerificationReport:
    """Outcome of one check, oriented so that slack = lhs - rhs >= 0 means it holds.

    Per-clique checks keep the instance of least slack in ``lhs``/``rhs`` and list only the
    violating cliques in ``witnesses``. ``conditions`` holds named side conditions, such as
    the structure required in an equality case.
    """

    check_id: str
    params: Dict[str, Any] = field(default_factory=dict)
    lhs: Fraction = Fraction(0)
    rhs: Fraction = Fraction(0)
    witnesses: List[Any] = field(default_factory=list)
    conditions: Dict[str, bool] = field(default_factory=dict)
    instances: int = 1
    equalities: int = 0
    children: List["VerificationReport"] = field(default_factory=list)

    @property
    def slack(self) -> Fraction:
        return self.lhs - self.rhs

    @property
    def holds(self) -> bool:
        return self.slack >= 0

    @property
    def equality(self) -> bool:
        return self.slack == 0

    @property
    def passed(self) -> bool:
        """Holds, every side condition is true and every child report passed."""
        return (
            self.holds
            and all(self.conditions.values())
            and all(child.passed for child in self.children)
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check_id": self.check_id,
            "params": to_jsonable(self.params),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "slack": str(self.slack),
            "holds": self.holds,
            "equality": self.equality,
            "passed": self.passed,
            "instances": self.instances,
            "equalities": self.equalities,
            "witnesses": to_jsonable(self.witnesses),
            "conditions": dict(self.conditions),
            "children": [child.to_dict() for child in self.children],
        }


def reduce_reports(check_id: str, children: Sequence[VerificationReport],
                   params: Dict[str, Any] = None,
                   conditions: Dict[str, bool] = None) -> VerificationReport:
    """Combine reports; the parent takes lhs and rhs from the child of least slack."""
    children = list(children)
    report = VerificationReport(check_id, params=dict(params or {}),
                                conditions=dict(conditions or {}), instances=0,
                                children=children)
    if children:
        tightest = min(children, key=lambda child: child.slack)
        report.lhs, report.rhs = tightest.lhs, tightest.rhs
    for child in children:
        report.instances += child.instances
        report.equalities += child.equalities
        report.witnesses.extend(child.witnesses)
    return report


class CliqueCheck(ABC):
    """Base class for inequalities evaluated on every clique of a given size.

    Parameters
    ----------
    calculus : CliqueCalculus
        Clique-degree calculus of the graph under test.
    """

    check_id = "clique_check"

    def __init__(self, calculus: CliqueCalculus):
        self.calculus = calculus

    @property
    def graph(self) -> Graph:
        return self.calculus.graph

    @property
    def beta(self) -> Fraction:
        return self.calculus.beta

    def run(self, size: int, params: Dict[str, Any] = None) -> VerificationReport:
        """
        Evaluate the check on every clique of the given size.

        Parameters
        ----------
        size: int
            Order of the cliques the inequality ranges over.
        params: dict
            Parameters recorded in the report.

        Returns
        -------
        report: VerificationReport
            The least-slack instance, the violating cliques, and every per-clique flag
            combined with logical and.
        """
        report = VerificationReport(self.check_id, params=dict(params or {}), instances=0)
        tightest = None
        for clique in iter_cliques(self.graph, size):
            lhs, rhs, flags = self.evaluate(clique)
            slack = lhs - rhs
            report.instances += 1
            if slack == 0:
                report.equalities += 1
            if tightest is None or slack < tightest[0]:
                tightest = (slack, lhs, rhs, clique)
            failed = sorted(name for name, value in flags.items() if not value)
            if slack < 0 or failed:
                report.witnesses.append(
                    {"clique": list(clique), "lhs": lhs, "rhs": rhs, "failed": failed}
                )
            for name, value in flags.items():
                report.conditions[name] = report.conditions.get(name, True) and value
        if tightest is not None:
            _, report.lhs, report.rhs, clique = tightest
            report.params["tightest_clique"] = list(clique)
        return report

    @abstractmethod
    def evaluate(self, clique: Tuple[int, ...]) -> Tuple[Fraction, Fraction, Dict[str, bool]]:
        """
        Evaluate the inequality on one clique.

        Parameters
        ----------
        clique: tuple
            Vertices of the clique in ascending order.

        Returns
        -------
        lhs, rhs: Fraction
            Both sides, oriented so that lhs >= rhs when the inequality holds.
        flags: dict
            Named side conditions evaluated on this clique.
        """
