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

"""Testing for the command-line front end."""

from fractions import Fraction
import json

from ExtremalCliques.base import VerificationReport
from ExtremalCliques.cli import build_parser, main
from ExtremalCliques.construction import build_extremal
from ExtremalCliques.formulas import epsilon_p
from ExtremalCliques.graph import serialize_graph6, write_edge_list
from ExtremalCliques.test.common import K222, K444
from numpy.testing import assert_equal
import pytest


def run(capsys, *argv):
    """Run the command line and return the status with the parsed JSON output."""
    status = main(list(argv))
    out = capsys.readouterr().out
    return status, json.loads(out) if out.strip() else None


def test_parser_commands():
    """Testing the subcommands and their defaults."""
    parser = build_parser()
    args = parser.parse_args(["verify", "--construct", "--n", "8", "--beta", "1/4"])
    assert_equal(args.beta, Fraction(1, 4))
    assert_equal((args.suite, args.format, args.jobs), ("all", "json", 1))
    args = parser.parse_args(["epsilon", "--p", "2", "3"])
    assert_equal(args.p, [2, 3])
    assert_equal(args.resolution, Fraction(1, 10000))


def test_decimal_beta_rejected(capsys):
    """Testing that decimal parameters fail before any work."""
    with pytest.raises(SystemExit) as info:
        main(["gr", "--beta", "0.25"])
    assert_equal(info.value.code, 2)
    assert "fraction" in capsys.readouterr().err


def test_version(capsys):
    """Testing the version flag."""
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert_equal(info.value.code, 0)
    assert capsys.readouterr().out.startswith("extremal-cliques ")


def test_construct(capsys):
    """Testing construction output and its clique-count table."""
    status, document = run(capsys, "construct", "--n", "12", "--beta", "1/3")
    assert_equal(status, 0)
    assert_equal(sorted(document), ["config", "result", "status", "version"])
    result = document["result"]
    assert_equal(result["graph"], serialize_graph6(build_extremal(12, Fraction(1, 3))))
    assert_equal(result["params"]["feasibility"], "feasible")
    assert_equal(result["partition_sizes"], [8, 4])
    row = [row for row in result["counts"] if row["r"] == 3][0]
    assert_equal((row["k_r"], row["predicted"], row["matches"]), (64, "64", True))
    assert result["passed"]
    assert_equal(document["config"]["beta"], "1/3")


def test_construct_is_reproducible(capsys):
    """Testing that repeated runs give identical output."""
    argv = ["construct", "--n", "12", "--beta", "5/12", "--export", "edges"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert_equal(capsys.readouterr().out, first)
    result = json.loads(first)["result"]
    assert_equal(result["graph"], write_edge_list(build_extremal(12, Fraction(5, 12))))


def test_construct_errors(capsys):
    """Testing rejected parameters."""
    assert_equal(main(["construct", "--n", "5", "--beta", "2/5"]), 2)
    assert "extremal-cliques construct: error:" in capsys.readouterr().err
    assert_equal(main(["construct", "--n", "10", "--beta", "1/3"]), 2)
    assert_equal(main(["verify", "--beta", "1/3"]), 2)
    assert_equal(main(["brute", "--n", "9", "--delta", "2", "--r", "3"]), 2)
    assert "unpruned search space" in capsys.readouterr().err


def test_count(tmp_path, capsys):
    """Testing clique counts of graph files."""
    path = tmp_path / "octahedron.edges"
    path.write_text(write_edge_list(K222))
    status, document = run(capsys, "count", "--graph", str(path), "--r-max", "4")
    assert_equal(status, 0)
    assert_equal(document["result"][0]["counts"], {"1": 6, "2": 12, "3": 8, "4": 0})
    status = main(["count", "--graph", str(path), "--format", "csv"])
    assert_equal(status, 0)
    lines = capsys.readouterr().out.splitlines()
    assert_equal(lines[0], "graph,r,k_r")
    assert_equal(len(lines), 7)


def test_gr(capsys):
    """Testing the g_r table and identity checks."""
    status, document = run(capsys, "gr", "--beta", "1/4")
    assert_equal(status, 0)
    result = document["result"]
    assert_equal(result["p"], 3)
    assert_equal([row["g_r"] for row in result["g"]], ["1", "3/8", "1/16", "1/256", "0"])
    assert all(report["passed"] for report in result["identities"])
    assert_equal(len(result["coefficients"]), 2)
    status, document = run(capsys, "gr", "--beta", "1/2", "--r-max", "3")
    assert_equal(status, 0)
    assert "coefficients" not in document["result"]


def test_verify(tmp_path, capsys):
    """Testing suites on a file and on a constructed member."""
    path = tmp_path / "turan.g6"
    path.write_text(serialize_graph6(K444) + "\n")
    status, document = run(capsys, "verify", "--graph", str(path), "--beta", "1/3",
                           "--suite", "p2")
    assert_equal(status, 0)
    assert document["result"][0]["passed"]
    assert_equal(document["result"][0]["reports"][0]["check_id"], "p2_chain")
    status, _ = run(capsys, "verify", "--construct", "--n", "8", "--beta", "1/4",
                    "--suite", "p3")
    assert_equal(status, 0)
    output = tmp_path / "report.csv"
    status = main(["verify", "--construct", "--n", "12", "--beta", "5/12", "--format", "csv",
                   "--output", str(output)])
    assert_equal(status, 0)
    assert_equal(capsys.readouterr().out, "")
    assert output.read_text().startswith("graph,check_id,params")


def test_verify_violation(monkeypatch, capsys):
    """Testing the exit status of a violated check."""
    def violated(graph, beta, suite, partition):
        return [VerificationReport("synthetic", lhs=Fraction(0), rhs=Fraction(1))]

    monkeypatch.setattr("ExtremalCliques.cli.run_suite", violated)
    status, document = run(capsys, "verify", "--construct", "--n", "8", "--beta", "1/4")
    assert_equal(status, 1)
    assert_equal(document["status"], 1)
    assert not document["result"][0]["passed"]


def test_brute_and_uniqueness(capsys):
    """Testing the exhaustive search commands."""
    status, document = run(capsys, "brute", "--n", "6", "--delta", "4", "--r", "3")
    assert_equal(status, 0)
    assert_equal(document["result"]["minimum"], 8)
    assert_equal(len(document["result"]["witnesses"]), 1)
    status, document = run(capsys, "uniqueness", "--n", "6", "--beta", "1/3", "--r", "3")
    assert_equal(status, 0)
    assert_equal((document["result"]["lhs"], document["result"]["rhs"]), ("8", "8"))
    status = main(["uniqueness", "--n", "5", "--beta", "2/5", "--r", "3", "--format", "text"])
    assert_equal(status, 0)
    assert "extremal_uniqueness" in capsys.readouterr().out


def test_sweep_and_epsilon(capsys):
    """Testing the sweep and epsilon commands."""
    status, document = run(capsys, "sweep", "--n", "10", "--beta", "1/3", "--trials", "2",
                           "--suite", "basic")
    assert_equal(status, 0)
    assert all(row["failures"] == 0 for row in document["result"])
    status, document = run(capsys, "epsilon", "--p", "2", "3")
    assert_equal(status, 0)
    assert_equal([row["p"] for row in document["result"]], [2, 3])


def test_epsilon_computed_once(monkeypatch, capsys):
    """Testing that each epsilon bound is computed once and reported exactly."""
    calls = []

    def counted(p, resolution):
        calls.append(p)
        return epsilon_p(p, resolution)

    monkeypatch.setattr("ExtremalCliques.cli.epsilon_p", counted)
    status, document = run(capsys, "epsilon", "--p", "2", "3")
    assert_equal(status, 0)
    assert_equal(calls, [2, 3])
    assert_equal([row["epsilon_lower"] for row in document["result"]],
                 ["833/5000", "179/10000"])
