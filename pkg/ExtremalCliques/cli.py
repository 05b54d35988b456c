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

"""Command-line front end: ``extremal-cliques <command> [options]``."""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Tuple

from ExtremalCliques._version import get_versions
from ExtremalCliques.base import to_jsonable
from ExtremalCliques.cliques import count_cliques
from ExtremalCliques.construction import build_extremal, extremal_params, extremal_partition
from ExtremalCliques.formulas import (
    check_identity_g,
    coefficient_table,
    epsilon_p,
    g_r,
    predicted_k_r,
)
from ExtremalCliques.graph import (
    Graph,
    graph_loader,
    induced_subgraph,
    serialize_graph6,
    write_edge_list,
)
from ExtremalCliques.oracle import (
    brute_force_k_r,
    check_extremal_uniqueness,
    MinDegreeMode,
    sweep,
)
from ExtremalCliques.utils import (
    BRUTE_FORCE_MAX_ORDER,
    derive_p,
    DomainError,
    GraphInputError,
    ParameterParseError,
    parse_beta,
    REGULAR_SEARCH_MAX_ORDER,
    SearchRefusedError,
    UnsupportedConstructionError,
)
from ExtremalCliques.verifier import reports_to_frame, run_suite, SUITES
import pandas as pd

__all__ = ["build_parser", "main"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_ERROR = 2

Outcome = Tuple[int, Any, pd.DataFrame]


def _rational(text: str):
    try:
        return parse_beta(text)
    except ParameterParseError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def _add_graph_source(parser: argparse.ArgumentParser):
    parser.add_argument("--graph", help="graph6 or edge-list file, optionally gzipped")
    parser.add_argument("--construct", action="store_true",
                        help="use the member of the family built from --n and --beta")
    parser.add_argument("--n", type=int, help="order of the constructed member")
    parser.add_argument("--max-order", type=int, default=REGULAR_SEARCH_MAX_ORDER,
                        help="largest |V_0| searched when constructing")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per task."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json",
                        help="output format (default: json)")
    common.add_argument("--output", help="write the report here instead of stdout")
    common.add_argument("--jobs", type=int, default=1,
                        help="worker processes; -1 uses every CPU")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="count", default=0,
                           help="log progress; repeat for debug output")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="log errors only")

    parser = argparse.ArgumentParser(
        prog="extremal-cliques",
        description="Exact clique counts in graphs of given order and minimum degree.",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {get_versions()['version']}")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("construct", parents=[common],
                              help="build and export a member of the extremal family")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--beta", type=_rational, required=True, help="exact fraction such as 1/3")
    sub.add_argument("--export", choices=("g6", "edges"), default="g6")
    sub.add_argument("--max-order", type=int, default=REGULAR_SEARCH_MAX_ORDER)
    sub.set_defaults(handler=_run_construct)

    sub = commands.add_parser("count", parents=[common], help="clique counts of graphs")
    _add_graph_source(sub)
    sub.add_argument("--beta", type=_rational, help="degree deficiency for --construct")
    sub.add_argument("--r-max", type=int, help="largest clique order counted")
    sub.set_defaults(handler=_run_count)

    sub = commands.add_parser("gr", parents=[common],
                              help="g_r(beta) table, identity checks and coefficients")
    sub.add_argument("--beta", type=_rational, required=True)
    sub.add_argument("--r-max", type=int, help="largest r tabulated (default p + 2)")
    sub.set_defaults(handler=_run_gr)

    sub = commands.add_parser("verify", parents=[common], help="run a check suite")
    _add_graph_source(sub)
    sub.add_argument("--beta", type=_rational, required=True)
    sub.add_argument("--suite", choices=SUITES, default="all")
    sub.set_defaults(handler=_run_verify)

    sub = commands.add_parser("brute", parents=[common],
                              help="exhaustive minimum of k_r over small graphs")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--delta", type=int, required=True)
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--mode", choices=[mode.value for mode in MinDegreeMode],
                     default=MinDegreeMode.EXACTLY.value)
    sub.add_argument("--max-order", type=int, default=BRUTE_FORCE_MAX_ORDER)
    sub.set_defaults(handler=_run_brute)

    sub = commands.add_parser("uniqueness", parents=[common],
                              help="compare the exhaustive minimum with g_r(beta)n^r")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--beta", type=_rational, required=True)
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--mode", choices=[mode.value for mode in MinDegreeMode],
                     default=MinDegreeMode.EXACTLY.value)
    sub.add_argument("--max-order", type=int, default=BRUTE_FORCE_MAX_ORDER)
    sub.set_defaults(handler=_run_uniqueness)

    sub = commands.add_parser("sweep", parents=[common],
                              help="run a check suite on seeded random graphs")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--beta", type=_rational, required=True)
    sub.add_argument("--trials", type=int, default=100)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--suite", choices=SUITES, default="all")
    sub.set_defaults(handler=_run_sweep)

    sub = commands.add_parser("epsilon", parents=[common],
                              help="lower estimates of epsilon_p")
    sub.add_argument("--p", type=int, nargs="+", required=True)
    sub.add_argument("--resolution", type=_rational, default="1/10000")
    sub.set_defaults(handler=_run_epsilon)
    return parser


def _load_graphs(args) -> List[Tuple[str, Graph, Optional[List[List[int]]]]]:
    if args.graph and args.construct:
        raise DomainError("Give either --graph or --construct, not both.")
    if args.graph:
        graphs = graph_loader(args.graph)
        return [(f"{args.graph}#{index}", graph, None) for index, graph in enumerate(graphs)]
    if args.construct:
        if args.n is None or args.beta is None:
            raise DomainError("--construct needs --n and --beta.")
        graph = build_extremal(args.n, args.beta, args.max_order)
        return [(f"member({args.n}, {args.beta})", graph, extremal_partition(args.n, args.beta))]
    raise DomainError("Give a graph with --graph FILE or --construct.")


def _run_construct(args) -> Outcome:
    beta = args.beta
    params = extremal_params(args.n, beta, args.max_order)
    graph = build_extremal(args.n, beta, args.max_order)
    partition = extremal_partition(args.n, beta)
    p = params.p
    stats = count_cliques(graph, p + 2, args.jobs)
    inner = count_cliques(induced_subgraph(graph, partition[0]), 3).k(3)
    rows = []
    for r in range(1, p + 3):
        predicted = predicted_k_r(args.n, beta, r, inner)
        rows.append({"r": r, "k_r": stats.k(r), "predicted": str(predicted),
                     "g_r_n_r": str(g_r(beta, r) * args.n ** r),
                     "matches": stats.k(r) == predicted})
    matches = all(row["matches"] for row in rows[1:p + 1])
    export = serialize_graph6(graph) if args.export == "g6" else write_edge_list(graph)
    result = {
        "params": params.to_dict(),
        "graph": export,
        "counts": rows,
        "partition_sizes": [len(cls) for cls in partition],
        "regular": graph.is_regular(),
        "passed": matches and graph.is_regular(),
    }
    status = EXIT_OK if result["passed"] else EXIT_VIOLATION
    return status, result, pd.DataFrame(rows)


def _run_count(args) -> Outcome:
    results, rows = [], []
    for name, graph, _ in _load_graphs(args):
        r_max = args.r_max or graph.n
        stats = count_cliques(graph, r_max, args.jobs)
        counts = stats.as_dict()
        results.append({"graph": name, "n": graph.n, "counts": counts})
        rows.extend({"graph": name, "r": r, "k_r": count} for r, count in counts.items())
    return EXIT_OK, results, pd.DataFrame(rows, columns=["graph", "r", "k_r"])


def _run_gr(args) -> Outcome:
    beta = args.beta
    p = derive_p(beta)
    r_max = args.r_max or p + 2
    rows = [{"r": r, "g_r": str(g_r(beta, r))} for r in range(1, r_max + 1)]
    reports = []
    for t in range(2, p + 1):
        for which in (1, 2):
            reports.append(check_identity_g(beta, t, which))
    if p >= 2:
        reports.append(check_identity_g(beta, p, 3))
    result = {"p": p, "g": rows, "identities": [report.to_dict() for report in reports]}
    if p >= 2:
        result["coefficients"] = coefficient_table(beta).rows()
    passed = all(report.passed for report in reports)
    frame = pd.DataFrame(rows)
    if reports:
        frame = pd.concat([frame, reports_to_frame(reports)], ignore_index=True)
    return (EXIT_OK if passed else EXIT_VIOLATION), result, frame


def _run_verify(args) -> Outcome:
    results, frames = [], []
    passed = True
    for name, graph, partition in _load_graphs(args):
        reports = run_suite(graph, args.beta, args.suite, partition)
        failed = [report.check_id for report in reports if not report.passed]
        if failed:
            logger.warning("%s violates %s", name, ", ".join(failed))
            passed = False
        results.append({"graph": name, "graph6": serialize_graph6(graph),
                        "passed": not failed, "reports": [report.to_dict() for report in reports]})
        frame = reports_to_frame(reports)
        frame.insert(0, "graph", name)
        frames.append(frame)
    frame = pd.concat(frames, ignore_index=True) if frames else pd.DataFrame()
    return (EXIT_OK if passed else EXIT_VIOLATION), results, frame


def _run_brute(args) -> Outcome:
    result = brute_force_k_r(args.n, args.delta, args.r, MinDegreeMode(args.mode),
                             args.max_order, args.jobs)
    data = result.to_dict()
    frame = pd.DataFrame([{key: value for key, value in data.items() if key != "witnesses"}])
    return EXIT_OK, data, frame


def _run_uniqueness(args) -> Outcome:
    report = check_extremal_uniqueness(args.n, args.beta, args.r, MinDegreeMode(args.mode),
                                       args.max_order, args.jobs)
    status = EXIT_OK if report.passed else EXIT_VIOLATION
    return status, report.to_dict(), reports_to_frame([report])


def _run_sweep(args) -> Outcome:
    summary = sweep(args.n, args.beta, args.trials, args.seed, args.suite)
    failures = int(summary["failures"].sum())
    status = EXIT_OK if failures == 0 else EXIT_VIOLATION
    return status, summary.to_dict(orient="records"), summary


def _run_epsilon(args) -> Outcome:
    bounds = {p: epsilon_p(p, args.resolution) for p in args.p}
    rows = [{"p": p, "epsilon_lower": str(bound)} for p, bound in bounds.items()]
    positive = all(bound > 0 for bound in bounds.values())
    return (EXIT_OK if positive else EXIT_VIOLATION), rows, pd.DataFrame(rows)


def _config(args) -> Dict[str, Any]:
    return to_jsonable({key: value for key, value in sorted(vars(args).items())
                        if key != "handler"})


def _render(args, status: int, result: Any, frame: pd.DataFrame) -> str:
    if args.format == "csv":
        return frame.to_csv(index=False)
    if args.format == "text":
        return frame.to_string(index=False) + "\n"
    document = {
        "version": get_versions()["version"],
        "config": _config(args),
        "status": status,
        "result": to_jsonable(result),
    }
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def _configure_logging(args):
    if args.quiet:
        level = logging.ERROR
    elif args.verbose >= 2:
        level = logging.DEBUG
    elif args.verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit status.

    Status 0 means every check passed, 1 that a check was violated, and 2 that the input or
    parameters were rejected.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args)
    try:
        status, result, frame = args.handler(args)
    except (DomainError, GraphInputError, ParameterParseError, SearchRefusedError,
            UnsupportedConstructionError) as err:
        print(f"extremal-cliques {args.command}: error: {err}", file=sys.stderr)
        return EXIT_ERROR
    text = _render(args, status, result, frame)
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return status
