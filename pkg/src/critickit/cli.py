"""Command-line interface.

Exit status contract: 0 = decided yes (or value computed), 1 = decided no
(witness emitted), 2 = unknown within limits, 64 = usage error.  With
``--json`` exactly one JSON document is written to standard output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import jsonio
from .coloring import chromatic_number, chromatic_polynomial, count_proper_colorings
from .covers import (
    NOT_CRITICAL,
    ROBUSTLY_CRITICAL,
    UNKNOWN as COVER_UNKNOWN,
    count_transversals,
    dp_chromatic_number,
    make_canonical_cover,
    pdp_value,
    robust_criticality_verdict,
)
from .errors import BudgetExceeded, CritickitError
from .graphs import (
    Graph,
    build_graph,
    clique,
    complete_bipartite,
    cycle,
    encode_graph6,
    format_edgelist,
    generate_ekab,
    join,
    parse_edgelist,
    parse_graph6,
)
from .lemmas import (
    ALL_PASS,
    COUNTEREXAMPLE,
    TRUNCATED,
    check_excess_lemma,
    check_full_extension_lemma,
    check_induction_lemma,
    check_join_preserves,
    check_pair_reduction,
)
from .coloring import classify_criticality
from .limits import DEFAULT_NODE_BUDGET, SearchLimits
from .listcoloring import (
    NO,
    UNKNOWN as LIST_UNKNOWN,
    YES,
    list_chromatic_number,
    strong_criticality_verdict,
)

EXIT_YES = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64

BUDGET_ENV = "CRITICKIT_BUDGET"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we want 64
        raise UsageError(message)


class _SourceAction(argparse.Action):
    """Collect graph sources in command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        sources = getattr(namespace, "sources", None)
        if sources is None:
            sources = []
            namespace.sources = sources
        sources.append((self.dest, values))


@dataclass(frozen=True)
class RunConfig:
    input_format: str
    deterministic: bool
    workers: int
    node_budget: int
    time_budget_ms: int | None
    output_mode: str

    def __post_init__(self):
        if self.workers < 1:
            raise UsageError("--workers must be at least 1")
        if self.node_budget <= 0:
            raise UsageError("node budget must be positive")
        if self.time_budget_ms is not None and self.time_budget_ms <= 0:
            raise UsageError("--time-budget-ms must be positive")

    def limits(self) -> SearchLimits:
        return SearchLimits(max_nodes=self.node_budget, max_millis=self.time_budget_ms)


def _add_source_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--graph6", action=_SourceAction, metavar="WORD")
    parser.add_argument(
        "--edges", action=_SourceAction, metavar="PATH",
        help="edge-list file ('n m' header then 'u v' lines); '-' reads stdin",
    )
    parser.add_argument("--clique", action=_SourceAction, type=int, metavar="N")
    parser.add_argument("--cycle", action=_SourceAction, type=int, metavar="N")
    parser.add_argument(
        "--complete-bipartite", action=_SourceAction, type=int, nargs=2,
        metavar=("A", "B"),
    )
    parser.add_argument(
        "--ekab", action=_SourceAction, type=int, nargs=3, metavar=("K", "A", "B")
    )
    parser.add_argument(
        "--join", action="store_true",
        help="join the listed graph sources left to right",
    )


def _build_source(kind: str, value) -> Graph:
    if kind == "graph6":
        return parse_graph6(value)
    if kind == "edges":
        text = sys.stdin.read() if value == "-" else Path(value).read_text()
        return parse_edgelist(text)
    if kind == "clique":
        return clique(value)
    if kind == "cycle":
        return cycle(value)
    if kind == "complete_bipartite":
        return complete_bipartite(*value)
    if kind == "ekab":
        return generate_ekab(*value)
    raise UsageError(f"unknown graph source {kind}")


def _resolve_graph(args) -> Graph:
    sources = getattr(args, "sources", None) or []
    if not sources:
        raise UsageError("no graph source given")
    graphs = [_build_source(kind, value) for kind, value in sources]
    if len(graphs) == 1:
        return graphs[0]
    if not args.join:
        raise UsageError("several graph sources given; use --join to combine them")
    combined = graphs[0]
    for g in graphs[1:]:
        combined = join(combined, g)
    return combined


def build_parser() -> _Parser:
    parser = _Parser(prog="critickit", description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit one JSON document")
    parser.add_argument("--deterministic", action="store_true")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument(
        "--node-budget", type=int, default=None,
        help=f"search budget (default {DEFAULT_NODE_BUDGET}; env {BUDGET_ENV})",
    )
    parser.add_argument("--time-budget-ms", type=int, default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="emit a graph")
    _add_source_args(p_gen)
    p_gen.add_argument("--edgelist", action="store_true", help="emit edge-list format")

    p_chi = sub.add_parser("chi", help="chromatic numbers")
    p_chi.add_argument("variant", choices=["plain", "list", "dp"])
    _add_source_args(p_chi)

    p_check = sub.add_parser("check", help="criticality decisions")
    p_check.add_argument(
        "property",
        choices=["critical", "vertex-critical", "strong", "strong-cc", "robust"],
    )
    _add_source_args(p_check)

    p_count = sub.add_parser("count", help="exact counts")
    p_count.add_argument(
        "what", choices=["colorings", "transversals", "pdp", "chromatic-poly"]
    )
    _add_source_args(p_count)
    p_count.add_argument("-k", type=int, default=None)
    p_count.add_argument(
        "--cover", metavar="PATH",
        help="count transversals of a cover JSON document ('-' reads stdin)",
    )

    p_lemma = sub.add_parser("lemma", help="structural lemma suites")
    p_lemma.add_argument(
        "which", choices=["excess", "full-extension", "pair", "induction", "join"]
    )
    _add_source_args(p_lemma)
    p_lemma.add_argument("--sizes", help="comma-separated list sizes (excess)")
    p_lemma.add_argument("-x", type=int, help="first vertex (pair)")
    p_lemma.add_argument("-y", type=int, help="second vertex (pair)")
    p_lemma.add_argument(
        "--independent-set", help="comma-separated vertices (induction)"
    )
    p_lemma.add_argument("-t", type=int, help="clique size to join (join)")
    return parser


def _config_from_args(args) -> RunConfig:
    budget = args.node_budget
    if budget is None:
        env = os.environ.get(BUDGET_ENV)
        if env is not None:
            try:
                budget = int(env)
            except ValueError:
                raise UsageError(f"{BUDGET_ENV} must be an integer, got {env!r}")
        else:
            budget = DEFAULT_NODE_BUDGET
    input_format = "graph6"
    for kind, _ in getattr(args, "sources", None) or []:
        if kind == "edges":
            input_format = "edgelist"
    return RunConfig(
        input_format=input_format,
        deterministic=args.deterministic,
        workers=args.workers,
        node_budget=budget,
        time_budget_ms=args.time_budget_ms,
        output_mode="json" if args.json else "human",
    )


def _cmd_gen(args, config) -> tuple[int, dict, str]:
    g = _resolve_graph(args)
    word = encode_graph6(g)
    if args.edgelist:
        return EXIT_YES, {"schema": "critickit/graph/1", "graph6": word,
                          "edgelist": format_edgelist(g)}, format_edgelist(g).rstrip("\n")
    return EXIT_YES, {"schema": "critickit/graph/1", "graph6": word}, word


def _cmd_chi(args, config) -> tuple[int, dict, str]:
    g = _resolve_graph(args)
    limits = config.limits()
    doc = {"schema": "critickit/chi/1", "variant": args.variant}
    try:
        if args.variant == "plain":
            value = chromatic_number(g)
        elif args.variant == "list":
            value = list_chromatic_number(g, limits)
        else:
            value = dp_chromatic_number(g, limits)
    except BudgetExceeded as exc:
        lower = getattr(exc, "lower_bound", None)
        doc.update({"value": None, "status": "unknown", "lower_bound": lower})
        text = f"unknown (budget exhausted{f'; >= {lower}' if lower else ''})"
        return EXIT_UNKNOWN, doc, text
    doc.update({"value": value, "status": "decided"})
    return EXIT_YES, doc, str(value)


def _cmd_check(args, config) -> tuple[int, dict, str]:
    g = _resolve_graph(args)
    limits = config.limits()
    prop = args.property
    if prop in ("critical", "vertex-critical"):
        verdict = classify_criticality(g)
        ok = verdict.is_critical if prop == "critical" else verdict.is_vertex_critical
        doc = jsonio.criticality_to_doc(verdict)
        text = (
            f"{prop}: {'yes' if ok else 'no'} (chi={verdict.chromatic_number})"
        )
        if not ok:
            text += f", witness deletion: {verdict.witness}"
        return (EXIT_YES if ok else EXIT_NO), doc, text
    if prop in ("strong", "strong-cc"):
        mode = "critical" if prop == "strong" else "vertex_critical"
        verdict = strong_criticality_verdict(g, mode, limits)
        doc = jsonio.strong_verdict_to_doc(verdict)
        text = f"{prop}: {verdict.decision} (k={verdict.k})"
        status = {YES: EXIT_YES, NO: EXIT_NO, LIST_UNKNOWN: EXIT_UNKNOWN}[verdict.decision]
        if verdict.witness is not None:
            text += f"\nwitness: {jsonio.dumps(jsonio.witness_to_doc(verdict.witness)).rstrip()}"
        return status, doc, text
    verdict = robust_criticality_verdict(
        g, limits, workers=config.workers, deterministic=config.deterministic
    )
    doc = jsonio.robust_verdict_to_doc(verdict)
    text = (
        f"robust: {verdict.decision} (k={verdict.k}, "
        f"covers_scanned={verdict.covers_scanned})"
    )
    if verdict.witness is not None:
        text += f"\nwitness: {jsonio.dumps(jsonio.witness_to_doc(verdict.witness)).rstrip()}"
    status = EXIT_YES if verdict.decision == ROBUSTLY_CRITICAL else (
        EXIT_UNKNOWN if verdict.decision == COVER_UNKNOWN else EXIT_NO
    )
    return status, doc, text


def _cmd_count(args, config) -> tuple[int, dict, str]:
    limits = config.limits()
    what = args.what
    if what == "transversals" and args.cover is not None:
        text = sys.stdin.read() if args.cover == "-" else Path(args.cover).read_text()
        cover = jsonio.cover_from_doc(json.loads(text))
        value = count_transversals(cover)
        doc = {"schema": "critickit/count/1", "what": what, "value": value}
        return EXIT_YES, doc, str(value)
    g = _resolve_graph(args)
    if what == "chromatic-poly":
        poly = chromatic_polynomial(g)
        doc = jsonio.polynomial_to_doc(poly)
        return EXIT_YES, doc, " ".join(str(c) for c in poly.coefficients)
    if args.k is None:
        raise UsageError(f"count {what} requires -k")
    if what == "colorings":
        value = count_proper_colorings(g, args.k)
        doc = {"schema": "critickit/count/1", "what": what, "k": args.k, "value": value}
        return EXIT_YES, doc, str(value)
    if what == "transversals":
        value = count_transversals(make_canonical_cover(g, args.k))
        doc = {"schema": "critickit/count/1", "what": what, "k": args.k, "value": value}
        return EXIT_YES, doc, str(value)
    try:
        result = pdp_value(g, args.k, limits)
    except BudgetExceeded as exc:
        upper = getattr(exc, "best_upper_bound", None)
        doc = {
            "schema": "critickit/count/1", "what": "pdp", "k": args.k,
            "value": None, "status": "unknown", "best_upper_bound": upper,
        }
        return EXIT_UNKNOWN, doc, f"unknown (budget exhausted; <= {upper})"
    doc = {
        "schema": "critickit/count/1", "what": "pdp", "k": args.k,
        "value": result.value, "covers_scanned": result.covers_scanned,
        "cover": jsonio.cover_to_doc(result.cover),
    }
    return EXIT_YES, doc, str(result.value)


def _parse_int_list(text: str, option: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise UsageError(f"{option} expects comma-separated integers, got {text!r}")


def _cmd_lemma(args, config) -> tuple[int, dict, str]:
    g = _resolve_graph(args)
    limits = config.limits()
    which = args.which
    if which == "excess":
        if args.sizes is None:
            raise UsageError("lemma excess requires --sizes")
        report = check_excess_lemma(g, _parse_int_list(args.sizes, "--sizes"), limits)
    elif which == "full-extension":
        report = check_full_extension_lemma(g, limits)
    elif which == "pair":
        if args.x is None or args.y is None:
            raise UsageError("lemma pair requires -x and -y")
        report = check_pair_reduction(g, args.x, args.y, limits)
    elif which == "induction":
        if args.independent_set is None:
            raise UsageError("lemma induction requires --independent-set")
        report = check_induction_lemma(
            g, _parse_int_list(args.independent_set, "--independent-set"), limits
        )
    else:
        if args.t is None:
            raise UsageError("lemma join requires -t")
        report = check_join_preserves(g, args.t, limits)
    doc = report.to_doc()
    text = (
        f"lemma {report.lemma}: {report.outcome} "
        f"(checked={report.checked}, mode={report.mode})"
    )
    if report.detail:
        text += f"\n{report.detail}"
    status = {
        ALL_PASS: EXIT_YES,
        COUNTEREXAMPLE: EXIT_NO,
        TRUNCATED: EXIT_UNKNOWN,
    }.get(report.outcome, EXIT_UNKNOWN)
    return status, doc, text


_COMMANDS = {
    "gen": _cmd_gen,
    "chi": _cmd_chi,
    "check": _cmd_check,
    "count": _cmd_count,
    "lemma": _cmd_lemma,
}


def run_command(argv: list[str]) -> tuple[int, str]:
    """Execute one CLI invocation; returns (exit status, stdout text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = _config_from_args(args)
        status, doc, text = _COMMANDS[args.command](args, config)
    except UsageError as exc:
        message = f"usage error: {exc}"
        if "--json" in argv:
            return EXIT_USAGE, jsonio.dumps(
                {"schema": jsonio.SCHEMA_ERROR, "error": message}
            )
        return EXIT_USAGE, message + "\n"
    except BudgetExceeded as exc:
        message = f"unknown: {exc}"
        if "--json" in argv:
            return EXIT_UNKNOWN, jsonio.dumps(
                {"schema": jsonio.SCHEMA_ERROR, "error": message, "spent": exc.spent}
            )
        return EXIT_UNKNOWN, message + "\n"
    except CritickitError as exc:
        message = f"error: {exc}"
        if "--json" in argv:
            return EXIT_USAGE, jsonio.dumps(
                {"schema": jsonio.SCHEMA_ERROR, "error": message}
            )
        return EXIT_USAGE, message + "\n"
    if config.output_mode == "json":
        return status, jsonio.dumps(doc)
    return status, text + "\n"


def main() -> None:
    status, output = run_command(sys.argv[1:])
    sys.stdout.write(output)
    raise SystemExit(status)


if __name__ == "__main__":
    main()
