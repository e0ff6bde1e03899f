"""Command-line interface: detect patterns in a model, list the catalog,
validate model files.

Exit codes: 0 success, 1 usage or input error, 2 verification mismatch.
Report output is deterministic byte for byte; verification chatter goes to
stderr so stdout stays stable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .catalog import CatalogError, PatternCatalog, load_catalog
from .graph import ClassGraph, EdgeTuple, RelationKind
from .matcher import DetectionReport, Verdict, detect
from .model import ModelSyntaxError, parse_model
from .oracle import OracleSizeError, oracle_detect

__all__ = [
    "CATALOG_ENV_VAR",
    "EXIT_OK",
    "EXIT_ERROR",
    "EXIT_VERIFY_MISMATCH",
    "ReportDocument",
    "verdict_sentence",
    "render_text",
    "render_json",
    "build_parser",
    "cmd_detect",
    "cmd_list",
    "cmd_validate",
    "main",
]

CATALOG_ENV_VAR = "DPDETECT_CATALOG"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VERIFY_MISMATCH = 2

_TEMPLATES = {
    Verdict.COMPLETE: "The design pattern completely exists in the System design with {count} times",
    Verdict.PARTIAL: "The design pattern partially exists in the System design with {count} times",
    Verdict.ABSENT: "The design pattern does not exist in the System design",
}


def verdict_sentence(report: DetectionReport) -> str:
    """The report's one-line outcome sentence."""
    return _TEMPLATES[report.verdict].format(count=report.occurrences)


@dataclass(frozen=True)
class ReportDocument:
    """Everything one detect run produced, ready for serialization."""

    model_name: str
    results: tuple[DetectionReport, ...]
    tool_version: str
    catalog_names: tuple[str, ...]

    def __post_init__(self) -> None:
        names = [result.pattern_name for result in self.results]
        if names != sorted(names):
            raise ValueError("results must be sorted by pattern name")

    def to_dict(self) -> dict:
        return {
            "model": self.model_name,
            "tool_version": self.tool_version,
            "catalog": list(self.catalog_names),
            "results": [_result_dict(result) for result in self.results],
        }


def _edge_json(edge: EdgeTuple) -> list:
    return [edge.source, edge.target, int(edge.relation), edge.self_loop]


def _result_dict(report: DetectionReport) -> dict:
    return {
        "pattern": report.pattern_name,
        "verdict": report.verdict.value,
        "level": report.level,
        "occurrences": report.occurrences,
        "rows": [
            {
                "pattern_edges": [_edge_json(e) for e in row.pattern_edges],
                "system_edges": [_edge_json(e) for e in row.system_edges],
                "mapping": dict(sorted(row.mapping.items())),
            }
            for row in report.table.rows
        ],
    }


def render_text(document: ReportDocument) -> str:
    sections = [f"model: {document.model_name or '(unnamed)'}"]
    for report in document.results:
        sections.append(f"[{report.pattern_name}]\n{verdict_sentence(report)}")
    return "\n\n".join(sections) + "\n"


def render_json(document: ReportDocument) -> str:
    return json.dumps(document.to_dict(), indent=2, ensure_ascii=False) + "\n"


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; this tool reserves 2
    for verification mismatches, so usage errors are remapped to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="dpdetect",
        description="Detect design patterns in class-model graphs.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    subparsers = parser.add_subparsers(dest="command", metavar="command")

    catalog_help = f"extra pattern definitions (.cg file or directory); defaults to ${CATALOG_ENV_VAR}"

    detect_parser = subparsers.add_parser(
        "detect", help="run pattern detection against a model file"
    )
    detect_parser.add_argument("model", help="model file in the .cg line format")
    which = detect_parser.add_mutually_exclusive_group()
    which.add_argument("--pattern", metavar="NAME", help="detect a single catalog pattern")
    which.add_argument(
        "--all", action="store_true", help="detect every catalog pattern (default)"
    )
    detect_parser.add_argument("--catalog", metavar="PATH", help=catalog_help)
    detect_parser.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="report format (default: text)",
    )
    detect_parser.add_argument(
        "--verify",
        action="store_true",
        help="cross-check results against the brute-force reference (small models only)",
    )

    list_parser = subparsers.add_parser("list", help="list catalog patterns")
    list_parser.add_argument("--catalog", metavar="PATH", help=catalog_help)

    validate_parser = subparsers.add_parser(
        "validate", help="parse a model file and report its shape"
    )
    validate_parser.add_argument("model", help="model file in the .cg line format")

    return parser


def _fail(message: str) -> int:
    print(f"dpdetect: error: {message}", file=sys.stderr)
    return EXIT_ERROR


def _resolve_catalog(argument: str | None) -> PatternCatalog:
    source = argument or os.environ.get(CATALOG_ENV_VAR) or None
    return load_catalog(source)


def _read_model(path_str: str) -> ClassGraph:
    text = Path(path_str).read_text(encoding="utf-8")
    return parse_model(text)


def _summary(report: DetectionReport) -> str:
    level = "-" if report.level is None else str(report.level)
    return f"({report.verdict.value}, level {level}, {report.occurrences} occurrence(s))"


def _reports_agree(ours: DetectionReport, reference: DetectionReport) -> bool:
    return (
        ours.verdict is reference.verdict
        and ours.level == reference.level
        and ours.occurrences == reference.occurrences
        and ours.table.system_edge_sets() == reference.table.system_edge_sets()
    )


def cmd_detect(args: argparse.Namespace) -> int:
    try:
        model = _read_model(args.model)
    except OSError as err:
        return _fail(f"cannot read model {args.model!r}: {err}")
    except ModelSyntaxError as err:
        return _fail(f"{args.model}: {err}")
    try:
        catalog = _resolve_catalog(args.catalog)
    except CatalogError as err:
        return _fail(str(err))
    if args.pattern is not None:
        wanted = args.pattern.lower()
        if catalog.get(wanted) is None:
            return _fail(
                f"unknown pattern {args.pattern!r}; available: {', '.join(catalog.names())}"
            )
        selected = [wanted]
    else:
        selected = catalog.names()

    results = []
    mismatched = []
    for name in selected:
        pattern_graph = catalog.get(name)
        report = detect(model.edges, pattern_graph.edges, pattern_name=name)
        results.append(report)
        if args.verify:
            try:
                reference = oracle_detect(model.edges, pattern_graph.edges, pattern_name=name)
            except OracleSizeError as err:
                print(f"dpdetect: verify: skipped {name!r}: {err}", file=sys.stderr)
            else:
                if not _reports_agree(report, reference):
                    mismatched.append(name)
                    print(
                        f"dpdetect: verify: mismatch for {name!r}: detector "
                        f"{_summary(report)} vs reference {_summary(reference)}",
                        file=sys.stderr,
                    )

    document = ReportDocument(
        model_name=model.name,
        results=tuple(results),
        tool_version=__version__,
        catalog_names=tuple(catalog.names()),
    )
    sys.stdout.write(render_json(document) if args.format == "json" else render_text(document))
    return EXIT_VERIFY_MISMATCH if mismatched else EXIT_OK


def cmd_list(args: argparse.Namespace) -> int:
    try:
        catalog = _resolve_catalog(args.catalog)
    except CatalogError as err:
        return _fail(str(err))
    names = catalog.names()
    width = max(len(name) for name in names)
    for name in names:
        graph = catalog.get(name)
        origin = "user" if catalog.is_user_defined(name) else "builtin"
        print(f"{name:<{width}}  nodes={len(graph.nodes)} edges={len(graph.edges)} [{origin}]")
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        text = Path(args.model).read_text(encoding="utf-8")
    except OSError as err:
        return _fail(f"cannot read model {args.model!r}: {err}")
    try:
        graph = parse_model(text)
    except ModelSyntaxError as err:
        return _fail(f"{args.model}: {err}")
    relation_counts = Counter(edge.relation for edge in graph.edges)
    loops = sum(edge.self_loop for edge in graph.edges)
    # Re-derive the structural invariants instead of trusting the parser;
    # confirming them is this command's job.
    sound = all(
        edge.source in graph.nodes
        and edge.target in graph.nodes
        and edge.self_loop == (1 if edge.source == edge.target else 0)
        for edge in graph.edges
    )
    if graph.name:
        print(f"model: {graph.name}")
    print(f"nodes: {len(graph.nodes)}")
    print(
        "edges: {total} (assoc={a} dep={d} gen={g})".format(
            total=len(graph.edges),
            a=relation_counts.get(RelationKind.ASSOCIATION, 0),
            d=relation_counts.get(RelationKind.DEPENDENCY, 0),
            g=relation_counts.get(RelationKind.GENERALIZATION, 0),
        )
    )
    print(f"self-loops: {loops}")
    if not sound:
        return _fail("model violates graph invariants")
    print("valid")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code is None:
            return EXIT_OK
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    if args.command == "detect":
        return cmd_detect(args)
    if args.command == "list":
        return cmd_list(args)
    if args.command == "validate":
        return cmd_validate(args)
    parser.print_usage(sys.stderr)
    print("dpdetect: error: a command is required", file=sys.stderr)
    return EXIT_ERROR
