"""Command-line front end.

Exit codes: 0 success, 1 failed audit, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .bounds import multipartite_arboricity, theta4_lower_bound
from .bowtie import bowtie_product, forest_bowtie_embedding
from .decomposer import Decomposition, decompose_even_multipartite, theta4_formula
from .graph_core import Graph, MultipartiteSpec, complete_multipartite, is_forest
from .jsonio import canonical_json, read_json, write_json
from .oracle import EXCEEDED, search_girth_thickness
from .verify import audit_decomposition

EXIT_OK, EXIT_AUDIT_FAILED, EXIT_INVALID = 0, 1, 2


class InputError(Exception):
    pass


def _spec(text: str) -> MultipartiteSpec:
    try:
        return MultipartiteSpec.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _load_graph(path: str) -> Graph:
    try:
        return Graph.from_dict(read_json(path))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read graph from {path}: {exc}") from None


def _girth_arg(text: str):
    if text.lower() in ("inf", "infinity"):
        return math.inf
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"girth must be an integer >= 3 or 'inf', got {text!r}") from None
    if value < 3:
        raise argparse.ArgumentTypeError("girth must be at least 3")
    return value


def cmd_bound(args) -> int:
    spec = _spec(args.spec)
    graph, _ = complete_multipartite(spec)
    try:
        formula = theta4_formula(spec)
    except ValueError:
        formula = None
    arb = multipartite_arboricity(spec) if spec.vertex_count >= 2 else None
    print(canonical_json({
        "spec": list(spec.part_sizes),
        "lower_bound": theta4_lower_bound(graph),
        "theta4": formula,
        "arboricity": arb,
    }), end="")
    return EXIT_OK


def cmd_decompose(args) -> int:
    spec = _spec(args.spec)
    try:
        dec = decompose_even_multipartite(spec)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.out:
        write_json(args.out, dec.to_dict())
    else:
        print(canonical_json(dec.to_dict()), end="")
    if args.dot:
        Path(args.dot).write_text(dec.to_dot(), encoding="utf-8")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        dec = Decomposition.from_dict(read_json(args.file))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read decomposition from {args.file}: {exc}") from None
    report = audit_decomposition(dec)
    print(canonical_json(report.to_dict()), end="")
    return EXIT_OK if report.passed else EXIT_AUDIT_FAILED


def cmd_oracle(args) -> int:
    spec = None
    if args.target.endswith(".json") or Path(args.target).is_file():
        graph = _load_graph(args.target)
    else:
        spec = _spec(args.target)
        graph, _ = complete_multipartite(spec)
    try:
        result = search_girth_thickness(graph, args.girth, args.max)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out: dict = {"count": None if result.count is EXCEEDED else result.count, "exceeded": result.count is EXCEEDED}
    if args.witness and result.witness is not None:
        out["spec"] = list(spec.part_sizes) if spec else None
        out["classes"] = [{"edges": [list(e) for e in cls]} for cls in result.witness]
    print(canonical_json(out), end="")
    return EXIT_OK


def cmd_bowtie(args) -> int:
    graph = _load_graph(args.graph)
    doubled, _ = bowtie_product(graph)
    out = doubled.to_dict()
    if args.embedding:
        if not is_forest(graph):
            raise InputError("an embedding is only constructed for forests")
        out["rotations"] = forest_bowtie_embedding(graph).to_dict()["rotations"]
    print(canonical_json(out), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="girth-thickness",
        description="Planar girth-4 decompositions of complete multipartite graphs with even parts.",
    )
    parser.add_argument("--json-errors", action="store_true", help="report errors as JSON on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="lower bound, formula value and arboricity for a spec")
    p.add_argument("spec", help="comma-separated part sizes, e.g. 2,2,2")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("decompose", help="build a minimum decomposition for an even spec")
    p.add_argument("spec")
    p.add_argument("--out", help="write decomposition JSON here instead of stdout")
    p.add_argument("--dot", help="also write a DOT drawing, one colour per class")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="audit a decomposition JSON file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive girth-thickness for a small spec or graph JSON")
    p.add_argument("target", help="spec like 2,2,2 or a graph .json file")
    p.add_argument("--girth", type=_girth_arg, default=4)
    p.add_argument("--max", type=int, default=None, help="largest class count to try")
    p.add_argument("--witness", action="store_true", help="include the partition found")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bowtie", help="double a graph given as JSON")
    p.add_argument("graph")
    p.add_argument("--embedding", action="store_true", help="add rotations (forest input only)")
    p.set_defaults(func=cmd_bowtie)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        if args.json_errors:
            print(json.dumps({"error": str(exc), "exit_code": EXIT_INVALID}), file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
