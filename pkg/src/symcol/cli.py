"""Command-line front end.

One-shot subcommands print exactly one JSON document on standard output
(latin prints CSV); diagnostics go to standard error.  Exit codes: 0 success,
1 verification or construction failure, 2 usage errors.  Sweeps append one
JSON record per graph to a report file and cache finished records so a rerun
recomputes nothing.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import hashlib
import json
import os
import sys
import time
from pathlib import Path
from typing import Iterable

from . import __version__
from .autos import AutCaps, automorphisms, check_aut_chain
from .colorings import (
    TDCPartition,
    coloring_from_json,
    is_avd_total,
    is_distinguishing,
    is_proper,
    is_tdc,
)
from .constructive import (
    VERIFY_CAPS,
    avd_coloring_central_join,
    avd_coloring_central_regular,
    avd_coloring_subdivision,
    dist_edge_coloring_central,
    dist_vertex_coloring_central,
    dist_vertex_coloring_middle,
    tdc_central,
    tdc_central_tree,
    tdc_to_complement,
    total_dist_coloring_central_regular,
    total_dist_coloring_subdivision,
)
from .errors import (
    BudgetExceededError,
    ConstructionDefectError,
    Graph6Error,
    NotApplicableError,
)
from .families import all_trees, connected_graphs, regular_graphs
from .graphs import Graph, encode_graph6, parse_graph6
from .latin import icls
from .oracles import PARAM_KINDS, exact_parameter, upper_bound_witness
from .transforms import central, endline, line_graph, middle, subdivision

CONSTRUCT_TAGS = (
    "3.2", "3.4", "3.6", "4.5", "4.9", "5.1", "5.3", "5.5",
    "6.1", "6.2", "appendix-tree",
)
SWEEP_CHECKS = (
    "2.11", "3.2", "3.4", "3.6", "4.5", "4.9", "5.1", "5.3",
    "6.1", "6.2", "appendix-tree", "tcc-central",
)
MAX_BUILTIN_ORDER = 8


class _UsageError(Exception):
    """Bad invocation; reported on stderr with exit code 2."""


def _print_json(doc: dict) -> None:
    json.dump(doc, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _parse_graph(text: str) -> Graph:
    try:
        return parse_graph6(text.strip())
    except Graph6Error as exc:
        raise _UsageError(f"invalid graph6 input: {exc}") from exc


# --- one-shot subcommands -----------------------------------------------------


def _cmd_transform(args: argparse.Namespace) -> int:
    g = _parse_graph(args.graph)
    if args.kind == "line":
        lg, labels = line_graph(g)
        _print_json(
            {
                "kind": "line",
                "graph6": encode_graph6(lg),
                "labels": [list(e) for e in labels],
            }
        )
        return 0
    builder = {
        "subdivision": subdivision,
        "central": central,
        "middle": middle,
        "endline": endline,
    }[args.kind]
    doc = builder(g).to_json()
    doc["kind"] = args.kind
    _print_json(doc)
    return 0


def _cmd_aut(args: argparse.Namespace) -> int:
    g = _parse_graph(args.graph)
    caps = AutCaps(max_vertices=64, max_group_order=10**8)
    if args.chain:
        _print_json(check_aut_chain(g, caps).to_json())
        return 0
    group = automorphisms(g, caps)
    doc = {"graph6": encode_graph6(g), "group_order": group.order}
    if group.order <= 10**4:
        doc["elements"] = [list(p) for p in group.elements]
    _print_json(doc)
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    g = _parse_graph(args.graph)
    try:
        res = exact_parameter(
            g,
            args.param,
            cap=args.cap,
            budget=args.budget,
            workers=args.workers,
            aut_caps=AutCaps(max_vertices=64, max_group_order=10**8),
        )
    except BudgetExceededError as exc:
        _print_json({"error": "budget-exceeded", "detail": str(exc)})
        return 1
    _print_json(res.to_json(g))
    return 0


def _cmd_latin(args: argparse.Namespace) -> int:
    if args.k < 2:
        raise _UsageError("--k must be at least 2")
    sys.stdout.write(icls(args.k).to_csv())
    return 0


def _infer_dist_kind(vc, ec) -> str:
    if vc is not None and ec is not None:
        return "total"
    return "vertex" if vc is not None else "edge"


def _cmd_verify(args: argparse.Namespace) -> int:
    doc = json.loads(Path(args.coloring).read_text())
    if args.property == "tdc":
        if args.graph is None:
            raise _UsageError("--property tdc requires --in for the graph")
        g = _parse_graph(args.graph)
        partition = TDCPartition(tuple(frozenset(c) for c in doc["classes"]))
        try:
            holds = is_tdc(g, partition)
        except ValueError as exc:
            print(f"symcol: partition rejected: {exc}", file=sys.stderr)
            holds = False
    else:
        g, f = coloring_from_json(doc)
        if args.graph is not None and _parse_graph(args.graph) != g:
            raise _UsageError("--in disagrees with the coloring's graph")
        try:
            if args.property == "proper-total":
                holds = is_proper(g, f, "total")
            elif args.property == "avd":
                holds = is_avd_total(g, f)
            else:
                kind = _infer_dist_kind(f.vertex_colors, f.edge_colors)
                holds = is_distinguishing(g, f, kind, VERIFY_CAPS)
        except ValueError as exc:
            print(f"symcol: coloring rejected: {exc}", file=sys.stderr)
            holds = False
    _print_json({"property": args.property, "holds": holds})
    return 0 if holds else 1


def _partition_doc(tag: str, g: Graph, partition: TDCPartition, bound: int) -> dict:
    return {
        "tag": tag,
        "graph6": encode_graph6(g),
        "classes": [sorted(c) for c in partition.classes],
        "class_count": len(partition.classes),
        "promised_bound": bound,
        "verdict": "pass",
    }


def _oracle_coloring(g: Graph, kind: str, cap: int):
    res = exact_parameter(
        g, kind, cap=cap, aut_caps=AutCaps(max_vertices=64, max_group_order=10**8)
    )
    if res.value is None or res.witness is None:
        raise ConstructionDefectError(
            f"no {kind} coloring of an input part within {cap} colors"
        )
    return res.witness


def _construct(tag: str, g: Graph, g2: Graph | None) -> dict:
    if tag == "5.5":
        if g2 is None:
            raise _UsageError("--theorem 5.5 takes the second part via --in2")
        if g.n == g2.n:
            c1 = _oracle_coloring(central(g).graph, "chi2", g.n + 1)
            c2 = _oracle_coloring(central(g2).graph, "chi2", g2.n + 1)
        else:
            c1 = _oracle_coloring(central(g).graph, "chi2a", g.n + 2)
            c2 = _oracle_coloring(central(g2).graph, "chi2a", g2.n + 2)
        result = avd_coloring_central_join(g, g2, c1, c2)
        doc = result.to_json()
        doc["verdict"] = "pass"
        return doc
    if tag == "6.2":
        p = tdc_central(g)
        return _partition_doc(tag, central(g).graph, p, g.n)
    if tag == "6.1":
        p = tdc_central(g)
        q = tdc_to_complement(p, g)
        return _partition_doc(tag, g.complement(), q, len(p.classes))
    if tag == "appendix-tree":
        p = tdc_central_tree(g)
        return _partition_doc(tag, central(g).graph, p, g.n)
    op = {
        "3.2": dist_edge_coloring_central,
        "3.4": dist_vertex_coloring_central,
        "3.6": dist_vertex_coloring_middle,
        "4.5": total_dist_coloring_central_regular,
        "4.9": total_dist_coloring_subdivision,
        "5.1": avd_coloring_central_regular,
        "5.3": avd_coloring_subdivision,
    }[tag]
    result = op(g)
    doc = result.to_json()
    doc["verdict"] = "pass"
    return doc


def _cmd_construct(args: argparse.Namespace) -> int:
    g = _parse_graph(args.graph)
    g2 = _parse_graph(args.graph2) if args.graph2 else None
    try:
        doc = _construct(args.theorem, g, g2)
    except NotApplicableError as exc:
        _print_json({"verdict": "not-applicable", "detail": str(exc)})
        return 1
    except (ConstructionDefectError, ValueError) as exc:
        _print_json({"verdict": "fail", "detail": str(exc)})
        return 1
    if args.out:
        Path(args.out).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        print(f"symcol: wrote {args.out}", file=sys.stderr)
    _print_json(doc)
    return 0


# --- sweeps --------------------------------------------------------------------


def run_check(graph6: str, check: str, budget: int | None = None) -> dict:
    """One ReportRecord-shaped dict for one graph and one check."""
    record = {
        "graph6": graph6,
        "check": check,
        "verdict": "pass",
        "promised_bound": None,
        "achieved": None,
        "oracle_value": None,
        "seconds": 0.0,
        "error": None,
    }
    start = time.perf_counter()
    caps = AutCaps(max_vertices=64, max_group_order=10**8)
    try:
        g = parse_graph6(graph6)
        if check == "2.11":
            report = check_aut_chain(g, caps)
            if not report.applicable:
                record["verdict"] = "not-applicable"
                record["error"] = report.reason
            elif not report.passed:
                record["verdict"] = "fail"
        elif check == "tcc-central":
            if g.n < 3 or not g.is_connected():
                raise NotApplicableError("requires a connected graph of order at least 3")
            cent = central(g).graph
            bound = cent.max_degree() + 2
            record["promised_bound"] = bound
            witness = upper_bound_witness(cent, "chi2", bound, budget=budget)
            if witness is None:
                record["verdict"] = "fail"
            else:
                record["achieved"] = len(witness.palette())
        elif check in ("6.1", "6.2", "appendix-tree"):
            doc = _construct(check, g, None)
            record["promised_bound"] = doc["promised_bound"]
            record["achieved"] = doc["class_count"]
        else:
            doc = _construct(check, g, None)
            record["promised_bound"] = doc["promised_bound"]
            record["achieved"] = doc["palette_size"]
    except NotApplicableError as exc:
        record["verdict"] = "not-applicable"
        record["error"] = str(exc)
    except BudgetExceededError as exc:
        record["verdict"] = "budget-exceeded"
        record["error"] = str(exc)
    except (ConstructionDefectError, ValueError) as exc:
        record["verdict"] = "fail"
        record["error"] = str(exc)
    record["seconds"] = round(time.perf_counter() - start, 3)
    return record


def _family_graphs(args: argparse.Namespace) -> Iterable[str]:
    if args.file:
        for line in Path(args.file).read_text().splitlines():
            line = line.strip()
            if line:
                yield line
        return
    if args.max_order is None:
        raise _UsageError("built-in families need --max-order")
    if args.max_order > MAX_BUILTIN_ORDER:
        raise _UsageError(
            f"built-in enumeration stops at order {MAX_BUILTIN_ORDER}; "
            "use --file for larger graphs"
        )
    lo = args.min_order or 1
    if args.family == "all-connected":
        for n in range(lo, args.max_order + 1):
            for g in connected_graphs(n):
                yield encode_graph6(g)
    elif args.family == "all-trees":
        for n in range(max(lo, 1), args.max_order + 1):
            for t in all_trees(n):
                yield encode_graph6(t)
    else:
        if args.degree is None:
            raise _UsageError("--family regular needs --degree")
        for n in range(lo, args.max_order + 1):
            for g in regular_graphs(args.degree, n):
                yield encode_graph6(g)


def _cache_key(graph6: str, check: str) -> str:
    text = f"{graph6}\n{check}\n{__version__}"
    return hashlib.sha256(text.encode()).hexdigest()


def _cache_get(cache_dir: Path, key: str) -> dict | None:
    path = cache_dir / f"{key}.json"
    if not path.exists():
        return None
    try:
        record = json.loads(path.read_text())
        if not isinstance(record, dict) or "verdict" not in record:
            raise ValueError("not a record")
        return record
    except (ValueError, OSError) as exc:
        print(f"symcol: discarding corrupt cache entry {path.name}: {exc}", file=sys.stderr)
        try:
            path.unlink()
        except OSError:
            pass
        return None


def _cmd_sweep(args: argparse.Namespace) -> int:
    if args.check not in SWEEP_CHECKS:
        raise _UsageError(f"unknown check {args.check!r}")
    graphs = list(_family_graphs(args))
    report_path = Path(args.report)
    cache_dir = Path(args.cache) if args.cache else report_path.with_suffix(".cache")
    cache_dir.mkdir(parents=True, exist_ok=True)

    todo: list[tuple[int, str]] = []
    records: dict[int, dict] = {}
    for idx, graph6 in enumerate(graphs):
        cached = _cache_get(cache_dir, _cache_key(graph6, args.check))
        if cached is not None and cached.get("graph6") == graph6:
            records[idx] = cached
        else:
            todo.append((idx, graph6))

    if todo and args.workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.workers) as pool:
            futures = {
                pool.submit(run_check, graph6, args.check, args.budget): idx
                for idx, graph6 in todo
            }
            for fut in concurrent.futures.as_completed(futures):
                records[futures[fut]] = fut.result()
    else:
        for idx, graph6 in todo:
            records[idx] = run_check(graph6, args.check, args.budget)

    # Records land in the report in enumeration order so that a resumed run
    # reproduces the file byte for byte.
    counts = {"pass": 0, "fail": 0, "not-applicable": 0, "budget-exceeded": 0}
    with report_path.open("w") as out:
        for idx in range(len(graphs)):
            record = records[idx]
            counts[record["verdict"]] += 1
            out.write(json.dumps(record, sort_keys=True) + "\n")
            key = _cache_key(record["graph6"], args.check)
            (cache_dir / f"{key}.json").write_text(
                json.dumps(record, sort_keys=True) + "\n"
            )
    fails = counts["fail"]
    summary = {
        "check": args.check,
        "total": len(graphs),
        "pass": counts["pass"],
        "fail": fails,
        "not_applicable": counts["not-applicable"],
        "budget_exceeded": counts["budget-exceeded"],
        "report": str(report_path),
    }
    _print_json(summary)
    return 1 if fails else 0


# --- argument parsing -----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symcol",
        description="Graph transformations, automorphism tools, coloring "
        "constructions, and exact search oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="apply a graph transformation")
    p.add_argument("--kind", required=True,
                   choices=["subdivision", "central", "middle", "endline", "line"])
    p.add_argument("--in", dest="graph", required=True, metavar="GRAPH6")

    p = sub.add_parser("aut", help="automorphism group or transform-chain report")
    p.add_argument("--in", dest="graph", required=True, metavar="GRAPH6")
    p.add_argument("--chain", action="store_true",
                   help="compare group orders across the transformed graphs")

    p = sub.add_parser("construct", help="run a coloring construction")
    p.add_argument("--theorem", required=True, choices=list(CONSTRUCT_TAGS))
    p.add_argument("--in", dest="graph", required=True, metavar="GRAPH6")
    p.add_argument("--in2", dest="graph2", metavar="GRAPH6",
                   help="second part for the join construction")
    p.add_argument("--out", help="also write the result JSON to this file")

    p = sub.add_parser("verify", help="check a stored coloring or partition")
    p.add_argument("--property", required=True,
                   choices=["proper-total", "avd", "tdc", "distinguishing"])
    p.add_argument("--coloring", required=True, metavar="FILE")
    p.add_argument("--in", dest="graph", metavar="GRAPH6",
                   help="graph (required for tdc, optional cross-check otherwise)")

    p = sub.add_parser("oracle", help="exact parameter search")
    p.add_argument("--param", required=True, choices=list(PARAM_KINDS))
    p.add_argument("--in", dest="graph", required=True, metavar="GRAPH6")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("latin", help="print an idempotent commutative square as CSV")
    p.add_argument("--k", type=int, required=True,
                   help="parameter k; the square has order 2k-1")

    p = sub.add_parser("sweep", help="run one check across a graph family")
    p.add_argument("--check", required=True, choices=list(SWEEP_CHECKS))
    p.add_argument("--family", default="all-connected",
                   choices=["all-connected", "all-trees", "regular"])
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--min-order", type=int, default=None)
    p.add_argument("--degree", type=int, default=None,
                   help="degree for the regular family")
    p.add_argument("--file", help="file of graph6 strings, one per line")
    p.add_argument("--report", required=True, help="JSONL report path")
    p.add_argument("--cache", default=None,
                   help="cache directory (default: <report>.cache)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {
        "transform": _cmd_transform,
        "aut": _cmd_aut,
        "construct": _cmd_construct,
        "verify": _cmd_verify,
        "oracle": _cmd_oracle,
        "latin": _cmd_latin,
        "sweep": _cmd_sweep,
    }[args.command]
    try:
        return handler(args)
    except _UsageError as exc:
        print(f"symcol: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
