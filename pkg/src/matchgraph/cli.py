"""Command line surface: reproduction tables, one-stop analysis reports,
and the small-graph conjecture scanner.

Reports are versioned JSON with an exactness flag on every numeric claim
and a determinism hash over everything except timing.  Exit codes:
0 = all values certified, 2 = some interval/heuristic values,
3 = a conjecture violation was found, 1 = usage or input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
import time
from multiprocessing import Pool

from .alternation import EdgeOrdering, ex_alt_sigma, ex_salt_sigma
from .coloring import chromatic_number, coloring_from_extremal, export_dimacs
from .errors import GraphParseError, NotEulerianError
from .graphs import (
    Graph,
    format_graph,
    is_connected,
    make_complete_bipartite,
    make_cycle,
    read_graph,
)
from .hypergraphs import matching_graph
from .matching import tutte_berge
from .orderings import euler_ordering, star_formula_conditions
from .smallgraphs import connected_graphs_up_to
from .turan import turan_matchings

SCHEMA = "matchgraph-report/1"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INTERVAL = 2
EXIT_VIOLATION = 3


# ---------------------------------------------------------------------------
# Report plumbing.
# ---------------------------------------------------------------------------

def _jsonable(value):
    if isinstance(value, float) and math.isinf(value):
        return "infinite"
    if isinstance(value, (frozenset, set)):
        return sorted(value)
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, list):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _graph_sha(g: Graph) -> str:
    return hashlib.sha256(format_graph(g).encode("ascii")).hexdigest()


def _finish_report(report: dict, started: float) -> dict:
    body = {k: v for k, v in report.items() if k != "timing"}
    digest = hashlib.sha256(
        json.dumps(_jsonable(body), sort_keys=True).encode("utf-8")
    ).hexdigest()
    report["determinism_sha256"] = digest
    report["timing"] = {"seconds": round(time.time() - started, 6)}
    return report


def _exit_code(report: dict) -> int:
    flags = report.get("exactness", {})
    if report.get("results", {}).get("violations"):
        return EXIT_VIOLATION
    if any(flag != "certified" for flag in flags.values()):
        return EXIT_INTERVAL
    return EXIT_OK


def _emit(report: dict, fmt: str, out_path: str | None) -> None:
    payload = json.dumps(_jsonable(report), indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    if fmt == "json":
        print(payload)
    else:
        _print_table(report)


def _print_table(report: dict) -> None:
    print(f"command: {report['command']}")
    for key, value in sorted(report.get("inputs", {}).items()):
        print(f"  {key}: {_jsonable(value)}")
    print("results:")
    for key, value in report.get("results", {}).items():
        if key in ("records", "scan_records"):
            continue
        print(f"  {key}: {_jsonable(value)}")
    print("exactness:")
    for key, value in sorted(report.get("exactness", {}).items()):
        print(f"  {key}: {value}")


# ---------------------------------------------------------------------------
# Shared analysis pipeline.
# ---------------------------------------------------------------------------

def _resolve_ordering(g: Graph, choice: str) -> EdgeOrdering:
    if choice == "euler":
        return _euler_componentwise(g)
    if choice == "identity":
        return EdgeOrdering.identity(g.m)
    if choice.startswith("file:"):
        with open(choice[5:], "r", encoding="ascii") as fh:
            return EdgeOrdering.from_line(fh.read())
    raise ValueError(f"unknown ordering choice {choice!r}")


def _euler_componentwise(g: Graph) -> EdgeOrdering:
    """Euler ordering, concatenated per component for disconnected inputs."""
    if is_connected(g):
        return euler_ordering(g)
    from .graphs import component_masks

    order: list[int] = []
    for comp in component_masks(g):
        vertices = [v for v in range(g.n) if comp >> v & 1]
        relabel = {v: i for i, v in enumerate(vertices)}
        eids = []
        sub_edges = []
        for eid, (u, v) in enumerate(g.edges):
            if comp >> u & 1:
                eids.append(eid)
                sub_edges.append((relabel[u], relabel[v]))
        sub = Graph(len(vertices), tuple(sub_edges))
        sigma = euler_ordering(sub)
        order.extend(eids[p] for p in sigma.perm)
    return EdgeOrdering(tuple(order))


def _chi_for_matching_graph(g: Graph, r: int, ex_cert, orderings, node_budget):
    """Exact chromatic data for KG(g, rK2) using alternation lower bounds."""
    kg = matching_graph(g, r)
    if kg.graph.n == 0:
        cert = chromatic_number(kg.graph)
        return kg, cert, 0, {}
    bound_details = {}
    lb = 0
    for name, sigma in orderings.items():
        ea = ex_alt_sigma(g, r, sigma)
        es = ex_salt_sigma(g, r, sigma)
        bound_details[name] = {
            "ex_alt": ea,
            "ex_salt": es,
            "chi_lower": max(g.m - ea, g.m + 1 - es),
        }
        lb = max(lb, bound_details[name]["chi_lower"])
    initial = None
    if ex_cert.exact:
        initial = coloring_from_extremal(g, r, ex_cert.extremal_edges)
    cert = chromatic_number(
        kg,
        node_budget=node_budget,
        known_lower=lb if lb > 0 else None,
        known_lower_label="alternation bound",
        initial_coloring=initial,
    )
    return kg, cert, lb, bound_details


def _chi_fields(cert) -> tuple[dict, str]:
    if cert.exact:
        witness_kind, payload = cert.lower_witness
        return (
            {
                "chi": cert.chi,
                "lower_witness": {"kind": witness_kind, "value": _jsonable(payload)},
                "search_nodes": cert.nodes,
            },
            "certified",
        )
    return (
        {
            "chi": None,
            "chi_interval": list(cert.bounds),
            "search_nodes": cert.nodes,
        },
        "interval",
    )


# ---------------------------------------------------------------------------
# Commands.
# ---------------------------------------------------------------------------

def cmd_schrijver(n: int, r: int, node_budget: int = 10_000_000) -> dict:
    """chi(KG(C_n, rK2)) versus the closed formula n - 2r + 2."""
    started = time.time()
    if n < 2 * r + 1:
        raise ValueError(f"need n >= 2r+1, got n={n}, r={r}")
    g = make_cycle(n)
    ex_cert = turan_matchings(g, r)
    sigma = euler_ordering(g)
    kg, cert, lb, bounds = _chi_for_matching_graph(
        g, r, ex_cert, {"euler": sigma}, node_budget
    )
    chi_fields, chi_flag = _chi_fields(cert)
    formula = n - 2 * r + 2
    report = {
        "schema": SCHEMA,
        "command": "schrijver",
        "inputs": {"n": n, "r": r, "graph_sha256": _graph_sha(g)},
        "results": {
            **chi_fields,
            "formula_value": formula,
            "agrees_with_formula": cert.exact and cert.chi == formula,
            "matching_graph_vertices": kg.graph.n,
            "ex": ex_cert.ex_value,
            "euler_ordering_lower_bound": lb,
            "bounds_by_ordering": bounds,
        },
        "exactness": {
            "chi": chi_flag,
            "ex": "certified" if ex_cert.exact else "interval",
        },
    }
    return _finish_report(report, started)


def cmd_permutation(m: int, n: int, r: int, node_budget: int = 10_000_000) -> dict:
    """chi(KG(K_{m,n}, rK2)) versus the closed formula m(n - r + 1)."""
    started = time.time()
    if not (m >= n >= r >= 1):
        raise ValueError(f"need m >= n >= r >= 1, got ({m},{n},{r})")
    g = make_complete_bipartite(m, n)
    ex_cert = turan_matchings(g, r)
    sigma = euler_ordering(g)
    kg, cert, lb, bounds = _chi_for_matching_graph(
        g, r, ex_cert, {"euler": sigma}, node_budget
    )
    chi_fields, chi_flag = _chi_fields(cert)
    formula = m * (n - r + 1)
    conditions = star_formula_conditions(g, r)
    report = {
        "schema": SCHEMA,
        "command": "permutation",
        "inputs": {"m": m, "n": n, "r": r, "graph_sha256": _graph_sha(g)},
        "results": {
            **chi_fields,
            "formula_value": formula,
            "agrees_with_formula": cert.exact and cert.chi == formula,
            "m_is_even": m % 2 == 0,
            "even_side_formula_certified": m % 2 == 0 and conditions.applicable,
            "matching_graph_vertices": kg.graph.n,
            "ex": ex_cert.ex_value,
            "euler_ordering_lower_bound": lb,
            "bounds_by_ordering": bounds,
        },
        "exactness": {
            "chi": chi_flag,
            "ex": "certified" if ex_cert.exact else "interval",
        },
    }
    return _finish_report(report, started)


def cmd_analyze(
    path: str,
    r: int,
    ordering: str = "euler",
    node_budget: int = 10_000_000,
) -> dict:
    """One-stop report for a graph file: matchings, Turan, chi, alternation."""
    started = time.time()
    g = read_graph(path)
    results: dict = {"n": g.n, "m": g.m}
    exactness: dict = {}

    if g.n <= 20:
        witness = tutte_berge(g)
        results["nu"] = witness.nu
        results["tutte_berge"] = {
            "s": sorted(witness.s),
            "deficiency": witness.deficiency,
        }
        exactness["nu"] = "certified"

    ex_cert = turan_matchings(g, r)
    results["ex"] = ex_cert.ex_value if ex_cert.exact else None
    results["extremal_edges"] = sorted(ex_cert.extremal_edges)
    results["ex_method"] = ex_cert.method
    if not ex_cert.exact:
        results["ex_interval"] = list(ex_cert.bounds)
    exactness["ex"] = "certified" if ex_cert.exact else "interval"

    connected = is_connected(g)
    results["connected"] = connected
    if not connected:
        results["conjecture_applicable"] = False
        results["disconnected_note"] = (
            "the equality chi = |E| - ex can fail on disconnected graphs;"
            " |E| - 2 ex is also reported for comparison"
        )
        if ex_cert.exact:
            results["edges_minus_2ex"] = g.m - 2 * ex_cert.ex_value
    else:
        results["conjecture_applicable"] = True

    conditions = star_formula_conditions(g, r)
    results["star_formula"] = {
        "applicable": conditions.applicable,
        "formula_value": conditions.formula_value,
        "odd_girth": _jsonable(conditions.odd_girth),
    }

    try:
        sigma = _resolve_ordering(g, ordering)
    except NotEulerianError as exc:
        raise ValueError(f"euler ordering unavailable: {exc}") from exc
    results["ordering"] = {"choice": ordering, "perm": list(sigma.perm)}

    kg, cert, lb, bounds = _chi_for_matching_graph(
        g, r, ex_cert, {ordering: sigma}, node_budget
    )
    results["matching_graph_vertices"] = kg.graph.n
    results["alternation_bounds"] = bounds
    results["alternation_chi_lower"] = lb
    chi_fields, chi_flag = _chi_fields(cert)
    results.update(chi_fields)
    exactness["chi"] = chi_flag

    audits = {}
    if ex_cert.exact:
        detail = bounds.get(ordering, {})
        if detail:
            audits["sandwich_ex_le_ex_alt_le_2ex"] = (
                ex_cert.ex_value <= detail["ex_alt"] <= 2 * ex_cert.ex_value
            )
        if cert.exact:
            audits["chi_le_edges_minus_ex"] = cert.chi <= g.m - ex_cert.ex_value
            audits["lower_le_chi"] = lb <= cert.chi
            audits["conjecture_equality"] = cert.chi == g.m - ex_cert.ex_value
            if connected and not audits["conjecture_equality"]:
                results["violations"] = [
                    {"chi": cert.chi, "ex": ex_cert.ex_value, "m": g.m}
                ]
    results["audits"] = audits

    report = {
        "schema": SCHEMA,
        "command": "analyze",
        "inputs": {"path": path, "r": r, "graph_sha256": _graph_sha(g)},
        "results": results,
        "exactness": exactness,
    }
    return _finish_report(report, started)


# ---------------------------------------------------------------------------
# The conjecture scanner.
# ---------------------------------------------------------------------------

def _scan_one(task) -> dict:
    n, edges, r, node_budget = task
    g = Graph(n, edges)
    ex_cert = turan_matchings(g, r)
    orderings = {"euler": euler_ordering(g), "identity": EdgeOrdering.identity(g.m)}
    kg, cert, lb, bounds = _chi_for_matching_graph(g, r, ex_cert, orderings, node_budget)
    record = {
        "n": n,
        "edges": [list(e) for e in edges],
        "r": r,
        "ex": ex_cert.ex_value,
        "extremal_edges": sorted(ex_cert.extremal_edges),
        "matching_graph_vertices": kg.graph.n,
        "alternation_chi_lower": lb,
        "certified": bool(cert.exact and ex_cert.exact),
    }
    if cert.exact:
        record["chi"] = cert.chi
        record["equality"] = cert.chi == g.m - ex_cert.ex_value
        kind, payload = cert.lower_witness
        record["certificates"] = {
            "coloring": list(cert.coloring),
            "extremal_edges": sorted(ex_cert.extremal_edges),
            "lower_witness": {"kind": kind, "value": _jsonable(payload)},
        }
    else:
        record["chi"] = None
        record["chi_interval"] = list(cert.bounds)
        record["equality"] = None
        record["certificates"] = {
            "coloring": list(cert.coloring),
            "extremal_edges": sorted(ex_cert.extremal_edges),
            "lower_witness": {"kind": "interval", "value": list(cert.bounds)},
        }
    return record


def cmd_scan(
    max_n: int,
    r: int,
    out_path: str | None = None,
    node_budget: int = 10_000_000,
    jobs: int = 1,
) -> dict:
    """Scan all connected graphs on up to max_n vertices: does
    chi(KG(G, rK2)) equal |E(G)| - ex(G, rK2) on every one of them?"""
    started = time.time()
    if max_n > 7:
        raise ValueError("scan is limited to max_n <= 7")
    tasks = [
        (g.n, g.edges, r, node_budget) for g in connected_graphs_up_to(max_n)
    ]
    if jobs > 1:
        with Pool(jobs) as pool:
            records = pool.map(_scan_one, tasks)
    else:
        records = [_scan_one(t) for t in tasks]

    violations = [rec for rec in records if rec["equality"] is False]
    capacity_failures = [rec for rec in records if not rec["certified"]]
    per_size: dict[int, int] = {}
    for rec in records:
        per_size[rec["n"]] = per_size.get(rec["n"], 0) + 1

    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            for rec in records:
                fh.write(json.dumps(_jsonable(rec), sort_keys=True) + "\n")

    report = {
        "schema": SCHEMA,
        "command": "scan",
        "inputs": {"max_n": max_n, "r": r},
        "results": {
            "graphs_scanned": len(records),
            "graphs_by_vertex_count": {str(k): v for k, v in sorted(per_size.items())},
            "violations": [
                {"n": rec["n"], "edges": rec["edges"], "chi": rec["chi"], "ex": rec["ex"]}
                for rec in violations
            ],
            "capacity_failures": [
                {"n": rec["n"], "edges": rec["edges"], "chi_interval": rec.get("chi_interval")}
                for rec in capacity_failures
            ],
            "records": records if not out_path else f"written to {out_path}",
        },
        "exactness": {
            "scan": "certified" if not capacity_failures else "interval",
        },
    }
    return _finish_report(report, started)


# ---------------------------------------------------------------------------
# Entry point.
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchgraph",
        description="Chromatic numbers of matching graphs, with certificates.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    common = dict(fmt=("--format", dict(choices=["json", "table"], default="json")),
                  out=("--out", dict(default=None, metavar="PATH")),
                  nodes=("--max-nodes", dict(type=int, default=10_000_000)))

    p = sub.add_parser("schrijver", help="chi of KG(C_n, rK2) vs n-2r+2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    for flag, kw in (common["fmt"], common["out"], common["nodes"]):
        p.add_argument(flag, **kw)

    p = sub.add_parser("permutation", help="chi of KG(K_{m,n}, rK2) vs m(n-r+1)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    for flag, kw in (common["fmt"], common["out"], common["nodes"]):
        p.add_argument(flag, **kw)

    p = sub.add_parser("scan", help="conjecture scan over small connected graphs")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--jobs", type=int, default=1)
    for flag, kw in (common["fmt"], common["out"], common["nodes"]):
        p.add_argument(flag, **kw)

    p = sub.add_parser("analyze", help="full report for a graph file")
    p.add_argument("path", metavar="GRAPHFILE")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--ordering", default="euler",
                   help="euler | identity | file:PATH")
    for flag, kw in (common["fmt"], common["out"], common["nodes"]):
        p.add_argument(flag, **kw)

    p = sub.add_parser("dimacs", help="export a graph file as DIMACS .col")
    p.add_argument("path", metavar="GRAPHFILE")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.cmd == "schrijver":
            report = cmd_schrijver(args.n, args.r, node_budget=args.max_nodes)
        elif args.cmd == "permutation":
            report = cmd_permutation(args.m, args.n, args.r, node_budget=args.max_nodes)
        elif args.cmd == "scan":
            report = cmd_scan(
                args.max_n, args.r, out_path=args.out,
                node_budget=args.max_nodes, jobs=args.jobs,
            )
            _emit(report, args.format, None)
            return _exit_code(report)
        elif args.cmd == "analyze":
            report = cmd_analyze(
                args.path, args.r, ordering=args.ordering, node_budget=args.max_nodes
            )
        elif args.cmd == "dimacs":
            print(export_dimacs(read_graph(args.path)), end="")
            return EXIT_OK
        else:  # pragma: no cover
            parser.error("unknown command")
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(report, args.format, args.out)
    return _exit_code(report)


if __name__ == "__main__":
    sys.exit(main())
