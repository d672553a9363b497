"""Command-line front end: solve, verify, construct, sweep.

Exit codes are a stable contract:

* 0  success (exact solve / verification passed)
* 1  malformed input or usage error
* 2  budget exhausted (solve) or verification failed (verify)
* 3  structurally infeasible

Budgets default to 60 seconds / 10^7 nodes per feasibility decision and can
also be set through the environment variables ``DTCOLOR_MAX_SECONDS`` and
``DTCOLOR_MAX_NODES``.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .graphs import (
    Graph,
    Graph6Error,
    canonical_graph6,
    enumerate_connected,
    is_in_f3s,
    parse_family_spec,
    parse_graph6,
    to_graph6,
)
from .colorings import (
    ColoringError,
    ConstraintSet,
    PRESETS,
    TotalColoring,
    constraint_set,
    preset,
    satisfies,
)
from . import solver
from .bounds import (
    SolveCache,
    SUITE_PRESETS,
    conjecture_sweep,
    run_bound_suite,
    subgraph_monotonicity_scan,
)
from . import constructions

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2
EXIT_INFEASIBLE = 3


class CliError(Exception):
    pass


def _budget_from(args) -> solver.SearchBudget:
    nodes = args.max_nodes or int(os.environ.get("DTCOLOR_MAX_NODES", 10_000_000))
    seconds = args.max_seconds or float(os.environ.get("DTCOLOR_MAX_SECONDS", 60.0))
    return solver.SearchBudget(max_nodes=nodes, max_seconds=seconds)


def _load_graph(args) -> Graph:
    sources = [s for s in (args.family, args.graph6, args.graph6_file) if s]
    if len(sources) != 1:
        raise CliError("provide exactly one of --family / --graph6 / --graph6-file")
    if args.family:
        return parse_family_spec(args.family)
    if args.graph6:
        return parse_graph6(args.graph6)
    text = Path(args.graph6_file).read_text().strip().splitlines()
    if not text:
        raise CliError(f"{args.graph6_file} is empty")
    return parse_graph6(text[0])


def _constraints(args) -> ConstraintSet:
    if args.preset and args.conditions:
        raise CliError("use either --preset or --conditions, not both")
    if args.preset:
        return preset(args.preset)
    if args.conditions is not None:
        ids = []
        for token in args.conditions.split(","):
            token = token.strip().upper().lstrip("C")
            if token:
                ids.append(int(token))
        return constraint_set(ids, args.mode)
    raise CliError("a --preset or a --conditions list is required")


def _manifest(command: str, argv, budget: solver.SearchBudget,
              input_digest: str) -> dict:
    body = {
        "command": command,
        "arguments": list(argv),
        "input_digest": input_digest,
        "budget": {"max_nodes": budget.max_nodes,
                   "max_seconds": budget.max_seconds},
        "tool_version": __version__,
    }
    digest = hashlib.sha256(
        json.dumps(body, sort_keys=True).encode()).hexdigest()[:16]
    body["manifest_digest"] = digest
    body["started"] = time.strftime("%Y-%m-%dT%H:%M:%S")
    return body


def _digest_text(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _emit(payload: dict, manifest: dict):
    payload = dict(payload)
    payload["manifest_digest"] = manifest["manifest_digest"]
    json.dump(payload, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


# ---------------------------------------------------------------------------

def cmd_solve(args, argv) -> int:
    budget = _budget_from(args)
    g = _load_graph(args)
    cs = _constraints(args)
    manifest = _manifest("solve", argv, budget, _digest_text(to_graph6(g)))
    result = solver.chromatic_number(g, cs, budget)
    payload = result.to_json(to_graph6(g), cs, with_witness=not args.no_witness)
    if args.preset:
        payload["preset"] = args.preset
    _emit(payload, manifest)
    if result.status == solver.EXACT:
        return EXIT_OK
    if result.status == solver.LOWER_BOUND_ONLY:
        return EXIT_BUDGET
    return EXIT_INFEASIBLE


def cmd_verify(args, argv) -> int:
    budget = _budget_from(args)
    g = _load_graph(args)
    cs = _constraints(args)
    manifest = _manifest("verify", argv, budget, _digest_text(to_graph6(g)))
    data = json.loads(Path(args.coloring).read_text())
    f = TotalColoring.from_json(g, data)
    verdict = satisfies(g, f, cs)
    payload = verdict.to_json()
    payload["graph6"] = to_graph6(g)
    payload["constraint_set"] = cs.names()
    payload["mode"] = cs.mode
    _emit(payload, manifest)
    return EXIT_OK if verdict.ok else EXIT_BUDGET


def cmd_construct(args, argv) -> int:
    budget = _budget_from(args)
    g = _load_graph(args)
    manifest = _manifest("construct", argv, budget, _digest_text(to_graph6(g)))
    method = args.method
    if method == "all_distinct":
        report = constructions.all_distinct_report(g)
    elif method == "compose":
        edge = solver.chromatic_number(g, preset("chi_prime_s"), budget)
        vert = solver.chromatic_number(g, preset("chi"), budget)
        if edge.status != solver.EXACT or vert.status != solver.EXACT:
            raise CliError("budget exhausted while solving the composition parts")
        report = constructions.compose_edge_vertex(g, edge.witness, vert.witness)
    elif method == "cover":
        report = constructions.cover_composition(g, budget)
    elif method == "bipartite_lift":
        stats_k = max(g.degree(u) for u in range(g.n)) + 2
        outcome, witness, _ = solver.feasible_at(
            g, stats_k, preset("chi_prime_as"), budget)
        if outcome != solver.WITNESS:
            raise CliError(
                f"no adjacent-distinguishing edge coloring with {stats_k} colors")
        report = constructions.bipartite_lift(g, witness)
    elif method in ("add_edge", "add_leaf", "add_leaves"):
        target = "mu_e" if method == "add_leaves" else "mu"
        base = solver.chromatic_number(g, preset(target), budget)
        if base.status != solver.EXACT:
            raise CliError(f"cannot {method}: base solve is {base.status}")
        if method == "add_edge":
            if args.endpoints is None:
                raise CliError("--endpoints u,v is required for add_edge")
            u, v = (int(x) for x in args.endpoints.split(","))
            report = constructions.extend_add_edge(g, base.witness, u, v, budget)
        elif method == "add_leaf":
            if args.attach is None:
                raise CliError("--attach is required for add_leaf")
            report = constructions.extend_add_leaf(
                g, base.witness, int(args.attach), budget)
        else:
            if args.attach is None:
                raise CliError("--attach u1,u2,... is required for add_leaves")
            points = [int(x) for x in str(args.attach).split(",")]
            report = constructions.extend_add_leaves(g, base.witness, points, budget)
    else:
        raise CliError(f"unknown construction method {method!r}")
    _emit(report.to_json(), manifest)
    return EXIT_OK if report.verdict.ok else EXIT_BUDGET


# ---------------------------------------------------------------------------

def _parse_range(spec: str):
    if ".." in spec:
        lo, hi = spec.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(spec)]


def _sweep_graph(task):
    """Worker: full solve/bound/scan pipeline for one graph6 line."""
    code, preset_names, bound_sel, scan_variant, max_nodes, max_seconds = task
    g = parse_graph6(code)
    budget = solver.SearchBudget(max_nodes=max_nodes, max_seconds=max_seconds)
    cache = SolveCache(budget)
    values = {}
    solve_rows = []
    for name in preset_names:
        res = cache.result(g, name)
        values[name] = res
        solve_rows.append(res.to_json(code, preset(name), with_witness=False)
                          | {"preset": name})
    bound_rows = []
    if bound_sel:
        checks = run_bound_suite(g, values, budget, cache)
        if bound_sel != ["all"]:
            wanted = set(bound_sel)
            checks = [c for c in checks
                      if c.bound_id in wanted
                      or c.bound_id.split(".")[0] in wanted]
        bound_rows = [c.to_json() | {"graph6": code} for c in checks]
    anomalies = []
    if scan_variant:
        anomalies = subgraph_monotonicity_scan(g, scan_variant, budget, cache)
    return code, solve_rows, bound_rows, anomalies


def cmd_sweep(args, argv) -> int:
    budget = _budget_from(args)
    ns = _parse_range(args.n)
    if max(ns) > 7 and not args.force:
        raise CliError(
            f"n={max(ns)} exceeds the default cap of 7; rerun with --force "
            "if you really want this (expect long runtimes)")
    outdir = Path(args.out)
    try:
        outdir.mkdir(parents=True, exist_ok=True)
        probe = outdir / ".writable"
        probe.write_text("")
        probe.unlink()
    except OSError as exc:
        raise CliError(f"output directory not writable: {exc}") from None

    preset_names = (list(PRESETS) if args.presets == "all"
                    else [p.strip() for p in args.presets.split(",") if p.strip()])
    for p in preset_names:
        preset(p)  # validate early
    bound_sel = []
    if args.bounds:
        bound_sel = (["all"] if args.bounds == "all"
                     else [b.strip() for b in args.bounds.split(",")])
    conjectures = []
    if args.conjectures:
        conjectures = ([c.strip() for c in args.conjectures.split(",")]
                       if args.conjectures != "all"
                       else ["c1", "c2", "c3", "c4", "p1_1", "p1_2", "p1_3"])

    codes = []
    for n in ns:
        for g in enumerate_connected(n):
            if is_in_f3s(g):
                codes.append(canonical_graph6(g))
    codes.sort()
    manifest = _manifest("sweep", argv, budget, _digest_text("\n".join(codes)))

    tasks = [(code, preset_names, bound_sel, args.scan,
              budget.max_nodes, budget.max_seconds) for code in codes]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            raw = list(pool.map(_sweep_graph, tasks))
    else:
        raw = [_sweep_graph(t) for t in tasks]
    raw.sort(key=lambda r: r[0])

    solve_rows, bound_rows, anomalies = [], [], []
    for _, srows, brows, anom in raw:
        solve_rows.extend(srows)
        bound_rows.extend(brows)
        anomalies.extend(anom)

    digest = manifest["manifest_digest"]
    (outdir / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True))
    detail = {
        "manifest_digest": digest,
        "solves": solve_rows,
        "bounds": bound_rows,
        "anomalies": anomalies,
    }
    if conjectures:
        reports = conjecture_sweep(ns, conjectures, budget)
        detail["conjectures"] = [r.to_json() for r in reports]
    (outdir / "results.json").write_text(json.dumps(detail, indent=2, sort_keys=True))

    with (outdir / "solves.csv").open("w", newline="") as fh:
        fh.write(f"# manifest_digest={digest}\n")
        w = csv.writer(fh)
        w.writerow(["graph6", "preset", "mode", "status", "value", "nodes"])
        for row in solve_rows:
            w.writerow([row["graph6"], row["preset"], row["mode"],
                        row["status"], row["value"], row["nodes"]])
    if bound_rows:
        with (outdir / "bounds.csv").open("w", newline="") as fh:
            fh.write(f"# manifest_digest={digest}\n")
            w = csv.writer(fh)
            w.writerow(["graph6", "bound_id", "hypothesis_met",
                        "lhs", "rhs", "holds", "note"])
            for row in bound_rows:
                w.writerow([row["graph6"], row["bound_id"], row["hypothesis_met"],
                            row["lhs"], row["rhs"], row["holds"], row["note"]])
    summary = {
        "graphs": len(codes),
        "solves": len(solve_rows),
        "bound_rows": len(bound_rows),
        "bound_violations": [r for r in bound_rows if r["holds"] is False],
        "anomalies": anomalies,
        "out": str(outdir),
    }
    if conjectures:
        summary["conjectures"] = {r["conjecture_id"]: r["status"]
                                  for r in detail["conjectures"]}
    _emit(summary, manifest)
    return EXIT_OK


# ---------------------------------------------------------------------------

def _add_graph_args(p):
    p.add_argument("--family", help="family spec like cycle:5, star:4, kb:3,2")
    p.add_argument("--graph6", help="one graph6 line")
    p.add_argument("--graph6-file", help="file whose first line is graph6")


def _add_constraint_args(p):
    p.add_argument("--preset", help=f"one of: {', '.join(PRESETS)}")
    p.add_argument("--conditions", help="explicit list like C1,C5 (with --mode)")
    p.add_argument("--mode", default="total",
                   choices=["total", "edge_only", "vertex_only"])


def _add_budget_args(p):
    p.add_argument("--max-nodes", type=int, default=None)
    p.add_argument("--max-seconds", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dtcolor",
        description="Exact lab for distinguishing proper total colorings of small graphs")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute a chromatic variant exactly")
    _add_graph_args(p)
    _add_constraint_args(p)
    _add_budget_args(p)
    p.add_argument("--no-witness", action="store_true")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("verify", help="verify a coloring file against conditions")
    _add_graph_args(p)
    _add_constraint_args(p)
    _add_budget_args(p)
    p.add_argument("--coloring", required=True,
                   help="JSON file {k, vertex_colors, edge_colors}")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("construct", help="build and verify a certificate coloring")
    p.add_argument("method", choices=["all_distinct", "compose", "cover",
                                      "bipartite_lift", "add_edge", "add_leaf",
                                      "add_leaves"])
    _add_graph_args(p)
    _add_budget_args(p)
    p.add_argument("--attach", help="attachment vertex (or list for add_leaves)")
    p.add_argument("--endpoints", help="u,v for add_edge")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("sweep", help="solve families and run bound/conjecture checks")
    p.add_argument("--n", required=True, help="size or range like 3..5")
    p.add_argument("--presets", default="all")
    p.add_argument("--bounds", default="", help="'all' or comma list of ids")
    p.add_argument("--conjectures", default="",
                   help="'all' or comma list like c2,c3")
    p.add_argument("--scan", default="",
                   help="preset for the subgraph monotonicity scan")
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--force", action="store_true")
    _add_budget_args(p)
    p.set_defaults(fn=cmd_sweep)
    return ap


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        return args.fn(args, argv)
    except (CliError, Graph6Error, ColoringError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
