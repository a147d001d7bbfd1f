"""Command-line front end: ``indset {count,verify,audit,sweep,construct}``.

JSON goes to stdout, a one-line summary to stderr (suppressed by --quiet).
The exit code is 0 exactly when the report's ``pass`` field is true.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import graph_core as gc
from .bounds import (
    Verdict,
    compare_bound_vs_count,
    compare_bounds,
    kahn_bound,
    paper_bound,
    sah_bound,
)
from .entropy_audit import audit_bipartite_proof
from .errors import IndsetError
from .indset_count import count_independent_sets, enumerate_independent_sets
from .sweeps import run_bound_sweep, run_zhao_sweep

SWEEP_MAX_SIDE = 5
SWEEP_MAX_N = 6


def _load(path: str) -> tuple[gc.Graph, dict]:
    raw = Path(path).read_bytes()
    info = {"path": path, "sha256": hashlib.sha256(raw).hexdigest()}
    return gc.parse_graph(raw.decode("ascii")), info


def _strip(g: gc.Graph, enabled: bool) -> tuple[gc.Graph, int]:
    if not enabled:
        return g, 0
    iso = g.isolated_vertices()
    return g.induced_without(iso), len(iso)


def _error(exc: Exception) -> dict:
    return {"error": type(exc).__name__, "message": str(exc)}


def cmd_count(args) -> tuple[dict, bool, str]:
    g, info = _load(args.graph)
    g, k = _strip(g, args.strip_isolated)
    count = count_independent_sets(g) << k
    results = {"n": g.n + k, "m": g.m, "count": str(count)}
    if k:
        results["stripped_isolated"] = k
    if args.enumerate:
        fam = enumerate_independent_sets(g)
        if k:
            results["enumerate_note"] = "sets listed for the graph with isolated vertices removed"
        results["sets"] = [list(s) for s in fam.vertex_sets()]
    return {"inputs": info, "results": results}, True, f"|I(G)| = {count}"


def _verify(g: gc.Graph, count: int, which: list[str], orientation: str) -> tuple[dict, bool]:
    bounds = {}
    results: dict = {"count": str(count), "bounds": {}, "comparisons": {}}
    ok = True

    def record(name, fn):
        nonlocal ok
        try:
            b = fn()
        except IndsetError as exc:
            results["bounds"][name] = _error(exc)
            ok = False
            return
        verdict = compare_bound_vs_count(b, count)
        bounds[name] = b
        results["bounds"][name] = {**b.to_json(), "verdict": verdict.value}
        if verdict is Verdict.VIOLATED:
            ok = False

    if "kahn" in which:
        record("kahn", lambda: kahn_bound(g))
    if "sah" in which:
        record("sah", lambda: sah_bound(g))
    if "paper" in which:
        view = gc.bipartition(g)
        if view is None:
            results["bounds"]["paper"] = {"error": "NotBipartiteError", "message": "graph is not bipartite"}
            ok = False
        else:
            if orientation in ("default", "both"):
                record("paper:default", lambda: paper_bound(view))
            if orientation in ("flip", "both"):
                record("paper:flipped", lambda: paper_bound(view.flip()))
    names = list(bounds)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            results["comparisons"][f"{a} vs {b}"] = compare_bounds(bounds[a], bounds[b]).value
    return results, ok


def cmd_verify(args) -> tuple[dict, bool, str]:
    g, info = _load(args.graph)
    g, k = _strip(g, args.strip_isolated)
    which = ["kahn", "sah", "paper"] if args.bound == "all" else [args.bound]
    count = count_independent_sets(g)
    results, ok = _verify(g, count, which, args.orientation)
    if k:
        results["stripped_isolated"] = k
        results["count_with_isolated"] = str(count << k)
    verdicts = {name: b.get("verdict", b.get("error")) for name, b in results["bounds"].items()}
    return {"inputs": {**info, "bound": args.bound, "orientation": args.orientation}, "results": results}, ok, str(verdicts)


def cmd_audit(args) -> tuple[dict, bool, str]:
    g, info = _load(args.graph)
    g, k = _strip(g, args.strip_isolated)
    inputs = {**info, "orientation": args.orientation}
    view = gc.bipartition(g)
    if view is None:
        return {"inputs": inputs, "results": {"error": "NotBipartiteError", "message": "graph is not bipartite"}}, False, "not bipartite"
    name = "default"
    if args.orientation == "flip":
        view, name = view.flip(), "flipped"
    try:
        report = audit_bipartite_proof(g, view, name)
    except IndsetError as exc:
        return {"inputs": inputs, "results": _error(exc)}, False, str(exc)
    results = report.to_json()
    if k:
        results["stripped_isolated"] = k
    summary = f"{len(report.steps)} steps, {len(report.failures())} failed"
    return {"inputs": inputs, "results": results}, report.passed, summary


def cmd_sweep(args) -> tuple[dict, bool, str]:
    inputs = {
        "max_left": args.max_left,
        "max_right": args.max_right,
        "zhao_max_n": args.zhao_max_n,
        "audit": args.audit,
    }
    if args.zhao_max_n is not None:
        if args.zhao_max_n > SWEEP_MAX_N and not args.allow_large:
            raise IndsetError(f"--zhao-max-n above {SWEEP_MAX_N} needs --allow-large")
        stats = run_zhao_sweep(args.zhao_max_n)
        return {"inputs": inputs, "results": stats.to_json()}, stats.passed, f"{stats.graphs} graphs, {len(stats.violations)} violations"
    if args.max_left is None or args.max_right is None:
        raise IndsetError("give --max-left and --max-right, or --zhao-max-n")
    if max(args.max_left, args.max_right) > SWEEP_MAX_SIDE and not args.allow_large:
        raise IndsetError(f"sides above {SWEEP_MAX_SIDE} need --allow-large")
    stats = run_bound_sweep(args.max_left, args.max_right, audit=args.audit)
    return {"inputs": inputs, "results": stats.to_json()}, stats.passed, f"{stats.graphs} graphs, {len(stats.violations)} violations"


def cmd_construct(args) -> tuple[dict, bool, str]:
    kind = args.kind
    p = args.params
    if kind == "complete":
        g = gc.complete_graph(int(p[0]))
    elif kind == "bipartite":
        g = gc.complete_bipartite(int(p[0]), int(p[1]))
    elif kind == "path":
        g = gc.path_graph(int(p[0]))
    elif kind == "cycle":
        g = gc.cycle_graph(int(p[0]))
    elif kind == "empty":
        g = gc.empty_graph(int(p[0]))
    elif kind == "tensor":
        g = gc.tensor_product(_load(p[0])[0], _load(p[1])[0])
    elif kind == "double-cover":
        g, _ = gc.bipartite_double_cover(_load(p[0])[0])
    elif kind == "union":
        g = gc.disjoint_union(_load(path)[0] for path in p)
    else:  # pragma: no cover - argparse restricts choices
        raise IndsetError(f"unknown construction {kind}")
    text = gc.serialize_graph(g)
    if args.output:
        Path(args.output).write_text(text)
    return {"inputs": {"kind": kind, "params": p}, "results": {"n": g.n, "m": g.m, "output": args.output}, "text": text}, True, f"n={g.n} m={g.m}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="indset", description=__doc__.splitlines()[0])
    parser.add_argument("--quiet", action="store_true", help="suppress the stderr summary")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.add_argument("graph", help="graph file ('p edge n m' / 'e u v' format)")
        sp.add_argument("--strip-isolated", action="store_true",
                        help="drop isolated vertices first (each doubles the count)")
        return sp

    sp = graph_cmd("count", "exact number of independent sets")
    sp.add_argument("--enumerate", action="store_true", help="also list every independent set")
    sp.set_defaults(func=cmd_count)

    sp = graph_cmd("verify", "evaluate bounds and certify them against the exact count")
    sp.add_argument("--bound", choices=["kahn", "sah", "paper", "all"], default="all")
    sp.add_argument("--orientation", choices=["default", "flip", "both"], default="both")
    sp.set_defaults(func=cmd_verify)

    sp = graph_cmd("audit", "check every step of the entropy argument")
    sp.add_argument("--orientation", choices=["default", "flip"], default="default")
    sp.set_defaults(func=cmd_audit)

    sp = sub.add_parser("sweep", help="exhaustive sweep over small graphs", parents=[common])
    sp.add_argument("--max-left", type=int)
    sp.add_argument("--max-right", type=int)
    sp.add_argument("--zhao-max-n", type=int)
    sp.add_argument("--audit", action="store_true", help="also audit each graph in both orientations")
    sp.add_argument("--allow-large", action="store_true")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("construct", help="write a graph file for a standard family", parents=[common])
    sp.add_argument("kind", choices=["complete", "bipartite", "path", "cycle", "empty",
                                     "tensor", "double-cover", "union"])
    sp.add_argument("params", nargs="+", help="sizes, or input graph files")
    sp.add_argument("-o", "--output", help="write the graph here and print a JSON report instead")
    sp.set_defaults(func=cmd_construct)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        payload, ok, summary = args.func(args)
    except (IndsetError, OSError, ValueError) as exc:
        inputs = {k: v for k, v in vars(args).items() if k not in ("func", "command", "quiet")}
        payload, ok, summary = {"inputs": inputs, "results": _error(exc)}, False, str(exc)
    text = payload.pop("text", None)
    if args.command == "construct" and not args.output and ok:
        sys.stdout.write(text)
    else:
        report = {
            "command": args.command,
            "inputs": payload.get("inputs", {}),
            "results": payload.get("results", {}),
            "pass": ok,
            "wall_time_ms": int((time.perf_counter() - start) * 1000),
        }
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    if not args.quiet:
        print(f"[{args.command}] {'PASS' if ok else 'FAIL'}: {summary}", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
