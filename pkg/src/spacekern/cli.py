"""Command-line front end.

Exit codes: 0 = kernel emitted, 1 = certified no-instance (report still
written), 2 = usage or format error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .cluster import kernelize_cluster
from .fvs import kernelize_fvs
from .generators import FAMILIES
from .graphcore import (
    GraphFormatError,
    Kernel,
    KernelGraph,
    NoInstance,
    SpaceMeter,
    load_graph,
    parse_graph_text,
)
from .oracle import exact_cluster, exact_fvs, exact_path_contraction
from .pathcontraction import kernelize_path_contraction
from .report import build_report, render_meter_figure


def _read_graph(path: str):
    text = Path(path).read_text()
    return load_graph(text)


def _write_kernel(kernel: Kernel, out: Path) -> None:
    out.write_text(kernel.graph.to_text())
    sidecar = []
    for rec in kernel.chains:
        sidecar.append(f"chain {rec.u} {rec.v} {rec.via_u} {rec.via_v}")
    for kind, u, v in kernel.mods:
        sidecar.append(f"mod {kind} {u} {v}")
    for a, c, b in kernel.triples:
        sidecar.append(f"triple {a} {c} {b}")
    if sidecar:
        out.with_suffix(out.suffix + ".sidecar").write_text("\n".join(sidecar) + "\n")


def _run_kernelization(args, problem: str) -> int:
    g = _read_graph(args.input)
    if args.k < 0:
        print("error: k must be non-negative", file=sys.stderr)
        return 2
    meter = SpaceMeter(trace=bool(args.report))
    start = time.perf_counter()
    if problem == "pc":
        verdict = kernelize_path_contraction(g, args.k, meter)
    elif problem == "fvs":
        verdict = kernelize_fvs(g, args.k, meter)
    elif problem == "ce":
        verdict = kernelize_cluster(g, args.k, mode="editing", meter=meter)
    else:
        verdict = kernelize_cluster(g, args.k, mode="deletion", meter=meter)
    wall_ms = (time.perf_counter() - start) * 1000.0

    report = build_report(problem, g.n, g.m, args.k, verdict, meter, wall_ms)
    if args.report:
        rpath = Path(args.report)
        rpath.write_text(report.to_json())
        render_meter_figure(meter, rpath.with_suffix(".png"),
                            f"{problem} n={g.n} m={g.m} k={args.k}")
    if isinstance(verdict, NoInstance):
        print(f"no-instance: {verdict.reason}")
        return 1
    if args.out:
        _write_kernel(verdict, Path(args.out))
    print(f"kernel: n'={verdict.graph.vertex_count} m'={verdict.graph.edge_count} "
          f"k'={verdict.k} peak_words={meter.peak}")
    return 0


def _run_oracle(args) -> int:
    text = Path(args.input).read_text()
    doc = parse_graph_text(text)
    if doc.vertices or doc.loops:
        graph = KernelGraph.from_text(text)
    else:
        graph = load_graph(text)
    if args.problem == "pc":
        yes, sols = exact_path_contraction(graph, args.k)
        minimal = [sorted(tuple(e) for e in s) for s in sols.minimal]
    elif args.problem == "fvs":
        yes, sols = exact_fvs(graph, args.k)
        minimal = [sorted(s) for s in sols.minimal]
    else:
        mode = "editing" if args.problem == "ce" else "deletion"
        yes, sols = exact_cluster(graph, args.k, mode)
        minimal = [sorted(tuple(p) for p in s) for s in sols.minimal]
    print(json.dumps({"answer": "yes" if yes else "no",
                      "minimal_solutions": minimal}, sort_keys=True))
    return 0


def _run_gen(args) -> int:
    make = FAMILIES[args.family]
    g = make(args.n, args.param, args.seed)
    from .graphcore import dump_graph

    text = dump_graph(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spacekern",
        description="Space-metered kernelizations for path contraction, "
                    "feedback vertex set, and cluster editing/deletion.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, doc in (("pc", "path contraction"),
                      ("fvs", "feedback vertex set"),
                      ("ce", "cluster editing"),
                      ("cd", "cluster deletion")):
        p = sub.add_parser(name, help=f"kernelize {doc}")
        p.add_argument("--input", required=True, help="edge-list graph file")
        p.add_argument("--k", type=int, required=True, help="parameter")
        p.add_argument("--out", help="kernel output file")
        p.add_argument("--report", help="JSON report path (figure rendered beside it)")

    p = sub.add_parser("oracle", help="brute-force exact answer for debugging")
    p.add_argument("--problem", choices=("pc", "fvs", "ce", "cd"), required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("gen", help="emit a deterministic test instance")
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--param", type=int, default=1,
                   help="chords / feedback edges / planted conflicts")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in ("pc", "fvs", "ce", "cd"):
            return _run_kernelization(args, args.command)
        if args.command == "oracle":
            return _run_oracle(args)
        return _run_gen(args)
    except (GraphFormatError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
