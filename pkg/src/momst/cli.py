"""Command-line front end and benchmark harness.

Subcommands: solve, bench, generate, oracle, inspect. Exit codes: 0 solved,
2 timeout, 3 memout, 64 usage error. The bench harness writes one CSV row
per (instance, algorithm), flushed after every row so partial results
survive crashes; MOMST_THREADS caps its worker count.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields
from operator import add
from pathlib import Path
from typing import Optional, TextIO

from .bn import solve_bn
from .core import InstanceError, MultiGraph
from .igmda import Limits, SolveResult, solve
from .instance_io import InstanceSpec, instance_text, parse_instance
from .oracle import nondominated_costs
from .preprocess import Reduction, lift, reduce
from .transition import explicit_graph

EXIT_SOLVED = 0
EXIT_TIMEOUT = 2
EXIT_MEMOUT = 3
EXIT_USAGE = 64

CSV_COLUMNS = [
    "instance", "algorithm", "n", "m", "d", "status", "solutions",
    "iterations", "transition_nodes", "time_preprocess_s", "time_solve_s",
    "red_count", "blue_count", "max_frontier",
]


@dataclass
class RunRecord:
    instance: str
    algorithm: str
    n: int
    m: int
    d: int
    status: str
    solutions: int
    iterations: int
    transition_nodes: int
    time_preprocess_s: float
    time_solve_s: float
    red_count: int
    blue_count: int
    max_frontier: int

    def row(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors exit 64, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def _load(path: str) -> MultiGraph:
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def _limits(args) -> Limits:
    return Limits(time_limit_s=args.time_limit, mem_limit_mb=args.mem_limit)


def _run_instance(graph: MultiGraph, algorithm: str, *, preprocess: bool,
                  prune: bool, sort: str, limits: Limits,
                  ) -> tuple[SolveResult, Optional[Reduction], float]:
    """Optionally reduce, then solve; returns (result, reduction, preprocess seconds)."""
    reduction = None
    t_pre = 0.0
    target = graph
    if preprocess:
        t0 = time.perf_counter()
        reduction = reduce(graph)
        t_pre = time.perf_counter() - t0
        target = reduction.reduced_graph
    if algorithm == "igmda":
        result = solve(target, prune=prune, limits=limits)
    elif algorithm == "bn":
        result = solve_bn(target, sort=sort, limits=limits)
    else:
        raise ValueError("unknown algorithm %r" % algorithm)
    return result, reduction, t_pre


def _lifted_solutions(graph: MultiGraph, result: SolveResult,
                      reduction: Optional[Reduction]):
    """(cost, original edge ids) pairs, lex-sorted by cost."""
    out = []
    for cost, tree in zip(result.costs, result.trees):
        if reduction is not None:
            tree = lift(reduction, tree)
            cost = tuple(map(add, cost, reduction.blue_offset))
        out.append((cost, tree))
    out.sort(key=lambda item: item[0])
    return out


def _solution_line(graph: MultiGraph, cost, tree) -> str:
    ends = sorted(tuple(sorted((graph.edges[e][0] + 1, graph.edges[e][1] + 1)))
                  for e in tree)
    return "%s : %s" % (" ".join(str(c) for c in cost),
                        " ".join("%d-%d" % (u, v) for u, v in ends))


def cmd_solve(args) -> int:
    graph = _load(args.instance)
    result, reduction, t_pre = _run_instance(
        graph, args.algo, preprocess=not args.no_preprocess,
        prune=not args.no_prune, sort=args.sort, limits=_limits(args))
    out: TextIO = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        if result.solved:
            for cost, tree in _lifted_solutions(graph, result, reduction):
                print(_solution_line(graph, cost, tree), file=out)
    finally:
        if args.out:
            out.close()
    stats = result.stats
    print("status=%s solutions=%d iterations=%d transition_nodes=%d "
          "time_preprocess=%.4fs time_solve=%.4fs" % (
              result.status, len(result.costs), stats.iterations,
              stats.transition_nodes_created, t_pre, stats.solve_time),
          file=sys.stderr)
    if reduction is not None:
        print("reduction: red=%d blue=%d reduced_n=%d reduced_m=%d" % (
            reduction.red_count, reduction.blue_count,
            reduction.reduced_graph.n, reduction.reduced_graph.m), file=sys.stderr)
    return {"solved": EXIT_SOLVED, "timeout": EXIT_TIMEOUT,
            "memout": EXIT_MEMOUT}[result.status]


def _bench_job(path: str, algorithm: str, args) -> RunRecord:
    try:
        graph = _load(path)
    except InstanceError:
        return RunRecord(path, algorithm, 0, 0, 0, "error", 0, 0, 0, 0.0, 0.0, 0, 0, 0)
    try:
        result, reduction, t_pre = _run_instance(
            graph, algorithm, preprocess=not args.no_preprocess,
            prune=True, sort="lex", limits=_limits(args))
        stats = result.stats
        return RunRecord(
            instance=path, algorithm=algorithm, n=graph.n, m=graph.m,
            d=graph.dimension, status=result.status, solutions=len(result.costs),
            iterations=stats.iterations,
            transition_nodes=stats.transition_nodes_created,
            time_preprocess_s=round(t_pre, 6),
            time_solve_s=round(stats.solve_time, 6),
            red_count=reduction.red_count if reduction else 0,
            blue_count=reduction.blue_count if reduction else 0,
            max_frontier=stats.max_frontier)
    except Exception:
        return RunRecord(path, algorithm, graph.n, graph.m, graph.dimension,
                         "error", 0, 0, 0, 0.0, 0.0, 0, 0, 0)


def _collect_instances(paths: list[str]) -> list[str]:
    found: list[str] = []
    for p in paths:
        path = Path(p)
        if path.is_dir():
            found.extend(sorted(str(f) for f in path.glob("*.momst")))
        else:
            found.append(p)
    return found


def cmd_bench(args) -> int:
    instances = _collect_instances(args.paths)
    if not instances:
        print("no instances found", file=sys.stderr)
        return EXIT_USAGE
    algorithms = [a.strip() for a in args.algos.split(",") if a.strip()]
    jobs = [(inst, algo) for inst in instances for algo in algorithms]
    workers = max(1, int(os.environ.get("MOMST_THREADS", "1")))

    out: TextIO = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        out.flush()
        if workers == 1:
            for inst, algo in jobs:
                writer.writerow(_bench_job(inst, algo, args).row())
                out.flush()
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                futures = [pool.submit(_bench_job, inst, algo, args)
                           for inst, algo in jobs]
                for future in futures:  # submission order keeps rows deterministic
                    writer.writerow(future.result().row())
                    out.flush()
    finally:
        if args.out:
            out.close()
    return EXIT_SOLVED


def cmd_generate(args) -> int:
    spec = InstanceSpec(
        family=args.family, dimension=args.d, n=args.n, rows=args.rows,
        cols=args.cols, edge_factor=args.edge_factor,
        correlation=args.correlation, seed=args.seed)
    text = instance_text(spec)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_SOLVED


def cmd_oracle(args) -> int:
    graph = _load(args.instance)
    front = sorted(nondominated_costs(graph))
    print("{%s}" % ", ".join("(%s)" % ",".join(str(c) for c in v) for v in front))
    return EXIT_SOLVED


def cmd_inspect(args) -> int:
    graph = _load(args.instance)
    print("n=%d m=%d d=%d root=%d" % (graph.n, graph.m, graph.dimension, graph.root + 1))
    if args.explicit:
        nodes, arcs = explicit_graph(graph, "cut_star" if args.prune else "none")
        print("nodes=%d arcs=%d" % (nodes, arcs))
    return EXIT_SOLVED


def _build_parser() -> _Parser:
    parser = _Parser(prog="momst", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one instance")
    p.add_argument("instance")
    p.add_argument("--algo", choices=("igmda", "bn"), default="igmda")
    p.add_argument("--no-preprocess", action="store_true")
    p.add_argument("--no-prune", action="store_true",
                   help="disable arc pruning (igmda only, equivalence tests)")
    p.add_argument("--sort", choices=("lex", "sum"), default="lex",
                   help="bn queue order (sum is for ablation only)")
    p.add_argument("--time-limit", type=float, default=None, metavar="S")
    p.add_argument("--mem-limit", type=float, default=None, metavar="MB")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="run instances x algorithms, write CSV")
    p.add_argument("paths", nargs="+", help="instance files or directories")
    p.add_argument("--algos", default="igmda,bn")
    p.add_argument("--no-preprocess", action="store_true")
    p.add_argument("--time-limit", type=float, default=None, metavar="S")
    p.add_argument("--mem-limit", type=float, default=None, metavar="MB")
    p.add_argument("--out", default=None, help="CSV path (default stdout)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("generate", help="write a seeded instance")
    p.add_argument("--family", choices=("complete", "grid", "random_sparse"),
                   required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--rows", type=int, default=0)
    p.add_argument("--cols", type=int, default=0)
    p.add_argument("--edge-factor", type=int, default=0)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--correlation", choices=("uncorrelated", "correlated",
                                             "anticorrelated"),
                   default="uncorrelated")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("oracle", help="brute-force nondominated set")
    p.add_argument("instance")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("inspect", help="instance and transition-graph sizes")
    p.add_argument("instance")
    p.add_argument("--explicit", action="store_true",
                   help="materialize the transition graph and count it")
    p.add_argument("--prune", action="store_true",
                   help="count the pruned transition graph instead")
    p.set_defaults(func=cmd_inspect)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InstanceError as exc:
        print("momst: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
