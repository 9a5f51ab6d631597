"""Command-line interface: ``nearly-indep {alpha,oracle,good,gen,verify,bench}``.

Graphs are read one per line in graph6 (or as edge-list records) from a file
or standard input, or generated from a family spec.  Results are written as a
single deterministic JSON document.  Exit status is 0 on success, 1 when a
theorem check finds a violation and 2 on bad input.
"""

from __future__ import annotations

import argparse
import random
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, Sequence

from .errors import NearlyIndepError
from .families import FamilySpec, generate
from .formats import dump_report, emit_edge_list, emit_graph6, read_graphs
from .goodness import build_h_member, is_good_definitional, is_good_structural, parse_recipe
from .graph_core import Graph
from .solver import alpha0_exact, alpha1_exact, alpha_k_oracle, validate_witness
from .verify import THEOREMS, check_corpus, check_theorem, default_workers, theorem_id

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2

BENCH_ORDERS = (10, 20, 30, 40, 50, 60)
BENCH_DENSITIES = (0.1, 0.2, 0.3, 0.5)
BENCH_REPEATS = 3


class InputError(NearlyIndepError):
    pass


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", "-i", metavar="FILE", help="read graphs from FILE instead of stdin")
    p.add_argument("--family", metavar="SPEC", help="use a generated family graph, e.g. path:9")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", "-o", metavar="FILE", help="write the report to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nearly-indep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (
        ("alpha", "exact alpha_k per input graph"),
        ("oracle", "alpha_k per input graph by brute force"),
    ):
        p = sub.add_parser(name, help=helptext)
        _add_input(p)
        _add_output(p)
        p.add_argument("--k", type=int, default=1, help="edge budget (default 1)")
        p.add_argument("--override", action="store_true", help="lift the oracle order guard")
        p.add_argument("--timings", action="store_true", help="include per-graph microseconds")

    p = sub.add_parser("good", help="good-graph verdicts and join decompositions")
    _add_input(p)
    _add_output(p)
    p.add_argument("--decomposition", action="store_true", help="include the join decomposition tree")

    p = sub.add_parser("gen", help="emit a family graph or a recipe-built good graph")
    p.add_argument("spec", nargs="?", help="family spec such as path:7, broom:6,3, bip:2,3")
    p.add_argument("--recipe", help="good-graph recipe such as join(bip(2,3),empty(2))")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    _add_output(p)

    p = sub.add_parser("verify", help="exhaustively check the theorems")
    p.add_argument("--theorem", "-t", action="append", default=None,
                   help="T1..T4 or 'all' (repeatable; default all)")
    p.add_argument("--n", default="1-6", help="order or range, e.g. 6 or 3-7 (default 1-6)")
    p.add_argument("--seed", type=int, default=0, help="seed for oracle spot checks")
    p.add_argument("--override", action="store_true", help="allow n = 8")
    p.add_argument("--corpus", metavar="FILE", help="check graph6 records from FILE instead of enumerating")
    p.add_argument("--workers", type=int, default=None, help="worker processes (default NEARLY_INDEP_THREADS or cores)")
    _add_output(p)

    p = sub.add_parser("bench", help="time alpha_1 on a fixed G(n,p) grid")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--orders", default=",".join(map(str, BENCH_ORDERS)))
    p.add_argument("--densities", default=",".join(map(str, BENCH_DENSITIES)))
    p.add_argument("--repeats", type=int, default=BENCH_REPEATS)
    _add_output(p)
    return parser


def _graphs(args: argparse.Namespace) -> Iterator[tuple[int, Graph]]:
    if args.family and args.input:
        raise InputError("give exactly one input source: --input or --family")
    if args.family:
        yield 1, generate(FamilySpec.parse(args.family))
        return
    if args.input:
        with open(args.input) as fh:
            yield from read_graphs(fh, args.format)
    else:
        yield from read_graphs(sys.stdin, args.format)


def _write(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _alpha_record(job: tuple[Graph, int, bool, bool, bool]) -> dict:
    g, k, force_oracle, override, timings = job
    start = time.perf_counter()
    if force_oracle or k >= 2:
        r = alpha_k_oracle(g, k, override=override)
    elif k == 0:
        r = alpha0_exact(g)
    else:
        r = alpha1_exact(g)
    micros = int((time.perf_counter() - start) * 1e6)
    rec = {
        "graph6": emit_graph6(g).decode("ascii"),
        "n": g.n,
        "m": g.m,
        "k": r.k,
        "value": r.value,
        "witness": r.vertices,
        "method": r.method,
        "witness_valid": None if r.witness is None else validate_witness(g, r),
    }
    if timings:
        rec["micros"] = micros
    return rec


def _map(fn, jobs: list, workers: int) -> list:
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    return [fn(job) for job in jobs]


def cmd_alpha(args: argparse.Namespace, force_oracle: bool) -> int:
    if args.k < 0:
        raise InputError(f"--k must be >= 0, got {args.k}")
    items = list(_graphs(args))
    jobs = [(g, args.k, force_oracle, args.override, args.timings) for _, g in items]
    records = _map(_alpha_record, jobs, default_workers())
    for (line, _), rec in zip(items, records):
        rec["line"] = line
    doc = {"command": "oracle" if force_oracle else "alpha", "k": args.k, "results": records}
    _write(args, dump_report(doc))
    return EXIT_OK


def cmd_good(args: argparse.Namespace) -> int:
    records = []
    for line, g in _graphs(args):
        report = is_good_definitional(g)
        member, tree = is_good_structural(g)
        rec = {
            "line": line,
            "graph6": emit_graph6(g).decode("ascii"),
            "is_good": report.is_good,
            "connected": report.connected,
            "bad_edges": [list(e) for e in report.bad_edges],
            "structural_member": member,
        }
        if args.decomposition:
            rec["decomposition"] = tree.to_dict() if tree else None
            rec["decomposition_expr"] = tree.describe() if tree else None
        records.append(rec)
    _write(args, dump_report({"command": "good", "results": records}))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if bool(args.spec) == bool(args.recipe):
        raise InputError("give exactly one of a family spec or --recipe")
    g = generate(FamilySpec.parse(args.spec)) if args.spec else build_h_member(parse_recipe(args.recipe))
    text = emit_graph6(g).decode("ascii") + "\n" if args.format == "graph6" else emit_edge_list(g)
    _write(args, text)
    return EXIT_OK


def parse_range(text: str) -> list[int]:
    try:
        if "-" in text:
            lo, hi = (int(x) for x in text.split("-", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise InputError(f"--n expects an order or range like 3-7, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise InputError(f"invalid order range {text!r}")
    return list(range(lo, hi + 1))


def cmd_verify(args: argparse.Namespace) -> int:
    names = args.theorem or ["all"]
    if any(t.lower() == "all" for t in names):
        ids = list(THEOREMS.values())
    else:
        ids = [theorem_id(t) for t in names]
    workers = args.workers or default_workers()
    if workers < 1:
        raise InputError(f"--workers must be >= 1, got {workers}")
    reports = []
    if args.corpus:
        with open(args.corpus) as fh:
            graphs = [g for _, g in read_graphs(fh, "graph6")]
        for tid in ids:
            reports.append(check_corpus(tid, graphs, seed=args.seed))
    else:
        orders = parse_range(args.n)
        for tid in ids:
            for n in orders:
                reports.append(check_theorem(tid, n, seed=args.seed, override=args.override, workers=workers))
    passed = all(r.passed for r in reports)
    doc = {"command": "verify", "passed": passed, "reports": [r.to_dict() for r in reports]}
    _write(args, dump_report(doc))
    return EXIT_OK if passed else EXIT_VIOLATION


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        orders = [int(x) for x in args.orders.split(",")]
        densities = [float(x) for x in args.densities.split(",")]
    except ValueError:
        raise InputError("--orders and --densities take comma-separated numbers") from None
    rng = random.Random(args.seed)
    rows = []
    for n in orders:
        for p in densities:
            times, values = [], []
            for _ in range(args.repeats):
                g = gnp(n, p, rng)
                start = time.perf_counter()
                r = alpha1_exact(g)
                times.append(time.perf_counter() - start)
                values.append(r.value)
            rows.append({
                "n": n,
                "p": p,
                "alpha1": values,
                "median_ms": round(1000 * statistics.median(times), 3),
                "max_ms": round(1000 * max(times), 3),
            })
    lines = [f"{'n':>4} {'p':>5} {'median ms':>11} {'max ms':>11}  alpha1"]
    lines += [f"{r['n']:>4} {r['p']:>5} {r['median_ms']:>11.3f} {r['max_ms']:>11.3f}  {r['alpha1']}" for r in rows]
    print("\n".join(lines), file=sys.stderr)
    _write(args, dump_report({"command": "bench", "seed": args.seed, "solver": "alpha1_exact", "table": rows}))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in ("alpha", "oracle"):
            return cmd_alpha(args, force_oracle=args.command == "oracle")
        if args.command == "good":
            return cmd_good(args)
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_bench(args)
    except (NearlyIndepError, OSError) as exc:
        print(f"nearly-indep {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
