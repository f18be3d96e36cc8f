"""Batch front door: solve, oracle, gen, bench, and verify commands.

Report rows are JSON lines on stdout (or key=value pairs with --format tsv);
diagnostics go to stderr.  Exit codes: 0 success, 2 usage error, 3 parse
error, 4 oracle budget exceeded, 1 failed verification.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass

from hyperdense.core import (
    EdgeSolution,
    Hypergraph,
    HypergraphFormatError,
    VertexSolution,
    covered_edges,
    parse_hypergraph,
    serialize_hypergraph,
    solution_json,
    union_of,
)
from hyperdense.dksh3 import dksh_3uniform, dksh_candidates, greedy_weighted_dks
from hyperdense.interval import (
    IntervalInstance,
    dksh_interval,
    mpu_interval,
    parse_intervals,
    serialize_intervals,
    to_hypergraph,
)
from hyperdense.mpu3 import mpu_3uniform
from hyperdense.mpu_general import mpu_sqrt_m
from hyperdense.oracle import (
    OracleBudgetError,
    PlantedSpec,
    brute_dksh,
    brute_mpu,
    brute_min_expansion,
    exact_weighted_dks,
    generate_intervals,
    generate_planted,
    generate_uniform,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_BUDGET = 4


@dataclass(frozen=True)
class RunReport:
    """One benchmark row; the ratio is present exactly when the oracle ran."""

    instance: str
    problem: str
    algorithm: str
    parameter: int
    objective: int
    wall_time_s: float
    oracle: int | None = None
    ratio: float | None = None

    def row(self) -> dict:
        out = {
            "instance": self.instance,
            "problem": self.problem,
            "algorithm": self.algorithm,
            "parameter": self.parameter,
            "objective": self.objective,
            "wall_time_s": round(self.wall_time_s, 6),
        }
        if self.oracle is not None:
            out["oracle"] = self.oracle
            out["ratio"] = round(self.ratio, 6)
        return out


def _emit(row: dict, fmt: str) -> None:
    if fmt == "tsv":
        print("\t".join(f"{k}={row[k]}" for k in sorted(row)))
    else:
        print(json.dumps(row, sort_keys=True, separators=(",", ":")))


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:12]


def _reverify(h: Hypergraph, sol: EdgeSolution | VertexSolution) -> None:
    """Independent containment/union scan; a mismatch is an internal error."""
    if isinstance(sol, EdgeSolution):
        if union_of(h, sol.edge_indices) != sol.union:
            raise RuntimeError("solution union failed re-verification")
    else:
        if covered_edges(h, sol.vertices) != sol.covered:
            raise RuntimeError("solution cover failed re-verification")


def _cmd_solve(args: argparse.Namespace) -> int:
    text = _read(args.file)
    if args.problem == "mpu":
        if args.algo == "interval":
            inst = parse_intervals(text)
            sol = mpu_interval(inst, args.p)
            base = to_hypergraph(inst)
        else:
            base = parse_hypergraph(text)
            if args.algo == "sqrt-m":
                sol = mpu_sqrt_m(base, args.p)
            else:
                trace: list[dict] | None = [] if args.trace else None
                sol = mpu_3uniform(base, args.p, trace=trace)
                if trace:
                    for row in trace:
                        _emit(row, args.format)
        _reverify(base, sol)
        print(solution_json("mpu", args.p, sol))
        return EXIT_OK

    if args.algo == "interval":
        inst = parse_intervals(text)
        sol = dksh_interval(inst, args.k)
        base = to_hypergraph(inst)
    else:
        base = parse_hypergraph(text)
        sub = exact_weighted_dks if args.sub == "exact" else greedy_weighted_dks
        if args.explain:
            breakdown = [
                {"algorithm": cand.algorithm, "covered": cand.covered_count}
                for cand in dksh_candidates(base, args.k, sub)
            ]
            if args.format == "tsv":
                for row in breakdown:
                    _emit(row, "tsv")
            else:
                print(json.dumps(breakdown, sort_keys=True, separators=(",", ":")))
        sol = dksh_3uniform(base, args.k, sub)
    _reverify(base, sol)
    print(solution_json("dksh", args.k, sol))
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    text = _read(args.file)
    h = parse_hypergraph(text)
    if args.problem == "mpu":
        sol = brute_mpu(h, args.p)
        _reverify(h, sol)
        print(solution_json("mpu", args.p, sol))
    elif args.problem == "dksh":
        sol = brute_dksh(h, args.k)
        _reverify(h, sol)
        print(solution_json("dksh", args.k, sol))
    else:
        print(brute_min_expansion(h).to_json())
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "planted":
        spec = PlantedSpec(
            n=args.n,
            noise_edges=args.noise_edges,
            block_size=args.block_size,
            block_edges=args.block_edges,
            seed=args.seed,
        )
        planted = generate_planted(spec)
        print(f"# planted block vertices: {' '.join(map(str, planted.block_vertices))}")
        print(f"# planted edge indices: {' '.join(map(str, planted.block_edge_indices))}")
        sys.stdout.write(serialize_hypergraph(planted.hypergraph))
    elif args.kind == "uniform":
        sizes = args.size if args.max_size is None else (args.size, args.max_size)
        sys.stdout.write(
            serialize_hypergraph(generate_uniform(args.n, args.m, args.seed, sizes))
        )
    else:
        sys.stdout.write(
            serialize_intervals(generate_intervals(args.n, args.m, args.seed))
        )
    return EXIT_OK


def _bench_one(
    fmt: str,
    digest: str,
    problem: str,
    algorithm: str,
    parameter: int,
    solve,
    oracle,
    with_oracle: bool,
) -> None:
    start = time.perf_counter()
    sol = solve()
    elapsed = time.perf_counter() - start
    objective = sol.union_size if isinstance(sol, EdgeSolution) else sol.covered_count
    oracle_value = None
    ratio = None
    if with_oracle:
        ref = oracle()
        oracle_value = (
            ref.union_size if isinstance(ref, EdgeSolution) else ref.covered_count
        )
        if problem == "mpu":
            ratio = objective / oracle_value if oracle_value else 1.0
        else:
            ratio = oracle_value / objective if objective else float("inf")
    report = RunReport(
        digest, problem, algorithm, parameter, objective, elapsed, oracle_value, ratio
    )
    _emit(report.row(), fmt)


def _cmd_bench(args: argparse.Namespace) -> int:
    uniform = generate_uniform(10, 14, seed=11)
    mixed = generate_uniform(8, 8, seed=7, sizes=(1, 4))
    ivs = generate_intervals(12, 8, seed=5)
    du = _digest(serialize_hypergraph(uniform))
    dm = _digest(serialize_hypergraph(mixed))
    di = _digest(serialize_intervals(ivs))
    w = args.with_oracle
    _bench_one(args.format, du, "mpu", "sqrt-m", 4,
               lambda: mpu_sqrt_m(uniform, 4), lambda: brute_mpu(uniform, 4), w)
    _bench_one(args.format, du, "mpu", "three-uniform", 4,
               lambda: mpu_3uniform(uniform, 4), lambda: brute_mpu(uniform, 4), w)
    _bench_one(args.format, du, "dksh", "three-uniform", 6,
               lambda: dksh_3uniform(uniform, 6), lambda: brute_dksh(uniform, 6), w)
    _bench_one(args.format, dm, "mpu", "sqrt-m", 3,
               lambda: mpu_sqrt_m(mixed, 3), lambda: brute_mpu(mixed, 3), w)
    _bench_one(args.format, di, "mpu", "interval", 3,
               lambda: mpu_interval(ivs, 3),
               lambda: brute_mpu(to_hypergraph(ivs), 3), w)
    _bench_one(args.format, di, "dksh", "interval", 6,
               lambda: dksh_interval(ivs, 6),
               lambda: brute_dksh(to_hypergraph(ivs), 6), w)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    text = _read(args.instance)
    payload = json.loads(_read(args.solution))
    problem = payload.get("problem")
    if problem not in ("mpu", "dksh"):
        raise ValueError("solution file must carry problem 'mpu' or 'dksh'")
    if args.intervals:
        h = to_hypergraph(parse_intervals(text))
    else:
        h = parse_hypergraph(text)
    parameter = payload["parameter"]
    vertices = payload["vertices"]
    edge_indices = payload["edge_indices"]
    problems = []
    if problem == "mpu":
        if len(edge_indices) != parameter:
            problems.append("edge count differs from parameter")
        if len(set(edge_indices)) != len(edge_indices):
            problems.append("edge indices repeat")
        elif any(not 0 <= i < h.m for i in edge_indices):
            problems.append("edge index out of range")
        else:
            union = list(union_of(h, edge_indices))
            if union != sorted(vertices):
                problems.append("vertices differ from the recomputed union")
            if payload.get("union_size") != len(union):
                problems.append("union_size differs from the recomputed union")
    else:
        if len(vertices) != parameter:
            problems.append("vertex count differs from parameter")
        if any(not 0 <= v < h.n for v in vertices):
            problems.append("vertex id out of range")
        else:
            covered = list(covered_edges(h, vertices))
            if covered != sorted(edge_indices):
                problems.append("edge indices differ from the recomputed cover")
            if payload.get("covered_count") != len(covered):
                problems.append("covered_count differs from the recomputed cover")
    valid = not problems
    _emit({"valid": valid, "problem": problem, "issues": problems}, args.format)
    return EXIT_OK if valid else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperdense",
        description="Solvers, oracles, and generators for dense-subhypergraph problems.",
    )
    parser.add_argument("--format", choices=("json", "tsv"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="run an approximation or exact solver")
    solve_sub = solve.add_subparsers(dest="problem", required=True)
    s_mpu = solve_sub.add_parser("mpu")
    s_mpu.add_argument("--algo", choices=("sqrt-m", "three-uniform", "interval"),
                       default="sqrt-m")
    s_mpu.add_argument("--p", type=int, required=True)
    s_mpu.add_argument("--trace", action="store_true",
                       help="emit one row per witness-size guess")
    s_mpu.add_argument("file")
    s_mpu.set_defaults(func=_cmd_solve)
    s_dksh = solve_sub.add_parser("dksh")
    s_dksh.add_argument("--algo", choices=("three-uniform", "interval"),
                        default="three-uniform")
    s_dksh.add_argument("--k", type=int, required=True)
    s_dksh.add_argument("--sub", choices=("greedy", "exact"), default="greedy")
    s_dksh.add_argument("--explain", action="store_true",
                        help="emit one row per component strategy")
    s_dksh.add_argument("file")
    s_dksh.set_defaults(func=_cmd_solve)

    oracle = sub.add_parser("oracle", help="run a brute-force exact solver")
    oracle_sub = oracle.add_subparsers(dest="problem", required=True)
    o_mpu = oracle_sub.add_parser("mpu")
    o_mpu.add_argument("--p", type=int, required=True)
    o_mpu.add_argument("file")
    o_mpu.set_defaults(func=_cmd_oracle)
    o_dksh = oracle_sub.add_parser("dksh")
    o_dksh.add_argument("--k", type=int, required=True)
    o_dksh.add_argument("file")
    o_dksh.set_defaults(func=_cmd_oracle)
    o_minexp = oracle_sub.add_parser("minexp")
    o_minexp.add_argument("file")
    o_minexp.set_defaults(func=_cmd_oracle)

    gen = sub.add_parser("gen", help="generate a seeded instance on stdout")
    gen_sub = gen.add_subparsers(dest="kind", required=True)
    g_planted = gen_sub.add_parser("planted")
    g_planted.add_argument("--n", type=int, required=True)
    g_planted.add_argument("--noise-edges", type=int, required=True)
    g_planted.add_argument("--block-size", type=int, required=True)
    g_planted.add_argument("--block-edges", type=int, required=True)
    g_planted.add_argument("--seed", type=int, required=True)
    g_planted.set_defaults(func=_cmd_gen)
    g_uniform = gen_sub.add_parser("uniform")
    g_uniform.add_argument("--n", type=int, required=True)
    g_uniform.add_argument("--m", type=int, required=True)
    g_uniform.add_argument("--size", type=int, default=3)
    g_uniform.add_argument("--max-size", type=int, default=None)
    g_uniform.add_argument("--seed", type=int, required=True)
    g_uniform.set_defaults(func=_cmd_gen)
    g_interval = gen_sub.add_parser("interval")
    g_interval.add_argument("--n", type=int, required=True)
    g_interval.add_argument("--m", type=int, required=True)
    g_interval.add_argument("--seed", type=int, required=True)
    g_interval.set_defaults(func=_cmd_gen)

    bench = sub.add_parser("bench", help="run the built-in benchmark suite")
    bench.add_argument("--suite", choices=("small",), default="small")
    bench.add_argument("--with-oracle", action="store_true")
    bench.set_defaults(func=_cmd_bench)

    verify = sub.add_parser("verify", help="check a solution JSON against an instance")
    verify.add_argument("--intervals", action="store_true",
                        help="the instance file uses the interval format")
    verify.add_argument("instance")
    verify.add_argument("solution")
    verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except HypergraphFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OracleBudgetError as exc:
        print(f"oracle budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
