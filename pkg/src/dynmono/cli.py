"""Command-line front end.

Exit codes: 0 success, 1 input error (including usage errors), 2 operation
precondition violation, 3 refused oversize exact search.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import bench as bench_mod
from .cascade import hull, parse_rho, parse_seed_set, proportional_thresholds
from .constructors import (
    abw_construct,
    girth5_construct,
    girth5_params,
    tree_construct,
    v2_baseline,
)
from .errors import InputFormatError, PreconditionError, SizeLimitError
from .exact import DEFAULT_SIZE_LIMIT, min_monopoly_exact
from .generators import FAMILIES, GeneratorSpec, generate
from .graphs import ACYCLIC, Graph, girth, parse_graph, serialize_graph


class _Parser(argparse.ArgumentParser):
    # argparse defaults to exit code 2 on usage errors; this tool reserves 2
    # for precondition violations, so usage problems exit 1 instead.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputFormatError(f"cannot read graph file {path}: {exc}") from None
    try:
        return parse_graph(text)
    except InputFormatError as exc:
        raise InputFormatError(f"{path}: {exc}") from None


def _load_seed_set(path: str, n: int) -> tuple[int, ...]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputFormatError(f"cannot read seed file {path}: {exc}") from None
    try:
        return parse_seed_set(text, n)
    except InputFormatError as exc:
        raise InputFormatError(f"{path}: {exc}") from None


def cmd_gen(args) -> int:
    spec = GeneratorSpec(family=args.family, n=args.n, p=args.p, rng_seed=args.seed)
    g = generate(spec)
    Path(args.output).write_text(serialize_graph(g), encoding="utf-8")
    print(f"wrote {args.family} graph: n={g.n} m={g.m} -> {args.output}")
    return 0


def cmd_girth(args) -> int:
    value = girth(_load_graph(args.graph))
    print("acyclic" if value == ACYCLIC else int(value))
    return 0


def cmd_hull(args) -> int:
    g = _load_graph(args.graph)
    phi = proportional_thresholds(g, parse_rho(args.rho))
    result = hull(g, phi, _load_seed_set(args.seed_set, g.n))
    if args.json:
        print(json.dumps(result.to_json_dict(), indent=2))
    else:
        print(f"active {len(result.active)}/{g.n}")
        print(f"monopoly: {str(result.is_monopoly).lower()}")
        rounds = max(result.rounds.values(), default=0)
        print(f"rounds: {rounds}")
    return 0


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    phi = proportional_thresholds(g, parse_rho(args.rho))
    result = hull(g, phi, _load_seed_set(args.seed_set, g.n))
    if result.is_monopoly:
        print("monopoly: true")
    else:
        print(f"monopoly: false ({g.n - len(result.active)} vertices remain inactive)")
    return 0


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    phi = proportional_thresholds(g, parse_rho(args.rho))
    t0 = time.perf_counter()
    result = min_monopoly_exact(g, phi, limit=args.limit, force=args.force)
    record = {
        "h": result.h,
        "witness": sorted(result.witness),
        "nodes_explored": result.nodes_explored,
        "runtime_ms": int((time.perf_counter() - t0) * 1000),
    }
    print(json.dumps(record, indent=2))
    return 0


def cmd_construct(args) -> int:
    g = _load_graph(args.graph)
    rho = parse_rho(args.rho)
    if args.method == "abw":
        seed = abw_construct(g, proportional_thresholds(g, rho), rng_seed=args.rng_seed)
    elif args.method == "tree":
        seed = tree_construct(g, rho)
    elif args.method == "v2":
        seed = v2_baseline(g, rho)
    else:
        delta = args.delta
        if delta is None:
            delta = str(girth5_params(args.epsilon).delta) if args.epsilon is not None else "1/2"
        seed = girth5_construct(
            g,
            rho,
            delta=delta,
            rng_seed=args.rng_seed,
            max_rounds=args.max_rounds,
            max_restarts=args.max_restarts,
            allow_low_girth=args.allow_low_girth,
            epsilon=args.epsilon,
        )
    print(json.dumps(seed.to_json_dict(), indent=2))
    return 0


def cmd_params(args) -> int:
    params = girth5_params(args.epsilon)
    print(f"epsilon  = {params.epsilon}")
    print(f"delta    = {params.delta:.9f}")
    print(f"rho_max  = {params.rho_max:.6e}")
    print(f"p2       = {params.p2:.6e}")
    return 0


def cmd_bench(args) -> int:
    config = bench_mod.load_config(args.config)
    output = args.output or config.output
    if output is None:
        raise InputFormatError("no output path: pass -o or set 'output' in the config")
    result = bench_mod.run_bench(config, base_dir=Path(args.config).parent)
    bench_mod.write_csv(result.rows, output)
    print(f"wrote {output}")
    for line in bench_mod.summary_lines(result):
        print(line)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dynmono", description="Dynamic monopolies for degree-proportional thresholds")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance and write its edge list")
    p.add_argument("--family", required=True, choices=list(FAMILIES))
    p.add_argument("--n", type=int, default=None, help="size (leaf count for star; ignored for petersen)")
    p.add_argument("--p", type=float, default=None, help="edge probability (random_girth5 only)")
    p.add_argument("--seed", type=int, default=0, help="generator RNG seed")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("girth", help="print the girth (or 'acyclic')")
    p.add_argument("-g", "--graph", required=True)
    p.set_defaults(func=cmd_girth)

    p = sub.add_parser("hull", help="run the cascade from a seed set")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--rho", required=True, help='threshold parameter, "P/Q" or decimal')
    p.add_argument("--seed-set", required=True, help="file of whitespace-separated vertex ids")
    p.add_argument("--json", action="store_true", help="emit the full cascade record as JSON")
    p.set_defaults(func=cmd_hull)

    p = sub.add_parser("verify", help="check whether a seed set is a monopoly")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--rho", required=True)
    p.add_argument("--seed-set", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="exact minimum monopoly by exhaustive search")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--rho", required=True)
    p.add_argument("--limit", type=int, default=DEFAULT_SIZE_LIMIT)
    p.add_argument("--force", action="store_true", help="search even above the size limit")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("construct", help="build a monopoly seed")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--rho", required=True)
    p.add_argument("--method", required=True, choices=list(bench_mod.METHODS))
    p.add_argument("--delta", default=None, help="slack parameter for girth5 (default 1/2, or derived from --epsilon)")
    p.add_argument("--epsilon", type=float, default=None, help="derive delta from a 2+epsilon size budget")
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("--max-rounds", type=int, default=None)
    p.add_argument("--max-restarts", type=int, default=0)
    p.add_argument("--allow-low-girth", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("params", help="derive girth5 parameters from epsilon")
    p.add_argument("--epsilon", type=float, required=True)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("bench", help="run a benchmark sweep from a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("-o", "--output", default=None, help="CSV path (overrides config)")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 2
    except SizeLimitError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
