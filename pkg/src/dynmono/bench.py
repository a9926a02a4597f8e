"""Benchmark harness: sweep constructors over instances and tabulate every bound.

Each (instance, rho, method, trial) cell runs one construction with an RNG
seed derived by a stable hash of (base, family, n, rho, method, trial), so
adding cells to a config never perturbs existing cells.  Deterministic
methods (tree, v2) run a single trial per cell.  Every emitted row is
re-verified by an independent hull call; an invalid construction aborts the
run.  Cells whose preconditions fail are recorded as skipped, not errors.
"""

from __future__ import annotations

import csv
import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .cascade import is_monopoly, parse_rho, proportional_thresholds
from .constructors import abw_construct, girth5_construct, tree_construct, v2_baseline
from .errors import InputFormatError, PreconditionError
from .exact import abw_bound
from .generators import GeneratorSpec, generate
from .graphs import Graph, parse_graph
from .seeding import stable_seed

CSV_COLUMNS = [
    "family",
    "n",
    "m",
    "rho",
    "delta",
    "method",
    "trial",
    "seed_size",
    "bound_abw",
    "bound_583",
    "bound_492",
    "bound_2eps",
    "bound_rho_n",
    "valid",
    "rounds",
    "fallback",
    "runtime_ms",
]

DETERMINISTIC_METHODS = ("tree", "v2")
METHODS = ("abw", "girth5", "tree", "v2")

CONST_583 = 2.0 * math.sqrt(2.0) + 3.0
CONST_492 = 4.92


@dataclass(frozen=True)
class MethodSpec:
    name: str
    delta: str = "1/2"
    epsilon: float | None = None
    max_rounds: int | None = None
    max_restarts: int = 0
    allow_low_girth: bool = False


@dataclass(frozen=True)
class InstanceSpec:
    """Either a generator family or an edge-list file."""

    gen: GeneratorSpec | None = None
    path: str | None = None

    def label(self) -> str:
        if self.gen is not None:
            return self.gen.label()
        return Path(self.path or "").name


@dataclass
class BenchConfig:
    instances: tuple[InstanceSpec, ...]
    rhos: tuple[Fraction, ...]
    methods: tuple[MethodSpec, ...]
    trials: int = 1
    rng_seed_base: int = 0
    epsilon: float | None = None
    output: str | None = None


@dataclass
class BenchResult:
    rows: list[dict] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)
    summary: dict[str, dict] = field(default_factory=dict)


def _parse_instance(entry) -> InstanceSpec:
    if isinstance(entry, str):
        return InstanceSpec(gen=GeneratorSpec(family=entry))
    if not isinstance(entry, dict):
        raise InputFormatError(f"instance entry must be a string or object, got {entry!r}")
    if "path" in entry:
        return InstanceSpec(path=str(entry["path"]))
    if "family" not in entry:
        raise InputFormatError(f"instance entry needs 'family' or 'path': {entry!r}")
    return InstanceSpec(
        gen=GeneratorSpec(
            family=str(entry["family"]),
            n=int(entry["n"]) if "n" in entry else None,
            p=float(entry["p"]) if "p" in entry else None,
            rng_seed=int(entry.get("seed", 0)),
        )
    )


def _parse_method(entry) -> MethodSpec:
    if isinstance(entry, str):
        name, extra = entry, {}
    elif isinstance(entry, dict):
        if "method" not in entry:
            raise InputFormatError(f"method entry needs 'method': {entry!r}")
        name, extra = str(entry["method"]), entry
    else:
        raise InputFormatError(f"method entry must be a string or object, got {entry!r}")
    if name not in METHODS:
        raise InputFormatError(f"unknown method {name!r}; known: {', '.join(METHODS)}")
    return MethodSpec(
        name=name,
        delta=str(extra.get("delta", "1/2")),
        epsilon=float(extra["epsilon"]) if extra.get("epsilon") is not None else None,
        max_rounds=int(extra["max_rounds"]) if extra.get("max_rounds") is not None else None,
        max_restarts=int(extra.get("max_restarts", 0)),
        allow_low_girth=bool(extra.get("allow_low_girth", False)),
    )


def load_config(path: str | Path) -> BenchConfig:
    """Read a JSON bench config; see README for the schema."""
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path}: not valid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise InputFormatError(f"{path}: config must be a JSON object")
    try:
        instances = tuple(_parse_instance(e) for e in raw.get("instances", []))
        methods = tuple(_parse_method(e) for e in raw.get("methods", []))
        rhos = tuple(parse_rho(str(r)) for r in raw.get("rhos", []))
    except (TypeError, ValueError) as exc:
        raise InputFormatError(f"{path}: {exc}") from None
    trials = int(raw.get("trials", 1))
    if trials < 1:
        raise InputFormatError("trials must be at least 1")
    return BenchConfig(
        instances=instances,
        rhos=rhos,
        methods=methods,
        trials=trials,
        rng_seed_base=int(raw.get("rng_seed_base", 0)),
        epsilon=float(raw["epsilon"]) if raw.get("epsilon") is not None else None,
        output=str(raw["output"]) if raw.get("output") is not None else None,
    )


def _load_instance(inst: InstanceSpec, base_dir: Path) -> Graph:
    if inst.gen is not None:
        return generate(inst.gen)
    path = Path(inst.path or "")
    if not path.is_absolute():
        path = base_dir / path
    return parse_graph(path.read_text(encoding="utf-8"))


def _run_cell(g: Graph, rho: Fraction, method: MethodSpec, rng_seed: int):
    """Returns (seed tuple, rounds, fallback, delta string)."""
    if method.name == "abw":
        ms = abw_construct(g, proportional_thresholds(g, rho), rng_seed=rng_seed)
        return ms.seed, "", "", ""
    if method.name == "v2":
        return v2_baseline(g, rho).seed, "", "", ""
    if method.name == "tree":
        return tree_construct(g, rho).seed, "", "", ""
    ms = girth5_construct(
        g,
        rho,
        delta=method.delta,
        rng_seed=rng_seed,
        max_rounds=method.max_rounds,
        max_restarts=method.max_restarts,
        allow_low_girth=method.allow_low_girth,
        epsilon=method.epsilon,
    )
    assert ms.trace is not None
    return (
        ms.seed,
        str(len(ms.trace.rounds)),
        str(ms.trace.fallback_used).lower(),
        ms.params["delta"],
    )


def run_bench(config: BenchConfig, base_dir: str | Path = ".") -> BenchResult:
    result = BenchResult()
    base_dir = Path(base_dir)
    ratios: dict[str, list[float]] = {}
    for inst in config.instances:
        g = _load_instance(inst, base_dir)
        family = inst.label()
        for rho in config.rhos:
            phi = proportional_thresholds(g, rho)
            bound_abw = float(abw_bound(g, phi))
            rho_n = float(rho) * g.n
            for method in config.methods:
                trials = 1 if method.name in DETERMINISTIC_METHODS else config.trials
                cell_epsilon = method.epsilon if method.epsilon is not None else config.epsilon
                for trial in range(trials):
                    rng_seed = stable_seed(
                        config.rng_seed_base, family, g.n, str(rho), method.name, trial
                    )
                    t0 = time.perf_counter()
                    try:
                        seed, rounds, fallback, delta = _run_cell(g, rho, method, rng_seed)
                    except PreconditionError as exc:
                        result.skipped.append(
                            {"family": family, "rho": str(rho), "method": method.name, "reason": str(exc)}
                        )
                        break
                    runtime_ms = int((time.perf_counter() - t0) * 1000)
                    if not is_monopoly(g, phi, seed):
                        raise AssertionError(
                            f"bench integrity failure: {method.name} seed on {family} is not a monopoly"
                        )
                    row = {
                        "family": family,
                        "n": g.n,
                        "m": g.m,
                        "rho": str(rho),
                        "delta": delta,
                        "method": method.name,
                        "trial": trial,
                        "seed_size": len(seed),
                        "bound_abw": f"{bound_abw:.6f}",
                        "bound_583": f"{CONST_583 * rho_n:.6f}",
                        "bound_492": f"{CONST_492 * rho_n:.6f}",
                        "bound_2eps": f"{(2.0 + cell_epsilon) * rho_n:.6f}" if cell_epsilon is not None else "",
                        "bound_rho_n": f"{rho_n:.6f}",
                        "valid": "true",
                        "rounds": rounds,
                        "fallback": fallback,
                        "runtime_ms": runtime_ms,
                    }
                    result.rows.append(row)
                    if rho_n > 0:
                        ratios.setdefault(method.name, []).append(len(seed) / rho_n)
    for name, values in sorted(ratios.items()):
        result.summary[name] = {
            "cells": len(values),
            "mean_ratio": sum(values) / len(values),
            "max_ratio": max(values),
        }
    return result


def write_csv(rows: list[dict], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)


def summary_lines(result: BenchResult) -> list[str]:
    lines = [f"{len(result.rows)} rows, {len(result.skipped)} skipped cells"]
    for name, stats in result.summary.items():
        lines.append(
            f"  {name}: {stats['cells']} cells, seed_size/(rho*n) mean {stats['mean_ratio']:.3f}"
            f" max {stats['max_ratio']:.3f}"
        )
    for skip in result.skipped:
        lines.append(
            f"  skipped {skip['method']} on {skip['family']} (rho={skip['rho']}): {skip['reason']}"
        )
    return lines
