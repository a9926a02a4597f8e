"""Degree-proportional thresholds and the activation hull operator.

The dynamics: every vertex u carries an integer threshold phi(u); starting
from a seed set, a vertex becomes active as soon as at least phi(u) of its
neighbors are active, and never deactivates.  The hull of a seed is the
unique smallest closed superset, i.e. the final active set.  A seed whose
hull is the whole vertex set is a dynamic monopoly (perfect target set).

Thresholds of the proportional family are phi(u) = ceil(rho * deg(u)) for a
rational rho in (0, 1].  All threshold arithmetic is exact: rho is a
`fractions.Fraction`, and the ceiling is computed in integer arithmetic, so
the tight cases (rho * deg integral) are never corrupted by float rounding.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputFormatError, PreconditionError
from .graphs import Graph

Thresholds = Sequence[int]


def parse_rho(text: str) -> Fraction:
    """Parse a rho argument: "P/Q" or a decimal string like "0.3" (exactly 3/10)."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InputFormatError(f"cannot parse rho value {text!r}") from None
    if not 0 < value <= 1:
        raise InputFormatError(f"rho must lie in (0, 1], got {value}")
    return value


def coerce_fraction(value: Fraction | int | str | float) -> Fraction:
    """Coerce to an exact Fraction; floats go through their shortest decimal repr."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(str(value))
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError):
        raise PreconditionError(f"cannot interpret {value!r} as a rational") from None


def coerce_rho(value: Fraction | int | str | float) -> Fraction:
    rho = coerce_fraction(value)
    if not 0 < rho <= 1:
        raise PreconditionError(f"rho must lie in (0, 1], got {rho}")
    return rho


def proportional_thresholds(g: Graph, rho: Fraction | int | str | float) -> tuple[int, ...]:
    """phi(u) = ceil(rho * deg(u)), computed as (p*d + q - 1) // q in exact integers."""
    r = coerce_rho(rho)
    p, q = r.numerator, r.denominator
    return tuple((p * d + q - 1) // q for d in g.degrees)


def check_thresholds(g: Graph, phi: Thresholds) -> None:
    """Reject threshold profiles outside the supported domain.

    Profiles with phi(u) > deg(u) are rejected rather than given ad-hoc
    semantics: such a vertex could never activate by cascade.
    """
    if len(phi) != g.n:
        raise PreconditionError(f"threshold profile has length {len(phi)}, graph has {g.n} vertices")
    for u, (t, d) in enumerate(zip(phi, g.degrees)):
        if not isinstance(t, int) or isinstance(t, bool):
            raise PreconditionError(f"threshold of vertex {u} is not an integer: {t!r}")
        if t < 0:
            raise PreconditionError(f"threshold of vertex {u} is negative")
        if t > d:
            raise PreconditionError(f"threshold of vertex {u} exceeds its degree ({t} > {d})")


def effective_rho(g: Graph, rho: Fraction | int | str | float) -> Fraction:
    """The smallest rho' >= rho with identical thresholds: max(rho, 1/max_degree).

    Proportional thresholds are constant in rho on (0, 1/max_degree], so any
    rho below that is equivalent to 1/max_degree.
    """
    r = coerce_rho(rho)
    if g.max_degree < 1:
        raise PreconditionError("effective rho requires at least one edge")
    return max(r, Fraction(1, g.max_degree))


@dataclass(frozen=True)
class CascadeResult:
    """Final active set with per-vertex activation rounds.

    Rounds are synchronous generations: seeds are round 0, and round r+1
    activates every vertex with enough active neighbors after round r.  The
    rounds are diagnostic only; the active set itself is order-independent.
    """

    active: frozenset[int]
    rounds: dict[int, int]
    is_monopoly: bool

    def to_json_dict(self) -> dict:
        return {
            "active": sorted(self.active),
            "rounds": {str(u): r for u, r in sorted(self.rounds.items())},
            "is_monopoly": self.is_monopoly,
        }


def _validate_seed(g: Graph, seed: Iterable[int]) -> list[int]:
    seed_list = sorted(set(seed))
    if seed_list and (seed_list[0] < 0 or seed_list[-1] >= g.n):
        raise PreconditionError(f"seed contains ids outside 0..{g.n - 1}")
    return seed_list


def hull(g: Graph, phi: Thresholds, seed: Iterable[int], *, validate: bool = True) -> CascadeResult:
    """Compute the activation hull of ``seed``.

    Worklist propagation with per-vertex active-neighbor counters; each wave
    activates simultaneously every eligible vertex, which yields the unique
    least fixpoint regardless of processing order.  Vertices with phi = 0
    (exactly the isolated vertices under proportional thresholds) belong to
    every hull and join at round 1 when not seeded.
    """
    if validate:
        check_thresholds(g, phi)
    seed_list = _validate_seed(g, seed)
    n = g.n
    adj = g.adj
    active = bytearray(n)
    count = [0] * n
    rounds: dict[int, int] = {}
    for u in seed_list:
        active[u] = 1
        rounds[u] = 0
    for u in seed_list:
        for v in adj[u]:
            count[v] += 1
    wave = [u for u in range(n) if not active[u] and count[u] >= phi[u]]
    generation = 0
    while wave:
        generation += 1
        for u in wave:
            active[u] = 1
            rounds[u] = generation
        touched: list[int] = []
        for u in wave:
            for v in adj[u]:
                count[v] += 1
                if not active[v]:
                    touched.append(v)
        wave = sorted({v for v in touched if not active[v] and count[v] >= phi[v]})
    return CascadeResult(active=frozenset(rounds), rounds=rounds, is_monopoly=len(rounds) == n)


def hull_active_shuffled(g: Graph, phi: Thresholds, seed: Iterable[int], rng: random.Random) -> frozenset[int]:
    """Active set of the hull under a randomized asynchronous processing order.

    Activates one eligible vertex at a time, chosen uniformly from the
    pending worklist.  Used to exercise confluence: the result must equal
    hull(...).active for every ordering.
    """
    check_thresholds(g, phi)
    seed_list = _validate_seed(g, seed)
    n = g.n
    adj = g.adj
    active = bytearray(n)
    count = [0] * n
    for u in seed_list:
        active[u] = 1
    for u in seed_list:
        for v in adj[u]:
            count[v] += 1
    pending = [u for u in range(n) if not active[u] and count[u] >= phi[u]]
    out = set(seed_list)
    while pending:
        i = rng.randrange(len(pending))
        pending[i], pending[-1] = pending[-1], pending[i]
        u = pending.pop()
        if active[u]:
            continue
        active[u] = 1
        out.add(u)
        for v in adj[u]:
            count[v] += 1
            if not active[v] and count[v] >= phi[v]:
                pending.append(v)
    return frozenset(out)


def is_monopoly(g: Graph, phi: Thresholds, seed: Iterable[int]) -> bool:
    """True iff the hull of ``seed`` covers every vertex."""
    return hull(g, phi, seed).is_monopoly


@dataclass(frozen=True)
class DegreePartition:
    """Split of the vertex set by degree against 1/rho.

    ``low`` holds vertices with deg < 1/rho (their proportional threshold is
    1 whenever they have a neighbor); ``high`` holds deg >= 1/rho.  The
    membership test is exact: deg * p >= q for rho = p/q.
    """

    low: tuple[int, ...]
    high: tuple[int, ...]


def degree_partition(g: Graph, rho: Fraction | int | str | float) -> DegreePartition:
    r = coerce_rho(rho)
    p, q = r.numerator, r.denominator
    low: list[int] = []
    high: list[int] = []
    for u, d in enumerate(g.degrees):
        (high if d * p >= q else low).append(u)
    return DegreePartition(low=tuple(low), high=tuple(high))


def parse_seed_set(text: str, n: int) -> tuple[int, ...]:
    """Parse a seed-set document: whitespace-separated 0-based ids, '#' comments."""
    ids: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        for token in line.split():
            try:
                u = int(token)
            except ValueError:
                raise InputFormatError(f"line {lineno}: bad vertex id {token!r}") from None
            if not 0 <= u < n:
                raise InputFormatError(f"line {lineno}: vertex id {u} out of range 0..{n - 1}")
            ids.add(u)
    return tuple(sorted(ids))
