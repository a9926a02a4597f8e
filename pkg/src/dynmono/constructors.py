"""Seed-set constructors for dynamic monopolies.

Four methods, named by their CLI tags:

``abw``
    Random-permutation rule: draw a uniform order pi of the vertices and
    seed every u with fewer than phi(u) neighbors after u in pi.  The seed
    is a monopoly for *every* permutation (activate the rest in decreasing
    pi order), with expected size sum phi(u)/(deg(u)+1).

``girth5``
    Two-phase randomized construction for connected graphs of girth >= 5
    with max degree >= 1/rho.  Phase one deterministically grows a greedy
    kernel of high-degree vertices until every remaining high-degree vertex
    has at most deg/(1+delta) low-degree neighbors outside the kernel's
    hull.  Phase two repeatedly samples vertices outside that hull with
    probability rho/(1-delta) and keeps the samples not already absorbed,
    until the hull covers the graph.  For small enough rho the expected
    total is ((1+delta) + 1/(1-delta)^2) * rho * n, which a rejection loop
    (bounded restarts) turns into a size target.

``tree``
    Recursive splitter for trees of order >= 1/rho: pick the high-degree
    vertex whose removal leaves the largest high-degree-containing branch,
    seed it, recurse into that branch with thresholds recomputed from the
    branch degrees.  Output size is at most floor(rho * n).

``v2``
    Baseline for connected graphs: seed every vertex of degree >= 1/rho
    (all others have threshold 1, so the cascade floods); one vertex when
    none qualifies.

Every constructor hull-verifies its output before returning; a failed
verification raises, it is never reported as an unverified seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .cascade import (
    Thresholds,
    check_thresholds,
    coerce_fraction,
    coerce_rho,
    degree_partition,
    hull,
    proportional_thresholds,
)
from .errors import PreconditionError
from .graphs import Graph, girth_at_least_five, induced_subgraph, is_connected, is_tree
from .seeding import stable_seed

DELTA_CAP = min(math.exp(-0.25), 0.5)
"""Upper limit for the slack parameter delta (equals 0.5)."""


def growth_constant(delta: float) -> float:
    """Seed-size inflation factor (1+d)^2 + (1+d)/(1-d)^2; equals 2 at d = 0."""
    return (1.0 + delta) ** 2 + (1.0 + delta) / (1.0 - delta) ** 2


def rho_upper_bound(delta: float) -> float:
    """Largest rho for which the girth5 size guarantee is proven at this delta."""
    p2 = activation_probability(delta)
    return delta / (1.0 + delta) * p2 / (8.0 * math.log(1.0 / delta))


def activation_probability(delta: float) -> float:
    """Per-round lower bound 1 - exp(-delta^2 / (2(1-delta))) on absorbing a holdout neighbor."""
    return 1.0 - math.exp(-delta * delta / (2.0 * (1.0 - delta)))


def default_round_count(n: int, delta: float) -> int:
    """Smallest k with delta^k * n + 1/(1+delta) < 1.

    With per-round survival delta, after k such rounds the expected number
    of inactive vertices plus the rejection mass drops below 1, which is
    what the first-moment acceptance test needs.
    """
    if n < 1:
        raise PreconditionError("round count needs n >= 1")
    if not 0.0 < delta < 1.0:
        raise PreconditionError("delta must lie in (0, 1)")
    threshold = delta / (1.0 + delta)
    k = max(1, math.ceil(math.log(n * (1.0 + delta) / delta) / math.log(1.0 / delta)))
    while delta**k * n >= threshold:
        k += 1
    while k > 1 and delta ** (k - 1) * n < threshold:
        k -= 1
    return k


@dataclass(frozen=True)
class Girth5Params:
    """Derived parameters of the girth5 construction for a target overhead 2+epsilon.

    ``delta`` is the largest slack value (capped at DELTA_CAP) whose growth
    constant stays within 2+epsilon; ``rho_max`` is the proven validity
    range for rho at that delta; ``p2`` the per-round absorption bound.
    """

    epsilon: float
    delta: float
    rho_max: float
    p2: float

    def p1(self, rho: Fraction | float) -> float:
        """Sampling probability rho/(1-delta) used in each random round."""
        return float(rho) / (1.0 - self.delta)

    def default_rounds(self, n: int) -> int:
        return default_round_count(n, self.delta)


def girth5_params(epsilon: float) -> Girth5Params:
    """Resolve epsilon -> (delta, rho_max, p2) by bisecting the growth constant.

    The growth constant is strictly increasing in delta, so the unique root
    of growth(delta) = 2+epsilon is bracketed on (0, DELTA_CAP] and bisected
    to absolute tolerance 1e-9; if even DELTA_CAP satisfies the budget, the
    cap itself is used.
    """
    if epsilon <= 0:
        raise PreconditionError("epsilon must be positive")
    target = 2.0 + epsilon
    if growth_constant(DELTA_CAP) <= target:
        delta = DELTA_CAP
    else:
        lo, hi = 0.0, DELTA_CAP
        while hi - lo > 1e-9:
            mid = 0.5 * (lo + hi)
            if growth_constant(mid) <= target:
                lo = mid
            else:
                hi = mid
        delta = 0.5 * (lo + hi)
    return Girth5Params(
        epsilon=epsilon,
        delta=delta,
        rho_max=rho_upper_bound(delta),
        p2=activation_probability(delta),
    )


@dataclass(frozen=True)
class RoundRecord:
    """One sampling round: how many vertices were drawn, which ones were new, hull size after."""

    sampled: int
    added: tuple[int, ...]
    hull_size: int


@dataclass(frozen=True)
class Girth5Trace:
    """Round-by-round record of a girth5 construction run."""

    kernel: tuple[int, ...]
    kernel_hull_size: int
    rounds: tuple[RoundRecord, ...]
    fallback_used: bool
    restarts: int

    def to_json_dict(self) -> dict:
        return {
            "kernel": list(self.kernel),
            "kernel_hull_size": self.kernel_hull_size,
            "rounds": [
                {"sampled": r.sampled, "added": list(r.added), "hull_size": r.hull_size}
                for r in self.rounds
            ],
            "fallback_used": self.fallback_used,
            "restarts": self.restarts,
        }


@dataclass(frozen=True)
class MonopolySeed:
    """A constructed seed with provenance; ``verified`` is set only after a hull check."""

    method: str
    seed: tuple[int, ...]
    params: dict = field(default_factory=dict)
    verified: bool = False
    trace: Girth5Trace | None = None

    @property
    def size(self) -> int:
        return len(self.seed)

    def to_json_dict(self) -> dict:
        out = {
            "method": self.method,
            "params": self.params,
            "seed": list(self.seed),
            "size": self.size,
            "verified": self.verified,
        }
        if self.trace is not None:
            out["trace"] = self.trace.to_json_dict()
        return out


def _verify(g: Graph, phi: Thresholds, seed: Iterable[int], method: str) -> None:
    if not hull(g, phi, seed, validate=False).is_monopoly:
        raise AssertionError(f"internal error: {method} produced a non-monopoly seed")


def abw_seed_from_permutation(g: Graph, phi: Thresholds, order: Iterable[int]) -> tuple[int, ...]:
    """Apply the permutation rule: seed u iff fewer than phi(u) neighbors come after u.

    ``order`` lists the vertices from first to last.  Activating the
    non-seed vertices in reverse order witnesses that the result is a
    monopoly: each has at least phi(u) neighbors later in the order, all
    already active.
    """
    check_thresholds(g, phi)
    pos = [-1] * g.n
    for i, u in enumerate(order):
        if not 0 <= u < g.n or pos[u] >= 0:
            raise PreconditionError("order is not a permutation of the vertices")
        pos[u] = i
    if any(p < 0 for p in pos):
        raise PreconditionError("order is not a permutation of the vertices")
    seed = []
    for u in range(g.n):
        later = sum(1 for v in g.adj[u] if pos[v] > pos[u])
        if later < phi[u]:
            seed.append(u)
    return tuple(seed)


def abw_construct(g: Graph, phi: Thresholds, rng_seed: int = 0) -> MonopolySeed:
    """Random-permutation seed; expected size equals exact.abw_bound(g, phi)."""
    order = list(range(g.n))
    random.Random(rng_seed).shuffle(order)
    seed = abw_seed_from_permutation(g, phi, order)
    _verify(g, phi, seed, "abw")
    return MonopolySeed(method="abw", seed=seed, params={"rng_seed": rng_seed}, verified=True)


def greedy_kernel(
    g: Graph,
    rho: Fraction | int | str | float,
    delta: Fraction | int | str | float,
) -> tuple[int, ...]:
    """Deterministic greedy start set of high-degree vertices.

    Repeatedly add the smallest-id high-degree vertex u (deg >= 1/rho) that
    still has more than deg(u)/(1+delta) low-degree neighbors outside the
    current kernel hull.  Each addition absorbs more than 1/((1+delta)rho)
    new vertices into the hull, so at termination the kernel has at most
    (1+delta) * rho * n vertices and every remaining high-degree vertex has
    at most deg/(1+delta) unabsorbed low-degree neighbors.  Both exit
    properties are asserted; comparisons are exact rational arithmetic.
    """
    r = coerce_rho(rho)
    d = coerce_fraction(delta)
    if not 0 < d <= Fraction(1, 2):
        raise PreconditionError(f"delta must lie in (0, 1/2], got {d}")
    part = degree_partition(g, r)
    if not part.high:
        raise PreconditionError("no vertex of degree >= 1/rho: greedy kernel undefined")
    phi = proportional_thresholds(g, r)
    dp, dq = d.numerator, d.denominator  # count > deg/(1+d)  <=>  count*(dp+dq) > deg*dq
    low = set(part.low)
    degrees = g.degrees
    kernel: list[int] = []
    in_kernel: set[int] = set()
    absorbed = hull(g, phi, kernel, validate=False).active
    while True:
        pick = -1
        for u in part.high:
            if u in in_kernel:
                continue
            cnt = sum(1 for v in g.adj[u] if v in low and v not in absorbed)
            if cnt * (dp + dq) > degrees[u] * dq:
                pick = u
                break
        if pick < 0:
            break
        kernel.append(pick)
        in_kernel.add(pick)
        absorbed = hull(g, phi, kernel, validate=False).active
    for u in part.high:
        if u in in_kernel:
            continue
        cnt = sum(1 for v in g.adj[u] if v in low and v not in absorbed)
        if cnt * (dp + dq) > degrees[u] * dq:
            raise AssertionError("internal error: kernel terminated non-maximally")
    if len(kernel) > (1 + d) * r * g.n:
        raise AssertionError("internal error: kernel exceeded (1+delta)*rho*n")
    return tuple(kernel)


def _sampling_rounds(
    g: Graph,
    phi: Thresholds,
    kernel: tuple[int, ...],
    pool: list[int],
    p1: float,
    max_rounds: int,
    rng: random.Random,
) -> tuple[tuple[int, ...], tuple[RoundRecord, ...], bool]:
    """One full run of the random rounds on top of a fixed kernel."""
    seed: list[int] = list(kernel)
    current = hull(g, phi, seed, validate=False)
    sampled_sets: list[list[int]] = []
    records: list[RoundRecord] = []
    while not current.is_monopoly and len(records) < max_rounds:
        xi = [u for u in pool if rng.random() < p1]
        yi = tuple(u for u in xi if u not in current.active)
        sampled_sets.append(xi)
        seed.extend(yi)
        current = hull(g, phi, seed, validate=False)
        # the discarded samples are exactly the already-absorbed ones, so the
        # hull of kernel + all raw samples must match the hull of the seed
        raw = list(kernel) + [u for xs in sampled_sets for u in xs]
        if hull(g, phi, raw, validate=False).active != current.active:
            raise AssertionError("internal error: raw-sample hull diverged from seed hull")
        records.append(RoundRecord(sampled=len(xi), added=yi, hull_size=len(current.active)))
    fallback = False
    if not current.is_monopoly:
        fallback = True
        seed.extend(u for u in range(g.n) if u not in current.active)
    return tuple(sorted(seed)), tuple(records), fallback


def girth5_construct(
    g: Graph,
    rho: Fraction | int | str | float,
    delta: Fraction | int | str | float = Fraction(1, 2),
    rng_seed: int = 0,
    max_rounds: int | None = None,
    max_restarts: int = 0,
    *,
    allow_low_girth: bool = False,
    epsilon: float | None = None,
) -> MonopolySeed:
    """Greedy kernel plus independent sampling rounds; always returns a verified monopoly.

    Preconditions: connected, max degree >= 1/rho, girth >= 5 (bypass with
    ``allow_low_girth``; the procedure stays well-defined, only the proven
    size bound needs the girth), and rho <= 1-delta so the sampling
    probability is a probability.

    ``max_rounds`` defaults to the smallest k with delta^k * n + 1/(1+delta) < 1.
    If the rounds are exhausted before the hull covers the graph, all
    remaining inactive vertices are added (``fallback_used``).  When
    ``max_restarts`` > 0 and the seed exceeds the first-moment size target
    (1+delta) * ((1+delta) + 1/(1-delta)^2) * rho * n, the sampling phase is
    re-run on a fresh stream, keeping the best attempt.

    The theoretical validity flags (delta within cap, rho within the proven
    range, growth constant within 2+epsilon) are reported in ``params``;
    they are never hard gates because desk-scale instances sit far outside
    the proven rho range.
    """
    r = coerce_rho(rho)
    d = coerce_fraction(delta)
    if not 0 < d <= Fraction(1, 2):
        raise PreconditionError(f"delta must lie in (0, 1/2], got {d}")
    if g.n < 1 or not is_connected(g):
        raise PreconditionError("girth5 construction requires a connected, nonempty graph")
    if r > 1 - d:
        raise PreconditionError(f"sampling probability rho/(1-delta) exceeds 1 for rho={r}, delta={d}")
    if not allow_low_girth and not girth_at_least_five(g):
        raise PreconditionError("graph has a cycle of length 3 or 4; pass allow_low_girth to proceed")
    kernel = greedy_kernel(g, r, d)  # also checks max degree >= 1/rho
    phi = proportional_thresholds(g, r)
    base = hull(g, phi, kernel, validate=False)
    pool = [u for u in range(g.n) if u not in base.active]
    fd = float(d)
    p1 = float(r) / (1.0 - fd)
    rounds_cap = default_round_count(g.n, fd) if max_rounds is None else max_rounds
    if rounds_cap < 0:
        raise PreconditionError("max_rounds must be non-negative")
    size_target = (1 + d) * ((1 + d) + 1 / (1 - d) ** 2) * r * g.n
    best: tuple[tuple[int, ...], tuple[RoundRecord, ...], bool] | None = None
    restarts = 0
    for attempt in range(max_restarts + 1):
        rng = random.Random(stable_seed(rng_seed, "attempt", attempt))
        result = _sampling_rounds(g, phi, kernel, pool, p1, rounds_cap, rng)
        if best is None or len(result[0]) < len(best[0]):
            best = result
        restarts = attempt
        if len(result[0]) <= size_target:
            break
    assert best is not None
    seed, records, fallback = best
    _verify(g, phi, seed, "girth5")
    trace = Girth5Trace(
        kernel=kernel,
        kernel_hull_size=len(base.active),
        rounds=records,
        fallback_used=fallback,
        restarts=restarts,
    )
    params = {
        "rho": str(r),
        "delta": str(d),
        "rng_seed": rng_seed,
        "max_rounds": rounds_cap,
        "max_restarts": max_restarts,
        "rounds_used": len(records),
        "fallback_used": fallback,
        "restarts": restarts,
        "p1": p1,
        "p2": activation_probability(fd),
        "size_target": float(size_target),
        "theory": {
            "delta_within_cap": fd <= DELTA_CAP + 1e-12,
            "rho_within_proven_range": float(r) <= rho_upper_bound(fd),
            "epsilon": epsilon,
            "growth_within_budget": (
                growth_constant(fd) <= 2.0 + epsilon + 1e-9 if epsilon is not None else None
            ),
        },
    }
    return MonopolySeed(method="girth5", seed=seed, params=params, verified=True, trace=trace)


def _tree_split(t: Graph, high: list[int]) -> tuple[int, list[int]]:
    """Choose the split vertex u and the branch of t - u to recurse into.

    u maximizes the order of the largest high-degree-containing component
    of t - u (ties: smallest id).  For that u the qualifying component is
    unique; the further tie-break on the component's smallest vertex id is
    defensive only.  Component orders come from one rooted subtree pass, so
    a split costs O(n).
    """
    n = t.n
    adj = t.adj
    parent = [-2] * n
    parent[0] = -1
    order = [0]
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if parent[v] == -2:
                parent[v] = u
                order.append(v)
                stack.append(v)
    is_high = bytearray(n)
    for u in high:
        is_high[u] = 1
    sub_size = [1] * n
    sub_high = [0] * n
    for u in reversed(order):
        sub_high[u] += is_high[u]
        p = parent[u]
        if p >= 0:
            sub_size[p] += sub_size[u]
            sub_high[p] += sub_high[u]
    total_high = len(high)

    def components_of(u: int) -> list[tuple[int, int, int]]:
        """(order, high count, anchor) for each component of t - u."""
        out = []
        for v in adj[u]:
            if v == parent[u]:
                out.append((n - sub_size[u], total_high - sub_high[u], v))
            else:
                out.append((sub_size[v], sub_high[v], v))
        return out

    best_u = -1
    best_order = -1
    for u in high:
        cand = max((size for size, hc, _ in components_of(u) if hc > 0), default=0)
        if cand > best_order:
            best_order = cand
            best_u = u
    anchors = [a for size, hc, a in components_of(best_u) if hc > 0 and size == best_order]
    branches = []
    for a in anchors:
        comp = [a]
        seen = {a, best_u}
        stack = [a]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        branches.append(comp)
    branch = min(branches, key=min)
    return best_u, branch


def tree_construct(t: Graph, rho: Fraction | int | str | float) -> MonopolySeed:
    """Recursive tree seed of size at most floor(rho * n) for trees of order >= 1/rho.

    With zero or one high-degree vertices the answer is a single vertex
    (the high-degree one, else the smallest-id vertex of maximum degree);
    otherwise seed the chosen split vertex and recurse into its largest
    high-degree-containing branch with thresholds recomputed from the
    branch degrees.  The removed side keeps at least 1/rho vertices, which
    pays for the seeded vertex in the size bound.
    """
    r = coerce_rho(rho)
    if not is_tree(t):
        raise PreconditionError("tree construction requires a tree")
    p, q = r.numerator, r.denominator
    if t.n * p < q:
        raise PreconditionError(f"tree order {t.n} is below 1/rho = {q}/{p}")
    seed: list[int] = []
    cur = t
    to_orig = list(range(t.n))
    while True:
        degs = cur.degrees
        high = [u for u in range(cur.n) if degs[u] * p >= q]
        if len(high) == 1:
            seed.append(to_orig[high[0]])
            break
        if not high:
            seed.append(to_orig[degs.index(max(degs))])
            break
        u, branch = _tree_split(cur, high)
        seed.append(to_orig[u])
        sub, idmap = induced_subgraph(cur, branch)
        to_orig = [to_orig[old] for old in sorted(idmap)]
        cur = sub
        if cur.n * p < q:
            raise AssertionError("internal error: branch dropped below 1/rho")
    seed_t = tuple(sorted(seed))
    if len(seed_t) * q > t.n * p:
        raise AssertionError("internal error: tree seed exceeded floor(rho*n)")
    _verify(t, proportional_thresholds(t, r), seed_t, "tree")
    return MonopolySeed(method="tree", seed=seed_t, params={"rho": str(r)}, verified=True)


def v2_baseline(g: Graph, rho: Fraction | int | str | float) -> MonopolySeed:
    """Seed the whole high-degree class (degree >= 1/rho), or one vertex if it is empty.

    On a connected graph every vertex outside the class has threshold 1, so
    any nonempty superset of the class floods the graph.
    """
    r = coerce_rho(rho)
    if g.n < 1 or not is_connected(g):
        raise PreconditionError("high-degree baseline requires a connected, nonempty graph")
    part = degree_partition(g, r)
    seed = part.high if part.high else (0,)
    _verify(g, proportional_thresholds(g, r), seed, "v2")
    return MonopolySeed(method="v2", seed=tuple(seed), params={"rho": str(r)}, verified=True)
