"""Immutable simple undirected graphs: parsing, serialization, structural queries.

Vertices are the integers 0..n-1.  Adjacency lists are kept sorted ascending so
that every iteration order in the package is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import InputFormatError, PreconditionError

ACYCLIC = float("inf")
"""Distinguished girth value for graphs that contain no cycle.

Using +inf keeps comparisons like ``girth(g) >= 5`` meaningful for forests.
"""


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph with sorted adjacency lists.

    Invariants (enforced by :func:`from_edges` and :func:`parse_graph`):
    no self-loops, no duplicate neighbors, symmetric adjacency, and the edge
    count equals half the sum of the degrees.  Instances are immutable and
    safe to share read-only across concurrent workers.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adj)

    @cached_property
    def m(self) -> int:
        return sum(self.degrees) // 2

    @cached_property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adj)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v in ascending lexicographic order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from an edge collection, validating simplicity.

    Raises PreconditionError on negative n, out-of-range endpoints,
    self-loops, or duplicate edges (in either orientation).
    """
    if n < 0:
        raise PreconditionError(f"vertex count must be non-negative, got {n}")
    seen: set[tuple[int, int]] = set()
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise PreconditionError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise PreconditionError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise PreconditionError(f"duplicate edge ({key[0]},{key[1]})")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n=n, adj=tuple(tuple(sorted(nbrs)) for nbrs in adj))


def parse_graph(text: str) -> Graph:
    """Parse the edge-list document format.

    Format: optional comment lines starting with '#' (and blank lines),
    a header line "n m", then exactly m lines "u v" with 0-based endpoints.
    Duplicate edges and self-loops are hard errors, reported with their
    line number, never silently repaired.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    norm_seen: set[tuple[int, int]] = set()
    n = m = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise InputFormatError(f"line {lineno}: expected header 'n m', got {raw!r}")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise InputFormatError(f"line {lineno}: header values must be integers") from None
            if n < 0 or m < 0:
                raise InputFormatError(f"line {lineno}: header values must be non-negative")
            header = (n, m)
            continue
        if len(edges) >= m:
            raise InputFormatError(f"line {lineno}: more than {m} edge lines")
        if len(parts) != 2:
            raise InputFormatError(f"line {lineno}: expected edge 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputFormatError(f"line {lineno}: edge endpoints must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise InputFormatError(f"line {lineno}: vertex id out of range 0..{n - 1}")
        if u == v:
            raise InputFormatError(f"line {lineno}: self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in norm_seen:
            raise InputFormatError(f"line {lineno}: duplicate edge ({u},{v})")
        norm_seen.add(key)
        edges.append((u, v))
    if header is None:
        raise InputFormatError("empty document: missing 'n m' header")
    if len(edges) != m:
        raise InputFormatError(f"expected {m} edges, found {len(edges)}")
    return from_edges(n, edges)


def serialize_graph(g: Graph) -> str:
    """Serialize to the edge-list format; parse_graph(serialize_graph(g)) == g."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def connected_components(g: Graph) -> list[list[int]]:
    """Partition 0..n-1 into maximal connected blocks, ordered by smallest member."""
    seen = bytearray(g.n)
    blocks: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = 1
        block = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    block.append(v)
                    queue.append(v)
        block.sort()
        blocks.append(block)
    return blocks


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def is_tree(g: Graph) -> bool:
    """True iff g is connected and has exactly n-1 edges."""
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Extract the subgraph induced by ``keep``.

    Returns the new graph together with the order-preserving id map
    old -> new (ascending old ids map to 0..k-1).
    """
    kept = sorted(set(keep))
    if kept and (kept[0] < 0 or kept[-1] >= g.n):
        raise PreconditionError(f"keep set contains ids outside 0..{g.n - 1}")
    idmap = {old: new for new, old in enumerate(kept)}
    member = set(kept)
    adj = tuple(
        tuple(idmap[v] for v in g.adj[old] if v in member)
        for old in kept
    )
    return Graph(n=len(kept), adj=adj), idmap


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or ACYCLIC when g has none.

    BFS from every vertex, recording the shortest cycle through the root.
    A BFS is cut off once it can no longer find a cycle shorter than the
    best one seen, so girth-3 and girth-4 graphs resolve quickly.
    """
    best: int | float = ACYCLIC
    n = g.n
    adj = g.adj
    dist = [-1] * n
    parent = [-1] * n
    for root in range(n):
        if best == 3:
            break
        touched = [root]
        dist[root] = 0
        parent[root] = root
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if 2 * du + 1 >= best:
                break
            for v in adj[u]:
                if v == parent[u]:
                    continue
                if dist[v] < 0:
                    dist[v] = du + 1
                    parent[v] = u
                    touched.append(v)
                    queue.append(v)
                else:
                    cand = du + dist[v] + 1
                    if cand < best:
                        best = cand
        for u in touched:
            dist[u] = -1
            parent[u] = -1
    return best


def girth_at_least_five(g: Graph) -> bool:
    """Exact test for girth >= 5: no triangle and no 4-cycle.

    Equivalent to counting paths of length two: a repeated neighbor pair is
    a 4-cycle, an adjacent pair with a common neighbor is a triangle.  Runs
    in O(sum of squared degrees), much faster than a full girth computation
    on the sparse instances this package targets.
    """
    pair_seen: set[tuple[int, int]] = set()
    nbr = g.neighbor_sets
    for u in range(g.n):
        nbrs = g.adj[u]
        for i, v in enumerate(nbrs):
            for w in nbrs[i + 1:]:
                if w in nbr[v]:
                    return False  # triangle v-u-w with edge v-w
                if (v, w) in pair_seen:
                    return False  # two distinct midpoints: 4-cycle
                pair_seen.add((v, w))
    return True
