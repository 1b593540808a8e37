"""Immutable graph core: representation, text I/O, and elementary queries.

Vertices are dense integers ``0..n-1``.  The text format is a DIMACS-style
edge list: a header ``p edge <n> <m>`` followed by ``m`` lines ``e <u> <v>``
with 1-based endpoints, ``u != v``; lines whose first token is ``c`` are
comments.  Duplicate edges are merged on input.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParseError

__all__ = [
    "Graph",
    "Bipartition",
    "parse_graph",
    "serialize_graph",
    "induced_subgraph",
    "connected_components",
    "bipartition_or_odd_cycle",
    "distance",
]


class Graph:
    """Simple undirected graph, immutable after construction.

    Adjacency is stored both as sorted tuples (deterministic iteration) and
    as integer bitmasks (O(1) adjacency tests and fast set algebra).
    ``labels`` optionally carries external display ids through induced
    subgraphs; it does not participate in equality.
    """

    __slots__ = ("n", "labels", "_adj", "_mask")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels=None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(tuple(sorted(s)) for s in adj)
        self._mask = tuple(sum(1 << w for w in s) for s in self._adj)
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels must have one entry per vertex")

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def mask(self, v: int) -> int:
        """Neighborhood of ``v`` as a bitmask."""
        return self._mask[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self._mask[u] >> v) & 1 == 1

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as ordered pairs ``(u, v)`` with ``u < v``."""
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def label(self, v: int) -> int:
        """External display id of ``v`` (1-based when no labels were set)."""
        return self.labels[v] if self.labels is not None else v + 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class Bipartition:
    """Two-coloring of one connected component: every edge crosses sides."""

    left: frozenset[int]
    right: frozenset[int]


def parse_graph(text: str | bytes) -> Graph:
    """Parse the edge-list text format into a :class:`Graph`.

    Raises :class:`ParseError` (with a line number) on malformed headers,
    out-of-range endpoints, self-loops, or an edge-count mismatch.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from exc
    n = m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise ParseError("duplicate 'p' header", lineno)
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ParseError("header must read 'p edge <n> <m>'", lineno)
            try:
                n, m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise ParseError("header counts must be integers", lineno) from None
            if n < 0 or m < 0:
                raise ParseError("header counts must be non-negative", lineno)
        elif tokens[0] == "e":
            if n is None:
                raise ParseError("edge line before 'p edge' header", lineno)
            if len(tokens) != 3:
                raise ParseError("edge line must read 'e <u> <v>'", lineno)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError("edge endpoints must be integers", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex id out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unrecognized line type {tokens[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge' header")
    if len(edges) != m:
        raise ParseError(f"header declares {m} edge lines, found {len(edges)}")
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    """Inverse of :func:`parse_graph`, writing dense 1-based ids."""
    lines = [f"p edge {g.n} {g.edge_count}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def induced_subgraph(g: Graph, members: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``members`` plus the new->old id mapping.

    New ids follow ascending old ids, so relative vertex order is preserved.
    External labels are carried through.
    """
    mapping = tuple(sorted(set(members)))
    if mapping and not (0 <= mapping[0] and mapping[-1] < g.n):
        raise ValueError("vertex set not contained in the graph")
    index = {old: new for new, old in enumerate(mapping)}
    edges = [
        (index[u], index[v])
        for u in mapping
        for v in g.neighbors(u)
        if u < v and v in index
    ]
    labels = tuple(g.label(v) for v in mapping)
    return Graph(len(mapping), edges, labels), mapping


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Maximal connected vertex sets, ordered by smallest member."""
    seen = [False] * g.n
    out: list[frozenset[int]] = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        out.append(frozenset(comp))
    return out


def bipartition_or_odd_cycle(
    g: Graph,
) -> tuple[list[Bipartition] | None, tuple[int, ...] | None]:
    """Two-color every component, or exhibit an odd closed walk.

    Returns ``(bipartitions, None)`` with one :class:`Bipartition` per
    component (ordered as in :func:`connected_components`), or
    ``(None, cycle)`` where ``cycle`` is a vertex sequence of odd length
    whose consecutive members (cyclically) are adjacent.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    bips: list[Bipartition] = []
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        sides: tuple[list[int], list[int]] = ([root], [])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    sides[color[v]].append(v)
                    queue.append(v)
                elif color[v] == color[u]:
                    return None, _odd_walk(u, v, parent, depth)
        bips.append(Bipartition(frozenset(sides[0]), frozenset(sides[1])))
    return bips, None


def _odd_walk(u: int, v: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    # Walk both endpoints of the offending edge up to their meeting point in
    # the BFS tree; the two tree paths plus the edge uv close an odd cycle.
    pu, pv = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        pu.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        pv.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        pu.append(a)
        pv.append(b)
    # pu ends at the common ancestor; drop it from pv to avoid repetition.
    return tuple(reversed(pu)) + tuple(pv[: len(pv) - 1])


def distance(g: Graph, u: int, targets: Iterable[int]) -> int | None:
    """Hop count from ``u`` to the nearest member of ``targets``; None if
    unreachable, 0 if ``u`` itself is a target."""
    goal = set(targets)
    if not (0 <= u < g.n):
        raise ValueError(f"vertex {u} out of range")
    if u in goal:
        return 0
    seen = [False] * g.n
    seen[u] = True
    queue = deque([(u, 0)])
    while queue:
        x, d = queue.popleft()
        for v in g.neighbors(x):
            if v in goal:
                return d + 1
            if not seen[v]:
                seen[v] = True
                queue.append((v, d + 1))
    return None
