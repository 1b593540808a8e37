"""Window flow networks with unit vertex capacities and minimum hole cuts.

Every minimal set of vertices whose removal leaves a bipartite permutation
graph sits inside one five-index window around the shortest hole, so the
smallest such set can be found by solving one unit-vertex-capacity max-flow
problem per window and keeping the best cut.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import ContractViolation, DiagnosticFailure
from .graph import Graph, induced_subgraph
from .structure import HolePartition, window

__all__ = ["FlowNetwork", "HoleCut", "build_network", "max_flow_min_cut", "min_hole_cut"]


@dataclass(frozen=True)
class FlowNetwork:
    """Directed capacitated network with split vertices and terminals.

    Node 0 is the source, node 1 the sink; graph vertex ``split_vertices[q]``
    owns the pair in-node ``2 + 2q`` / out-node ``3 + 2q`` joined by a
    capacity-1 arc.  All other arcs carry the finite sentinel
    ``inf_capacity``.
    """

    num_nodes: int
    arcs: tuple[tuple[int, int, int], ...]
    split_vertices: tuple[int, ...]
    window_index: int
    inf_capacity: int

    source: int = 0
    sink: int = 1

    def node_in(self, q: int) -> int:
        return 2 + 2 * q

    def node_out(self, q: int) -> int:
        return 3 + 2 * q


def build_network(g: Graph, p: HolePartition, i: int) -> FlowNetwork:
    """Flow network for the window ``V[i-2, i+2]`` of one component.

    Arcs: a unit arc through every window vertex; sentinel arcs
    ``(u, out) -> (v, in)`` in both directions for every window edge;
    ``source -> (v, in)`` when v has a neighbor in ``V[i-4, i-3]``; and
    ``(u, out) -> sink`` when u has a neighbor in ``V[i+3, i+4]``.
    """
    m = p.m
    span = [(i + d) % m for d in range(-4, 5)]
    if len(set(span)) != 9:
        raise ContractViolation(
            f"hole length {m} cannot host disjoint source pool, window, and sink pool"
        )
    win = window(p, i - 2, i + 2)
    members = sorted(win.set_a | win.set_b)
    index = {v: q for q, v in enumerate(members)}
    src_pool = window(p, i - 4, i - 3)
    snk_pool = window(p, i + 3, i + 4)
    src_mask = 0
    for v in src_pool.set_a | src_pool.set_b:
        src_mask |= 1 << v
    snk_mask = 0
    for v in snk_pool.set_a | snk_pool.set_b:
        snk_mask |= 1 << v
    inf = g.n
    arcs: list[tuple[int, int, int]] = []
    for q, v in enumerate(members):
        arcs.append((2 + 2 * q, 3 + 2 * q, 1))
    for q, v in enumerate(members):
        for x in g.neighbors(v):
            qx = index.get(x)
            if qx is not None:
                arcs.append((3 + 2 * q, 2 + 2 * qx, inf))
    for q, v in enumerate(members):
        if g.mask(v) & src_mask:
            arcs.append((0, 2 + 2 * q, inf))
    for q, v in enumerate(members):
        if g.mask(v) & snk_mask:
            arcs.append((3 + 2 * q, 1, inf))
    return FlowNetwork(
        num_nodes=2 + 2 * len(members),
        arcs=tuple(arcs),
        split_vertices=tuple(members),
        window_index=i % m,
        inf_capacity=inf,
    )


def max_flow_min_cut(net: FlowNetwork) -> tuple[int, frozenset[int]]:
    """Integral maximum flow and the reachability minimum cut.

    Shortest-augmenting-path search; after the flow is maximum, the cut is
    the set of graph vertices whose unit arc crosses from the source-side
    residual-reachable set to the unreachable one.  With the source and
    sink disconnected this is (0, empty set).
    """
    nn = net.num_nodes
    heads: list[int] = []
    caps: list[int] = []
    out: list[list[int]] = [[] for _ in range(nn)]
    for tail, head, cap in net.arcs:
        out[tail].append(len(heads))
        heads.append(head)
        caps.append(cap)
        out[head].append(len(heads))
        heads.append(tail)
        caps.append(0)
    source, sink = net.source, net.sink
    flow = 0
    while True:
        prev_arc = [-1] * nn
        prev_arc[source] = -2
        queue = deque([source])
        while queue:
            u = queue.popleft()
            if u == sink:
                break
            for a in out[u]:
                v = heads[a]
                if prev_arc[v] == -1 and caps[a] > 0:
                    prev_arc[v] = a
                    queue.append(v)
        if prev_arc[sink] == -1:
            break
        bottleneck = None
        v = sink
        while v != source:
            a = prev_arc[v]
            bottleneck = caps[a] if bottleneck is None else min(bottleneck, caps[a])
            v = heads[a ^ 1]
        v = sink
        while v != source:
            a = prev_arc[v]
            caps[a] -= bottleneck
            caps[a ^ 1] += bottleneck
            v = heads[a ^ 1]
        flow += bottleneck
    reachable = [False] * nn
    reachable[source] = True
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for a in out[u]:
            v = heads[a]
            if not reachable[v] and caps[a] > 0:
                reachable[v] = True
                queue.append(v)
    cut = [
        v
        for q, v in enumerate(net.split_vertices)
        if reachable[2 + 2 * q] and not reachable[3 + 2 * q]
    ]
    return flow, frozenset(cut)


@dataclass(frozen=True)
class HoleCut:
    """Vertices whose removal leaves a bipartite permutation graph, found in
    the window with the given index (None when the component had no hole)."""

    vertices: frozenset[int]
    window_index: int | None
    size: int


def min_hole_cut(g: Graph, p: HolePartition) -> HoleCut:
    """Best window cut over all hole indices, smallest index on ties.

    Self-checks that flow value equals cut size, that the cut stays inside
    its window, and that removing the cut leaves a bipartite permutation
    graph; any failure raises :class:`DiagnosticFailure`.
    """
    from .patterns import is_bpg

    best: tuple[int, int, frozenset[int]] | None = None
    for i in range(p.m):
        net = build_network(g, p, i)
        flow, cut = max_flow_min_cut(net)
        if flow != len(cut):
            raise DiagnosticFailure(
                f"window {i}: flow {flow} does not match cut size {len(cut)}"
            )
        if best is None or flow < best[0]:
            win = window(p, i - 2, i + 2)
            if not cut <= (win.set_a | win.set_b):
                raise DiagnosticFailure(f"window {i}: cut leaves its window")
            best = (flow, i, cut)
    assert best is not None
    size, idx, cut = best
    keep = [v for v in range(g.n) if v not in cut]
    remainder, _ = induced_subgraph(g, keep)
    if not is_bpg(remainder):
        raise DiagnosticFailure("removing the best window cut does not yield a BPG")
    return HoleCut(cut, idx, size)
