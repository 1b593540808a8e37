"""Forbidden-structure detection and bipartite-permutation recognition.

A graph is a bipartite permutation graph (BPG) exactly when it contains no
induced copy of K3, T2, X2, X3 and no hole (induced cycle on >= 5 vertices).
Dropping the holes on >= 10 vertices from the forbidden list yields the
almost bipartite permutation graphs, the class the solver branches into.

The three 7-vertex patterns are fixed as:

* ``T2`` -- spider with three legs of length two (center x; legs a1-a2,
  b1-b2, c1-c2; 6 edges),
* ``X2`` -- 4-cycle with pendant vertices on exactly three cycle vertices
  (7 edges),
* ``X3`` -- path p1..p5 plus a hub adjacent to p1, p3, p5 and a pendant on
  the hub (8 edges).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .errors import ContractViolation
from .graph import Bipartition, Graph

__all__ = [
    "PatternKind",
    "ForbiddenSet",
    "Hole",
    "StrongOrdering",
    "PATTERN_GRAPHS",
    "induces_pattern",
    "is_valid_hole",
    "find_forbidden_set",
    "find_shortest_hole",
    "is_almost_bpg",
    "is_bpg",
    "bpg_witness",
    "verify_strong_ordering",
    "verify_adjacency_enclosure",
]


class PatternKind(str, Enum):
    K3 = "K3"
    T2 = "T2"
    X2 = "X2"
    X3 = "X3"
    C5 = "C5"
    C6 = "C6"
    C7 = "C7"
    C8 = "C8"
    C9 = "C9"


def _cycle(k: int) -> Graph:
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


PATTERN_GRAPHS: dict[PatternKind, Graph] = {
    PatternKind.K3: _cycle(3),
    PatternKind.T2: Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]),
    PatternKind.X2: Graph(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6)]),
    PatternKind.X3: Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (5, 0), (5, 2), (5, 4), (5, 6)]),
    PatternKind.C5: _cycle(5),
    PatternKind.C6: _cycle(6),
    PatternKind.C7: _cycle(7),
    PatternKind.C8: _cycle(8),
    PatternKind.C9: _cycle(9),
}

_CYCLE_KINDS = {
    5: PatternKind.C5,
    6: PatternKind.C6,
    7: PatternKind.C7,
    8: PatternKind.C8,
    9: PatternKind.C9,
}


@dataclass(frozen=True)
class ForbiddenSet:
    """Witness that ``vertices`` induce the pattern named by ``kind``."""

    kind: PatternKind
    vertices: frozenset[int]

    def to_json(self, g: Graph | None = None) -> dict:
        ids = sorted(self.vertices)
        if g is not None:
            ids = sorted(g.label(v) for v in self.vertices)
        return {"kind": self.kind.value, "vertices": ids}


@dataclass(frozen=True)
class Hole:
    """Induced cycle on at least five vertices, as a cyclic sequence."""

    cycle: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.cycle)

    def __len__(self) -> int:
        return len(self.cycle)

    def to_json(self, g: Graph | None = None) -> dict:
        ids = list(self.cycle)
        if g is not None:
            ids = [g.label(v) for v in self.cycle]
        return {"kind": "hole", "length": len(ids), "vertices": ids}


@dataclass(frozen=True)
class StrongOrdering:
    """Linear orders of the two sides of a bipartition."""

    order_u: tuple[int, ...]
    order_w: tuple[int, ...]


def _isomorphic_small(a: Graph, b: Graph) -> bool:
    """Exact isomorphism test for graphs up to ~9 vertices (backtracking)."""
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    if sorted(map(a.degree, a.vertices())) != sorted(map(b.degree, b.vertices())):
        return False
    order = sorted(a.vertices(), key=lambda v: (-a.degree(v), v))
    assign: list[int] = []
    used = 0

    def extend(pos: int) -> bool:
        nonlocal used
        if pos == a.n:
            return True
        v = order[pos]
        for w in b.vertices():
            if (used >> w) & 1 or b.degree(w) != a.degree(v):
                continue
            ok = True
            for q in range(pos):
                if a.has_edge(v, order[q]) != b.has_edge(w, assign[q]):
                    ok = False
                    break
            if ok:
                assign.append(w)
                used |= 1 << w
                if extend(pos + 1):
                    return True
                assign.pop()
                used &= ~(1 << w)
        return False

    return extend(0)


def induces_pattern(g: Graph, vertices, kind: PatternKind) -> bool:
    """True iff ``vertices`` induce a copy of the named pattern in ``g``."""
    from .graph import induced_subgraph

    vs = sorted(set(vertices))
    pat = PATTERN_GRAPHS[kind]
    if len(vs) != pat.n:
        return False
    sub, _ = induced_subgraph(g, vs)
    return _isomorphic_small(sub, pat)


def is_valid_hole(g: Graph, cycle) -> bool:
    """Check that ``cycle`` is an induced cycle of length >= 5 in ``g``."""
    seq = tuple(cycle)
    k = len(seq)
    if k < 5 or len(set(seq)) != k:
        return False
    for i, v in enumerate(seq):
        if not (0 <= v < g.n):
            return False
        if not g.has_edge(v, seq[(i + 1) % k]):
            return False
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if g.has_edge(seq[i], seq[j]):
                return False
    return True


def _find_triangle(g: Graph) -> tuple[int, int, int] | None:
    mask = g._mask
    for u in range(g.n):
        mu = mask[u]
        for v in g.neighbors(u):
            if v < u:
                continue
            common = mu & mask[v]
            if common:
                w = (common & -common).bit_length() - 1
                return (u, v, w)
    return None


def _scan_p4_cycles(g: Graph, max_len: int | None = None, first: bool = False):
    """Close induced P4s into induced cycles, scanning P4s in lexicographic
    (v1, v2, v3, v4) order.

    For each induced path v1-v2-v3-v4, every vertex of
    ``(N(v2) | N(v3)) - {v1, v4}`` is removed and a shortest v1-v4 path in
    the residue is sought; the path plus v3, v2 closes an induced cycle on
    at least five vertices.  Returns ``(length, (v1, v2, v3, v4))`` for the
    shortest such cycle (or the first found when ``first`` is set), ignoring
    cycles longer than ``max_len``; None when no qualifying cycle exists.
    """
    n = g.n
    adj = g._adj
    mask = g._mask
    full = (1 << n) - 1
    best_len: int | None = None
    best_tuple = None
    for v1 in range(n):
        b1 = 1 << v1
        m1 = mask[v1]
        for v2 in adj[v1]:
            m2 = mask[v2]
            for v3 in adj[v2]:
                if v3 == v1 or (m1 >> v3) & 1:
                    continue
                m3 = mask[v3]
                removed = (m2 | m3) & ~b1
                for v4 in adj[v3]:
                    if v4 == v1 or v4 == v2:
                        continue
                    if (m1 >> v4) & 1 or (m2 >> v4) & 1:
                        continue
                    # Longest admissible residue path: strictly improve on
                    # best_len and respect the cap (cycle size = dist + 3).
                    limit = n
                    if best_len is not None:
                        limit = best_len - 4
                    if max_len is not None:
                        limit = min(limit, max_len - 3)
                    if limit < 2:
                        continue
                    b4 = 1 << v4
                    alive = full & ~(removed & ~b4)
                    frontier = b1
                    seen = b1
                    dist = 0
                    found = None
                    while frontier and dist < limit:
                        nxt = 0
                        f = frontier
                        while f:
                            low = f & -f
                            nxt |= mask[low.bit_length() - 1]
                            f ^= low
                        nxt &= alive & ~seen
                        if not nxt:
                            break
                        dist += 1
                        if nxt & b4:
                            found = dist
                            break
                        seen |= nxt
                        frontier = nxt
                    if found is None:
                        continue
                    best_len = found + 3
                    best_tuple = (v1, v2, v3, v4)
                    if first or best_len == 5:
                        return best_len, best_tuple
    if best_len is None:
        return None
    return best_len, best_tuple


def _close_p4(g: Graph, tpl: tuple[int, int, int, int]) -> tuple[int, ...]:
    """Rebuild the induced cycle for a scanned P4 via deterministic BFS."""
    v1, v2, v3, v4 = tpl
    removed = (g.mask(v2) | g.mask(v3)) & ~((1 << v1) | (1 << v4))
    parent = {v1: -1}
    queue = deque([v1])
    while queue:
        u = queue.popleft()
        if u == v4:
            break
        for w in g.neighbors(u):
            if (removed >> w) & 1 or w in parent:
                continue
            parent[w] = u
            queue.append(w)
    path = [v4]
    while path[-1] != v1:
        path.append(parent[path[-1]])
    path.reverse()
    return tuple(path) + (v3, v2)


def find_shortest_hole(g: Graph) -> Hole | None:
    """Shortest induced cycle on >= 5 vertices, or None if ``g`` has no hole.

    Ties are broken by the lexicographically smallest scanned P4 and then by
    BFS discovery order, so the result is deterministic.
    """
    res = _scan_p4_cycles(g)
    if res is None:
        return None
    return Hole(_close_p4(g, res[1]))


def _find_t2(g: Graph) -> frozenset[int] | None:
    n = g.n
    adj = g._adj
    mask = g._mask
    for x in range(n):
        nbrs = adj[x]
        if len(nbrs) < 3:
            continue
        mx = mask[x]
        bx = 1 << x
        for a1, b1, c1 in combinations(nbrs, 3):
            if (mask[a1] >> b1) & 1 or (mask[a1] >> c1) & 1 or (mask[b1] >> c1) & 1:
                continue
            blocked = mx | bx | (1 << a1) | (1 << b1) | (1 << c1)
            cand_a = mask[a1] & ~mask[b1] & ~mask[c1] & ~blocked
            if not cand_a:
                continue
            cand_b = mask[b1] & ~mask[a1] & ~mask[c1] & ~blocked
            if not cand_b:
                continue
            cand_c = mask[c1] & ~mask[a1] & ~mask[b1] & ~blocked
            if not cand_c:
                continue
            fa = cand_a
            while fa:
                la = fa & -fa
                a2 = la.bit_length() - 1
                fa ^= la
                fb = cand_b & ~la & ~mask[a2]
                while fb:
                    lb = fb & -fb
                    b2 = lb.bit_length() - 1
                    fb ^= lb
                    fc = cand_c & ~la & ~lb & ~mask[a2] & ~mask[b2]
                    if fc:
                        c2 = (fc & -fc).bit_length() - 1
                        return frozenset((x, a1, a2, b1, b2, c1, c2))
    return None


def _find_x2(g: Graph) -> frozenset[int] | None:
    n = g.n
    adj = g._adj
    mask = g._mask
    for q2 in range(n):
        nbrs = adj[q2]
        if len(nbrs) < 2:
            continue
        m2 = mask[q2]
        b2 = 1 << q2
        for q1, q3 in combinations(nbrs, 2):
            if (mask[q1] >> q3) & 1:
                continue
            opp = mask[q1] & mask[q3] & ~m2 & ~b2
            while opp:
                lo = opp & -opp
                q4 = lo.bit_length() - 1
                opp ^= lo
                cyc = b2 | lo | (1 << q1) | (1 << q3)
                cand1 = mask[q1] & ~m2 & ~mask[q3] & ~mask[q4] & ~cyc
                if not cand1:
                    continue
                cand2 = m2 & ~mask[q1] & ~mask[q3] & ~mask[q4] & ~cyc
                if not cand2:
                    continue
                cand3 = mask[q3] & ~mask[q1] & ~m2 & ~mask[q4] & ~cyc
                if not cand3:
                    continue
                f1 = cand1
                while f1:
                    l1 = f1 & -f1
                    p1 = l1.bit_length() - 1
                    f1 ^= l1
                    f2 = cand2 & ~l1 & ~mask[p1]
                    while f2:
                        l2 = f2 & -f2
                        p2 = l2.bit_length() - 1
                        f2 ^= l2
                        f3 = cand3 & ~l1 & ~l2 & ~mask[p1] & ~mask[p2]
                        if f3:
                            p3 = (f3 & -f3).bit_length() - 1
                            return frozenset((q1, q2, q3, q4, p1, p2, p3))
    return None


def _find_x3(g: Graph) -> frozenset[int] | None:
    n = g.n
    adj = g._adj
    mask = g._mask
    for x in range(n):
        nbrs = adj[x]
        if len(nbrs) < 4:
            continue
        mx = mask[x]
        bx = 1 << x
        for p3 in nbrs:
            m3 = mask[p3]
            others = [v for v in nbrs if v != p3 and not (m3 >> v) & 1]
            for p1, p5 in combinations(others, 2):
                if (mask[p1] >> p5) & 1:
                    continue
                anchors = bx | (1 << p1) | (1 << p3) | (1 << p5)
                cand2 = mask[p1] & m3 & ~mx & ~mask[p5] & ~anchors
                if not cand2:
                    continue
                cand4 = m3 & mask[p5] & ~mx & ~mask[p1] & ~anchors
                if not cand4:
                    continue
                candy = mx & ~mask[p1] & ~m3 & ~mask[p5] & ~anchors
                if not candy:
                    continue
                f2 = cand2
                while f2:
                    l2 = f2 & -f2
                    p2 = l2.bit_length() - 1
                    f2 ^= l2
                    f4 = cand4 & ~l2 & ~mask[p2]
                    while f4:
                        l4 = f4 & -f4
                        p4 = l4.bit_length() - 1
                        f4 ^= l4
                        fy = candy & ~l2 & ~l4 & ~mask[p2] & ~mask[p4]
                        if fy:
                            y = (fy & -fy).bit_length() - 1
                            return frozenset((x, p1, p2, p3, p4, p5, y))
    return None


def find_forbidden_set(g: Graph) -> ForbiddenSet | None:
    """Smallest-pattern-first search for an induced forbidden structure.

    Search order: K3, then C5 and C6, then the 7-vertex patterns T2, X2,
    X3, then C7, C8, C9.  Returns None exactly when ``g`` is an almost
    bipartite permutation graph.
    """
    tri = _find_triangle(g)
    if tri is not None:
        return ForbiddenSet(PatternKind.K3, frozenset(tri))
    short = _scan_p4_cycles(g, max_len=9)
    if short is not None and short[0] in (5, 6):
        return ForbiddenSet(_CYCLE_KINDS[short[0]], frozenset(_close_p4(g, short[1])))
    for finder, kind in ((_find_t2, PatternKind.T2), (_find_x2, PatternKind.X2), (_find_x3, PatternKind.X3)):
        vs = finder(g)
        if vs is not None:
            return ForbiddenSet(kind, vs)
    if short is not None:
        return ForbiddenSet(_CYCLE_KINDS[short[0]], frozenset(_close_p4(g, short[1])))
    return None


def is_almost_bpg(g: Graph) -> bool:
    """True iff ``g`` has no induced K3, T2, X2, X3 or C5..C9."""
    return find_forbidden_set(g) is None


def _bpg_obstruction(g: Graph) -> frozenset[int] | None:
    """Any vertex set witnessing that ``g`` is not a BPG (fast path)."""
    tri = _find_triangle(g)
    if tri is not None:
        return frozenset(tri)
    hole = _scan_p4_cycles(g, first=True)
    if hole is not None:
        return frozenset(_close_p4(g, hole[1]))
    for finder in (_find_t2, _find_x2, _find_x3):
        vs = finder(g)
        if vs is not None:
            return vs
    return None


def is_bpg(g: Graph) -> bool:
    """True iff ``g`` is a bipartite permutation graph (hole-free and free of
    K3, T2, X2, X3); vacuously true for empty and edgeless graphs."""
    return _bpg_obstruction(g) is None


def bpg_witness(g: Graph) -> ForbiddenSet | Hole | None:
    """Structured witness for non-membership: a ForbiddenSet when some small
    pattern occurs, otherwise the shortest hole, otherwise None."""
    fs = find_forbidden_set(g)
    if fs is not None:
        return fs
    return find_shortest_hole(g)


def _check_sides(g: Graph, bip: Bipartition) -> None:
    if bip.left & bip.right:
        raise ContractViolation("bipartition sides overlap")
    if bip.left | bip.right != set(g.vertices()):
        raise ContractViolation("bipartition does not cover the graph")
    for u in bip.left:
        for w in g.neighbors(u):
            if w not in bip.right:
                raise ContractViolation("edge does not cross the bipartition")
    for w in bip.right:
        for u in g.neighbors(w):
            if u not in bip.left:
                raise ContractViolation("edge does not cross the bipartition")


def verify_strong_ordering(g: Graph, bip: Bipartition, so: StrongOrdering) -> bool:
    """Check the strong-ordering condition over all pairs of crossing edges.

    For edges (u, w') and (u', w) with u before u' and w before w', both
    (u, w) and (u', w') must be edges.  Runs in O(|E|^2).
    """
    if frozenset(so.order_u) != bip.left or len(so.order_u) != len(bip.left):
        raise ContractViolation("order_u is not a permutation of the left side")
    if frozenset(so.order_w) != bip.right or len(so.order_w) != len(bip.right):
        raise ContractViolation("order_w is not a permutation of the right side")
    _check_sides(g, bip)
    pos_u = {v: i for i, v in enumerate(so.order_u)}
    pos_w = {v: i for i, v in enumerate(so.order_w)}
    edges = [(u, w) for u in so.order_u for w in g.neighbors(u)]
    for u, wp in edges:
        pu, pwp = pos_u[u], pos_w[wp]
        for up, w in edges:
            if pu < pos_u[up] and pos_w[w] < pwp:
                if not (g.has_edge(u, w) and g.has_edge(up, wp)):
                    return False
    return True


def verify_adjacency_enclosure(g: Graph, bip: Bipartition, order_w) -> bool:
    """Check the adjacency and enclosure properties of an order of the right
    side.

    Adjacency: every left vertex's neighborhood occupies consecutive
    positions.  Enclosure: for nested neighborhoods N(u) within N(u'), the
    difference occupies consecutive positions.
    """
    order_w = tuple(order_w)
    if frozenset(order_w) != bip.right or len(order_w) != len(bip.right):
        raise ContractViolation("order_w is not a permutation of the right side")
    _check_sides(g, bip)
    pos = {w: i for i, w in enumerate(order_w)}
    left = sorted(bip.left)
    for u in left:
        ps = sorted(pos[w] for w in g.neighbors(u))
        if ps and ps[-1] - ps[0] + 1 != len(ps):
            return False
    for u in left:
        mu = g.mask(u)
        for up in left:
            if up == u:
                continue
            mup = g.mask(up)
            if mu & ~mup:
                continue
            diff = mup & ~mu
            ps = []
            while diff:
                low = diff & -diff
                ps.append(pos[low.bit_length() - 1])
                diff ^= low
            if ps:
                ps.sort()
                if ps[-1] - ps[0] + 1 != len(ps):
                    return False
    return True
