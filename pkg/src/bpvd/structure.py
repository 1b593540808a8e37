"""Shortest-hole structure of connected almost bipartite permutation graphs.

Around a shortest hole c_0..c_{m-1} (m >= 10) every vertex v falls into
exactly one class:

* ``A_i`` -- N(v) meets the hole in exactly {c_{i-1}, c_{i+1}},
* ``B_i`` -- N(v) meets the hole in exactly {c_i},

with hole indices taken modulo m and c_i itself landing in A_i.  Each class
carries a strict order derived from neighborhood witnesses in the four
surrounding classes; concatenating class orders along alternating indices
yields window orders, and windows spanning m-2 indices induce bipartite
permutation graphs.  The module builds this structure, slices windows, and
verifies the whole invariant suite.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key

from .errors import ContractViolation, StructureViolation
from .graph import Bipartition, Graph, connected_components, induced_subgraph
from .patterns import Hole, find_shortest_hole, is_valid_hole, verify_adjacency_enclosure

__all__ = [
    "HolePartition",
    "WindowSpec",
    "StructureReport",
    "classify_around_hole",
    "build_local_orders",
    "window",
    "verify_structure",
]


@dataclass(frozen=True)
class HolePartition:
    """Classification of all vertices around a shortest hole.

    ``class_a[i]`` and ``class_b[i]`` list the members of A_i and B_i; after
    :func:`build_local_orders` each list follows the class order (ties by
    ascending vertex id).  ``position`` maps a vertex to its
    ``(side, index, rank)`` coordinate.
    """

    hole: Hole
    class_a: tuple[tuple[int, ...], ...]
    class_b: tuple[tuple[int, ...], ...]
    position: dict[int, tuple[str, int, int]]
    orders_built: bool = False

    @property
    def m(self) -> int:
        return len(self.hole.cycle)

    @property
    def parity(self) -> str:
        """Global embedding shape: even holes wrap a cylinder, odd ones a
        Moebius strip.  Informational only."""
        return "cylinder" if self.m % 2 == 0 else "moebius"


@dataclass(frozen=True)
class WindowSpec:
    """Alternating class union between hole indices ``i`` and ``j``.

    ``set_a``/``order_a`` start on the A side at index ``i`` and alternate
    B_{i+1}, A_{i+2}, ...; ``set_b``/``order_b`` start on the B side.  The
    orders concatenate the per-class orders in index sequence.
    """

    i: int
    j: int
    set_a: frozenset[int]
    set_b: frozenset[int]
    order_a: tuple[int, ...]
    order_b: tuple[int, ...]


@dataclass
class StructureReport:
    """Outcome of :func:`verify_structure`: one flag per check plus details."""

    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"passed": self.passed, "checks": dict(self.checks), "failures": list(self.failures)}

    def _record(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks[name] = ok
        if not ok and detail:
            self.failures.append(f"{name}: {detail}")


def classify_around_hole(g: Graph, hole: Hole) -> HolePartition:
    """Assign every vertex its (side, index) coordinate around ``hole``.

    Requires ``g`` connected and almost bipartite permutation with ``hole``
    a shortest hole; any vertex whose hole neighborhood has a different
    shape raises :class:`StructureViolation`, signalling that the
    precondition was breached.
    """
    cycle = hole.cycle
    m = len(cycle)
    if m < 10:
        raise StructureViolation(f"hole of length {m} < 10; graph cannot be almost-BPG")
    if not is_valid_hole(g, cycle):
        raise StructureViolation("sequence is not an induced cycle of the graph")
    if len(connected_components(g)) != 1:
        raise StructureViolation("graph is not connected")
    hole_index = {v: i for i, v in enumerate(cycle)}
    cmask = 0
    for v in cycle:
        cmask |= 1 << v
    class_a: list[list[int]] = [[] for _ in range(m)]
    class_b: list[list[int]] = [[] for _ in range(m)]
    for v in range(g.n):
        inter = g.mask(v) & cmask
        hits = []
        while inter:
            low = inter & -inter
            hits.append(hole_index[low.bit_length() - 1])
            inter ^= low
        if len(hits) == 1:
            class_b[hits[0]].append(v)
        elif len(hits) == 2:
            a, b = sorted(hits)
            if b - a == 2:
                class_a[a + 1].append(v)
            elif b - a == m - 2:
                class_a[(b + 1) % m].append(v)
            else:
                raise StructureViolation(
                    f"vertex {v} sees hole positions {a} and {b}, which are not two apart"
                )
        elif not hits:
            raise StructureViolation(f"vertex {v} has no neighbor on the hole")
        else:
            raise StructureViolation(f"vertex {v} sees {len(hits)} hole vertices")
    position = {}
    for i in range(m):
        for rank, v in enumerate(class_a[i]):
            position[v] = ("A", i, rank)
        for rank, v in enumerate(class_b[i]):
            position[v] = ("B", i, rank)
    return HolePartition(
        hole,
        tuple(tuple(c) for c in class_a),
        tuple(tuple(c) for c in class_b),
        position,
    )


def _pairwise_relation(g: Graph, members, pool_before, pool_after):
    """Witness-based comparability inside one class.

    ``rel[(u, v)] = -1/0/+1`` for u before / incomparable / u after, where a
    witness in ``pool_before`` seeing u but not v (or one in ``pool_after``
    seeing v but not u) puts u first.  Conflicting witnesses raise.
    """
    rel: dict[tuple[int, int], int] = {}
    for a_idx in range(len(members)):
        u = members[a_idx]
        mu = 1 << u
        for b_idx in range(a_idx + 1, len(members)):
            v = members[b_idx]
            mv = 1 << v
            before = after = False
            for w in pool_before:
                mw = g.mask(w)
                if mw & mu and not mw & mv:
                    before = True
                elif mw & mv and not mw & mu:
                    after = True
            for w in pool_after:
                mw = g.mask(w)
                if mw & mv and not mw & mu:
                    before = True
                elif mw & mu and not mw & mv:
                    after = True
            if before and after:
                raise StructureViolation(
                    f"witnesses order vertices {u} and {v} both ways"
                )
            d = -1 if before else (1 if after else 0)
            rel[(u, v)] = d
            rel[(v, u)] = -d
    return rel


def _order_class(g: Graph, members, pool_before, pool_after):
    if len(members) <= 1:
        return tuple(members)
    rel = _pairwise_relation(g, members, pool_before, pool_after)
    for a in members:
        for b in members:
            if a == b or rel[(a, b)] != -1:
                continue
            for c in members:
                if c in (a, b):
                    continue
                if rel[(b, c)] == -1 and rel[(a, c)] != -1:
                    raise StructureViolation("class order is not transitive")
    ordered = sorted(members, key=cmp_to_key(lambda x, y: rel[(x, y)] or (x - y)))
    for p in range(len(ordered)):
        for q in range(p + 1, len(ordered)):
            if rel[(ordered[q], ordered[p])] == -1:
                raise StructureViolation("class order admits no linear extension")
    return tuple(ordered)


def build_local_orders(g: Graph, p: HolePartition) -> HolePartition:
    """Order every class by its witness relation, ties by ascending id.

    For A_i the witness pools are ``B_{i-2} + A_{i-1}`` (a witness seeing u
    but not u' puts u first) and ``A_{i+1} + B_{i+2}`` (seeing u' but not u
    puts u first); for B_i the pools swap sides.  A cyclic or two-way
    relation raises :class:`StructureViolation`.
    """
    m = p.m
    ca = list(p.class_a)
    cb = list(p.class_b)
    new_a = []
    new_b = []
    for i in range(m):
        pool_before = cb[(i - 2) % m] + ca[(i - 1) % m]
        pool_after = ca[(i + 1) % m] + cb[(i + 2) % m]
        new_a.append(_order_class(g, ca[i], pool_before, pool_after))
        pool_before = ca[(i - 2) % m] + cb[(i - 1) % m]
        pool_after = cb[(i + 1) % m] + ca[(i + 2) % m]
        new_b.append(_order_class(g, cb[i], pool_before, pool_after))
    position = {}
    for i in range(m):
        for rank, v in enumerate(new_a[i]):
            position[v] = ("A", i, rank)
        for rank, v in enumerate(new_b[i]):
            position[v] = ("B", i, rank)
    return HolePartition(p.hole, tuple(new_a), tuple(new_b), position, orders_built=True)


def window(p: HolePartition, i: int, j: int) -> WindowSpec:
    """Slice the alternating window between hole indices ``i`` and ``j``.

    Indices are taken modulo m; the window must span fewer than m indices
    (a full wrap would overlap itself).
    """
    if not p.orders_built:
        raise ContractViolation("window() requires built class orders")
    if i > j:
        raise ContractViolation("window requires i <= j")
    m = p.m
    if j - i + 1 >= m:
        raise ContractViolation(f"window [{i}, {j}] spans >= {m} indices")
    order_a: list[int] = []
    order_b: list[int] = []
    for off, idx in enumerate(range(i, j + 1)):
        a_block = p.class_a[idx % m]
        b_block = p.class_b[idx % m]
        if off % 2 == 0:
            order_a.extend(a_block)
            order_b.extend(b_block)
        else:
            order_a.extend(b_block)
            order_b.extend(a_block)
    return WindowSpec(i, j, frozenset(order_a), frozenset(order_b), tuple(order_a), tuple(order_b))


def _closure_positions(p: HolePartition):
    """Per-index position maps of the order on A[i-2, i+2] and B[i-2, i+2]."""
    pos_a = []
    pos_b = []
    for i in range(p.m):
        w = window(p, i - 2, i + 2)
        pos_a.append({v: q for q, v in enumerate(w.order_a)})
        pos_b.append({v: q for q, v in enumerate(w.order_b)})
    return pos_a, pos_b


def _closure_less(pos_a, pos_b, x: int, y: int) -> bool:
    """x before y in some five-index window order (the <_cl comparability)."""
    for table in pos_a:
        px = table.get(x)
        if px is not None:
            py = table.get(y)
            if py is not None and px < py:
                return True
    for table in pos_b:
        px = table.get(x)
        if px is not None:
            py = table.get(y)
            if py is not None and px < py:
                return True
    return False


def _monotone_labeling_exists(cycle, pos_a, pos_b) -> bool:
    """Some rotation/reflection of ``cycle`` advances by two in the window
    comparability, with no other cycle vertex strictly between a vertex and
    its successor-by-two."""
    k = len(cycle)
    for direction in (1, -1):
        seq = cycle if direction == 1 else tuple(reversed(cycle))
        for shift in range(k):
            lab = seq[shift:] + seq[:shift]
            ok = True
            for t in range(k):
                a, b = lab[t], lab[(t + 2) % k]
                if not _closure_less(pos_a, pos_b, a, b):
                    ok = False
                    break
                for c in lab:
                    if c in (a, b):
                        continue
                    if _closure_less(pos_a, pos_b, a, c) and _closure_less(pos_a, pos_b, c, b):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return True
    return False


def _sample_holes(g: Graph, p: HolePartition, limit: int):
    """Deterministic hole sample: the base hole plus shortest holes of a few
    single-vertex-deleted variants."""
    holes = [p.hole.cycle]
    seen = {frozenset(p.hole.cycle)}
    if limit <= 1 or g.n <= 1:
        return holes
    step = max(1, g.n // (limit - 1))
    for drop in range(0, g.n, step):
        keep = [v for v in range(g.n) if v != drop]
        sub, mapping = induced_subgraph(g, keep)
        h = find_shortest_hole(sub)
        if h is None:
            continue
        cyc = tuple(mapping[v] for v in h.cycle)
        key = frozenset(cyc)
        if key not in seen:
            seen.add(key)
            holes.append(cyc)
        if len(holes) >= limit:
            break
    return holes


def verify_structure(g: Graph, p: HolePartition, hole_samples: int = 5) -> StructureReport:
    """Run the full structural invariant suite and report per-check results.

    Checks: (a) the hole dominates the graph; (b) classes are independent
    sets, each A_i is completely joined to B_i, and neighborhoods stay in
    the five-index window; (c) neighborhoods restricted to a class are
    pairwise nested, with the two-away class nested inside the one-away
    class; (d) class-order incomparability coincides with equal
    neighborhoods; (e) windows spanning m-2 indices induce bipartite
    permutation graphs whose window orders satisfy adjacency and enclosure;
    (f) sampled holes admit a monotone labeling in the window comparability.
    """
    if not p.orders_built:
        raise ContractViolation("verify_structure requires built class orders")
    m = p.m
    rep = StructureReport()
    cmask = 0
    for v in p.hole.cycle:
        cmask |= 1 << v

    ok = True
    detail = ""
    for v in range(g.n):
        if not ((cmask >> v) & 1) and not (g.mask(v) & cmask):
            ok = False
            detail = f"vertex {v} at distance > 1 from the hole"
            break
    rep._record("hole_domination", ok, detail)

    ok = True
    detail = ""
    win_b = [window(p, i - 2, i + 2).set_b for i in range(m)]
    win_a = [window(p, i - 2, i + 2).set_a for i in range(m)]
    for i in range(m):
        a, b = p.class_a[i], p.class_b[i]
        for side in (a, b):
            for x_idx in range(len(side)):
                for y_idx in range(x_idx + 1, len(side)):
                    if g.has_edge(side[x_idx], side[y_idx]):
                        ok = False
                        detail = f"class at index {i} is not independent"
        for u in a:
            for w in b:
                if not g.has_edge(u, w):
                    ok = False
                    detail = f"missing edge between A_{i} and B_{i}"
        for u in a:
            if not set(g.neighbors(u)) <= win_b[i]:
                ok = False
                detail = f"vertex {u} in A_{i} has a neighbor outside its window"
        for w in b:
            if not set(g.neighbors(w)) <= win_a[i]:
                ok = False
                detail = f"vertex {w} in B_{i} has a neighbor outside its window"
    rep._record("class_neighborhoods", ok, detail)

    ok = True
    detail = ""
    for i in range(m):
        for sign in (-1, 1):
            near_a = p.class_a[(i + sign) % m]
            far_b = p.class_b[(i + 2 * sign) % m]
            amask = 0
            for u in p.class_a[i]:
                amask |= 1 << u
            restricted = [(w, g.mask(w) & amask) for w in far_b + near_a]
            for q1 in range(len(restricted)):
                for q2 in range(q1 + 1, len(restricted)):
                    m1, m2 = restricted[q1][1], restricted[q2][1]
                    if m1 & ~m2 and m2 & ~m1:
                        ok = False
                        detail = f"incomparable neighborhoods in A_{i}"
            for w in far_b:
                mw = g.mask(w) & amask
                for wp in near_a:
                    if mw & ~g.mask(wp):
                        ok = False
                        detail = f"two-away neighborhood not nested in A_{i}"
            near_b = p.class_b[(i + sign) % m]
            far_a = p.class_a[(i + 2 * sign) % m]
            bmask = 0
            for w in p.class_b[i]:
                bmask |= 1 << w
            restricted = [(u, g.mask(u) & bmask) for u in far_a + near_b]
            for q1 in range(len(restricted)):
                for q2 in range(q1 + 1, len(restricted)):
                    m1, m2 = restricted[q1][1], restricted[q2][1]
                    if m1 & ~m2 and m2 & ~m1:
                        ok = False
                        detail = f"incomparable neighborhoods in B_{i}"
            for u in far_a:
                mu = g.mask(u) & bmask
                for up in near_b:
                    if mu & ~g.mask(up):
                        ok = False
                        detail = f"two-away neighborhood not nested in B_{i}"
    rep._record("restricted_comparability", ok, detail)

    ok = True
    detail = ""
    for i in range(m):
        for members, pool_before, pool_after in (
            (
                p.class_a[i],
                p.class_b[(i - 2) % m] + p.class_a[(i - 1) % m],
                p.class_a[(i + 1) % m] + p.class_b[(i + 2) % m],
            ),
            (
                p.class_b[i],
                p.class_a[(i - 2) % m] + p.class_b[(i - 1) % m],
                p.class_b[(i + 1) % m] + p.class_a[(i + 2) % m],
            ),
        ):
            try:
                rel = _pairwise_relation(g, members, pool_before, pool_after)
            except StructureViolation as exc:
                ok = False
                detail = str(exc)
                continue
            for x_idx in range(len(members)):
                for y_idx in range(x_idx + 1, len(members)):
                    x, y = members[x_idx], members[y_idx]
                    tied = rel[(x, y)] == 0
                    equal = g.mask(x) == g.mask(y)
                    if tied != equal:
                        ok = False
                        detail = f"vertices {x} and {y}: incomparable={tied}, equal neighborhoods={equal}"
    rep._record("order_incomparability", ok, detail)

    ok = True
    detail = ""
    for i in range(m):
        w = window(p, i, i + m - 3)
        members = sorted(w.set_a | w.set_b)
        sub, mapping = induced_subgraph(g, members)
        to_sub = {old: new for new, old in enumerate(mapping)}
        left = frozenset(to_sub[v] for v in w.set_a)
        right = frozenset(to_sub[v] for v in w.set_b)
        crossing = all(
            (u in left) != (v in left) for u, v in sub.edges()
        )
        if not crossing:
            ok = False
            detail = f"window [{i}, {i + m - 3}] is not bipartite on its two sides"
            continue
        bip = Bipartition(left, right)
        order_b = tuple(to_sub[v] for v in w.order_b)
        order_a = tuple(to_sub[v] for v in w.order_a)
        if not verify_adjacency_enclosure(sub, bip, order_b):
            ok = False
            detail = f"window [{i}, {i + m - 3}]: B-side order fails adjacency/enclosure"
        elif not verify_adjacency_enclosure(sub, Bipartition(right, left), order_a):
            ok = False
            detail = f"window [{i}, {i + m - 3}]: A-side order fails adjacency/enclosure"
    rep._record("window_bipartite_permutation", ok, detail)

    ok = True
    detail = ""
    pos_a, pos_b = _closure_positions(p)
    for cyc in _sample_holes(g, p, hole_samples):
        if not _monotone_labeling_exists(cyc, pos_a, pos_b):
            ok = False
            detail = f"hole {cyc} admits no monotone labeling"
            break
    rep._record("hole_monotonicity", ok, detail)
    return rep
