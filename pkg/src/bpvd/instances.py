"""Seeded instance generators with a portable xorshift64* RNG.

All randomness flows through :class:`Xorshift64Star`, a fully specified
64-bit recurrence, so a (family, parameters, seed) triple reproduces the
same graph bit for bit anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import ContractViolation, GenerationError, StructureViolation
from .graph import Graph, induced_subgraph
from .patterns import Hole, StrongOrdering, is_almost_bpg, is_bpg
from .structure import HolePartition, build_local_orders, classify_around_hole, window

__all__ = [
    "Xorshift64Star",
    "GenSpec",
    "PlantedInstance",
    "gen_staircase",
    "gen_cycle",
    "gen_thickened_cycle",
    "gen_planted",
    "generate",
]

_MASK64 = (1 << 64) - 1
_MULT = 0x2545F4914F6CDD1D
_SEED_FALLBACK = 0x9E3779B97F4A7C15


class Xorshift64Star:
    """xorshift64* generator.

    State update: ``x ^= x >> 12; x ^= (x << 25) mod 2^64; x ^= x >> 27``;
    output ``(x * 0x2545F4914F6CDD1D) mod 2^64``.  A zero seed is replaced
    by the odd constant 0x9E3779B97F4A7C15 so the recurrence never sticks.
    ``randint`` maps outputs by plain modulus.
    """

    def __init__(self, seed: int):
        self._x = (seed & _MASK64) or _SEED_FALLBACK

    def next_u64(self) -> int:
        x = self._x
        x ^= x >> 12
        x = (x ^ (x << 25)) & _MASK64
        x ^= x >> 27
        self._x = x
        return (x * _MULT) & _MASK64

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in the inclusive range [lo, hi]."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(0, i)
            items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class GenSpec:
    """Family name, parameter mapping, and seed; identical specs generate
    identical graphs."""

    family: str
    params: dict[str, Any]
    seed: int


@dataclass(frozen=True)
class PlantedInstance:
    """Graph with a known feasible deletion set, hence OPT <= |planted|."""

    g: Graph
    opt_upper_bound: int
    planted: frozenset[int]


def gen_staircase(n_u: int, n_w: int, seed: int) -> tuple[Graph, StrongOrdering]:
    """Connected bipartite permutation graph built from monotone column
    intervals, plus the identity strong ordering that certifies it.

    Row ``u_i`` (vertex i) is joined to columns ``l_i..r_i`` (vertex
    ``n_u + j`` for column j) with both endpoints non-decreasing in i and
    consecutive rows overlapping, which makes the graph connected, covers
    every column, and rules out the crossing pattern a strong ordering
    forbids.
    """
    if n_u < 1 or n_w < 1:
        raise ContractViolation("staircase needs at least one vertex per side")
    rng = Xorshift64Star(seed)
    lo = [0] * n_u
    hi = [0] * n_u
    hi[0] = rng.randint(0, n_w - 1)
    for i in range(1, n_u):
        lo[i] = rng.randint(lo[i - 1], hi[i - 1])
        hi[i] = rng.randint(max(hi[i - 1], lo[i]), n_w - 1)
    hi[n_u - 1] = n_w - 1
    edges = [
        (i, n_u + j)
        for i in range(n_u)
        for j in range(lo[i], hi[i] + 1)
    ]
    g = Graph(n_u + n_w, edges)
    ordering = StrongOrdering(tuple(range(n_u)), tuple(range(n_u, n_u + n_w)))
    return g, ordering


def gen_cycle(m: int) -> Graph:
    if m < 3:
        raise ContractViolation("cycle needs at least three vertices")
    return Graph(m, [(i, (i + 1) % m) for i in range(m)])


def _propose_a(p: HolePartition, i: int, rng: Xorshift64Star) -> list[int]:
    """Neighbor run for a new A_i member: a consecutive slice of the B-side
    window covering c_{i-1}, all of B_i, and c_{i+1}."""
    m = p.m
    cycle = p.hole.cycle
    win = window(p, i - 2, i + 2)
    order = list(win.order_b)
    left_anchor = order.index(cycle[(i - 1) % m])
    right_anchor = order.index(cycle[(i + 1) % m])
    lo = max(0, left_anchor - rng.randint(0, 2))
    hi = min(len(order) - 1, right_anchor + rng.randint(0, 2))
    return order[lo : hi + 1]


def _propose_b(p: HolePartition, i: int, rng: Xorshift64Star) -> list[int]:
    """Neighbor run for a new B_i member: a consecutive slice of the A-side
    window covering all of A_i but neither c_{i-2} nor c_{i+2}."""
    m = p.m
    cycle = p.hole.cycle
    win = window(p, i - 2, i + 2)
    order = list(win.order_a)
    block = p.class_a[i % m]
    start = order.index(block[0])
    end = order.index(block[-1])
    left_wall = order.index(cycle[(i - 2) % m])
    right_wall = order.index(cycle[(i + 2) % m])
    lo = start - rng.randint(0, max(0, min(2, start - left_wall - 1)))
    hi = end + rng.randint(0, max(0, min(2, right_wall - end - 1)))
    return order[lo : hi + 1]


def gen_thickened_cycle(m: int, extra_a: int, extra_b: int, seed: int) -> Graph:
    """Cycle C_m (vertices 0..m-1) thickened by ``extra_a`` A-class and
    ``extra_b`` B-class vertices at random hole indices.

    Each proposed vertex is kept only if the grown graph stays an almost
    bipartite permutation graph; otherwise it is resampled.  Raises
    :class:`GenerationError` once the resampling budget is exhausted.
    """
    if m < 10:
        raise ContractViolation("thickened cycle needs a hole of length >= 10")
    rng = Xorshift64Star(seed)
    g = gen_cycle(m)
    base_hole = Hole(tuple(range(m)))
    p = build_local_orders(g, classify_around_hole(g, base_hole))
    plan = ["A"] * extra_a + ["B"] * extra_b
    rng.shuffle(plan)
    budget = 200 * (len(plan) + 1)
    for kind in plan:
        placed = False
        while not placed:
            budget -= 1
            if budget < 0:
                raise GenerationError(
                    f"no valid placement found for family (m={m}, a={extra_a}, b={extra_b})"
                )
            i = rng.randint(0, m - 1)
            run = _propose_a(p, i, rng) if kind == "A" else _propose_b(p, i, rng)
            v = g.n
            grown = Graph(g.n + 1, list(g.edges()) + [(v, w) for w in run])
            if not is_almost_bpg(grown):
                continue
            # The base hole must stay classifiable and orderable, so later
            # placements keep a coherent window structure to slice.
            try:
                p2 = build_local_orders(grown, classify_around_hole(grown, base_hole))
            except StructureViolation:
                continue
            g, p = grown, p2
            placed = True
    return g


def gen_planted(base: GenSpec, q: int, seed: int) -> PlantedInstance:
    """Base graph plus ``q`` noise vertices, each joined to a uniform random
    subset of the base vertices.

    The planted set always contains the q noise vertices; when the base
    itself is not a bipartite permutation graph (cycle or thickened-cycle
    families), its per-component minimum hole cuts are added so that
    removing the planted set is guaranteed feasible.
    """
    from .solver import _component_cut

    if q < 0:
        raise ContractViolation("q must be non-negative")
    base_graph = generate(base)[0]
    rng = Xorshift64Star(seed)
    n0 = base_graph.n
    edges = list(base_graph.edges())
    for j in range(q):
        v = n0 + j
        for w in range(n0):
            if rng.next_u64() & 1:
                edges.append((w, v))
    g = Graph(n0 + q, edges)
    planted = set(range(n0, n0 + q))
    if not is_bpg(base_graph):
        from .graph import connected_components

        for comp in connected_components(base_graph):
            sub, mapping = induced_subgraph(base_graph, comp)
            cut = _component_cut(sub)
            planted.update(mapping[v] for v in cut.vertices)
    return PlantedInstance(g, len(planted), frozenset(planted))


def generate(spec: GenSpec) -> tuple[Graph, dict]:
    """Build the graph for a :class:`GenSpec`; returns it with a JSON-ready
    sidecar describing the instance."""
    sidecar: dict[str, Any] = {"family": spec.family, "params": dict(spec.params), "seed": spec.seed}
    if spec.family == "staircase":
        g, _ = gen_staircase(spec.params["nu"], spec.params["nw"], spec.seed)
        return g, sidecar
    if spec.family == "cycle":
        return gen_cycle(spec.params["m"]), sidecar
    if spec.family == "thickened_cycle":
        g = gen_thickened_cycle(
            spec.params["m"],
            spec.params.get("extra_a", 0),
            spec.params.get("extra_b", 0),
            spec.seed,
        )
        return g, sidecar
    if spec.family == "planted":
        base = spec.params["base"]
        inst = gen_planted(base, spec.params["q"], spec.seed)
        sidecar["params"] = {
            "base_family": base.family,
            "base_params": dict(base.params),
            "base_seed": base.seed,
            "q": spec.params["q"],
        }
        sidecar["opt_upper_bound"] = inst.opt_upper_bound
        return inst.g, sidecar
    raise ContractViolation(f"unknown generator family {spec.family!r}")
