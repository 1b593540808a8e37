"""Exact branching solver, per-component polynomial cut, 9-approximation,
and a brute-force oracle for small graphs.

The exact solver repeatedly picks a forbidden structure (at most nine
vertices) and branches on deleting each of its vertices with one unit less
budget; once no structure is left, every connected component either is
already a bipartite permutation graph or carries a shortest hole whose
minimum window cut finishes the component in polynomial time.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import ContractViolation, DiagnosticFailure
from .graph import Graph, connected_components, induced_subgraph
from .holecut import HoleCut, min_hole_cut
from .patterns import _bpg_obstruction, find_forbidden_set, find_shortest_hole, is_bpg
from .structure import build_local_orders, classify_around_hole

__all__ = [
    "Instance",
    "SolveStats",
    "Solution",
    "FptResult",
    "solve_component_poly",
    "solve_fpt",
    "approx9",
    "oracle_solve",
]


@dataclass(frozen=True)
class Instance:
    """A graph together with a deletion budget."""

    g: Graph
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("budget k must be non-negative")


@dataclass
class SolveStats:
    branch_nodes: int = 0
    max_depth: int = 0
    component_cut_sizes: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "branch_nodes": self.branch_nodes,
            "max_depth": self.max_depth,
            "component_cut_sizes": list(self.component_cut_sizes),
        }


@dataclass(frozen=True)
class Solution:
    """A deletion set with provenance: branching deletions plus per-component
    window cuts.  ``deleted`` is always their disjoint union."""

    deleted: frozenset[int]
    branch_deletions: frozenset[int]
    cut_deletions: frozenset[int]
    stats: SolveStats


@dataclass(frozen=True)
class FptResult:
    """Outcome of :func:`solve_fpt`: the solution on YES, None on NO, plus
    search statistics either way."""

    solution: Solution | None
    stats: SolveStats

    @property
    def is_yes(self) -> bool:
        return self.solution is not None


def _component_cut(g: Graph) -> HoleCut:
    """Minimum hole cut of one connected almost-BPG component (no
    precondition re-checks)."""
    hole = find_shortest_hole(g)
    if hole is None:
        return HoleCut(frozenset(), None, 0)
    p = build_local_orders(g, classify_around_hole(g, hole))
    return min_hole_cut(g, p)


def solve_component_poly(g: Graph) -> HoleCut:
    """Minimum deletion set of a connected almost bipartite permutation
    graph: empty when the component is already a BPG, otherwise the best
    window cut around its shortest hole."""
    if len(connected_components(g)) != 1:
        raise ContractViolation("solve_component_poly requires a connected graph")
    if find_forbidden_set(g) is not None:
        raise ContractViolation(
            "solve_component_poly requires an almost bipartite permutation graph"
        )
    return _component_cut(g)


def solve_fpt(inst: Instance, minimize: bool = False) -> FptResult:
    """Decide whether at most ``inst.k`` deletions make ``inst.g`` a
    bipartite permutation graph, returning the first solution found.

    Branching explores the vertices of each forbidden set in ascending id;
    at a branching leaf (no forbidden set left) the per-component window
    cuts are summed against the remaining budget.  Deterministic.
    """
    stats = SolveStats()

    def recurse(g: Graph, to_orig: tuple[int, ...], k: int, depth: int, branch: list[int]):
        stats.branch_nodes += 1
        stats.max_depth = max(stats.max_depth, depth)
        fs = find_forbidden_set(g)
        if fs is None:
            total = 0
            cut_orig: set[int] = set()
            sizes: list[int] = []
            for comp in connected_components(g):
                sub, mapping = induced_subgraph(g, comp)
                cut = _component_cut(sub)
                total += cut.size
                sizes.append(cut.size)
                if total > k:
                    return None
                cut_orig.update(to_orig[mapping[v]] for v in cut.vertices)
            stats.component_cut_sizes = sizes
            branch_set = frozenset(branch)
            return Solution(branch_set | cut_orig, branch_set, frozenset(cut_orig), stats)
        if k == 0:
            return None
        for v in sorted(fs.vertices):
            keep = [x for x in range(g.n) if x != v]
            sub, mapping = induced_subgraph(g, keep)
            child_to_orig = tuple(to_orig[x] for x in mapping)
            branch.append(to_orig[v])
            found = recurse(sub, child_to_orig, k - 1, depth + 1, branch)
            branch.pop()
            if found is not None:
                return found
        return None

    solution = recurse(inst.g, tuple(range(inst.g.n)), inst.k, 0, [])
    if solution is not None and minimize:
        solution = _minimize_solution(inst.g, solution)
    return FptResult(solution, stats)


def _minimize_solution(g: Graph, sol: Solution) -> Solution:
    """Greedily re-add deleted vertices while the remainder stays a BPG."""
    deleted = set(sol.deleted)
    for v in sorted(sol.deleted):
        trial = deleted - {v}
        keep = [x for x in range(g.n) if x not in trial]
        sub, _ = induced_subgraph(g, keep)
        if is_bpg(sub):
            deleted = trial
    kept = frozenset(deleted)
    return Solution(
        kept,
        sol.branch_deletions & kept,
        sol.cut_deletions & kept,
        sol.stats,
    )


def approx9(g: Graph) -> Solution:
    """Factor-9 approximate deletion set, always feasible.

    Phase one deletes whole forbidden sets while any exists (every optimal
    solution hits each, and each has at most nine vertices); phase two adds
    the minimum window cut of every remaining component with a hole, which
    is no larger than what the optimum spends there.
    """
    to_orig = tuple(range(g.n))
    work = g
    phase1: set[int] = set()
    while True:
        fs = find_forbidden_set(work)
        if fs is None:
            break
        phase1.update(to_orig[v] for v in fs.vertices)
        keep = [x for x in range(work.n) if x not in fs.vertices]
        work, mapping = induced_subgraph(work, keep)
        to_orig = tuple(to_orig[x] for x in mapping)
    phase2: set[int] = set()
    sizes: list[int] = []
    for comp in connected_components(work):
        sub, mapping = induced_subgraph(work, comp)
        cut = _component_cut(sub)
        sizes.append(cut.size)
        phase2.update(to_orig[mapping[v]] for v in cut.vertices)
    deleted = frozenset(phase1 | phase2)
    keep = [x for x in range(g.n) if x not in deleted]
    remainder, _ = induced_subgraph(g, keep)
    if not is_bpg(remainder):
        raise DiagnosticFailure("approximation produced an infeasible deletion set")
    stats = SolveStats(component_cut_sizes=sizes)
    return Solution(deleted, frozenset(phase1), frozenset(phase2), stats)


def oracle_solve(g: Graph, max_n: int = 12) -> frozenset[int]:
    """Smallest deletion set leaving a BPG, by subset enumeration.

    Subsets are tried in increasing size, ties in lexicographic order of the
    sorted vertex sequence, so the result is deterministic.  Obstruction
    sets collected along the way prune candidates that provably fail.
    Refuses graphs with more than ``max_n`` vertices.
    """
    if g.n > max_n:
        raise ContractViolation(
            f"oracle_solve refuses n={g.n} > max_n={max_n} (exponential enumeration)"
        )
    obstructions: list[frozenset[int]] = []
    everything = list(range(g.n))
    for size in range(g.n + 1):
        for combo in combinations(everything, size):
            chosen = frozenset(combo)
            if any(not (ob & chosen) for ob in obstructions):
                continue
            keep = [x for x in everything if x not in chosen]
            sub, mapping = induced_subgraph(g, keep)
            witness = _bpg_obstruction(sub)
            if witness is None:
                return chosen
            obstructions.append(frozenset(mapping[v] for v in witness))
    raise AssertionError("unreachable: deleting all vertices always yields a BPG")
