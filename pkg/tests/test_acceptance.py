"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py -v`` to see the per-criterion
lines as they complete.
"""
from __future__ import annotations

import json
import random
import subprocess
import sys
from functools import lru_cache
from itertools import combinations

from bpvd import (
    Graph,
    Instance,
    approx9,
    bipartition_or_odd_cycle,
    build_local_orders,
    build_network,
    classify_around_hole,
    connected_components,
    find_forbidden_set,
    find_shortest_hole,
    gen_planted,
    gen_thickened_cycle,
    GenSpec,
    induced_subgraph,
    is_bpg,
    max_flow_min_cut,
    min_hole_cut,
    oracle_solve,
    serialize_graph,
    solve_fpt,
    verify_structure,
)
from oracles import (
    all_labeled_graphs,
    brute_shortest_hole_length,
    delete,
    exists_adjacency_enclosure_order,
    exists_strong_ordering,
    random_connected_bipartite,
    random_graph,
)


def _report(name: str, ok: bool, detail: str = "") -> None:
    line = f"[acceptance] {name}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


def _branch_bound_ok(result, k: int) -> bool:
    return result.stats.branch_nodes <= (9 ** (k + 1) - 1) // 8


def cycle(m):
    return Graph(m, [(i, (i + 1) % m) for i in range(m)])


@lru_cache(maxsize=1)
def exactness_corpus() -> tuple:
    """>= 300 instances with n <= 10: uniform random graphs at p in
    {0.2, 0.4}, planted staircase instances with q in {0, 1, 2}, and
    thickened cycles truncated to 10 vertices."""
    instances = []
    for seed in range(220):
        rng = random.Random(1000 + seed)
        n = 5 + seed % 6
        p = 0.2 if seed % 2 == 0 else 0.4
        instances.append(random_graph(rng, n, p))
    for seed in range(60):
        q = seed % 3
        nu, nw = [(2, 3), (3, 3), (3, 4)][seed % 3]
        base = GenSpec("staircase", {"nu": nu, "nw": nw}, 2000 + seed)
        inst = gen_planted(base, q, seed=3000 + seed)
        if inst.g.n <= 10:
            instances.append(inst.g)
    for seed in range(25):
        g = gen_thickened_cycle(10, 1 + seed % 2, seed % 2, 4000 + seed)
        rng = random.Random(5000 + seed)
        keep = sorted(rng.sample(range(g.n), 10))
        instances.append(induced_subgraph(g, keep)[0])
    assert len(instances) >= 300
    assert all(g.n <= 10 for g in instances)
    return tuple(instances)


@lru_cache(maxsize=1)
def exactness_optima() -> tuple:
    return tuple(len(oracle_solve(g)) for g in exactness_corpus())


@lru_cache(maxsize=1)
def holecut_corpus() -> tuple:
    """>= 100 connected almost-BPG instances with a hole and n <= 12."""
    instances = [cycle(10), cycle(11), cycle(12)]
    seed = 0
    while len(instances) < 105:
        extra_a = seed % 3
        extra_b = (seed // 3) % 2
        m = 10 + (seed % 2 if extra_a + extra_b <= 1 else 0)
        g = gen_thickened_cycle(m, extra_a, extra_b, 7000 + seed)
        seed += 1
        if g.n <= 12:
            instances.append(g)
    for g in instances:
        assert len(connected_components(g)) == 1
        assert find_forbidden_set(g) is None
        assert find_shortest_hole(g) is not None
    return tuple(instances)


def brute_min_deletion_size(g) -> int:
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            if is_bpg(delete(g, combo)):
                return size
    raise AssertionError


def test_criterion_1_oracle_equivalence():
    corpus = exactness_corpus()
    optima = exactness_optima()
    mismatches = []
    for idx, (g, opt) in enumerate(zip(corpus, optima)):
        for k in range(g.n + 1):
            res = solve_fpt(Instance(g, k))
            if res.is_yes != (opt <= k):
                mismatches.append((idx, k, opt, res.is_yes))
                continue
            if not _branch_bound_ok(res, k):
                mismatches.append((idx, k, "branch bound"))
            if res.is_yes:
                sol = res.solution
                if len(sol.deleted) > k or not is_bpg(delete(g, sol.deleted)):
                    mismatches.append((idx, k, "infeasible solution"))
                if k == opt and len(sol.deleted) != opt:
                    mismatches.append((idx, k, opt, len(sol.deleted)))
    _report(
        "criterion-1 oracle equivalence",
        not mismatches,
        f"{len(corpus)} instances, all k in [0, n]; mismatches: {mismatches[:5]}",
    )


def test_criterion_2_min_hole_cut():
    failures = []
    for idx, g in enumerate(holecut_corpus()):
        p = build_local_orders(g, classify_around_hole(g, find_shortest_hole(g)))
        hc = min_hole_cut(g, p)
        if hc.size != brute_min_deletion_size(g):
            failures.append((idx, hc.size))
        if not is_bpg(delete(g, hc.vertices)):
            failures.append((idx, "cut not feasible"))
    large_params = [(12, 8, 8, 81), (14, 15, 15, 82), (16, 22, 22, 83)]
    for m, ea, eb, seed in large_params:
        g = gen_thickened_cycle(m, ea, eb, seed)
        assert g.n <= 60
        p = build_local_orders(g, classify_around_hole(g, find_shortest_hole(g)))
        hc = min_hole_cut(g, p)  # raises DiagnosticFailure unless g - cut is a BPG
        if not is_bpg(delete(g, hc.vertices)):
            failures.append((m, "large cut not feasible"))
    _report(
        "criterion-2 minimum hole cut",
        not failures,
        f"{len(holecut_corpus())} small + {len(large_params)} large instances; failures: {failures[:5]}",
    )


def test_criterion_3_approximation_guarantee():
    corpus = exactness_corpus()
    optima = exactness_optima()
    failures = []
    for idx, (g, opt) in enumerate(zip(corpus, optima)):
        sol = approx9(g)
        if not is_bpg(delete(g, sol.deleted)):
            failures.append((idx, "infeasible"))
        if len(sol.deleted) > 9 * opt:
            failures.append((idx, len(sol.deleted), opt))
    if approx9(cycle(7)).deleted != frozenset(range(7)):
        failures.append("C7 must lose all 7 vertices")
    if approx9(cycle(3)).deleted != frozenset(range(3)):
        failures.append("K3 must lose all 3 vertices")
    _report(
        "criterion-3 factor-9 guarantee",
        not failures,
        f"{len(corpus)} instances plus hand examples; failures: {failures[:5]}",
    )


def test_criterion_4_structural_invariants():
    failures = []
    count = 0
    seed = 0
    while count < 100:
        m = 10 + seed % 7
        extra = seed % 21
        extra_a = extra // 2 + extra % 2
        extra_b = extra // 2
        g = gen_thickened_cycle(m, extra_a, extra_b, 9000 + seed)
        seed += 1
        count += 1
        h = find_shortest_hole(g)
        p = build_local_orders(g, classify_around_hole(g, h))
        rep = verify_structure(g, p)
        if not rep.passed:
            failures.append((m, extra_a, extra_b, rep.failures))
    _report(
        "criterion-4 structural invariant suite",
        not failures,
        f"{count} thickened-cycle instances; failures: {failures[:3]}",
    )


def test_criterion_5_characterization_equivalence():
    mismatches = []
    checked = 0
    for g in all_labeled_graphs(6):
        bips, odd = bipartition_or_odd_cycle(g)
        if odd is not None or len(connected_components(g)) != 1:
            continue
        (b,) = bips
        left, right = sorted(b.left), sorted(b.right)
        r = is_bpg(g)
        s = exists_strong_ordering(g, left, right)
        e = exists_adjacency_enclosure_order(g, left, right)
        checked += 1
        if not (r == s == e):
            mismatches.append((list(g.edges()), r, s, e))
    sampled = 0
    rng = random.Random(12)
    while sampled < 200:
        n = rng.choice([7, 8, 9])
        res = random_connected_bipartite(rng, n, rng.choice([0.3, 0.45, 0.6]))
        if res is None:
            continue
        g, left, right = res
        r = is_bpg(g)
        s = exists_strong_ordering(g, left, right)
        e = exists_adjacency_enclosure_order(g, left, right)
        sampled += 1
        if not (r == s == e):
            mismatches.append((list(g.edges()), r, s, e))
    _report(
        "criterion-5 characterization equivalence",
        not mismatches,
        f"exhaustive n<=6 ({checked} connected bipartite) + {sampled} sampled n in 7..9; "
        f"mismatches: {mismatches[:2]}",
    )


def _planted_no_instance(seed: int) -> Graph:
    """n = 40: path on 34 vertices plus six noise vertices, each forming a
    triangle with a distinct disjoint base edge, so the optimum is exactly 6
    and every budget k <= 5 is a NO."""
    rng = random.Random(seed)
    offsets = sorted(rng.sample(range(17), 6))
    base_edges = [(i, i + 1) for i in range(33)]
    noise_edges = []
    for j, off in enumerate(offsets):
        a = 2 * off
        noise_edges += [(34 + j, a), (34 + j, a + 1)]
    return Graph(40, base_edges + noise_edges)


def test_criterion_6_branching_bound():
    failures = []
    for seed in (1, 2, 3):
        g = _planted_no_instance(seed)
        nodes = []
        for k in range(5):
            res = solve_fpt(Instance(g, k))
            if res.is_yes:
                failures.append((seed, k, "unexpected YES"))
            if not _branch_bound_ok(res, k):
                failures.append((seed, k, "global bound"))
            nodes.append(res.stats.branch_nodes)
        for k in range(4):
            if nodes[k + 1] > 9 * nodes[k] + 1:
                failures.append((seed, k, nodes))
    for seed in (4, 5):
        base = GenSpec("staircase", {"nu": 17, "nw": 17}, seed)
        inst = gen_planted(base, 6, seed=40 + seed)
        assert inst.g.n == 40
        for k in range(5):
            res = solve_fpt(Instance(inst.g, k))
            if not _branch_bound_ok(res, k):
                failures.append(("gen", seed, k))
    _report(
        "criterion-6 branching bound",
        not failures,
        f"growth factor <= 9 per unit of k at n=40; failures: {failures[:5]}",
    )


def test_criterion_7_shortest_hole():
    failures = []
    corpus = list(holecut_corpus()) + [cycle(m) for m in range(5, 13)]
    corpus += [g for g in exactness_corpus()[:100]]
    for idx, g in enumerate(corpus):
        assert g.n <= 12
        h = find_shortest_hole(g)
        expect = brute_shortest_hole_length(g)
        got = h.m if h is not None else None
        if got != expect:
            failures.append((idx, got, expect))
    for m in range(5, 13):
        h = find_shortest_hole(cycle(m))
        if h.m != m:
            failures.append(("bare cycle", m, h.m))
    _report(
        "criterion-7 shortest hole procedure",
        not failures,
        f"{len(corpus)} corpus graphs vs subset-enumeration oracle; failures: {failures[:5]}",
    )


def test_criterion_8_flow_duality_and_determinism(tmp_path):
    failures = []
    networks = 0
    for g in holecut_corpus()[:40]:
        p = build_local_orders(g, classify_around_hole(g, find_shortest_hole(g)))
        for i in range(p.m):
            net = build_network(g, p, i)
            flow, cut = max_flow_min_cut(net)
            networks += 1
            if flow != len(cut):
                failures.append((i, flow, len(cut)))
    f = tmp_path / "g.txt"
    f.write_text(serialize_graph(gen_thickened_cycle(11, 2, 1, 13)))
    cmd = [sys.executable, "-m", "bpvd.cli", "solve", "--k", "2", str(f), "--json"]
    runs = [subprocess.run(cmd, capture_output=True) for _ in range(2)]
    if runs[0].stdout != runs[1].stdout or not runs[0].stdout:
        failures.append("solve output not byte-identical across runs")
    if json.loads(runs[0].stdout)["answer"] != "yes":
        failures.append("expected YES on the determinism instance")
    _report(
        "criterion-8 flow duality and determinism",
        not failures,
        f"{networks} window networks checked, 2 identical CLI runs; failures: {failures[:5]}",
    )
