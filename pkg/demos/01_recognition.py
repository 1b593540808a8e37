"""Recognizing bipartite permutation graphs and their obstructions.

A graph is a bipartite permutation graph (BPG) exactly when it avoids nine
small induced patterns -- K3, T2, X2, X3, C5..C9 -- and has no hole (induced
cycle on five or more vertices).  Keeping the nine patterns forbidden but
allowing long holes gives the "almost" class that the exact solver reduces
to.  This script walks through the three-way classification.
"""
from bpvd import (
    PATTERN_GRAPHS,
    Graph,
    bpg_witness,
    find_forbidden_set,
    find_shortest_hole,
    is_almost_bpg,
    is_bpg,
)


def cycle(m):
    return Graph(m, [(i, (i + 1) % m) for i in range(m)])


def show(name, g):
    fs = find_forbidden_set(g)
    hole = find_shortest_hole(g)
    if fs is not None:
        verdict = f"neither (contains {fs.kind.value} on {sorted(fs.vertices)})"
    elif hole is not None:
        verdict = f"almost-BPG (shortest hole has {hole.m} vertices)"
    else:
        verdict = "BPG"
    print(f"{name:<24} n={g.n:<3} m={g.edge_count:<3} -> {verdict}")


print("The nine forbidden patterns, each recognized in itself:")
for kind, pat in PATTERN_GRAPHS.items():
    w = find_forbidden_set(pat)
    print(f"  {kind.value}: {pat.n} vertices, {pat.edge_count} edges, detected as {w.kind.value}")

print()
print("Three-way classification on small graphs:")
show("path P5", Graph(5, [(i, i + 1) for i in range(4)]))
show("cycle C4", cycle(4))
show("cycle C7", cycle(7))
show("cycle C10", cycle(10))
show("C10 plus a chord", Graph(10, [(i, (i + 1) % 10) for i in range(10)] + [(0, 3)]))

print()
print("C10 is the interesting case: too long to be forbidden as a small")
print("pattern, but still a hole, so it separates the two classes:")
c10 = cycle(10)
print(f"  is_almost_bpg(C10) = {is_almost_bpg(c10)}")
print(f"  is_bpg(C10)        = {is_bpg(c10)}")
print(f"  witness            = {bpg_witness(c10).to_json(c10)}")
