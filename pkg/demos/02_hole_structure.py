"""The window structure of an almost bipartite permutation graph.

Once the nine small patterns are gone, every connected component with a hole
organizes itself around its shortest hole c_0..c_{m-1}: each vertex either
sees exactly {c_{i-1}, c_{i+1}} (class A_i) or exactly {c_i} (class B_i).
Classes carry strict orders, alternating unions of consecutive classes form
windows, and every window spanning m-2 indices induces a plain bipartite
permutation graph.  Even m wraps the structure around a cylinder, odd m
around a Moebius strip.
"""
from bpvd import (
    build_local_orders,
    classify_around_hole,
    find_shortest_hole,
    gen_thickened_cycle,
    verify_structure,
    window,
)

for m, extra_a, extra_b, seed in ((10, 3, 2, 7), (11, 2, 2, 21)):
    g = gen_thickened_cycle(m, extra_a, extra_b, seed)
    hole = find_shortest_hole(g)
    p = build_local_orders(g, classify_around_hole(g, hole))
    print(f"thickened cycle: m={m}, {extra_a}+{extra_b} extras, n={g.n}")
    print(f"  shortest hole: {hole.cycle}")
    print(f"  embedding parity: {p.parity}")
    for i in range(p.m):
        a, b = p.class_a[i], p.class_b[i]
        if len(a) > 1 or b:
            print(f"  index {i}: A={list(a)} B={list(b)}")
    w = window(p, 0, p.m - 3)
    print(f"  window [0, {p.m - 3}]: A-side order {w.order_a}")
    print(f"                   B-side order {w.order_b}")
    rep = verify_structure(g, p)
    print(f"  invariant suite: {'all pass' if rep.passed else rep.failures}")
    print()

print("The verification report covers: hole domination, class independence")
print("and window containment of neighborhoods, pairwise nesting of")
print("restricted neighborhoods, incomparability = equal neighborhoods,")
print("window orders satisfying adjacency+enclosure, and monotonicity of")
print("every sampled hole in the window comparability.")
