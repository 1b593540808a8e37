"""The factor-9 approximation, measured against the exact optimum.

Phase one deletes whole forbidden patterns while any remain: the optimum
must hit every one of them, and each costs at most nine vertices, so phase
one spends at most 9x what the optimum spends.  Phase two adds a minimum
hole cut per component, which never exceeds the optimum's remaining work.
The hand examples are tight in the small: C7 and K3 lose every vertex.
"""
import random

from bpvd import Graph, approx9, oracle_solve

rng = random.Random(7)


def cycle(m):
    return Graph(m, [(i, (i + 1) % m) for i in range(m)])


print("hand examples:")
for name, g in (("C7", cycle(7)), ("K3", cycle(3)), ("C10", cycle(10))):
    sol = approx9(g)
    opt = len(oracle_solve(g))
    print(f"  {name}: |Z|={len(sol.deleted)}  OPT={opt}  ratio={len(sol.deleted) / max(opt, 1):.1f}")

print()
print("random graphs (n <= 9), worst observed ratio:")
worst = 0.0
for _ in range(150):
    n = rng.randint(4, 9)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.35]
    g = Graph(n, edges)
    opt = len(oracle_solve(g))
    size = len(approx9(g).deleted)
    assert size <= 9 * opt or opt == 0
    if opt:
        worst = max(worst, size / opt)
print(f"  worst ratio over 150 draws: {worst:.2f} (guarantee: 9.00)")
