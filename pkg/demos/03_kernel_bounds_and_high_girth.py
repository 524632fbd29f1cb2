"""Kernel sizes and the independent-set greedy for graphs of large girth.

Run: python3 demos/03_kernel_bounds_and_high_girth.py
"""

from bullfree.generators import gen_high_girth
from bullfree.kernel import greedy_high_girth_is, high_girth_threshold, kernel_bounds
from bullfree.patterns import girth

print(" k   g     f   fOld")
for k in range(2, 9):
    b = kernel_bounds(k)
    print(f"{k:2d} {b.g:3d} {b.f:5d} {b.f_old:6d}")

# When the girth is at least 2p, n >= gp(k, p) vertices force an
# independent set of size k, and the greedy finds one.
for p, k in ((2, 4), (3, 4), (4, 6)):
    n = high_girth_threshold(k, p)
    g = gen_high_girth(n, 2 * p, seed=1)
    res = greedy_high_girth_is(g, k, p)
    how = "BFS layer" if res.used_bfs_layer else "peeling"
    print(f"p={p} k={k}: n={n}, girth={girth(g)}, found {len(res.vertices)} via {how}")
