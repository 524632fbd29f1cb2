"""Deciding whether a bull-free trigraph has an independent set of weight k.

Run: python3 demos/05_solving_weighted_instances.py
"""

import numpy as np

from bullfree.generators import gen_high_girth
from bullfree.kernel import NotBullFreeError, alpha_exact, solve_wis
from bullfree.trigraph import Trigraph

rng = np.random.default_rng(7)

# Complements of triangle-free graphs are bull-free.
t = gen_high_girth(12, 4, seed=rng).complement().with_weights(rng.integers(1, 6, size=12))
exact = alpha_exact(t).total_weight
for k in (exact, exact + 1):
    d = solve_wis(t, k)
    print(f"k={k}: {d.to_dict()['answer']}, certificate {sorted(d.certificate.vertices)}")

bull = Trigraph.from_pairs(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])
try:
    solve_wis(bull, 2)
except NotBullFreeError as exc:
    print("refused:", exc)
