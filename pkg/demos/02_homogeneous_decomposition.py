"""Small homogeneous pairs, proper pairs and homogeneous sets.

Run: python3 demos/02_homogeneous_decomposition.py
"""

from bullfree.homogeneous import (
    brute_force_pairs,
    find_decomposition,
    find_small_homogeneous_pair,
    grow_proper_pair,
)
from bullfree.trigraph import Trigraph

# Six vertices: a1=0, a2=1, b1=2, c=3, d=4, f=5.
# c sees both a's, d sees b1, f sees nobody, and a1 (not a2) sees b1.
t = Trigraph.from_pairs(6, [(0, 3), (1, 3), (2, 4), (0, 2)])

pair = find_small_homogeneous_pair(t)
print("small pair:", pair.to_dict())

# Growing from the quadruple (a1, a2, c, d) lands on the same pair.
print("grown from (0, 1, 3, 4):", grow_proper_pair(t, 0, 1, 3, 4))

# Drop f and there are too few outside vertices left for a pair.
t5, _ = t.induced(range(5))
print("without f:", grow_proper_pair(t5, 0, 1, 3, 4))

print("all homogeneous pairs by brute force:", len(brute_force_pairs(t)))

# The decomposition driver prefers small pairs, then the smaller of a
# homogeneous set and a proper pair, and otherwise says there is none.
p4 = Trigraph.from_pairs(4, [(0, 1), (1, 2), (2, 3)])
for name, g in (("six-vertex instance", t), ("P4", p4)):
    print(f"{name}:", find_decomposition(g).to_dict())
