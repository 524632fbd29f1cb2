"""Trigraphs, switchable pairs and the patterns we look for.

Run: python3 demos/01_trigraphs_and_patterns.py
"""

from bullfree.patterns import find_bull, find_hole, girth
from bullfree.trigraph import Trigraph, format_trigraph, parse_trigraph

# A bull: triangle 0-1-2 with pendant 3 on vertex 0 and pendant 4 on vertex 1.
bull = Trigraph.from_pairs(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])
print("bull witness (x1, x2, x3, y, z):", find_bull(bull).vertices)

# Turn the 0-1 edge into a switchable pair. It still counts as adjacent,
# so the bull survives.
soft = Trigraph.from_pairs(5, [(1, 2), (2, 0), (0, 3), (1, 4)], switchable=[(0, 1)])
print("with 0-1 switchable:", find_bull(soft))

# The plain-text format round-trips exactly.
text = format_trigraph(soft, comment="a bull with one switchable pair")
print(text)
assert parse_trigraph(text) == soft

# Holes and girth are graph notions.
c9 = Trigraph.from_pairs(9, [(i, (i + 1) % 9) for i in range(9)])
print("C9 girth:", girth(c9))
print("C9 holes of length 4..8:", [find_hole(c9, ell) for ell in range(4, 9)])
print("C9 hole of length 9:", find_hole(c9, 9).vertices)
