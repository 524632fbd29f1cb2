"""From a sparse 3-CNF formula to an independent set instance with no short holes.

Run: python3 demos/04_sat_reduction.py
"""

from bullfree.kernel import alpha_exact
from bullfree.reduction import (
    CnfFormula,
    brute_force_sat,
    extract_assignment,
    lift_assignment,
    reduce,
    verify_instance,
)

phi = CnfFormula(3, ((1, 2, 3), (-1, -2, 3), (1, -3, 2)))
art = reduce(phi, p=3)
print(f"q={art.q}, vertices={art.graph.n}, target size={art.target_k}")
print("no bull and no C4/C5:", verify_instance(art).ok)

sat = brute_force_sat(phi)
best = alpha_exact(art.graph, max_n=art.graph.n)
print("satisfiable:", sat is not None, "| alpha:", best.total_weight)

# Both directions: an assignment gives a big independent set, and a big
# independent set gives back an assignment.
print("lifted set size:", len(lift_assignment(art, sat)))
print("extracted assignment:", extract_assignment(art, best.vertices))

contradiction = CnfFormula(1, ((1, 1, 1), (-1, -1, -1)))
art = reduce(contradiction, p=3)
print("x and not-x: target", art.target_k, "alpha", alpha_exact(art.graph).total_weight)
