"""Independent set machinery for bull-free graphs and trigraphs."""

from .errors import CapacityError, InvariantError, ParseError, UsageError
from .homogeneous import (
    DecompositionOutcome,
    HomogeneousPair,
    HomogeneousSet,
    NoProperPair,
    brute_force_homogeneous_sets,
    brute_force_pairs,
    find_decomposition,
    find_minimally_sided_homogeneous_set,
    find_minimally_sided_proper_pair,
    find_small_homogeneous_pair,
    find_small_pair_ij,
    grow_proper_pair,
    minimal_homogeneous_set_containing,
)
from .kernel import (
    IndependentSetResult,
    KernelBounds,
    T1Structure,
    alpha_exact,
    enumerate_maximal_independent_sets,
    greedy_high_girth_is,
    kernel_bounds,
    solve_wis,
    verify_t1,
)
from .patterns import PatternWitness, find_bull, find_hole, girth, is_triangle_free
from .reduction import (
    CnfFormula,
    ReductionArtifact,
    build_conflict_graph,
    compute_q,
    extract_assignment,
    parse_cnf,
    reduce,
    repair_independent_set,
    subdivide,
    verify_instance,
)
from .trigraph import Status, Trigraph, parse_trigraph, read_trigraph, write_trigraph

__version__ = "0.1.0"
