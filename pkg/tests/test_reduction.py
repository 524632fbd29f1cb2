import itertools

import numpy as np
import pytest

from bullfree.errors import CapacityError, InvariantError, ParseError, UsageError
from bullfree.generators import random_cnf
from bullfree.kernel import alpha_exact, is_independent
from bullfree.patterns import girth
from bullfree.reduction import (
    CnfFormula,
    ReductionArtifact,
    _subdivide,
    artifact_from_sidecar,
    brute_force_sat,
    build_conflict_graph,
    compute_q,
    conflicts,
    extract_assignment,
    lift_assignment,
    parse_cnf,
    reduce,
    repair_independent_set,
    repair_steps,
    subdivide,
    verify_instance,
)

from helpers import brute_alpha, complete

SINGLE = CnfFormula(3, ((1, 2, 3),))
CONTRADICTION = CnfFormula(1, ((1, 1, 1), (-1, -1, -1)))


def plant_conflicted_set(art, rng):
    """Random independent set of G' that keeps some adjacent originals together."""
    g = art.graph
    chosen = {v for v in range(art.subdivision.num_original) if rng.random() < 0.6}
    internal = list(range(art.subdivision.num_original, g.n))
    rng.shuffle(internal)
    taken = 0
    for v in chosen:
        taken |= 1 << v
    for v in internal:
        if not g.strong_adj[v] & taken:
            taken |= 1 << v
            chosen.add(v)
    return chosen


def test_parse_cnf():
    phi = parse_cnf("c demo\np cnf 3 1\n1 2 3 0\n")
    assert phi == SINGLE and phi.sparsity == 1
    phi = parse_cnf("p cnf 1 1\n1 1 1 0\n")
    assert phi.occurrences[1] == 3 and phi.sparsity == 3


@pytest.mark.parametrize(
    "text",
    [
        "p cnf 3 1\n1 2 0\n",
        "p cnf 3 1\n1 2 3 4 0\n",
        "p cnf 2 1\n1 2 3 0\n",
        "p cnf 3 2\n1 2 3 0\n",
        "1 2 3 0\n",
        "p cnf 3 1\n1 x 3 0\n",
    ],
)
def test_parse_cnf_errors(text):
    with pytest.raises(ParseError):
        parse_cnf(text)


def test_dimacs_round_trip():
    for seed in range(20):
        phi = random_cnf(5, 4, seed=seed)
        assert parse_cnf(phi.to_dimacs()) == phi


def test_conflict_graph_fixtures():
    g, labels = build_conflict_graph(SINGLE)
    assert g == complete(3)
    assert labels == [(0, 1), (0, 2), (0, 3)]
    g, _ = build_conflict_graph(CONTRADICTION)
    assert len(g.strong_edges()) == 15


def test_conflict_graph_equivalence():
    rng = np.random.default_rng(11)
    for _ in range(60):
        phi = random_cnf(int(rng.integers(1, 7)), int(rng.integers(1, 4)), seed=rng)
        g, _ = build_conflict_graph(phi)
        sat = brute_force_sat(phi) is not None
        assert sat == (brute_alpha(g) >= phi.num_clauses)


def test_compute_q():
    assert [compute_q(p) for p in (3, 4, 5, 6, 7, 8)] == [2, 2, 4, 4, 4, 6]
    with pytest.raises(UsageError):
        compute_q(2)


def test_subdivide():
    sub = subdivide(complete(3), 2)
    assert sub.graph.n == 9 and girth(sub.graph) == 9
    single = subdivide(complete(2), 2)
    assert single.graph.strong_edges() == [(0, 2), (1, 3), (2, 3)]
    assert single.path(0, 1) == (0, 2, 3, 1) and single.path(1, 0) == (1, 3, 2, 0)
    g = random_cnf(4, 3, seed=2)
    cg, _ = build_conflict_graph(g)
    assert subdivide(cg, 4).graph.n == cg.n + 4 * len(cg.strong_edges())
    with pytest.raises(UsageError):
        subdivide(complete(3), 3)


def test_single_clause_reduction():
    art = reduce(SINGLE, 3)
    assert art.graph.n == 9 and girth(art.graph) == 9
    assert art.q == 2 and art.target_k == 4
    assert alpha_exact(art.graph).total_weight == 4
    rep = verify_instance(art)
    assert rep.ok and set(rep.holes) == {4, 5}


def test_contradiction_reduction():
    art = reduce(CONTRADICTION, 3)
    assert art.graph.n == 36 and art.target_k == 17
    assert brute_force_sat(CONTRADICTION) is None
    assert alpha_exact(art.graph).total_weight < 17


def test_size_invariant():
    for seed in range(10):
        phi = random_cnf(4, 3, seed=seed)
        for p in (3, 5):
            art = reduce(phi, p)
            e = len(art.original_edges)
            assert art.graph.n == 3 * art.m + e * art.q
            assert art.target_k == e * art.q // 2 + art.m


def test_corrupted_artifact_fails_verification():
    sub = _subdivide(complete(3), 1)
    art = ReductionArtifact(SINGLE, complete(3), [(0, 1), (0, 2), (0, 3)], sub, 4, 1, 4)
    rep = verify_instance(art)
    assert not rep.ok and rep.holes[6] is not None


def test_verification_capacity():
    with pytest.raises(CapacityError):
        verify_instance(reduce(SINGLE, 6))


def test_sidecar_round_trip():
    art = reduce(random_cnf(4, 3, seed=5), 3)
    back = artifact_from_sidecar(art.graph, art.sidecar())
    assert back.subdivision.paths == art.subdivision.paths
    assert back.labels == art.labels and back.target_k == art.target_k


def test_repair_keeps_clean_set():
    art = reduce(SINGLE, 3)
    S = {0, 4, 6, 8}  # original 0 and alternate internals of the other paths
    assert is_independent(art.graph, S)
    assert repair_independent_set(art, S) == S


def test_repair_shift_on_single_edge():
    phi = CnfFormula(1, ((1, 1, 1), (-1, -1, -1)))
    art = reduce(phi, 3)
    # vertices 0 and 3 are joined in the conflict graph; take them both
    path = art.subdivision.path(0, 3)
    S = {0, 3}
    steps = list(repair_steps(art, S))
    assert steps[0][1] == 1 and steps[-1][1] == 0
    assert steps[-1][0] == {path[1], 3}


def test_repair_rejects_dependent_input():
    art = reduce(SINGLE, 3)
    with pytest.raises(UsageError):
        repair_independent_set(art, {0, 3})


def test_repair_on_planted_conflicts():
    rng = np.random.default_rng(5)
    runs = 0
    while runs < 60:
        phi = random_cnf(int(rng.integers(2, 5)), int(rng.integers(1, 4)), seed=rng)
        art = reduce(phi, int(rng.choice([3, 5, 7])))
        S = plant_conflicted_set(art, rng)
        if not conflicts(art, S):
            continue
        runs += 1
        prev = None
        for T, eta in repair_steps(art, S):
            assert len(T) == len(S) and is_independent(art.graph, T)
            assert prev is None or eta < prev
            prev = eta
        assert prev == 0


def test_extract_single_clause():
    art = reduce(SINGLE, 3)
    g = art.graph
    hits = 0
    for S in itertools.combinations(range(9), 4):
        if is_independent(g, S) and sum(1 for v in S if v < 3) == 1:
            hits += 1
            a = extract_assignment(art, S)
            assert SINGLE.satisfied_by(a)
    assert hits > 0
    with pytest.raises(UsageError):
        extract_assignment(art, {0})


def test_extract_from_exact_certificate():
    for seed in range(40):
        phi = random_cnf(4, 3, seed=seed)
        if brute_force_sat(phi) is None:
            continue
        art = reduce(phi, 3)
        cert = alpha_exact(art.graph, max_n=200).vertices
        assert phi.satisfied_by(extract_assignment(art, cert))


def test_lift_assignment():
    for seed in range(30):
        phi = random_cnf(4, 4, seed=seed)
        a = brute_force_sat(phi)
        if a is None:
            continue
        art = reduce(phi, 5)
        S = lift_assignment(art, a)
        assert len(S) == art.target_k and is_independent(art.graph, S)


def test_lift_rejects_unsatisfying():
    art = reduce(SINGLE, 3)
    with pytest.raises(UsageError):
        lift_assignment(art, {1: False, 2: False, 3: False})


def test_repair_reports_missing_free_slot():
    # an odd-length path (q = 1) between two selected ends has no two free slots
    sub = _subdivide(complete(2), 1)
    art = ReductionArtifact(CnfFormula(1, ((1, 1, 1),)), complete(2), [(0, 1), (0, 1)], sub, 3, 1, 2)
    with pytest.raises(InvariantError):
        repair_independent_set(art, {0, 1})


def test_conflict_graph_degree_bound():
    for seed in range(80):
        phi = random_cnf(3 + seed % 3, 1 + seed % 5, seed=seed)
        g, _ = build_conflict_graph(phi)
        assert max(len(g.neighbors(v)) for v in range(g.n)) <= phi.sparsity + 2
        assert len(g.strong_edges()) <= 3 * phi.num_clauses * (phi.sparsity + 2) / 2
