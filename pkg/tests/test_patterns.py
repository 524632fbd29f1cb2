import itertools
import math

import pytest

from bullfree.errors import UsageError
from bullfree.generators import gen_high_girth, gen_random_trigraph, random_graph
from bullfree.patterns import (
    BULL_EDGES,
    find_bull,
    find_hole,
    find_triangle,
    girth,
    is_bull_witness,
    is_induced_cycle,
    is_triangle_free,
)
from bullfree.trigraph import Trigraph

from helpers import BULL, complete, complete_bipartite, cycle, edgeless, path, petersen

# every labelled copy of the bull on {0..4}, as an edge set
LABELLED_BULLS = {
    frozenset(frozenset((perm[a], perm[b])) for a, b in BULL_EDGES)
    for perm in itertools.permutations(range(5))
}


def realization_has_bull(t, five):
    """Oracle: some way of deciding the 0-pairs inside ``five`` yields a bull."""
    pairs = list(itertools.combinations(range(5), 2))
    fixed, free = [], []
    for a, b in pairs:
        th = t.theta(five[a], five[b])
        if th == 1:
            fixed.append(frozenset((a, b)))
        elif th == 0:
            free.append(frozenset((a, b)))
    for choice in itertools.product((0, 1), repeat=len(free)):
        edges = frozenset(fixed + [e for e, c in zip(free, choice) if c])
        if edges in LABELLED_BULLS:
            return True
    return False


def induced_cycle_exists(g, length):
    for S in itertools.combinations(range(g.n), length):
        sub, _ = g.induced(S)
        degs = [bin(m).count("1") for m in sub.strong_adj]
        if all(d == 2 for d in degs) and len(sub.strong_edges()) == length:
            # 2-regular: connected iff a single cycle
            seen, stack = {0}, [0]
            while stack:
                u = stack.pop()
                for v in sub.neighbors(u):
                    if v not in seen:
                        seen.add(v)
                        stack.append(v)
            if len(seen) == length:
                return True
    return False


def test_bull_fixture():
    w = find_bull(BULL)
    assert w is not None and w.kind == "bull"
    assert sorted(w.vertices) == [0, 1, 2, 3, 4]
    assert is_bull_witness(BULL, w.vertices)


def test_complete_graph_has_no_bull():
    assert find_bull(complete(5)) is None


def test_switchable_pair_plays_edge():
    t = Trigraph.from_pairs(5, [(1, 2), (2, 0), (0, 3), (1, 4)], switchable=[(0, 1)])
    assert find_bull(t) is not None


def test_switchable_pair_plays_nonedge():
    # a bull plus an extra pair y-z that is switchable: still a bull
    t = Trigraph.from_pairs(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)], switchable=[(3, 4)])
    assert find_bull(t) is not None


def test_bull_matches_realization_oracle():
    for seed in range(150):
        t = gen_random_trigraph(7 + seed % 2, (0.4, 0.25, 0.35), monogamous=True, seed=seed)
        oracle = any(
            realization_has_bull(t, five) for five in itertools.combinations(range(t.n), 5)
        )
        w = find_bull(t)
        assert (w is not None) == oracle, seed
        if w is not None:
            assert is_bull_witness(t, w.vertices)
            assert realization_has_bull(t, w.vertices)


def test_holes_on_cycles():
    assert find_hole(cycle(5), 5).vertices == (0, 1, 2, 3, 4)
    assert find_hole(cycle(5), 4) is None
    for ell in (4, 5, 6, 7, 8):
        assert find_hole(cycle(9), ell) is None
    w = find_hole(cycle(9), 9)
    assert w.hole_length == 9 and is_induced_cycle(cycle(9), w.vertices)


def test_hole_argument_checks():
    with pytest.raises(UsageError):
        find_hole(cycle(5), 3)
    with pytest.raises(UsageError):
        find_hole(Trigraph.from_pairs(4, switchable=[(0, 1)]), 4)


def test_holes_match_subset_enumeration():
    for seed in range(60):
        g = random_graph(8, 0.35 + 0.01 * (seed % 20), seed=seed)
        for ell in range(4, 9):
            w = find_hole(g, ell)
            assert (w is not None) == induced_cycle_exists(g, ell), (seed, ell)
            if w is not None:
                assert len(w.vertices) == ell and is_induced_cycle(g, w.vertices)


def test_girth_fixtures():
    assert girth(path(6)) == math.inf
    assert girth(edgeless(3)) == math.inf
    assert girth(cycle(9)) == 9
    assert girth(petersen()) == 5
    assert girth(complete(4)) == 3
    assert girth(complete_bipartite(3, 3)) == 4


def test_girth_matches_shortest_induced_cycle():
    for seed in range(40):
        g = random_graph(8, 0.25, seed=seed)
        lengths = [L for L in range(3, 9) if induced_cycle_exists(g, L)]
        assert girth(g) == (lengths[0] if lengths else math.inf), seed


def test_high_girth_generator():
    for target in (4, 5, 6, 8):
        for seed in range(5):
            g = gen_high_girth(30, target, seed=seed)
            assert girth(g) >= target
    assert is_triangle_free(gen_high_girth(20, 4, seed=1))
    assert gen_high_girth(25, 6, seed=9) == gen_high_girth(25, 6, seed=9)


def test_triangle():
    assert is_triangle_free(complete_bipartite(3, 4))
    assert not is_triangle_free(complete(3))
    assert find_triangle(Trigraph.from_pairs(3, switchable=[(0, 1), (1, 2), (0, 2)])) is not None
