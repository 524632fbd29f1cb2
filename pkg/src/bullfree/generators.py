"""Reproducible random instance generators (test-instance supply)."""

from __future__ import annotations

from collections import deque

import numpy as np

from .bitset import bits
from .errors import UsageError
from .trigraph import STRONG_ANTIEDGE, STRONG_EDGE, SWITCHABLE, Trigraph


def _rng(seed):
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def gen_random_trigraph(
    n: int,
    densities=(0.4, 0.1, 0.5),
    monogamous: bool = True,
    seed=None,
    max_weight: int = 1,
) -> Trigraph:
    """Random trigraph with pair values drawn from ``densities = (p(+1), p(0), p(-1))``.

    With ``monogamous`` set, a pair can only become switchable when neither
    endpoint already lies in a switchable pair, so the switchable pairs form a
    random partial matching.  Weights are uniform in ``1..max_weight``.
    """
    p_plus, p_zero, p_minus = densities
    if min(densities) < 0 or abs(p_plus + p_zero + p_minus - 1.0) > 1e-9:
        raise UsageError("densities must be non-negative and sum to 1")
    rng = _rng(seed)
    m = np.full((n, n), STRONG_ANTIEDGE, dtype=np.int8)
    matched = np.zeros(n, dtype=bool)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    order = rng.permutation(len(pairs)) if pairs else []
    zero_draw = rng.random(len(pairs))
    plus_draw = rng.random(len(pairs))
    p_strong_plus = p_plus / (p_plus + p_minus) if p_plus + p_minus > 0 else 0.0
    for idx, rz, rp in zip(order, zero_draw, plus_draw):
        u, v = pairs[idx]
        if rz < p_zero and not (monogamous and (matched[u] or matched[v])):
            value = SWITCHABLE
            matched[u] = matched[v] = True
        else:
            value = STRONG_EDGE if rp < p_strong_plus else STRONG_ANTIEDGE
        m[u, v] = m[v, u] = value
    weights = rng.integers(1, max_weight + 1, size=n)
    return Trigraph(m, weights)


def _distance_at_least(adj: list[set], u: int, v: int, bound: int) -> bool:
    """True when dist(u, v) >= bound (BFS truncated at depth bound - 1)."""
    if u == v:
        return False
    seen = {u}
    frontier = deque([(u, 0)])
    while frontier:
        x, dx = frontier.popleft()
        if dx + 1 >= bound:
            continue
        for y in adj[x]:
            if y == v:
                return False
            if y not in seen:
                seen.add(y)
                frontier.append((y, dx + 1))
    return True


def gen_high_girth(n: int, target_girth: int, seed=None, max_edges: int | None = None) -> Trigraph:
    """Random graph of girth at least ``target_girth``.

    Every vertex pair is proposed once, in uniformly random order; a proposed
    edge is kept only if its endpoints are currently at distance at least
    ``target_girth - 1``, so no cycle shorter than ``target_girth`` appears.
    """
    if target_girth < 4:
        raise UsageError("target girth must be at least 4")
    rng = _rng(seed)
    adj = [set() for _ in range(n)]
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = []
    for idx in rng.permutation(len(pairs)) if pairs else []:
        if max_edges is not None and len(edges) >= max_edges:
            break
        u, v = pairs[idx]
        if _distance_at_least(adj, u, v, target_girth - 1):
            adj[u].add(v)
            adj[v].add(u)
            edges.append((u, v))
    return Trigraph.from_pairs(n, edges)


def gen_planted_pair(n: int, seed=None, proper: bool = True) -> Trigraph:
    """Random monogamous trigraph built around a planted homogeneous pair.

    The sides are drawn first; the rest of the vertices are split into
    C, D, E, F (with C and D non-empty when ``proper``), and internal pairs of
    A∪B and of the outside are random.  Random internals can of course create
    other pairs or homogeneous sets as well.
    """
    rng = _rng(seed)
    if n < 6:
        raise UsageError("a homogeneous pair needs at least 6 vertices")
    base = gen_random_trigraph(n, (0.45, 0.1, 0.45), monogamous=True, seed=rng)
    m = base.matrix.copy()
    side = int(rng.integers(3, n - 2))
    perm = rng.permutation(n).tolist()
    AB, rest = perm[:side], perm[side:]
    cut = int(rng.integers(1, side))
    A, B = AB[:cut], AB[cut:]
    labels = rng.integers(0, 4, size=len(rest)).tolist()
    if proper:
        labels[0], labels[1] = 0, 1
    for v, lab in zip(rest, labels):
        to_a = STRONG_EDGE if lab in (0, 2) else STRONG_ANTIEDGE
        to_b = STRONG_EDGE if lab in (1, 2) else STRONG_ANTIEDGE
        for a in A:
            m[v, a] = m[a, v] = to_a
        for b in B:
            m[v, b] = m[b, v] = to_b
    return Trigraph(m, base.weights)


def random_cnf(num_vars: int, num_clauses: int, seed=None):
    """Uniform random 3-CNF: each literal picks a variable and a sign uniformly."""
    from .reduction import CnfFormula

    rng = _rng(seed)
    clauses = []
    for _ in range(num_clauses):
        vs = rng.integers(1, num_vars + 1, size=3)
        signs = rng.choice((-1, 1), size=3)
        clauses.append(tuple(int(v * s) for v, s in zip(vs, signs)))
    return CnfFormula(num_vars, tuple(clauses))


def random_graph(n: int, p: float, seed=None) -> Trigraph:
    return gen_random_trigraph(n, (p, 0.0, 1.0 - p), monogamous=False, seed=seed)


def neighbors_of(g: Trigraph) -> list[list[int]]:
    return [list(bits(g.strong_adj[v])) for v in range(g.n)]
