"""Exact independent sets, the high-girth greedy, kernel bounds and T1 checks.

An independent set of a trigraph is a set of pairwise antiadjacent vertices,
so only strong edges (value +1) forbid two vertices from being chosen
together; every solver here works on the strong-edge bitmasks.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from math import comb

from .bitset import bits, lowest, mask_of, popcount, to_set
from .errors import CapacityError, InvariantError, UsageError
from .homogeneous import find_minimally_sided_homogeneous_set
from .patterns import find_bull, girth, is_triangle_free
from .trigraph import Trigraph

DEFAULT_MAX_N = {"bnb": 64, "enumerate": 20}


def capacity_limit(method: str, max_n: int | None = None) -> int:
    if max_n is not None:
        return max_n
    env = os.environ.get("BULLFREE_MAX_N")
    if env:
        return int(env)
    return DEFAULT_MAX_N[method]


@dataclass(frozen=True)
class IndependentSetResult:
    vertices: frozenset
    total_weight: int

    def to_dict(self) -> dict:
        return {"vertices": sorted(self.vertices), "weight": self.total_weight}


def is_independent(t: Trigraph, vertices) -> bool:
    vs = list(vertices)
    return all(t.theta(u, v) != 1 for i, u in enumerate(vs) for v in vs[i + 1 :])


def _result(t: Trigraph, mask: int) -> IndependentSetResult:
    vs = to_set(mask)
    return IndependentSetResult(vs, int(sum(int(t.weights[v]) for v in vs)))


# -- exact maximum weight independent set --------------------------------


class _BranchAndBound:
    """Maximum weight independent set on strong-edge bitmasks.

    ``solve(cand, lb)`` returns ``(value, mask)`` for the optimum over ``cand``
    when that optimum exceeds ``lb``, and None otherwise.  Each call applies
    the standard safe reductions (isolated vertex, pendant vertex at least as
    heavy as its neighbour, neighbourhood domination), splits connected
    components, and branches on a maximum-degree vertex.
    """

    def __init__(self, adj, weights):
        self.adj = adj
        self.w = weights
        self.memo = {}

    def wsum(self, mask):
        return sum(self.w[v] for v in bits(mask))

    def component(self, cand):
        comp = frontier = cand & -cand
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & cand & ~comp
            comp |= frontier
        return comp

    def reduce(self, cand):
        adj, w = self.adj, self.w
        taken = 0
        changed = True
        while changed and cand:
            changed = False
            for v in bits(cand):
                if not cand >> v & 1:
                    continue
                nb = adj[v] & cand
                if nb == 0:
                    taken |= 1 << v
                    cand &= ~(1 << v)
                    changed = True
                elif nb & (nb - 1) == 0 and w[v] >= w[lowest(nb)]:
                    taken |= 1 << v
                    cand &= ~((1 << v) | nb)
                    changed = True
                else:
                    closed_v = nb | (1 << v)
                    for u in bits(nb):
                        if w[v] >= w[u] and closed_v & ~(adj[u] | (1 << u)) == 0:
                            cand &= ~(1 << u)
                            changed = True
        return cand, taken

    def solve(self, cand, lb=-1):
        if cand == 0:
            return (0, 0) if lb < 0 else None
        hit = self.memo.get(cand)
        if hit is not None:
            return hit if hit[0] > lb else None
        entry = cand
        cand, taken = self.reduce(cand)
        tw = self.wsum(taken)
        res = self._solve_reduced(cand, lb - tw)
        if res is None:
            return None
        out = (res[0] + tw, res[1] | taken)
        self.memo[entry] = out
        return out

    def _solve_reduced(self, cand, lb):
        if cand == 0:
            return (0, 0) if lb < 0 else None
        if self.wsum(cand) <= lb:
            return None
        comp = self.component(cand)
        if comp != cand:
            first = self.solve(comp)
            rest = self.solve(cand & ~comp, lb - first[0])
            if rest is None:
                return None
            return (first[0] + rest[0], first[1] | rest[1])
        adj = self.adj
        v = max(bits(cand), key=lambda x: (popcount(adj[x] & cand), -x))
        best = None
        inc = self.solve(cand & ~(adj[v] | (1 << v)), lb - self.w[v])
        if inc is not None:
            best = (inc[0] + self.w[v], inc[1] | (1 << v))
            lb = best[0]
        exc = self.solve(cand & ~(1 << v), lb)
        if exc is not None:
            best = exc
        return best


def _enumerate_best(adj, w, n):
    """Plain enumeration of all independent sets; ties go to the
    lexicographically smallest sorted vertex tuple."""
    best = [(-1, ())]

    def rec(v, chosen, forbidden, weight):
        if v == n:
            bw, bset = best[0]
            if weight > bw or (weight == bw and tuple(chosen) < bset):
                best[0] = (weight, tuple(chosen))
            return
        if not forbidden >> v & 1:
            chosen.append(v)
            rec(v + 1, chosen, forbidden | adj[v], weight + w[v])
            chosen.pop()
        rec(v + 1, chosen, forbidden, weight)

    rec(0, [], 0, 0)
    return best[0]


def alpha_exact(t: Trigraph, method: str = "bnb", max_n: int | None = None) -> IndependentSetResult:
    """A maximum-weight independent set of ``t``.

    ``method="bnb"`` is the branch-and-bound solver; ``method="enumerate"``
    walks every independent set and is kept as an independent cross-check.
    """
    if method not in DEFAULT_MAX_N:
        raise UsageError(f"unknown method {method!r}")
    limit = capacity_limit(method, max_n)
    if t.n > limit:
        raise CapacityError(f"{method} solver limited to n <= {limit}, got n = {t.n}")
    w = [int(x) for x in t.weights]
    if method == "enumerate":
        _, vs = _enumerate_best(t.strong_adj, w, t.n)
        return _result(t, mask_of(vs))
    _, mask = _BranchAndBound(t.strong_adj, w).solve(t.all_mask)
    return _result(t, mask)


# -- maximal independent sets --------------------------------------------


def enumerate_maximal_independent_sets(t: Trigraph, cap: int) -> tuple[list[frozenset], bool]:
    """All inclusion-maximal independent sets, up to ``cap`` of them.

    Bron-Kerbosch with pivoting on the compatibility relation (pairs that are
    antiadjacent).  Returns ``(sets, overflow)``; ``overflow`` is True when a
    ``cap + 1``-th set exists, in which case only the first ``cap`` are kept.
    """
    full = t.all_mask
    compat = [full & ~t.strong_adj[v] & ~(1 << v) for v in range(t.n)]
    found: list[frozenset] = []

    class _Stop(Exception):
        pass

    def bk(R, P, X):
        if not P and not X:
            found.append(to_set(R))
            if len(found) > cap:
                raise _Stop
            return
        pivot = max(bits(P | X), key=lambda u: popcount(P & compat[u]))
        for v in bits(P & ~compat[pivot]):
            bk(R | (1 << v), P & compat[v], X & compat[v])
            P &= ~(1 << v)
            X |= 1 << v

    try:
        bk(0, full, 0)
    except _Stop:
        return found[:cap], True
    return found, False


# -- high-girth greedy ---------------------------------------------------


def _iroot(x: int, r: int) -> int:
    """Largest integer y with y**r <= x."""
    if x < 2:
        return x
    y = int(round(x ** (1.0 / r)))
    while y**r > x:
        y -= 1
    while (y + 1) ** r <= x:
        y += 1
    return y


def high_girth_threshold(k: int, p: int) -> int:
    """ceil(k * (k**(1/(p-1)) + 2)), computed exactly."""
    if k < 1 or p < 2:
        raise UsageError("need k >= 1 and p >= 2")
    # k * k**(1/(p-1)) = (k**p)**(1/(p-1)); take its integer ceiling
    target = k**p
    root = _iroot(target, p - 1)
    if root ** (p - 1) < target:
        root += 1
    return root + 2 * k


def low_degree(d: int, k: int, p: int) -> bool:
    """d < k**(1/(p-1)) + 1, decided in integers."""
    return d == 0 or (d - 1) ** (p - 1) < k


@dataclass(frozen=True)
class HighGirthResult(IndependentSetResult):
    below_threshold: bool = False
    used_bfs_layer: bool = False
    peeled: tuple = ()
    layers: tuple = field(default=(), repr=False)


def greedy_high_girth_is(g: Trigraph, k: int, p: int, check_girth: bool = True) -> HighGirthResult:
    """Independent set of size at least k in a graph of girth >= 2p.

    Peels a minimum-degree vertex of degree below k**(1/(p-1)) + 1 (lowest id
    on ties) into S and deletes its closed neighbourhood, until |S| = k or no
    such vertex is left.  In the latter case the surviving graph has large
    minimum degree, and a BFS from its lowest vertex yields an independent
    layer N_{p-1} of size at least k; S together with that layer is returned.
    """
    if k < 2 or p < 2:
        raise UsageError("need k >= 2 and p >= 2")
    if not g.is_graph():
        raise UsageError("the high-girth greedy expects a graph")
    if check_girth and girth(g) < 2 * p:
        raise UsageError(f"girth must be at least {2 * p}")
    adj = g.strong_adj
    alive = g.all_mask
    S = 0
    peeled = []
    while popcount(S) < k and alive:
        best = None
        for v in bits(alive):
            d = popcount(adj[v] & alive)
            if low_degree(d, k, p) and (best is None or d < best[0]):
                best = (d, v)
        if best is None:
            break
        d, v = best
        if d and not (d - 1) ** (p - 1) < k:
            raise InvariantError("peeled vertex violates the degree threshold")
        peeled.append(v)
        S |= 1 << v
        alive &= ~(adj[v] | (1 << v))

    if popcount(S) >= k:
        return HighGirthResult(to_set(S), popcount(S), peeled=tuple(peeled))
    if not alive:
        return HighGirthResult(to_set(S), popcount(S), below_threshold=True, peeled=tuple(peeled))

    min_deg = min(popcount(adj[v] & alive) for v in bits(alive))
    root = lowest(alive)
    layers = _bfs_layers(adj, alive, root, p - 1)
    _check_layers(adj, layers, min_deg)
    last = layers[-1]
    if popcount(last) < k:
        raise InvariantError(f"layer N_{p - 1} has fewer than k vertices")
    chosen = S | last
    return HighGirthResult(
        to_set(chosen),
        popcount(chosen),
        used_bfs_layer=True,
        peeled=tuple(peeled),
        layers=tuple(to_set(L) for L in layers),
    )


def _bfs_layers(adj, alive, root, depth):
    """[N_0, N_1, ..., N_depth] as masks, distances taken inside ``alive``."""
    layers = [1 << root]
    seen = 1 << root
    for _ in range(depth):
        nxt = 0
        for v in bits(layers[-1]):
            nxt |= adj[v]
        nxt &= alive & ~seen
        seen |= nxt
        layers.append(nxt)
    return layers


def _check_layers(adj, layers, min_deg):
    for i, L in enumerate(layers[1:], start=1):
        for v in bits(L):
            if adj[v] & L:
                raise InvariantError(f"BFS layer N_{i} is not independent")
            if popcount(adj[v] & layers[i - 1]) != 1:
                raise InvariantError(f"vertex of N_{i} has several parents in N_{i - 1}")
    if popcount(layers[1]) < min_deg:
        raise InvariantError("|N_1| is below the residual minimum degree")
    for i in range(1, len(layers) - 1):
        if popcount(layers[i + 1]) < popcount(layers[i]) * (min_deg - 1):
            raise InvariantError(f"|N_{i + 1}| < |N_{i}| * (min degree - 1)")


# -- kernel bounds -------------------------------------------------------


@dataclass(frozen=True)
class KernelBounds:
    k: int
    p: int | None
    g: int
    f: int
    f_old: int
    gp: int | None

    def to_dict(self) -> dict:
        return {"k": self.k, "p": self.p, "g": self.g, "f": self.f, "fOld": self.f_old, "gp": self.gp}


def kernel_bounds(k: int, p: int | None = None) -> KernelBounds:
    """Ramsey bound g, new kernel f = 5g, previous kernel f_old and, given p, g_p."""
    if k < 1:
        raise UsageError("k must be at least 1")
    if p is not None and p < 3:
        raise UsageError("p must be at least 3")
    g = comb(k + 1, 2) - 1
    f = 5 * g
    f_old = g + (k - 1) * (comb(g, 2) + 2 * g + 1)
    gp = high_girth_threshold(k, p) if p is not None else None
    return KernelBounds(k, p, g, f, f_old, gp)


@dataclass(frozen=True)
class KernelOutcome:
    """Which statement the basic-trigraph kernel test settles on.

    1: n <= f(k); 2: at most ``cap`` (default n^3) maximal independent sets;
    3: alpha(T) >= k, which is only guaranteed when T is basic with no
    homogeneous set and all weights at least 1.
    """

    output: int
    n: int
    f: int
    mis_count: int | None = None
    cap: int | None = None

    def to_dict(self) -> dict:
        return {"output": self.output, "n": self.n, "f": self.f, "misCount": self.mis_count, "cap": self.cap}


def basic_kernel_outcome(t: Trigraph, k: int, cap: int | None = None) -> KernelOutcome:
    f = kernel_bounds(k).f
    if t.n <= f:
        return KernelOutcome(1, t.n, f)
    cap = t.n**3 if cap is None else cap
    sets, overflow = enumerate_maximal_independent_sets(t.realize_antiedges(), cap)
    if not overflow:
        return KernelOutcome(2, t.n, f, len(sets), cap)
    return KernelOutcome(3, t.n, f, None, cap)


# -- class T1 verification -----------------------------------------------


@dataclass(frozen=True)
class T1Structure:
    """Partition of V(T) into X and ordered strong cliques.

    ``sides`` optionally fixes, per clique, the bipartition (A, B) of its
    neighbourhood in X; when omitted, ``verify_t1`` searches for one.
    """

    X: frozenset
    cliques: tuple
    sides: tuple | None = None

    @classmethod
    def build(cls, X, cliques, sides=None) -> "T1Structure":
        cl = tuple(tuple(K) for K in cliques)
        sd = None
        if sides is not None:
            sd = tuple((frozenset(a), frozenset(b)) for a, b in sides)
        return cls(frozenset(X), cl, sd)


@dataclass
class T1Report:
    x_triangle_free: bool
    cliques_strong: bool
    cliques_anticomplete: bool
    attachment_limit: bool  # every X vertex sees at most two cliques
    nested_traces: bool  # N(K) splits into independent A, B with shrinking / growing traces
    b_traces_nonempty: bool  # informational only
    neighborhood_bound: bool  # sum of |N(K)| <= 2|X|
    clique_bound: bool  # |K| <= 2|N(K)| for every clique
    clique_bound_applicable: bool  # only binding when T has no homogeneous set
    vertex_count_bound: bool  # n <= 5|X|
    neighborhood_sizes: list
    sides: list

    @property
    def ok(self) -> bool:
        checks = [
            self.x_triangle_free,
            self.cliques_strong,
            self.cliques_anticomplete,
            self.attachment_limit,
            self.nested_traces,
            self.neighborhood_bound,
            self.vertex_count_bound,
        ]
        if self.clique_bound_applicable:
            checks.append(self.clique_bound)
        return all(checks)

    def to_dict(self) -> dict:
        d = dict(self.__dict__)
        d["sides"] = [None if s is None else [sorted(s[0]), sorted(s[1])] for s in self.sides]
        d["ok"] = self.ok
        return d


def _traces_ok(t: Trigraph, K, A: int, B: int) -> bool:
    """A_{i+1} ⊆ A_i and B_i ⊆ B_{i+1} along the clique order."""
    adj = t.adjacent
    prev_a = prev_b = None
    for v in K:
        a, b = A & adj[v], B & adj[v]
        if prev_a is not None and (a & ~prev_a or prev_b & ~b):
            return False
        prev_a, prev_b = a, b
    return True


def _side_is_independent(t: Trigraph, S: int) -> bool:
    return all(t.adjacent[v] & S == 0 for v in bits(S))


def _find_sides(t: Trigraph, K, NK: int):
    """Bipartition (A, B) of N(K) with nested traces, or None.

    A vertex may sit in A only if its trace set along K is a prefix, and in B
    only if it is a suffix; each connected component of T[N(K)] is 2-coloured
    and both orientations are tried independently.
    """
    adj = t.adjacent
    pos = [idx for idx, _ in enumerate(K)]
    ok_a, ok_b = {}, {}
    for x in bits(NK):
        idxs = [i for i in pos if adj[K[i]] >> x & 1]
        r = len(K)
        ok_a[x] = idxs == list(range(len(idxs)))
        ok_b[x] = idxs == list(range(r - len(idxs), r))
    A = B = 0
    remaining = NK
    while remaining:
        root = lowest(remaining)
        colour = {root: 0}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in bits(adj[u] & NK):
                if v not in colour:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return None
        comp = mask_of(colour)
        remaining &= ~comp
        for flip in (0, 1):
            if all((ok_a if (c ^ flip) == 0 else ok_b)[v] for v, c in colour.items()):
                A |= mask_of(v for v, c in colour.items() if c ^ flip == 0)
                B |= mask_of(v for v, c in colour.items() if c ^ flip == 1)
                break
        else:
            return None
    return A, B


def verify_t1(t: Trigraph, s: T1Structure) -> T1Report:
    """Check a claimed T1 decomposition and the counting facts derived from it."""
    parts = [set(s.X)] + [set(K) for K in s.cliques]
    seen = set()
    for P in parts:
        if seen & P:
            raise UsageError("T1 structure parts overlap")
        seen |= P
    if seen != set(range(t.n)):
        raise UsageError("T1 structure does not cover exactly V(T)")
    if any(len(set(K)) != len(K) for K in s.cliques):
        raise UsageError("repeated vertex inside a clique")
    if s.sides is not None and len(s.sides) != len(s.cliques):
        raise UsageError("need one bipartition per clique")

    X = mask_of(s.X)
    adj = t.adjacent
    sub, _ = t.induced(s.X)
    x_triangle_free = is_triangle_free(sub)
    cliques_strong = all(
        t.theta(u, v) == 1 for K in s.cliques for i, u in enumerate(K) for v in K[i + 1 :]
    )
    cliques_anticomplete = all(
        t.theta(u, v) == -1
        for i, K in enumerate(s.cliques)
        for L in s.cliques[i + 1 :]
        for u in K
        for v in L
    )
    nbhds = []
    for K in s.cliques:
        NK = 0
        for v in K:
            NK |= adj[v] & X
        nbhds.append(NK)
    attachment_limit = all(
        sum(1 for K in s.cliques if any(adj[v] >> x & 1 for v in K)) <= 2 for x in bits(X)
    )

    nested_traces = True
    b_nonempty = True
    sides = []
    for idx, (K, NK) in enumerate(zip(s.cliques, nbhds)):
        if s.sides is not None:
            A, B = (mask_of(S) for S in s.sides[idx])
            valid = (
                A & B == 0
                and A | B == NK
                and _side_is_independent(t, A)
                and _side_is_independent(t, B)
                and _traces_ok(t, K, A, B)
            )
            found = (A, B) if valid else None
        else:
            found = _find_sides(t, K, NK)
        if found is None:
            nested_traces = False
            b_nonempty = False
            sides.append(None)
            continue
        A, B = found
        sides.append((to_set(A), to_set(B)))
        if any(adj[v] & B == 0 for v in K):
            b_nonempty = False

    sizes = [popcount(NK) for NK in nbhds]
    neighborhood_bound = sum(sizes) <= 2 * popcount(X)
    clique_bound = all(len(K) <= 2 * sz for K, sz in zip(s.cliques, sizes))
    clique_bound_applicable = find_minimally_sided_homogeneous_set(t) is None
    vertex_count_bound = t.n <= 5 * popcount(X)
    return T1Report(
        x_triangle_free=x_triangle_free,
        cliques_strong=cliques_strong,
        cliques_anticomplete=cliques_anticomplete,
        attachment_limit=attachment_limit,
        nested_traces=nested_traces,
        b_traces_nonempty=b_nonempty,
        neighborhood_bound=neighborhood_bound,
        clique_bound=clique_bound,
        clique_bound_applicable=clique_bound_applicable,
        vertex_count_bound=vertex_count_bound,
        neighborhood_sizes=sizes,
        sides=sides,
    )


# -- weighted independent set driver -------------------------------------


class NotBullFreeError(UsageError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"input contains a bull on vertices {list(witness.vertices)}")


@dataclass(frozen=True)
class WISDecision:
    yes: bool
    k: int
    certificate: IndependentSetResult
    alpha: int | None

    def to_dict(self) -> dict:
        d = {"answer": "YES" if self.yes else "NO", "k": self.k}
        d["certificate"] = self.certificate.to_dict()
        if self.alpha is not None:
            d["alpha"] = self.alpha
        return d


def _contract_and_solve(t: Trigraph, max_n) -> tuple[int, frozenset]:
    hset = find_minimally_sided_homogeneous_set(t)
    if hset is None:
        res = alpha_exact(t, max_n=max_n)
        return res.total_weight, res.vertices
    X = sorted(hset.X)
    inner_t, inner_ids = t.induced(X)
    inner_w, inner_set = _contract_and_solve(inner_t, max_n)
    outside = [v for v in range(t.n) if v not in hset.X]
    # the contracted vertex copies the (uniform) attachment of X
    rep = X[0]
    ids = outside + [rep]
    m = t.matrix[ids][:, ids].copy()
    weights = [int(t.weights[v]) for v in outside] + [inner_w]
    contracted = Trigraph(m, weights)
    w, chosen = _contract_and_solve(contracted, max_n)
    star = len(outside)
    lifted = {outside[v] for v in chosen if v != star}
    if star in chosen:
        lifted |= {inner_ids[v] for v in inner_set}
    return w, frozenset(lifted)


def solve_wis(t: Trigraph, k: int, max_n: int | None = None) -> WISDecision:
    """Decide alpha(T) >= k for a bull-free monogamous trigraph.

    Minimally-sided homogeneous sets are contracted to one vertex weighted by
    their own optimum (solved recursively); the remaining prime trigraph is
    finished by the exact solver.  The certificate always has weight alpha(T).
    """
    if k < 0:
        raise UsageError("k must be non-negative")
    if not t.is_monogamous():
        raise UsageError("input trigraph is not monogamous")
    witness = find_bull(t)
    if witness is not None:
        raise NotBullFreeError(witness)
    if k == 0:
        return WISDecision(True, 0, IndependentSetResult(frozenset(), 0), None)
    w, chosen = _contract_and_solve(t, max_n)
    if not is_independent(t, chosen) or sum(int(t.weights[v]) for v in chosen) != w:
        raise InvariantError("lifted certificate is inconsistent")
    cert = IndependentSetResult(chosen, w)
    return WISDecision(w >= k, k, cert, w)
