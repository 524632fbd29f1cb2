"""Homogeneous sets, homogeneous pairs and minimally-sided homogeneous cuts.

All searches work on vertex bitmasks.  Each detector has a brute-force
counterpart (``brute_force_pairs``, ``brute_force_homogeneous_sets``) used as
an oracle in the tests.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .bitset import bits, mask_of, popcount, to_set
from .errors import UsageError
from .trigraph import Status, Trigraph

SMALL_PAIR_SHAPES = ((2, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (5, 1))


def _key(vertices) -> tuple:
    return tuple(sorted(vertices))


@dataclass(frozen=True)
class HomogeneousSet:
    X: frozenset

    @property
    def side_size(self) -> int:
        return len(self.X)

    def to_dict(self) -> dict:
        return {"X": sorted(self.X)}


@dataclass(frozen=True)
class HomogeneousPair:
    A: frozenset
    B: frozenset
    C: frozenset
    D: frozenset
    E: frozenset
    F: frozenset

    @property
    def side(self) -> frozenset:
        return self.A | self.B

    @property
    def side_size(self) -> int:
        return len(self.A) + len(self.B)

    @property
    def small(self) -> bool:
        return self.side_size <= 6

    @property
    def proper(self) -> bool:
        return bool(self.C) and bool(self.D)

    def to_dict(self) -> dict:
        return {name: sorted(getattr(self, name)) for name in "ABCDEF"}


@dataclass(frozen=True)
class NoProperPair:
    """No minimally-sided proper pair grows from the given seed quadruple."""

    reason: str


# -- definitional checkers (pairwise scans, no bitmasks) -----------------


def is_homogeneous_set(t: Trigraph, X) -> bool:
    X = set(X)
    if not 1 < len(X) < t.n:
        return False
    for v in range(t.n):
        if v in X:
            continue
        vals = {t.theta(v, x) for x in X}
        if vals != {1} and vals != {-1}:
            return False
    return True


def _all_pairs(t, P, Q, value) -> bool:
    return all(t.theta(p, q) == value for p in P for q in Q)


def is_homogeneous_pair(t: Trigraph, A, B, C, D, E, F) -> bool:
    """Check the six defining conditions of a homogeneous pair with witness sets."""
    parts = [set(S) for S in (A, B, C, D, E, F)]
    A, B, C, D, E, F = parts
    if not A or not B:
        return False
    union = set()
    for S in parts:
        if union & S:
            return False
        union |= S
    if union != set(range(t.n)):
        return False
    if len(A | B) < 3 or len(C | D | E | F) < 3:
        return False
    if not (_all_pairs(t, A, C | E, 1) and _all_pairs(t, A, D | F, -1)):
        return False
    if not (_all_pairs(t, B, D | E, 1) and _all_pairs(t, B, C | F, -1)):
        return False
    return not _all_pairs(t, A, B, 1) and not _all_pairs(t, A, B, -1)


def check_pair(t: Trigraph, pair: HomogeneousPair) -> bool:
    return is_homogeneous_pair(t, pair.A, pair.B, pair.C, pair.D, pair.E, pair.F)


# -- mask-level helpers --------------------------------------------------


def _strongly_complete(t: Trigraph, P: int, Q: int) -> bool:
    return all(Q & ~t.strong_adj[p] == 0 for p in bits(P))


def _strongly_anticomplete(t: Trigraph, P: int, Q: int) -> bool:
    return all(Q & ~t.strong_anti[p] == 0 for p in bits(P))


def pair_from_masks(t: Trigraph, A: int, B: int) -> HomogeneousPair | None:
    """Build the pair (A, B) with its witness partition, or None if invalid."""
    if not A or not B or A & B:
        return None
    outside = t.all_mask & ~(A | B)
    if popcount(A | B) < 3 or popcount(outside) < 3:
        return None
    C = D = E = F = 0
    for v in bits(outside):
        to_a = t.classify_mask(v, A)
        to_b = t.classify_mask(v, B)
        if to_a is Status.MIXED or to_b is Status.MIXED:
            return None
        a_adj = to_a is Status.STRONGLY_COMPLETE
        b_adj = to_b is Status.STRONGLY_COMPLETE
        bit = 1 << v
        if a_adj and b_adj:
            E |= bit
        elif a_adj:
            C |= bit
        elif b_adj:
            D |= bit
        else:
            F |= bit
    if _strongly_complete(t, A, B) or _strongly_anticomplete(t, A, B):
        return None
    return HomogeneousPair(*(to_set(m) for m in (A, B, C, D, E, F)))


# -- homogeneous sets ----------------------------------------------------


def _closure(t: Trigraph, X: int) -> int:
    """Smallest superset of X to which every outside vertex attaches strongly."""
    full = t.all_mask
    changed = True
    while changed and X != full:
        changed = False
        for v in bits(full & ~X):
            if not t.is_strong_to(v, X):
                X |= 1 << v
                changed = True
    return X


def minimal_homogeneous_set_containing(t: Trigraph, u: int, v: int) -> HomogeneousSet | None:
    """The inclusion-minimal homogeneous set containing ``u`` and ``v``, if any."""
    if u == v:
        raise UsageError("need two distinct vertices")
    t._check_vertex(u)
    t._check_vertex(v)
    X = _closure(t, (1 << u) | (1 << v))
    if X == t.all_mask:
        return None
    return HomogeneousSet(to_set(X))


def find_minimally_sided_homogeneous_set(t: Trigraph) -> HomogeneousSet | None:
    """A minimum-cardinality homogeneous set (lexicographically first on ties)."""
    best = None
    for u, v in combinations(range(t.n), 2):
        X = _closure(t, (1 << u) | (1 << v))
        if X == t.all_mask:
            continue
        cand = (popcount(X), _key(bits(X)))
        if best is None or cand < best:
            best = cand
    return HomogeneousSet(frozenset(best[1])) if best else None


# -- small homogeneous pairs ---------------------------------------------


def find_small_pair_ij(t: Trigraph, i: int, j: int, *, complete_two_sided: bool = True):
    """Search for a small homogeneous pair with ``|A| = i`` and ``|B| = j``.

    Guesses A and ``j - 1`` vertices of B, then sweeps the remaining vertices
    and adds to B any vertex that is mixed to A or to the current B, stopping
    once ``|B| = j``.  Assumes no pair with ``|A| = i`` and a smaller B exists.

    The sweep cannot complete B when B = {v, w} with v strongly complete and w
    strongly anticomplete to A (or the reverse) and v, w strongly attached to
    each other: neither is then mixed to A or to the other.  With
    ``complete_two_sided`` set, a sweep that ends one short tries every
    remaining vertex as the last member of B, which closes that gap.
    """
    if not (1 <= j <= i and 3 <= i + j <= 6):
        raise UsageError(f"(i, j) = ({i}, {j}) outside 3 <= i+j <= 6, 1 <= j <= i")
    n = t.n
    if n - (i + j) < 3:
        return None
    full = t.all_mask
    for A_t in combinations(range(n), i):
        A = mask_of(A_t)
        rest = [v for v in range(n) if not A >> v & 1]
        for Bp_t in combinations(rest, j - 1):
            B = mask_of(Bp_t)
            R = full & ~(A | B)
            size = j - 1
            for v in bits(R):
                if size == j:
                    break
                mixed_a = not t.is_strong_to(v, A)
                mixed_b = B != 0 and not t.is_strong_to(v, B)
                if mixed_a or mixed_b:
                    B |= 1 << v
                    size += 1
            if size == j:
                pair = pair_from_masks(t, A, B)
                if pair is not None:
                    return pair
            elif complete_two_sided and size == j - 1 and B:
                for w in bits(full & ~(A | B)):
                    pair = pair_from_masks(t, A, B | (1 << w))
                    if pair is not None:
                        return pair
    return None


def find_small_homogeneous_pair(t: Trigraph, **kw) -> HomogeneousPair | None:
    for i, j in SMALL_PAIR_SHAPES:
        pair = find_small_pair_ij(t, i, j, **kw)
        if pair is not None:
            return pair
    return None


# -- proper homogeneous pairs --------------------------------------------


def grow_proper_pair(t: Trigraph, a1: int, a2: int, c: int, d: int):
    """Grow a proper homogeneous pair with a1, a2 in A, c in C and d in D.

    Returns a ``HomogeneousPair`` or ``NoProperPair``.  Vertices strongly adjacent
    to c and strongly antiadjacent to d are marked alpha (A candidates), the
    reverse beta (B candidates), everything else epsilon.  Vertices pulled
    into R are processed FIFO; each one drags in every vertex of S that tells
    it apart from the first A (resp. B) member.
    """
    for v in (a1, a2, c, d):
        t._check_vertex(v)
    if len({a1, a2, c, d}) != 4:
        raise UsageError("a1, a2, c, d must be distinct")
    adj, anti, semi = t.strong_adj, t.strong_anti, t.semi
    alpha = adj[c] & anti[d]
    beta = adj[d] & anti[c]
    seeds = (1 << a1) | (1 << a2)
    if seeds & ~alpha:
        raise UsageError("a1, a2 must be strongly adjacent to c and strongly antiadjacent to d")

    S = t.all_mask & ~seeds
    A = B = 0
    b = None
    queue = deque((a1, a2))
    while queue:
        x = queue.popleft()
        if alpha >> x & 1:
            moved = semi[x] | (adj[x] & ~adj[a1]) | (adj[a1] & ~adj[x])
            A |= 1 << x
        elif beta >> x & 1:
            if b is None:
                b = x
                moved = semi[b]
            else:
                moved = semi[x] | (adj[x] & ~adj[b]) | (adj[b] & ~adj[x])
            B |= 1 << x
        else:
            return NoProperPair("an epsilon vertex reached R")
        moved &= S
        S &= ~moved
        queue.extend(bits(moved))

    if not B:
        return NoProperPair("B is empty: A is a homogeneous set")
    if _strongly_complete(t, A, B) or _strongly_anticomplete(t, A, B):
        return NoProperPair("A is strongly complete or anticomplete to B: A is a homogeneous set")
    if popcount(S) < 3:
        return NoProperPair("|S| < 3")
    pair = pair_from_masks(t, A, B)
    if pair is None:
        raise AssertionError("grown pair failed validation")
    return pair


def _pair_key(pair: HomogeneousPair) -> tuple:
    return (pair.side_size, _key(pair.side), _key(pair.A))


def find_minimally_sided_proper_pair(t: Trigraph) -> HomogeneousPair | None:
    """Smallest-sided pair returned by ``grow_proper_pair`` over all quadruples.

    Quadruples range over ordered (c, d), so the role-exchanged instance
    (seeds attached to d rather than c) is covered as well.
    """
    adj, anti = t.strong_adj, t.strong_anti
    best = None
    for c in range(t.n):
        for d in range(t.n):
            if c == d:
                continue
            alpha = [v for v in bits(adj[c] & anti[d])]
            for a1, a2 in combinations(alpha, 2):
                out = grow_proper_pair(t, a1, a2, c, d)
                if isinstance(out, HomogeneousPair):
                    if best is None or _pair_key(out) < _pair_key(best):
                        best = out
    return best


# -- orchestration -------------------------------------------------------


@dataclass(frozen=True)
class DecompositionOutcome:
    tag: str  # "small-pair", "minimally-sided-cut" or "none"
    payload: HomogeneousPair | HomogeneousSet | None = None

    @property
    def side_size(self) -> int | None:
        return None if self.payload is None else self.payload.side_size

    @property
    def cut(self) -> frozenset | None:
        if isinstance(self.payload, HomogeneousSet):
            return self.payload.X
        if isinstance(self.payload, HomogeneousPair):
            return self.payload.side
        return None

    def to_dict(self) -> dict:
        d = {"tag": self.tag}
        if self.payload is None:
            d["message"] = NO_DECOMPOSITION_MESSAGE
            return d
        d["kind"] = "pair" if isinstance(self.payload, HomogeneousPair) else "set"
        d["sideSize"] = self.side_size
        d.update(self.payload.to_dict())
        return d


NO_DECOMPOSITION_MESSAGE = (
    "T has no small homogeneous pair, no proper homogeneous pair, and no homogeneous set"
)


def find_decomposition(t: Trigraph) -> DecompositionOutcome:
    """Small homogeneous pair if one exists, else a minimally-sided homogeneous cut."""
    pair = find_small_homogeneous_pair(t)
    if pair is not None:
        return DecompositionOutcome("small-pair", pair)
    hset = find_minimally_sided_homogeneous_set(t)
    proper = find_minimally_sided_proper_pair(t)
    candidates = [c for c in (hset, proper) if c is not None]
    if not candidates:
        return DecompositionOutcome("none")
    best = min(candidates, key=lambda c: c.side_size)
    return DecompositionOutcome("minimally-sided-cut", best)


# -- brute-force oracles -------------------------------------------------


def _strong_tables(t: Trigraph):
    """Per-mask tables: vertices outside M strongly attached to M, and the
    common strong neighbourhoods / antineighbourhoods of M."""
    n = t.n
    size = 1 << n
    full = t.all_mask
    strong_to = [0] * size
    common_adj = [0] * size
    common_anti = [0] * size
    common_adj[0] = common_anti[0] = full
    for M in range(1, size):
        low = M & -M
        v = low.bit_length() - 1
        common_adj[M] = common_adj[M ^ low] & t.strong_adj[v]
        common_anti[M] = common_anti[M ^ low] & t.strong_anti[v]
        strong_to[M] = (common_adj[M] | common_anti[M]) & ~M
    return strong_to, common_adj, common_anti


def brute_force_homogeneous_sets(t: Trigraph) -> list[HomogeneousSet]:
    strong_to, _, _ = _strong_tables(t)
    full = t.all_mask
    out = []
    for X in range(1, 1 << t.n):
        if 1 < popcount(X) < t.n and full & ~X & ~strong_to[X] == 0:
            out.append(HomogeneousSet(to_set(X)))
    return out


def brute_force_pairs(t: Trigraph, max_side: int | None = None) -> list[HomogeneousPair]:
    """Every homogeneous pair (as ordered (A, B)) found by subset enumeration."""
    n = t.n
    full = t.all_mask
    strong_to, common_adj, common_anti = _strong_tables(t)
    out = []
    for A in range(1, 1 << n):
        rest = full & ~A
        B = rest
        while B:
            side = A | B
            k = popcount(side)
            outside = full & ~side
            if (
                k >= 3
                and (max_side is None or k <= max_side)
                and popcount(outside) >= 3
                and outside & ~strong_to[A] == 0
                and outside & ~strong_to[B] == 0
                and B & ~common_adj[A] != 0
                and B & ~common_anti[A] != 0
            ):
                pair = pair_from_masks(t, A, B)
                if pair is None:
                    raise AssertionError("table check and pair_from_masks disagree")
                out.append(pair)
            B = (B - 1) & rest
    return out
