"""Induced pattern detection: bulls, holes, triangles and girth.

Bull detection uses trigraph semantics (a pattern edge needs an adjacent
pair, a pattern non-edge an antiadjacent pair, so a switchable pair can play
either role).  Holes and girth are only defined here for graphs.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .bitset import bits
from .errors import UsageError
from .trigraph import Trigraph


@dataclass(frozen=True)
class PatternWitness:
    kind: str  # "bull", "hole" or "triangle"
    vertices: tuple[int, ...]

    @property
    def hole_length(self) -> int | None:
        return len(self.vertices) if self.kind == "hole" else None

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "vertices": list(self.vertices)}
        if self.kind == "hole":
            d["length"] = len(self.vertices)
        return d


# bull on (x1, x2, x3, y, z): positions 0..4
BULL_EDGES = ((0, 1), (1, 2), (2, 0), (0, 3), (1, 4))
BULL_NONEDGES = ((0, 4), (1, 3), (2, 3), (2, 4), (3, 4))


def is_bull_witness(t: Trigraph, vs) -> bool:
    if len(set(vs)) != 5:
        return False
    adj, anti = t.adjacent, t.antiadjacent
    return all(adj[vs[a]] >> vs[b] & 1 for a, b in BULL_EDGES) and all(
        anti[vs[a]] >> vs[b] & 1 for a, b in BULL_NONEDGES
    )


def find_bull(t: Trigraph) -> PatternWitness | None:
    """Return a bull ``(x1, x2, x3, y, z)`` in ``t``, or None if ``t`` is bull-free.

    The search fixes the triangle first: for every adjacent triangle and every
    assignment of its vertices to (x1, x2, x3), ``y`` must be adjacent to x1 and
    antiadjacent to x2, x3; ``z`` adjacent to x2 and antiadjacent to x1, x3;
    and y, z antiadjacent.  The first witness in lexicographic order of
    (x1, x2, x3, y, z) is returned.
    """
    adj, anti = t.adjacent, t.antiadjacent
    for x1 in range(t.n):
        for x2 in bits(adj[x1]):
            common = adj[x1] & adj[x2]
            for x3 in bits(common):
                ys = adj[x1] & anti[x2] & anti[x3]
                ys &= ~((1 << x1) | (1 << x2) | (1 << x3))
                if not ys:
                    continue
                zs = adj[x2] & anti[x1] & anti[x3]
                zs &= ~((1 << x1) | (1 << x2) | (1 << x3))
                for y in bits(ys):
                    zz = zs & anti[y] & ~(1 << y)
                    if zz:
                        z = (zz & -zz).bit_length() - 1
                        return PatternWitness("bull", (x1, x2, x3, y, z))
    return None


def is_bull_free(t: Trigraph) -> bool:
    return find_bull(t) is None


def _require_graph(t: Trigraph, what: str) -> None:
    if not t.is_graph():
        raise UsageError(f"{what} is only defined for graphs (no switchable pairs)")


def is_induced_cycle(g: Trigraph, cycle) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    adj = g.strong_adj
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if bool(adj[cycle[i]] >> cycle[j] & 1) != consecutive:
                return False
    return True


def find_hole(g: Trigraph, length: int) -> PatternWitness | None:
    """Return an induced cycle on exactly ``length`` vertices, or None.

    DFS over induced paths rooted at the cycle's smallest vertex; every new
    vertex must see its predecessor and no earlier path vertex, except that the
    last one must also close back to the root.
    """
    if length < 4:
        raise UsageError("holes have length at least 4")
    _require_graph(g, "hole detection")
    adj = g.strong_adj
    n = g.n
    if length > n:
        return None

    def extend(path, forbidden):
        # ``forbidden``: vertices adjacent to some path vertex other than the last
        last = path[-1]
        root = path[0]
        pos = len(path)
        cands = adj[last] & ~forbidden & ~((1 << (root + 1)) - 1)
        if pos == length - 1:
            cands &= adj[root]
            for v in bits(cands):
                if v > path[1]:
                    return path + [v]
            return None
        cands &= ~adj[root]
        for v in bits(cands):
            found = extend(path + [v], forbidden | adj[last] | (1 << last))
            if found:
                return found
        return None

    for root in range(n):
        for v1 in bits(adj[root] & ~((1 << (root + 1)) - 1)):
            found = extend([root, v1], (1 << root) | (1 << v1))
            if found:
                return PatternWitness("hole", tuple(found))
    return None


def girth(g: Trigraph) -> float:
    """Length of a shortest cycle of the graph ``g``; ``math.inf`` for forests."""
    _require_graph(g, "girth")
    adj = g.strong_adj
    best = math.inf
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in bits(adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_triangle_free(t: Trigraph) -> bool:
    return find_triangle(t) is None


def find_triangle(t: Trigraph) -> PatternWitness | None:
    adj = t.adjacent
    for u in range(t.n):
        for v in bits(adj[u] & ~((1 << (u + 1)) - 1)):
            common = adj[u] & adj[v] & ~((1 << (v + 1)) - 1)
            if common:
                w = (common & -common).bit_length() - 1
                return PatternWitness("triangle", (u, v, w))
    return None
