"""Trigraphs: symmetric ternary adjacency over dense integer vertex ids.

Every unordered pair of distinct vertices carries a value in {-1, 0, +1}:
+1 is a strong edge, -1 a strong antiedge and 0 a switchable pair.  A pair is
*adjacent* when its value is 0 or +1 and *antiadjacent* when it is 0 or -1.
Graphs are the trigraphs without switchable pairs.
"""

from __future__ import annotations

import enum
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .bitset import bits, mask_of
from .errors import ParseError, UsageError

STRONG_EDGE = 1
SWITCHABLE = 0
STRONG_ANTIEDGE = -1


class Status(enum.Enum):
    STRONGLY_COMPLETE = "strongly-complete"
    STRONGLY_ANTICOMPLETE = "strongly-anticomplete"
    MIXED = "mixed"


class Trigraph:
    """Immutable trigraph on vertices ``0..n-1`` with integer vertex weights.

    ``matrix`` is a dense symmetric int8 array; its diagonal is meaningless and
    kept at zero.  Set-level queries go through the per-vertex bitmasks
    (``strong_adj``, ``strong_anti``, ``semi``), which are built lazily.
    """

    def __init__(self, matrix, weights=None):
        m = np.array(matrix, dtype=np.int8, copy=True)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise UsageError("adjacency matrix must be square")
        n = m.shape[0]
        np.fill_diagonal(m, 0)
        if not np.array_equal(m, m.T):
            raise UsageError("adjacency matrix must be symmetric")
        if np.any((m < -1) | (m > 1)):
            raise UsageError("pair values must lie in {-1, 0, +1}")
        if weights is None:
            w = np.ones(n, dtype=np.int64)
        else:
            w = np.array(weights, dtype=np.int64, copy=True)
            if w.shape != (n,):
                raise UsageError(f"expected {n} weights, got shape {w.shape}")
            if np.any(w < 0):
                raise UsageError("weights must be non-negative")
        m.flags.writeable = False
        w.flags.writeable = False
        self.matrix = m
        self.weights = w

    @classmethod
    def from_pairs(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        switchable: Iterable[tuple[int, int]] = (),
        weights: Sequence[int] | None = None,
    ) -> "Trigraph":
        """Build from explicit strong edges and switchable pairs; the rest is -1."""
        m = np.full((n, n), STRONG_ANTIEDGE, dtype=np.int8)
        for value, pairs in ((STRONG_EDGE, edges), (SWITCHABLE, switchable)):
            for u, v in pairs:
                if u == v or not (0 <= u < n and 0 <= v < n):
                    raise UsageError(f"bad pair ({u}, {v}) for n={n}")
                m[u, v] = m[v, u] = value
        return cls(m, weights)

    @classmethod
    def empty(cls, n: int = 0) -> "Trigraph":
        return cls.from_pairs(n)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Trigraph):
            return NotImplemented
        return np.array_equal(self.matrix, other.matrix) and np.array_equal(
            self.weights, other.weights
        )

    def __hash__(self) -> int:
        return hash((self.matrix.tobytes(), self.weights.tobytes()))

    def __repr__(self) -> str:
        return (
            f"Trigraph(n={self.n}, strong_edges={len(self.strong_edges())}, "
            f"switchable={len(self.switchable_pairs())})"
        )

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise UsageError(f"vertex {v} out of range for n={self.n}")

    def theta(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise UsageError("theta is undefined on a vertex and itself")
        return int(self.matrix[u, v])

    def weight(self, v: int) -> int:
        return int(self.weights[v])

    # -- bitmask views -------------------------------------------------

    def _masks_for(self, value: int) -> tuple[int, ...]:
        out = []
        for v in range(self.n):
            row = self.matrix[v] == value
            row[v] = False
            out.append(mask_of(np.flatnonzero(row).tolist()))
        return tuple(out)

    @cached_property
    def strong_adj(self) -> tuple[int, ...]:
        return self._masks_for(STRONG_EDGE)

    @cached_property
    def strong_anti(self) -> tuple[int, ...]:
        return self._masks_for(STRONG_ANTIEDGE)

    @cached_property
    def semi(self) -> tuple[int, ...]:
        return self._masks_for(SWITCHABLE)

    @cached_property
    def adjacent(self) -> tuple[int, ...]:
        return tuple(a | s for a, s in zip(self.strong_adj, self.semi))

    @cached_property
    def antiadjacent(self) -> tuple[int, ...]:
        return tuple(a | s for a, s in zip(self.strong_anti, self.semi))

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    # -- pair listings --------------------------------------------------

    def _pairs_with(self, value: int) -> list[tuple[int, int]]:
        iu, ju = np.nonzero(np.triu(self.matrix == value, k=1))
        return list(zip(iu.tolist(), ju.tolist()))

    def strong_edges(self) -> list[tuple[int, int]]:
        return self._pairs_with(STRONG_EDGE)

    def switchable_pairs(self) -> list[tuple[int, int]]:
        return self._pairs_with(SWITCHABLE)

    def neighbors(self, v: int) -> list[int]:
        """Vertices adjacent to ``v`` (strong edge or switchable pair)."""
        return list(bits(self.adjacent[v]))

    # -- structural predicates and constructions ------------------------

    def is_graph(self) -> bool:
        return not self.switchable_pairs()

    def is_monogamous(self) -> bool:
        return all(s & (s - 1) == 0 for s in self.semi)

    def complement(self) -> "Trigraph":
        return Trigraph(-self.matrix.astype(np.int8), self.weights)

    def induced(self, vertices: Iterable[int]) -> tuple["Trigraph", list[int]]:
        """Induced subtrigraph on ``vertices``.

        Returns the subtrigraph and the list mapping each new id to the
        original vertex id (new ids follow ascending original order).
        """
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        idx = np.array(keep, dtype=np.intp)
        sub = self.matrix[np.ix_(idx, idx)]
        return Trigraph(sub, self.weights[idx]), keep

    def classify(self, v: int, vertices: Iterable[int]) -> Status:
        """How ``v`` attaches to the non-empty set ``vertices`` (``v`` not in it)."""
        self._check_vertex(v)
        s = mask_of(vertices)
        if not s:
            raise UsageError("classify needs a non-empty vertex set")
        if s >> self.n:
            raise UsageError("vertex set has out-of-range ids")
        if s >> v & 1:
            raise UsageError(f"vertex {v} belongs to the set it is classified against")
        return self.classify_mask(v, s)

    def classify_mask(self, v: int, s: int) -> Status:
        if s & ~self.strong_adj[v] == 0:
            return Status.STRONGLY_COMPLETE
        if s & ~self.strong_anti[v] == 0:
            return Status.STRONGLY_ANTICOMPLETE
        return Status.MIXED

    def is_strong_to(self, v: int, s: int) -> bool:
        """True when ``v`` is strongly complete or strongly anticomplete to ``s``."""
        return s & ~self.strong_adj[v] == 0 or s & ~self.strong_anti[v] == 0

    def realize_antiedges(self) -> "Trigraph":
        """The realization turning every switchable pair into a strong antiedge."""
        m = self.matrix.copy()
        m[m == SWITCHABLE] = STRONG_ANTIEDGE
        return Trigraph(m, self.weights)

    def with_weights(self, weights) -> "Trigraph":
        return Trigraph(self.matrix, weights)


def is_realization(t: Trigraph, g: Trigraph) -> bool:
    """``g`` is a graph keeping every strong edge and strong antiedge of ``t``."""
    if t.n != g.n or not g.is_graph():
        return False
    strong = t.matrix != SWITCHABLE
    np.fill_diagonal(strong, False)
    return bool(np.all(g.matrix[strong] == t.matrix[strong]))


# -- text format --------------------------------------------------------


def parse_trigraph(text: str) -> Trigraph:
    """Parse the plain-text trigraph format.

    First meaningful line ``n <count>``; then ``u v s`` lines with s in
    {+1, 1, 0, -1} and ``w v <weight>`` lines.  ``#`` starts a comment.
    Unlisted pairs are strong antiedges and unlisted weights are 1.
    """
    n = None
    matrix = None
    weights = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError("expected header 'n <count>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
            matrix = np.full((n, n), STRONG_ANTIEDGE, dtype=np.int8)
            weights = np.ones(n, dtype=np.int64)
            continue
        try:
            if parts[0] == "w":
                if len(parts) != 3:
                    raise ParseError("expected 'w <vertex> <weight>'", lineno)
                v, wt = int(parts[1]), int(parts[2])
                if not 0 <= v < n:
                    raise ParseError(f"vertex {v} out of range", lineno)
                if wt < 0:
                    raise ParseError("weights must be non-negative", lineno)
                weights[v] = wt
                continue
            if len(parts) != 3:
                raise ParseError("expected 'u v s'", lineno)
            u, v, s = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"bad pair ({u}, {v})", lineno)
        if s not in (-1, 0, 1):
            raise ParseError(f"pair value {s} not in {{-1, 0, +1}}", lineno)
        matrix[u, v] = matrix[v, u] = s
    if n is None:
        raise ParseError("missing header 'n <count>'")
    return Trigraph(matrix, weights)


def format_trigraph(t: Trigraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n {t.n}")
    for u, v in t.strong_edges():
        lines.append(f"{u} {v} +1")
    for u, v in t.switchable_pairs():
        lines.append(f"{u} {v} 0")
    for v in range(t.n):
        if t.weights[v] != 1:
            lines.append(f"w {v} {int(t.weights[v])}")
    return "\n".join(lines) + "\n"


def read_trigraph(path) -> Trigraph:
    return parse_trigraph(Path(path).read_text())


def write_trigraph(t: Trigraph, path, comment: str | None = None) -> None:
    Path(path).write_text(format_trigraph(t, comment))
