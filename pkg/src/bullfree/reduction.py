"""Sparse 3-SAT to independent set in {bull, C4, ..., C_{2p-1}}-free graphs.

Pipeline: DIMACS formula -> conflict graph (one triangle per clause, plus
every edge between occurrences of x and of its negation) -> subdivided graph
(every edge becomes a path through q internal vertices, q the smallest even
integer with 3(q+1) >= 2p) with target size |E| * q/2 + m.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

from .bitset import bits, mask_of
from .errors import CapacityError, InvariantError, ParseError, UsageError
from .patterns import PatternWitness, find_bull, find_hole
from .trigraph import Trigraph


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple  # tuple of 3-tuples of non-zero ints

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    @property
    def occurrences(self) -> Counter:
        return Counter(lit for cl in self.clauses for lit in cl)

    @property
    def sparsity(self) -> int:
        """The smallest c such that every literal occurs at most c times."""
        occ = self.occurrences
        return max(occ.values()) if occ else 0

    def satisfied_by(self, assignment) -> bool:
        """``assignment`` maps variable index (1-based) to bool."""
        return all(any(assignment[abs(l)] == (l > 0) for l in cl) for cl in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines += [" ".join(map(str, cl)) + " 0" for cl in self.clauses]
        return "\n".join(lines) + "\n"


def parse_cnf(text: str | bytes) -> CnfFormula:
    """Parse DIMACS CNF where every clause has exactly three literals."""
    if isinstance(text, bytes):
        text = text.decode()
    header = None
    clauses = []
    current = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("bad problem line, expected 'p cnf <vars> <clauses>'", lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError("non-integer counts in problem line", lineno) from None
            continue
        if header is None:
            raise ParseError("clause before the problem line", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno) from None
            if lit == 0:
                if len(current) != 3:
                    raise ParseError(f"clause has {len(current)} literals, expected 3", lineno)
                clauses.append(tuple(current))
                current = []
                continue
            if abs(lit) > header[0]:
                raise ParseError(f"literal {lit} exceeds declared variable count", lineno)
            current.append(lit)
    if header is None:
        raise ParseError("missing problem line")
    if current:
        raise ParseError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise ParseError(f"declared {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], tuple(clauses))


def brute_force_sat(phi: CnfFormula) -> dict | None:
    """A satisfying assignment by trying all of them, or None."""
    for values in itertools.product((False, True), repeat=phi.num_vars):
        assignment = {i + 1: v for i, v in enumerate(values)}
        if phi.satisfied_by(assignment):
            return assignment
    return None


# -- conflict graph ------------------------------------------------------


def build_conflict_graph(phi: CnfFormula) -> tuple[Trigraph, list[tuple[int, int]]]:
    """Clause triangles plus all x / not-x edges.

    Vertex ``3*j + t`` stands for the t-th literal of clause j; the returned
    labelling lists ``(clause index, literal)`` per vertex.
    """
    labels = [(j, lit) for j, cl in enumerate(phi.clauses) for lit in cl]
    edges = set()
    for j in range(phi.num_clauses):
        a, b, c = 3 * j, 3 * j + 1, 3 * j + 2
        edges |= {(a, b), (a, c), (b, c)}
    by_lit: dict[int, list[int]] = {}
    for v, (_, lit) in enumerate(labels):
        by_lit.setdefault(lit, []).append(v)
    for lit, vs in by_lit.items():
        if lit > 0:
            for u in vs:
                for v in by_lit.get(-lit, ()):
                    edges.add((min(u, v), max(u, v)))
    return Trigraph.from_pairs(len(labels), sorted(edges)), labels


def compute_q(p: int) -> int:
    """Smallest even q with 3(q + 1) >= 2p."""
    if p < 3:
        raise UsageError("p must be at least 3")
    q = 0
    while 3 * (q + 1) < 2 * p:
        q += 2
    return q


@dataclass(frozen=True)
class Subdivision:
    graph: Trigraph
    num_original: int
    paths: dict  # (u, v) with u < v -> tuple of internal ids, u side first

    def path(self, u: int, v: int) -> tuple:
        """Full vertex path from ``u`` to ``v`` along the subdivided edge."""
        if u < v:
            return (u, *self.paths[(u, v)], v)
        return (u, *reversed(self.paths[(v, u)]), v)

    def is_original(self, v: int) -> bool:
        return v < self.num_original


def _subdivide(g: Trigraph, q: int) -> Subdivision:
    n = g.n
    edges = []
    paths = {}
    nxt = n
    for u, v in g.strong_edges():
        internal = tuple(range(nxt, nxt + q))
        nxt += q
        chain = (u, *internal, v)
        edges.extend(zip(chain, chain[1:]))
        paths[(u, v)] = internal
    return Subdivision(Trigraph.from_pairs(nxt, edges), n, paths)


def subdivide(g: Trigraph, q: int) -> Subdivision:
    """Replace every edge uv by a path u - i_1 - ... - i_q - v."""
    if q < 2 or q % 2:
        raise UsageError("q must be even and at least 2")
    if not g.is_graph():
        raise UsageError("subdivision expects a graph")
    return _subdivide(g, q)


@dataclass(frozen=True)
class ReductionArtifact:
    formula: CnfFormula
    conflict_graph: Trigraph
    labels: list  # (clause, literal) per original vertex
    subdivision: Subdivision
    p: int
    q: int
    target_k: int

    @property
    def graph(self) -> Trigraph:
        return self.subdivision.graph

    @property
    def m(self) -> int:
        return self.formula.num_clauses

    @property
    def original_edges(self) -> list:
        return sorted(self.subdivision.paths)

    def vertex_labels(self) -> list[dict]:
        out = []
        for v, (j, lit) in enumerate(self.labels):
            out.append({"vertex": v, "kind": "original", "clause": j, "literal": lit})
        for (u, w), internal in sorted(self.subdivision.paths.items()):
            for pos, x in enumerate(internal, start=1):
                out.append({"vertex": x, "kind": "internal", "edge": [u, w], "position": pos})
        out.sort(key=lambda d: d["vertex"])
        return out

    def sidecar(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "m": self.m,
            "edgeCountOriginal": len(self.subdivision.paths),
            "targetK": self.target_k,
            "labels": self.vertex_labels(),
        }


def reduce(phi: CnfFormula, p: int) -> ReductionArtifact:
    q = compute_q(p)
    g, labels = build_conflict_graph(phi)
    sub = subdivide(g, q)
    e = len(sub.paths)
    return ReductionArtifact(phi, g, labels, sub, p, q, e * q // 2 + phi.num_clauses)


def artifact_from_sidecar(graph: Trigraph, sidecar: dict) -> ReductionArtifact:
    """Rebuild an artifact (without the formula text) from a graph and its sidecar."""
    labels_raw = sidecar["labels"]
    originals = [d for d in labels_raw if d["kind"] == "original"]
    labels = [(d["clause"], d["literal"]) for d in sorted(originals, key=lambda d: d["vertex"])]
    paths: dict = {}
    for d in labels_raw:
        if d["kind"] == "internal":
            paths.setdefault(tuple(d["edge"]), []).append((d["position"], d["vertex"]))
    paths = {k: tuple(v for _, v in sorted(lst)) for k, lst in paths.items()}
    m = sidecar["m"]
    clauses = [[] for _ in range(m)]
    for j, lit in labels:
        clauses[j].append(lit)
    nvars = max((abs(l) for _, l in labels), default=0)
    phi = CnfFormula(nvars, tuple(tuple(c) for c in clauses))
    cg = Trigraph.from_pairs(len(labels), sorted(paths))
    sub = Subdivision(graph, len(labels), paths)
    return ReductionArtifact(phi, cg, labels, sub, sidecar["p"], sidecar["q"], sidecar["targetK"])


# -- verification --------------------------------------------------------


MAX_HOLE_LENGTH = 9


@dataclass
class InstanceReport:
    bull: PatternWitness | None
    holes: dict = field(default_factory=dict)  # length -> witness or None

    @property
    def ok(self) -> bool:
        return self.bull is None and all(w is None for w in self.holes.values())

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "bull": None if self.bull is None else self.bull.to_dict(),
            "holes": {str(k): (None if w is None else w.to_dict()) for k, w in self.holes.items()},
        }


def verify_instance(art: ReductionArtifact) -> InstanceReport:
    """Check the subdivided graph has no bull and no hole of length 4..2p-1."""
    top = 2 * art.p - 1
    if top > MAX_HOLE_LENGTH:
        raise CapacityError(f"hole search limited to length {MAX_HOLE_LENGTH}, need {top}")
    g = art.graph
    return InstanceReport(find_bull(g), {ell: find_hole(g, ell) for ell in range(4, top + 1)})


# -- independent-set repair and assignment extraction --------------------


def conflicts(art: ReductionArtifact, S) -> list[tuple[int, int]]:
    """Original edges with both endpoints in S, in ascending order."""
    S = set(S)
    return [(u, v) for (u, v) in art.original_edges if u in S and v in S]


def _check_independent(g: Trigraph, S) -> None:
    m = mask_of(S)
    for v in bits(m):
        if g.strong_adj[v] & m:
            raise UsageError("the given set is not independent")


def repair_steps(art: ReductionArtifact, S):
    """Yield ``(S, eta)`` after every shift, starting with the input set.

    One shift takes the first conflicted original edge xy (x the smaller id),
    finds the smallest i >= 1 with x_i, x_{i+1} both unselected on its path
    x = x_0, ..., x_q, x_{q+1} = y, and moves every selected x_{2j} (j <= (i-1)/2)
    one step along the path onto x_{2j+1}.
    """
    g = art.graph
    S = set(S)
    _check_independent(g, S)
    bad = conflicts(art, S)
    yield frozenset(S), len(bad)
    while bad:
        x, y = bad[0]
        path = art.subdivision.path(x, y)
        i = next(
            (i for i in range(1, art.q + 1) if path[i] not in S and path[i + 1] not in S),
            None,
        )
        if i is None:
            raise InvariantError("no free slot on a conflicted path")
        if i % 2 == 0:
            raise InvariantError(f"smallest free index {i} is even")
        for j in range((i - 1) // 2 + 1):
            S.discard(path[2 * j])
            S.add(path[2 * j + 1])
        new_bad = conflicts(art, S)
        if len(new_bad) >= len(bad):
            raise InvariantError("repair shift did not reduce the conflict count")
        bad = new_bad
        yield frozenset(S), len(bad)


def repair_independent_set(art: ReductionArtifact, S) -> frozenset:
    """Same-size independent set of the subdivided graph with no original conflicts."""
    out = None
    for out, _ in repair_steps(art, S):
        pass
    return out


def extract_assignment(art: ReductionArtifact, S) -> dict:
    """Satisfying assignment read off an independent set of size >= target_k."""
    if len(set(S)) < art.target_k:
        raise UsageError(f"need at least {art.target_k} vertices, got {len(set(S))}")
    fixed = repair_independent_set(art, S)
    originals = sorted(v for v in fixed if art.subdivision.is_original(v))
    per_clause = {}
    for v in originals:
        j, lit = art.labels[v]
        per_clause.setdefault(j, lit)
    if len(per_clause) < art.m:
        raise InvariantError("projection misses a clause after repair")
    assignment = {i: False for i in range(1, art.formula.num_vars + 1)}
    for lit in per_clause.values():
        assignment[abs(lit)] = lit > 0
    if not art.formula.satisfied_by(assignment):
        raise InvariantError("extracted assignment does not satisfy the formula")
    return assignment


def lift_assignment(art: ReductionArtifact, assignment) -> frozenset:
    """Independent set of size target_k built from a satisfying assignment.

    One true literal per clause, then q/2 internal vertices per original edge,
    taken on the far side of a selected endpoint.
    """
    if not art.formula.satisfied_by(assignment):
        raise UsageError("assignment does not satisfy the formula")
    chosen = set()
    for j, cl in enumerate(art.formula.clauses):
        t = next(t for t, lit in enumerate(cl) if assignment[abs(lit)] == (lit > 0))
        chosen.add(3 * j + t)
    out = set(chosen)
    for (u, v), internal in art.subdivision.paths.items():
        # internal[k] is x_{k+1}; x_1 neighbours u
        start = 1 if u in chosen else 0
        out.update(internal[start::2])
    return frozenset(out)
