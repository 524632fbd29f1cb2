"""Small named instances shared across the test modules."""

import itertools

import numpy as np

from bullfree.trigraph import Trigraph


def cycle(n):
    return Trigraph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Trigraph.from_pairs(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return Trigraph.from_pairs(n, itertools.combinations(range(n), 2))


def edgeless(n):
    return Trigraph.empty(n)


def complete_bipartite(a, b):
    return Trigraph.from_pairs(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Trigraph.from_pairs(10, outer + spokes + inner)


BULL = Trigraph.from_pairs(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])

# a1=0, a2=1, b1=2, c=3, d=4, f=5
A1, A2, B1, C, D, F = range(6)
SMALL_PAIR = Trigraph.from_pairs(6, [(A1, C), (A2, C), (B1, D), (A1, B1)])

# X = {0, 1} strongly complete to Y = {2}, strongly anticomplete to Z = {3, 4, 5}
HOMOGENEOUS_SET_HOST = Trigraph(
    np.array(
        [
            [0, 1, 1, -1, -1, -1],
            [1, 0, 1, -1, -1, -1],
            [1, 1, 0, 1, -1, 1],
            [-1, -1, 1, 0, -1, 1],
            [-1, -1, -1, -1, 0, -1],
            [-1, -1, 1, 1, -1, 0],
        ]
    )
)

# Completing a guessed A by a single absorbing vertex is not enough here:
# A = {0, 1, 2}, B = {3, 4} is a small pair the one-sided sweep misses.
ONE_SIDED_GAP = Trigraph(
    np.array(
        [
            [0, 1, 1, 1, -1, -1, -1, 1],
            [1, 0, 1, 1, -1, -1, -1, 1],
            [1, 1, 0, 1, -1, -1, -1, 1],
            [1, 1, 1, 0, 1, 1, 1, 1],
            [-1, -1, -1, 1, 0, 1, 1, 1],
            [-1, -1, -1, 1, 1, 0, 1, 1],
            [-1, -1, -1, 1, 1, 1, 0, 1],
            [1, 1, 1, 1, 1, 1, 1, 0],
        ]
    )
)


def brute_alpha(t):
    """Maximum weight over every vertex subset; only for n <= 14."""
    best = 0
    for r in range(t.n + 1):
        for S in itertools.combinations(range(t.n), r):
            if all(t.theta(u, v) <= 0 for u, v in itertools.combinations(S, 2)):
                best = max(best, int(sum(t.weights[list(S)])) if S else 0)
    return best
