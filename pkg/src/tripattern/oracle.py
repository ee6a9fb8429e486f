"""Brute-force ground truth for small instances.

Nothing here shares code with the production search routines; these are the
slow, obviously-correct versions the tests compare against.
"""

from __future__ import annotations

from itertools import combinations

from .bitmatrix import BinaryMatrix, IndexSelection
from .errors import BudgetExceededError
from .graph import SimpleGraph
from .patterns import TriPattern

__all__ = [
    "DEFAULT_MATRIX_CAP",
    "max_tri_submatrix",
    "max_inhomogeneous_size",
    "max_homogeneous_set",
    "vc_dimension_naive",
    "growth_naive",
]

DEFAULT_MATRIX_CAP = 8


def max_tri_submatrix(A: BinaryMatrix, p: TriPattern, cap: int = DEFAULT_MATRIX_CAP) -> tuple[int, IndexSelection]:
    """Largest ``k`` with ordered row/column ``k``-tuples realizing ``p``.

    Tries ``k = 1, 2, ...`` and backtracks over (row, column) assignments
    position by position, extending a partial assignment only when all
    pattern constraints among chosen indices hold. Returns the first witness
    found at the maximum ``k`` (search order: rows, then columns ascending).
    """
    if A.m > cap or A.n > cap:
        raise BudgetExceededError(f"oracle cap is {cap}x{cap}, matrix is {A.m}x{A.n}")
    grid = A.tolist()
    alpha, beta, gamma = p

    def search(k, rows, cols):
        t = len(rows)
        if t == k:
            return list(rows), list(cols)
        for r in range(A.m):
            if r in rows:
                continue
            for c in range(A.n):
                if c in cols or grid[r][c] != beta:
                    continue
                if any(grid[rows[s]][c] != alpha or grid[r][cols[s]] != gamma for s in range(t)):
                    continue
                rows.append(r)
                cols.append(c)
                found = search(k, rows, cols)
                rows.pop()
                cols.pop()
                if found:
                    return found
        return None

    best = (0, IndexSelection([], []))
    for k in range(1, min(A.m, A.n) + 1):
        found = search(k, [], [])
        if found is None:
            break
        best = (k, IndexSelection(*found))
    return best


def max_inhomogeneous_size(A: BinaryMatrix, cap: int = DEFAULT_MATRIX_CAP, distinct_ab: bool = False) -> int:
    """Maximum oracle size over the inhomogeneous patterns (optionally only those with ``alpha != beta``)."""
    best = 0
    for a in (0, 1):
        for b in (0, 1):
            for g in (0, 1):
                if a == b == g or (distinct_ab and a == b):
                    continue
                best = max(best, max_tri_submatrix(A, TriPattern(a, b, g), cap)[0])
    return best


def max_homogeneous_set(G: SimpleGraph, cap: int = 16) -> tuple[int, list[int], str]:
    """Exhaustive maximum clique-or-independent set: ``(size, vertices, kind)``."""
    if G.n > cap:
        raise BudgetExceededError(f"oracle cap is {cap} vertices, graph has {G.n}")
    best = (0, [], "clique")
    for mask in range(1, 1 << G.n):
        size = bin(mask).count("1")
        if size <= best[0]:
            continue
        vs = [v for v in range(G.n) if mask >> v & 1]
        pairs = [G.has_edge(u, v) for u, v in combinations(vs, 2)]
        if all(pairs):
            best = (size, vs, "clique")
        elif not any(pairs):
            best = (size, vs, "independent")
    return best


def _traces(family, X):
    return {tuple(x in F for x in X) for F in family}


def _as_sets(S):
    return [frozenset(x for x in range(S.ground_size) if F >> x & 1) for F in S.family]


def vc_dimension_naive(S, cap: int = 20) -> int:
    """Largest ``k`` such that some ``k``-subset sees all ``2^k`` traces."""
    if S.ground_size > cap:
        raise BudgetExceededError(f"oracle cap is a ground set of {cap}, got {S.ground_size}")
    family = _as_sets(S)
    best = 0
    for k in range(1, S.ground_size + 1):
        if not any(len(_traces(family, X)) == 2 ** k for X in combinations(range(S.ground_size), k)):
            break
        best = k
    return best


def growth_naive(S, n: int, cap: int = 20) -> int:
    if S.ground_size > cap:
        raise BudgetExceededError(f"oracle cap is a ground set of {cap}, got {S.ground_size}")
    family = _as_sets(S)
    return max(len(_traces(family, X)) for X in combinations(range(S.ground_size), n))
