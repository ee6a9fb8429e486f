"""Upper graphs, homogeneous-set finders and the two homogenization steps.

The homogenization steps turn a switch matrix into a square matrix with a
constant upper triangle and a different constant diagonal, and then make
the lower triangle constant as well. Both reduce to finding a clique or an
independent set in an auxiliary "upper graph".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .bitmatrix import BinaryMatrix, IndexSelection
from .errors import PreconditionError, StageError
from .graph import SimpleGraph
from .patterns import TriPattern, classify, is_switch_matrix

__all__ = [
    "SimpleGraph",
    "HomogeneousSet",
    "HomogenizeConfig",
    "upper_graph",
    "maximum_clique",
    "greedy_homogeneous",
    "find_homogeneous",
    "extract_ab_star",
    "extract_abc",
]

DEFAULT_EXACT_THRESHOLD = 40


@dataclass(frozen=True)
class HomogeneousSet:
    vertices: tuple[int, ...]
    kind: Literal["clique", "independent"]

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class HomogenizeConfig:
    """Knobs for :func:`find_homogeneous`.

    ``exact_threshold`` is the largest vertex count solved exactly. ``seed`` is
    carried for reproducible randomized finders; the bundled finders are
    deterministic and ignore it.
    """

    exact_threshold: int = DEFAULT_EXACT_THRESHOLD
    seed: int = 0

    def __post_init__(self):
        if self.exact_threshold < 0:
            raise ValueError("exact_threshold must be non-negative")


def upper_graph(A: BinaryMatrix) -> SimpleGraph:
    """Graph on the row indices of square ``A`` with ``i ~ j`` (``i < j``) iff ``A[i, j] = 1``."""
    if A.m != A.n:
        raise PreconditionError(f"upper graph needs a square matrix, got {A.m}x{A.n}")
    n = A.n
    adj = [0] * n
    for i, row in enumerate(A.rows):
        above = row >> (i + 1) << (i + 1)
        adj[i] |= above
        w = above
        while w:
            low = w & -w
            adj[low.bit_length() - 1] |= 1 << i
            w ^= low
    return SimpleGraph(n, adj)


def _colour_bound(adj, P: int) -> int:
    """Number of colours in a greedy colouring of the candidate set ``P``."""
    colours = 0
    while P:
        colours += 1
        Q = P
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            P &= ~low
            Q &= ~low & ~adj[v]
    return colours


def maximum_clique(G: SimpleGraph) -> tuple[int, ...]:
    """Lexicographically smallest maximum clique, by branch and bound.

    Branches in ascending vertex order and only accepts strictly larger
    cliques, so the first maximum clique found is the lexicographically
    smallest one. Nodes are pruned with a greedy-colouring bound.
    """
    adj = G.adj
    best: list[int] = []
    chosen: list[int] = []

    def expand(P: int) -> None:
        nonlocal best
        if not P:
            if len(chosen) > len(best):
                best = chosen[:]
            return
        if len(chosen) + _colour_bound(adj, P) <= len(best):
            return
        while P:
            if len(chosen) + P.bit_count() <= len(best):
                return
            low = P & -P
            v = low.bit_length() - 1
            P ^= low
            chosen.append(v)
            # P now holds only vertices after v
            expand(P & adj[v])
            chosen.pop()

    expand((1 << G.n) - 1)
    return tuple(best)


def greedy_homogeneous(G: SimpleGraph) -> HomogeneousSet:
    """Pivoting greedy with a logarithmic guarantee.

    Repeatedly takes the smallest live vertex as a pivot and keeps the larger
    of its live neighbours and live non-neighbours (neighbours on ties).
    Pivots that kept neighbours form a clique, the others an independent
    set; the final pivot belongs to both. The larger family is returned
    (clique on ties).
    """
    live = (1 << G.n) - 1
    clique, independent = [], []
    while live:
        low = live & -live
        v = low.bit_length() - 1
        live ^= low
        near = live & G.adj[v]
        far = live & ~G.adj[v]
        if not live:
            # the last pivot fits either family
            clique.append(v)
            independent.append(v)
        elif near.bit_count() >= far.bit_count():
            clique.append(v)
            live = near
        else:
            independent.append(v)
            live = far
    if len(clique) >= len(independent):
        return HomogeneousSet(tuple(clique), "clique")
    return HomogeneousSet(tuple(independent), "independent")


def find_homogeneous(G: SimpleGraph, cfg: HomogenizeConfig = HomogenizeConfig()) -> HomogeneousSet:
    """A clique or independent set of ``G``.

    Exact (maximum size; clique preferred, then lexicographically smallest)
    when ``G.n <= cfg.exact_threshold``, otherwise :func:`greedy_homogeneous`.
    """
    if G.n == 0:
        raise PreconditionError("find_homogeneous needs at least one vertex")
    if G.n > cfg.exact_threshold:
        return greedy_homogeneous(G)
    clique = maximum_clique(G)
    independent = maximum_clique(G.complement())
    if len(clique) >= len(independent):
        return HomogeneousSet(clique, "clique")
    return HomogeneousSet(independent, "independent")


def _constant_upper_and_diagonal(A: BinaryMatrix, alpha: int, beta: int) -> bool:
    n = A.n
    full = (1 << n) - 1
    for i, row in enumerate(A.rows):
        above = full >> (i + 1) << (i + 1)
        if (row & above) != (above if alpha else 0):
            return False
        if (row >> i) & 1 != beta:
            return False
    return True


def extract_ab_star(S: BinaryMatrix, cfg: HomogenizeConfig = HomogenizeConfig()) -> tuple[IndexSelection, TriPattern]:
    """Square submatrix of a switch matrix with constant upper triangle ``alpha``
    and constant diagonal ``beta != alpha``; the lower triangle is unconstrained.

    The zero columns ``0, 2, 4, ...`` form a square matrix with a zero diagonal.
    A homogeneous set ``X`` of its upper graph fixes the upper triangle. A
    clique keeps the zero columns (pattern ``(1, 0, *)``); an independent set
    keeps the one columns, which agree with the zero columns above the
    diagonal (pattern ``(0, 1, *)``).
    """
    if S.m == 0 or not is_switch_matrix(S):
        raise PreconditionError("extract_ab_star needs a non-empty switch matrix")
    k = S.m
    B = S.submatrix(range(k), range(0, 2 * k, 2))
    X = find_homogeneous(upper_graph(B), cfg)
    if X.kind == "clique":
        cols = [2 * i for i in X.vertices]
        pattern = TriPattern(1, 0, None)
    else:
        cols = [2 * i + 1 for i in X.vertices]
        pattern = TriPattern(0, 1, None)
    sel = IndexSelection(X.vertices, cols)
    if not _constant_upper_and_diagonal(S.submatrix(sel.rows, sel.cols), pattern.alpha, pattern.beta):
        raise StageError("ab_star", f"selection {sel} does not realize {pattern}")
    return sel, pattern


def extract_abc(
    A: BinaryMatrix, p: TriPattern, cfg: HomogenizeConfig = HomogenizeConfig()
) -> tuple[IndexSelection, TriPattern]:
    """Make the lower triangle of an ``(alpha, beta, *)``-matrix constant.

    Builds the upper graph of the transpose (complemented when
    ``(alpha, beta) = (0, 1)`` so its diagonal is zero); a homogeneous set
    ``X`` then has a constant lower triangle in ``A``. Rows and columns are
    both ``X`` in ascending order.
    """
    alpha, beta = p.alpha, p.beta
    if A.m != A.n or A.n == 0:
        raise PreconditionError("extract_abc needs a non-empty square matrix")
    if alpha is None or alpha == beta or not _constant_upper_and_diagonal(A, alpha, beta):
        raise PreconditionError(f"matrix is not a ({alpha},{beta},*)-matrix with alpha != beta")
    M = A.transpose() if (alpha, beta) == (1, 0) else A.transpose().complement()
    X = find_homogeneous(upper_graph(M), cfg).vertices
    sel = IndexSelection(X, X)
    C = A.submatrix(X, X)
    # a single entry leaves gamma free; reuse alpha so the pattern stays inhomogeneous
    gamma = C.entry(1, 0) if len(X) > 1 else alpha
    full = TriPattern(alpha, beta, gamma)
    if len(X) > 1 and classify(C) != full:
        raise StageError("abc", f"selection {list(X)} does not classify as {full}")
    return sel, full
