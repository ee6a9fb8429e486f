"""Exact VC-dimension and growth functions of finite set systems.

Subsets of the ground set ``0..N-1`` are int bitsets throughout.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable

import numpy as np

from .bitmatrix import BinaryMatrix
from .errors import BudgetExceededError, PreconditionError
from .graph import SimpleGraph

__all__ = [
    "SetSystem",
    "GrowthProfile",
    "DEFAULT_GROWTH_BUDGET",
    "is_shattered",
    "trace_count",
    "DEFAULT_VC_BUDGET",
    "vc_dimension",
    "matrix_vc_dimension",
    "column_vc_dimension",
    "row_vc_dimension",
    "graph_vc_dimension",
    "growth_function",
    "growth_profile",
    "sampled_growth_lower_bound",
    "phi",
]

DEFAULT_GROWTH_BUDGET = 2_000_000
DEFAULT_VC_BUDGET = 500_000


@dataclass(frozen=True)
class SetSystem:
    """Ground set ``0..ground_size-1`` and a family of subsets (duplicates allowed)."""

    ground_size: int
    family: tuple[int, ...]

    def __init__(self, ground_size: int, family: Iterable[int]):
        family = tuple(int(f) for f in family)
        if ground_size < 0:
            raise ValueError("ground_size must be non-negative")
        for k, f in enumerate(family):
            if f < 0 or f >> ground_size:
                raise ValueError(f"member {k} is not a subset of the ground set")
        object.__setattr__(self, "ground_size", ground_size)
        object.__setattr__(self, "family", family)

    @classmethod
    def from_sets(cls, ground_size: int, sets: Iterable[Iterable[int]]) -> "SetSystem":
        return cls(ground_size, [sum(1 << x for x in set(s)) for s in sets])

    @classmethod
    def columns_of(cls, A: BinaryMatrix) -> "SetSystem":
        """Columns of ``A`` as subsets of its row indices."""
        return cls(A.m, A.columns)

    @classmethod
    def rows_of(cls, A: BinaryMatrix) -> "SetSystem":
        """Rows of ``A`` as subsets of its column indices."""
        return cls(A.n, A.rows)

    @classmethod
    def neighbourhoods(cls, G: SimpleGraph) -> "SetSystem":
        return cls(G.n, G.adj)

    def distinct(self) -> "SetSystem":
        return SetSystem(self.ground_size, sorted(set(self.family)))


@dataclass(frozen=True)
class GrowthProfile:
    """Values of the growth function keyed by sample size."""

    values: dict[int, int]

    def __getitem__(self, n: int) -> int:
        return self.values[n]


def _check_subset(S: SetSystem, X: Iterable[int]) -> int:
    mask = 0
    for x in X:
        if not 0 <= x < S.ground_size:
            raise PreconditionError(f"element {x} outside ground set of size {S.ground_size}")
        mask |= 1 << x
    return mask


def trace_count(S: SetSystem, X: Iterable[int]) -> int:
    """Number of distinct intersections ``X & F`` over the family."""
    mask = _check_subset(S, X)
    return len({f & mask for f in S.family})


def is_shattered(S: SetSystem, X: Iterable[int]) -> bool:
    X = list(X)
    mask = _check_subset(S, X)
    k = mask.bit_count()
    return len({f & mask for f in S.family}) == 1 << k


def _reduced_incidence(S: SetSystem) -> np.ndarray:
    """Element-by-member 0/1 incidence over the distinct members.

    Elements contained in every member or in none are never part of a
    shattered set, and two elements with equal membership can never be
    shattered together, so only one representative of each is kept.
    """
    members = sorted(set(S.family))
    seen = set()
    rows = []
    for e in range(S.ground_size):
        row = tuple((f >> e) & 1 for f in members)
        if row not in seen and 0 < sum(row) < len(members):
            seen.add(row)
            rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(len(rows), len(members))


def vc_dimension(S: SetSystem, budget: int | None = DEFAULT_VC_BUDGET) -> int:
    """Size of the largest shattered subset; 0 for an empty family.

    Depth-first search over shattered sets in increasing element order. Each
    node labels every distinct member by its trace on the current set ``X``
    (a ``|X|``-bit code). Element ``e`` extends ``X`` iff every label occurs
    both with and without ``e``; a child's candidates are a subset of its
    parent's. Growing by ``j`` more elements needs at least ``2^j`` members
    per label, which bounds the useful depth.

    ``budget`` caps the number of visited nodes (``None`` for no cap);
    exceeding it raises ``BudgetExceededError``.
    """
    incidence = _reduced_incidence(S)
    n_elements, n_members = incidence.shape
    if n_members == 0:
        return 0
    ceiling = min(n_members.bit_length() - 1, n_elements)
    best = 0
    visited = 0

    def search(labels, k, cands):
        nonlocal best, visited
        visited += 1
        if budget is not None and visited > budget:
            raise BudgetExceededError(f"VC-dimension search exceeded {budget} nodes")
        best = max(best, k)
        if best >= ceiling or not len(cands):
            return
        room = int(np.bincount(labels, minlength=1 << k).min()).bit_length() - 1
        width = 1 << (k + 2)
        for pos, e in enumerate(cands):
            if k + min(room, len(cands) - pos) <= best:
                return
            child = labels * 2 + incidence[e]
            rest = cands[pos + 1:]
            if len(rest):
                codes = child * 2 + incidence[rest]
                codes += (np.arange(len(rest)) * width)[:, None]
                hits = np.bincount(codes.ravel(), minlength=len(rest) * width)
                rest = rest[hits.reshape(len(rest), width).all(axis=1)]
            search(child, k + 1, rest)
            if best >= ceiling:
                return

    search(np.zeros(n_members, dtype=np.int64), 0, np.arange(n_elements))
    return best


def column_vc_dimension(A: BinaryMatrix, budget: int | None = DEFAULT_VC_BUDGET) -> int:
    return vc_dimension(SetSystem.columns_of(A), budget)


def row_vc_dimension(A: BinaryMatrix, budget: int | None = DEFAULT_VC_BUDGET) -> int:
    return vc_dimension(SetSystem.rows_of(A), budget)


def matrix_vc_dimension(A: BinaryMatrix, budget: int | None = DEFAULT_VC_BUDGET) -> int:
    """Maximum of the column-system and row-system VC-dimensions."""
    return max(column_vc_dimension(A, budget), row_vc_dimension(A, budget))


def graph_vc_dimension(G: SimpleGraph, budget: int | None = DEFAULT_VC_BUDGET) -> int:
    return vc_dimension(SetSystem.neighbourhoods(G), budget)


def growth_function(S: SetSystem, n: int, budget: int = DEFAULT_GROWTH_BUDGET) -> int:
    """Exact maximum trace count over all ``n``-subsets of the ground set.

    Raises ``BudgetExceededError`` when more than ``budget`` subsets would be
    enumerated; use :func:`sampled_growth_lower_bound` in that regime.
    """
    N = S.ground_size
    if not 0 <= n <= N:
        raise PreconditionError(f"sample size {n} outside [0, {N}]")
    if comb(N, n) > budget:
        raise BudgetExceededError(
            f"C({N}, {n}) = {comb(N, n)} subsets exceeds budget {budget}; "
            "use sampled_growth_lower_bound instead"
        )
    members = set(S.family)
    cap = min(1 << n, len(members))
    best = 0
    for X in combinations(range(N), n):
        mask = sum(1 << x for x in X)
        best = max(best, len({f & mask for f in members}))
        if best == cap:
            break
    return best


def growth_profile(S: SetSystem, budget: int = DEFAULT_GROWTH_BUDGET) -> GrowthProfile:
    return GrowthProfile({n: growth_function(S, n, budget) for n in range(S.ground_size + 1)})


def sampled_growth_lower_bound(S: SetSystem, n: int, trials: int, seed: int) -> int:
    """Best trace count over ``trials`` uniformly random ``n``-subsets.

    Never exceeds the exact growth function; deterministic in ``seed``.
    """
    if trials < 1:
        raise PreconditionError("trials must be at least 1")
    N = S.ground_size
    if not 0 <= n <= N:
        raise PreconditionError(f"sample size {n} outside [0, {N}]")
    rng = random.Random(seed)
    members = set(S.family)
    best = 0
    for _ in range(trials):
        mask = sum(1 << x for x in rng.sample(range(N), n))
        best = max(best, len({f & mask for f in members}))
    return best


def phi(d: int, n: int) -> int:
    """Sauer-Shelah bound ``sum_{i=0}^{d} C(n, i)`` as an exact integer."""
    if d < 0 or n < 0:
        raise ValueError("d and n must be non-negative")
    return sum(comb(n, i) for i in range(min(d, n) + 1))
