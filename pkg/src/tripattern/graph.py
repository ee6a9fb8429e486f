"""Simple undirected graphs on ``0..n-1`` with bitset adjacency."""

from __future__ import annotations

from typing import Iterable, Sequence

from .bitmatrix import BinaryMatrix

__all__ = ["SimpleGraph"]


class SimpleGraph:
    """Loopless undirected graph; ``adj[v]`` is the neighbour bitset of ``v``."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        adj = tuple(int(a) for a in adj)
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        for v, a in enumerate(adj):
            if (a >> v) & 1:
                raise ValueError(f"vertex {v} has a loop")
            if a >> n:
                raise ValueError(f"vertex {v} has neighbours outside 0..{n - 1}")
        for v, a in enumerate(adj):
            w = a
            while w:
                low = w & -w
                u = low.bit_length() - 1
                if not (adj[u] >> v) & 1:
                    raise ValueError(f"adjacency is not symmetric at ({v}, {u})")
                w ^= low
        self.n = n
        self.adj = adj

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def from_adjacency_matrix(cls, A: BinaryMatrix) -> "SimpleGraph":
        if A.m != A.n:
            raise ValueError("adjacency matrix must be square")
        return cls(A.n, A.rows)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)])

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, [0] * n)

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    def complement(self) -> "SimpleGraph":
        full = (1 << self.n) - 1
        return SimpleGraph(self.n, [full ^ a ^ (1 << v) for v, a in enumerate(self.adj)])

    def adjacency_matrix(self) -> BinaryMatrix:
        return BinaryMatrix(self.n, self.n, self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if (self.adj[u] >> v) & 1]

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = sum(1 << v for v in vs)
        return all((self.adj[v] | (1 << v)) & mask == mask for v in vs)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = sum(1 << v for v in vs)
        return all(self.adj[v] & mask == 0 for v in vs)

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, edges={self.edges()!r})"
