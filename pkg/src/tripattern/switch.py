"""Greedy extraction of switch submatrices from twin-free matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bitmatrix import BinaryMatrix
from .errors import PreconditionError
from .patterns import is_switch_matrix
from .vcdim import phi

__all__ = [
    "SwitchWitness",
    "extract_switch",
    "switch_submatrix",
    "check_switch_witness",
    "calibrated_constant",
    "guaranteed_switch_size",
    "size_bound_holds",
]


@dataclass(frozen=True)
class SwitchWitness:
    """Rows ``r_1..r_k`` and column pairs ``(zero_col, one_col)`` of a host matrix."""

    rows: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def columns(self) -> tuple[int, ...]:
        """Host columns in switch order: ``zero_1, one_1, zero_2, one_2, ...``."""
        return tuple(c for pair in self.pairs for c in pair)


def extract_switch(A: BinaryMatrix) -> SwitchWitness:
    """Grow a switch submatrix one row and two columns at a time.

    Columns are grouped by their pattern on the chosen rows. Each step takes
    the group with the most unused columns (ties: lexicographically smallest
    pattern, read in row-selection order), its two smallest unused columns,
    and the first row where they differ. The column reading 0 there becomes
    the zero column of the new pair. Stops once no group has two unused
    columns.
    """
    cols = A.columns
    if len(set(cols)) != len(cols):
        raise PreconditionError("extract_switch needs pairwise distinct columns; run dedup_columns first")
    rows: list[int] = []
    pairs: list[tuple[int, int]] = []
    # pattern string -> unused columns in ascending order
    groups: dict[str, list[int]] = {"": list(range(A.n))}
    while True:
        key = min(groups, key=lambda x: (-len(groups[x]), x), default=None)
        if key is None or len(groups[key]) < 2:
            break
        c, c2 = groups[key][0], groups[key][1]
        diff = cols[c] ^ cols[c2]
        r = (diff & -diff).bit_length() - 1
        zero, one = (c, c2) if not (cols[c] >> r) & 1 else (c2, c)
        rows.append(r)
        pairs.append((zero, one))
        used = {c, c2}
        regrouped: dict[str, list[int]] = {}
        for pattern, members in groups.items():
            for j in members:
                if j not in used:
                    regrouped.setdefault(pattern + str((cols[j] >> r) & 1), []).append(j)
        groups = regrouped
    return SwitchWitness(tuple(rows), tuple(pairs))


def switch_submatrix(A: BinaryMatrix, w: SwitchWitness) -> BinaryMatrix:
    return A.submatrix(w.rows, w.columns)


def check_switch_witness(A: BinaryMatrix, w: SwitchWitness) -> list[str]:
    """Independent validation of a witness; returns the list of problems found."""
    problems = []
    if len(w.rows) != len(w.pairs):
        problems.append("row count differs from pair count")
    if len(set(w.rows)) != len(w.rows):
        problems.append("repeated row")
    if len(set(w.columns)) != len(w.columns):
        problems.append("repeated column")
    if any(not 0 <= r < A.m for r in w.rows) or any(not 0 <= c < A.n for c in w.columns):
        return problems + ["index out of range"]
    for i, (r, (z, o)) in enumerate(zip(w.rows, w.pairs)):
        if A.entry(r, z) != 0 or A.entry(r, o) != 1:
            problems.append(f"pair {i} does not read 0,1 on row {r}")
        for z2, o2 in w.pairs[i + 1:]:
            if A.entry(r, z2) != A.entry(r, o2):
                problems.append(f"row {r} separates later pair ({z2},{o2})")
    if not problems and not is_switch_matrix(switch_submatrix(A, w)):
        problems.append("selected submatrix is not a switch matrix")
    return problems


@lru_cache(maxsize=None)
def calibrated_constant(d: int, n: int) -> Fraction:
    """Smallest ``c >= 2`` with ``c * x**d >= phi(d, x)`` for all integers ``1 <= x <= max(n, 1)``."""
    if d < 1:
        raise ValueError("d must be at least 1")
    c = Fraction(2)
    for x in range(1, max(n, 1) + 1):
        c = max(c, Fraction(phi(d, x), x ** d))
    return c


def guaranteed_switch_size(n: int, d: int) -> int:
    """``floor((1/2) * (n / c) ** (1/d))`` with the calibrated constant, computed exactly."""
    if d < 1 or n < 0:
        raise ValueError("need d >= 1 and n >= 0")
    c = calibrated_constant(d, n)
    k = 0
    while c * (2 * (k + 1)) ** d <= n:
        k += 1
    return k


def size_bound_holds(k: int, n: int, d: int) -> bool:
    """Integer form of the switch-size guarantee: ``c * (2k + 2) ** d > n``."""
    d = max(d, 1)
    return calibrated_constant(d, n) * (2 * k + 2) ** d > n
