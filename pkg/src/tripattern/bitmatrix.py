"""Bit-packed binary matrices.

Each row is stored as a Python ``int`` whose bit ``j`` holds entry ``(i, j)``.
Columns are materialized lazily in the same representation (bit ``i`` of
column ``j`` holds entry ``(i, j)``), which makes grouping columns by their
restriction to a row set a matter of masking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ParseError, PreconditionError

__all__ = [
    "BinaryMatrix",
    "IndexSelection",
    "entry",
    "submatrix",
    "transpose",
    "complement",
    "column_twin_classes",
    "dedup_columns",
    "parse_matrix",
    "serialize_matrix",
]


def _int_to_bits(value: int, width: int) -> np.ndarray:
    if width == 0:
        return np.zeros(0, dtype=np.uint8)
    raw = value.to_bytes((width + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:width]


def _bits_to_int(bits: np.ndarray) -> int:
    if bits.size == 0:
        return 0
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


@dataclass(frozen=True)
class IndexSelection:
    """Ordered row and column indices selecting a submatrix."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __init__(self, rows: Iterable[int], cols: Iterable[int]):
        object.__setattr__(self, "rows", tuple(int(r) for r in rows))
        object.__setattr__(self, "cols", tuple(int(c) for c in cols))

    def check(self, m: int, n: int) -> None:
        """Raise ``PreconditionError`` unless the selection is valid for an ``m x n`` host."""
        for name, idx, bound in (("row", self.rows, m), ("column", self.cols, n)):
            if len(set(idx)) != len(idx):
                raise PreconditionError(f"duplicate {name} index in selection {list(idx)}")
            for k in idx:
                if not 0 <= k < bound:
                    raise PreconditionError(f"{name} index {k} out of range [0, {bound})")


class BinaryMatrix:
    """Immutable ``m x n`` 0/1 matrix with row-major bit packing."""

    __slots__ = ("m", "n", "_rows", "_cols")

    def __init__(self, m: int, n: int, rows: Sequence[int]):
        if m < 0 or n < 0:
            raise ValueError("matrix dimensions must be non-negative")
        rows = tuple(int(r) for r in rows)
        if len(rows) != m:
            raise ValueError(f"expected {m} rows, got {len(rows)}")
        limit = 1 << n
        for i, r in enumerate(rows):
            if r < 0 or r >= limit:
                raise ValueError(f"row {i} has bits outside {n} columns")
        self.m = m
        self.n = n
        self._rows = rows
        self._cols = None

    # construction -------------------------------------------------------

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]], n: int | None = None) -> "BinaryMatrix":
        """Build from nested sequences of 0/1 values (or strings of '0'/'1')."""
        data = [list(row) for row in data]
        if n is None:
            n = len(data[0]) if data else 0
        rows = []
        for i, row in enumerate(data):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            value = 0
            for j, x in enumerate(row):
                x = int(x)
                if x not in (0, 1):
                    raise ValueError(f"entry ({i}, {j}) is not binary: {x!r}")
                value |= x << j
            rows.append(value)
        return cls(len(rows), n, rows)

    @classmethod
    def from_array(cls, array) -> "BinaryMatrix":
        arr = np.asarray(array)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-d array, got shape {arr.shape}")
        if arr.size and not np.isin(arr, (0, 1)).all():
            raise ValueError("array entries must be 0 or 1")
        bits = arr.astype(np.uint8)
        m, n = bits.shape
        return cls(m, n, [_bits_to_int(bits[i]) for i in range(m)])

    @classmethod
    def from_columns(cls, m: int, columns: Sequence[int]) -> "BinaryMatrix":
        """Build from column bitsets (bit ``i`` of ``columns[j]`` is entry ``(i, j)``)."""
        return cls(len(columns), m, columns).transpose()

    @classmethod
    def zeros(cls, m: int, n: int) -> "BinaryMatrix":
        return cls(m, n, [0] * m)

    @classmethod
    def ones(cls, m: int, n: int) -> "BinaryMatrix":
        return cls(m, n, [(1 << n) - 1] * m)

    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    # access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.m, self.n)

    @property
    def rows(self) -> tuple[int, ...]:
        """Row bitsets."""
        return self._rows

    @property
    def columns(self) -> tuple[int, ...]:
        """Column bitsets, computed once on first access."""
        if self._cols is None:
            self._cols = self.transpose()._rows
        return self._cols

    def row(self, i: int) -> int:
        return self._rows[i]

    def column(self, j: int) -> int:
        return self.columns[j]

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.m and 0 <= j < self.n):
            raise IndexError(f"entry ({i}, {j}) out of range for {self.m}x{self.n} matrix")
        return (self._rows[i] >> j) & 1

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entry(i, j)

    # algebra ------------------------------------------------------------

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "BinaryMatrix":
        sel = rows if isinstance(rows, IndexSelection) else IndexSelection(rows, cols)
        sel.check(self.m, self.n)
        out = []
        for r in sel.rows:
            src = self._rows[r]
            value = 0
            for k, c in enumerate(sel.cols):
                value |= ((src >> c) & 1) << k
            out.append(value)
        return BinaryMatrix(len(sel.rows), len(sel.cols), out)

    def transpose(self) -> "BinaryMatrix":
        if self.m == 0 or self.n == 0:
            return BinaryMatrix(self.n, self.m, [0] * self.n)
        bits = self.to_array().T
        return BinaryMatrix(self.n, self.m, [_bits_to_int(np.ascontiguousarray(bits[j])) for j in range(self.n)])

    def complement(self) -> "BinaryMatrix":
        full = (1 << self.n) - 1
        return BinaryMatrix(self.m, self.n, [full ^ r for r in self._rows])

    # conversion ---------------------------------------------------------

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.m, self.n), dtype=np.uint8)
        for i, r in enumerate(self._rows):
            out[i] = _int_to_bits(r, self.n)
        return out

    def tolist(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self._rows]

    def row_string(self, i: int) -> str:
        r = self._rows[i]
        return "".join("1" if (r >> j) & 1 else "0" for j in range(self.n))

    def __eq__(self, other):
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self.m == other.m and self.n == other.n and self._rows == other._rows

    def __hash__(self):
        return hash((self.m, self.n, self._rows))

    def __repr__(self):
        if self.m * self.n <= 64:
            return f"BinaryMatrix({self.tolist()!r})" if self.m else f"BinaryMatrix(0x{self.n})"
        return f"<BinaryMatrix {self.m}x{self.n}>"


def entry(A: BinaryMatrix, i: int, j: int) -> int:
    return A.entry(i, j)


def submatrix(A: BinaryMatrix, sel: IndexSelection) -> BinaryMatrix:
    """Rows ``sel.rows`` and columns ``sel.cols`` of ``A``, in selection order."""
    return A.submatrix(sel, None)


def transpose(A: BinaryMatrix) -> BinaryMatrix:
    return A.transpose()


def complement(A: BinaryMatrix) -> BinaryMatrix:
    return A.complement()


def column_twin_classes(A: BinaryMatrix) -> list[list[int]]:
    """Partition column indices into classes of bitwise-identical columns.

    Classes are ordered by their smallest member; members are ascending.
    """
    classes: dict[int, list[int]] = {}
    for j, col in enumerate(A.columns):
        classes.setdefault(col, []).append(j)
    # dict preserves first-insertion order, which is by smallest member
    return list(classes.values())


def dedup_columns(A: BinaryMatrix) -> tuple[BinaryMatrix, list[int]]:
    """Keep the smallest-index column of each twin class, in ascending order."""
    kept = [cls[0] for cls in column_twin_classes(A)]
    return A.submatrix(range(A.m), kept), kept


def parse_matrix(text: str) -> BinaryMatrix:
    """Parse the ``"m n"`` header + ``m`` bit-string lines text format."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    else:
        raise ParseError(f"line {len(lines)} is not newline-terminated", line=len(lines))
    if not lines:
        raise ParseError("line 1: missing header", line=1)
    header = lines[0].split(" ")
    if len(header) != 2 or not all(h.isdigit() and h.isascii() for h in header):
        raise ParseError(f"line 1: malformed header {lines[0]!r}, expected 'm n'", line=1)
    m, n = int(header[0]), int(header[1])
    if len(lines) - 1 != m:
        raise ParseError(
            f"line {len(lines)}: expected {m} matrix lines after the header, found {len(lines) - 1}",
            line=len(lines),
        )
    rows = []
    for i, line in enumerate(lines[1:]):
        lineno = i + 2
        if len(line) != n:
            raise ParseError(f"line {lineno} has length {len(line)}, expected {n}", line=lineno)
        bad = set(line) - {"0", "1"}
        if bad:
            raise ParseError(f"line {lineno} has unexpected character {sorted(bad)[0]!r}", line=lineno)
        rows.append(int(line[::-1], 2) if n else 0)
    return BinaryMatrix(m, n, rows)


def serialize_matrix(A: BinaryMatrix) -> str:
    parts = [f"{A.m} {A.n}\n"]
    parts.extend(A.row_string(i) + "\n" for i in range(A.m))
    return "".join(parts)
