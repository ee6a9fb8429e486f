"""Tri-pattern matrices, switch matrices and extraction certificates.

A square matrix follows the tri-pattern ``(alpha, beta, gamma)`` when it is
constantly ``alpha`` strictly above the diagonal, ``beta`` on it and
``gamma`` strictly below. The six inhomogeneous patterns are the biadjacency
matrices of a matching, a co-matching and (possibly strict or complemented)
half-graphs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

from .bitmatrix import BinaryMatrix
from .errors import ParseError, PreconditionError

__all__ = [
    "TriPattern",
    "PatternKind",
    "ExtractionCertificate",
    "CertificateCheck",
    "ALL_PATTERNS",
    "INHOMOGENEOUS_PATTERNS",
    "make_tri_matrix",
    "classify",
    "canonical_kind",
    "verify_certificate",
    "is_switch_matrix",
    "serialize_certificate",
    "parse_certificate",
]


class TriPattern(NamedTuple):
    alpha: Optional[int]
    beta: int
    gamma: Optional[int]

    @property
    def inhomogeneous(self) -> bool:
        return not (self.alpha == self.beta == self.gamma)

    @property
    def complete(self) -> bool:
        return self.alpha is not None and self.gamma is not None

    def value(self, i: int, j: int) -> Optional[int]:
        """Pattern value at relative position ``(i, j)``."""
        if i < j:
            return self.alpha
        if i == j:
            return self.beta
        return self.gamma

    def __str__(self):
        sym = ["*" if x is None else str(x) for x in self]
        return "(" + ",".join(sym) + ")"


ALL_PATTERNS = tuple(TriPattern(a, b, g) for a in (0, 1) for b in (0, 1) for g in (0, 1))
INHOMOGENEOUS_PATTERNS = tuple(p for p in ALL_PATTERNS if p.inhomogeneous)


class PatternKind(enum.Enum):
    MATCHING = "matching"
    CO_MATCHING = "co_matching"
    HALF_GRAPH = "half_graph"
    HOMOGENEOUS = "homogeneous"

    def __str__(self):
        return self.value


_KINDS = {
    (0, 1, 0): PatternKind.MATCHING,
    (1, 0, 1): PatternKind.CO_MATCHING,
    (1, 1, 0): PatternKind.HALF_GRAPH,
    (0, 1, 1): PatternKind.HALF_GRAPH,
    (1, 0, 0): PatternKind.HALF_GRAPH,
    (0, 0, 1): PatternKind.HALF_GRAPH,
    (0, 0, 0): PatternKind.HOMOGENEOUS,
    (1, 1, 1): PatternKind.HOMOGENEOUS,
}


def canonical_kind(p: TriPattern) -> PatternKind:
    """Named bipartite pattern realized by ``p``.

    The strict chains ``(1,0,0)`` and ``(0,0,1)`` count as half-graphs: dropping
    one row and one column of a strict chain of size ``n`` leaves a half-graph
    of size ``n - 1``.
    """
    try:
        return _KINDS[tuple(p)]
    except KeyError:
        raise ValueError(f"pattern {p} is not fully specified") from None


def make_tri_matrix(p: TriPattern, n: int) -> BinaryMatrix:
    if n < 0:
        raise ValueError("size must be non-negative")
    full = (1 << n) - 1
    rows = []
    for i in range(n):
        below = (1 << i) - 1
        above = full ^ below ^ (1 << i)
        rows.append((below if p.gamma else 0) | (above if p.alpha else 0) | ((1 << i) if p.beta else 0))
    return BinaryMatrix(n, n, rows)


def classify(A: BinaryMatrix) -> Optional[TriPattern]:
    """The tri-pattern of square ``A``, or ``None`` if it has none.

    A ``1 x 1`` matrix only determines its diagonal and is reported as the
    homogeneous pattern ``(b, b, b)``.
    """
    if A.m != A.n:
        raise PreconditionError(f"classify needs a square matrix, got {A.m}x{A.n}")
    n = A.n
    if n == 0:
        raise PreconditionError("classify needs a matrix of size at least 1")
    beta = A.entry(0, 0)
    if n == 1:
        return TriPattern(beta, beta, beta)
    alpha = A.entry(0, 1)
    gamma = A.entry(1, 0)
    p = TriPattern(alpha, beta, gamma)
    return p if A == make_tri_matrix(p, n) else None


@dataclass(frozen=True)
class ExtractionCertificate:
    """Host row and column indices claimed to carry ``pattern``."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    pattern: TriPattern
    kind: PatternKind = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        object.__setattr__(self, "cols", tuple(int(c) for c in self.cols))
        object.__setattr__(self, "pattern", TriPattern(*self.pattern))
        if self.kind is None:
            object.__setattr__(self, "kind", canonical_kind(self.pattern))

    @property
    def size(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class CertificateCheck:
    """Outcome of :func:`verify_certificate`; truthy iff the certificate holds."""

    ok: bool
    reason: str = ""
    entry: Optional[tuple[int, int]] = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "ok" if self.ok else f"violation: {self.reason}"


MIN_CERTIFIED_SIZE = 2


def verify_certificate(host: BinaryMatrix, cert: ExtractionCertificate) -> CertificateCheck:
    """Check ``cert`` against ``host`` without trusting whoever produced it.

    Reports the first failure among: index validity, the minimum size of 2,
    the entries of the selected submatrix (row-major order), ``alpha != beta``
    and the consistency of the declared kind.
    """
    k = len(cert.rows)
    if len(cert.cols) != k:
        return CertificateCheck(False, f"{k} rows but {len(cert.cols)} columns")
    for name, idx, bound in (("row", cert.rows, host.m), ("column", cert.cols, host.n)):
        if len(set(idx)) != len(idx):
            return CertificateCheck(False, f"duplicate {name} index")
        for x in idx:
            if not 0 <= x < bound:
                return CertificateCheck(False, f"{name} index {x} out of range [0, {bound})")
    if k < MIN_CERTIFIED_SIZE:
        return CertificateCheck(False, f"size {k} is below the minimum certified size {MIN_CERTIFIED_SIZE}")
    p = cert.pattern
    if not p.complete:
        return CertificateCheck(False, f"pattern {p} is not fully specified")
    names = {-1: "gamma", 0: "beta", 1: "alpha"}
    for i, r in enumerate(cert.rows):
        row = host.rows[r]
        for j, c in enumerate(cert.cols):
            found = (row >> c) & 1
            want = p.value(i, j)
            if found != want:
                which = names[(j > i) - (j < i)]
                return CertificateCheck(
                    False,
                    f"claimed {which}={want}, found {found} at relative ({i},{j}) / host ({r},{c})",
                    (i, j),
                )
    if p.alpha == p.beta:
        return CertificateCheck(False, f"pattern {p} has alpha == beta")
    if cert.kind is not canonical_kind(p):
        return CertificateCheck(False, f"kind {cert.kind} does not match pattern {p}")
    return CertificateCheck(True)


def is_switch_matrix(A: BinaryMatrix) -> bool:
    """True iff ``A`` is ``k x 2k`` with row ``i`` reading 0 then 1 at columns
    ``2i, 2i+1`` and agreeing on each later pair ``2j, 2j+1`` (``j > i``)."""
    k = A.m
    if A.n != 2 * k:
        return False
    for i, row in enumerate(A.rows):
        if (row >> (2 * i)) & 1 or not (row >> (2 * i + 1)) & 1:
            return False
        for j in range(i + 1, k):
            if ((row >> (2 * j)) ^ (row >> (2 * j + 1))) & 1:
                return False
    return True


def serialize_certificate(cert: ExtractionCertificate) -> str:
    a, b, g = cert.pattern
    return (
        f"{cert.size}\n"
        f"pattern {a} {b} {g}\n"
        "rows" + "".join(f" {r}" for r in cert.rows) + "\n"
        "cols" + "".join(f" {c}" for c in cert.cols) + "\n"
    )


def _ints(tokens: Sequence[str], lineno: int) -> list[int]:
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: expected decimal integers", line=lineno) from None
    if any(v < 0 for v in values):
        raise ParseError(f"line {lineno}: indices must be non-negative", line=lineno)
    return values


def parse_certificate(text: str) -> ExtractionCertificate:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) != 4:
        raise ParseError(f"expected 4 certificate lines, found {len(lines)}", line=len(lines))
    if len(lines[0].split(" ")) != 1:
        raise ParseError("line 1: expected the certificate size", line=1)
    (k,) = _ints([lines[0]], 1)
    parts = lines[1].split(" ")
    if parts[0] != "pattern" or len(parts) != 4:
        raise ParseError("line 2: expected 'pattern a b g'", line=2)
    bits = _ints(parts[1:], 2)
    if any(b not in (0, 1) for b in bits):
        raise ParseError("line 2: pattern values must be 0 or 1", line=2)
    lists = []
    for lineno, tag in ((3, "rows"), (4, "cols")):
        parts = lines[lineno - 1].split(" ")
        if parts[0] != tag:
            raise ParseError(f"line {lineno}: expected '{tag} ...'", line=lineno)
        values = _ints(parts[1:], lineno)
        if len(values) != k:
            raise ParseError(f"line {lineno}: expected {k} indices, found {len(values)}", line=lineno)
        lists.append(values)
    return ExtractionCertificate(lists[0], lists[1], TriPattern(*bits))
