"""Seeded matrix families with controlled VC-dimension.

Randomness comes from NumPy's ``PCG64`` bit generator seeded with the
64-bit ``seed`` parameter, so streams are reproducible across platforms and
NumPy versions that keep ``Generator.integers``/``random``/``choice``
stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .bitmatrix import BinaryMatrix
from .errors import ParseError
from .patterns import TriPattern, make_tri_matrix

__all__ = [
    "RNG_ALGORITHM",
    "FAMILIES",
    "GeneratorSpec",
    "parse_generator_spec",
    "generate",
    "declared_vc_bound",
    "half_graph",
    "matching",
    "co_matching",
    "interval",
    "interval_matrix",
    "boxes",
    "box_matrix",
    "random_bipartite",
]

RNG_ALGORITHM = "numpy.PCG64"


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def half_graph(n: int) -> BinaryMatrix:
    """Entry ``(i, j)`` is 1 iff ``i <= j``."""
    return make_tri_matrix(TriPattern(1, 1, 0), n)


def matching(n: int) -> BinaryMatrix:
    return make_tri_matrix(TriPattern(0, 1, 0), n)


def co_matching(n: int) -> BinaryMatrix:
    return make_tri_matrix(TriPattern(1, 0, 1), n)


def interval_matrix(points: Sequence[int], intervals: Sequence[tuple[int, int]]) -> BinaryMatrix:
    """Rows are points, columns closed intervals ``[lo, hi]``; 1 marks membership."""
    pts = np.asarray(points, dtype=np.int64).reshape(-1, 1)
    iv = np.asarray(intervals, dtype=np.int64).reshape(-1, 2)
    return BinaryMatrix.from_array((pts >= iv[:, 0]) & (pts <= iv[:, 1]))


def interval(points: int, intervals: int, seed: int = 0) -> BinaryMatrix:
    """Random intervals over ``points`` distinct sorted integers from ``[0, 4*points)``."""
    if points < 1 or intervals < 1:
        raise ValueError("interval needs points >= 1 and intervals >= 1")
    rng = _rng(seed)
    span = 4 * points
    pts = np.sort(rng.choice(span, size=points, replace=False))
    ends = np.sort(rng.integers(0, span, size=(intervals, 2)), axis=1)
    return interval_matrix(pts, ends)


def box_matrix(points, boxes) -> BinaryMatrix:
    """``points`` has shape ``(p, k)``; ``boxes`` has shape ``(b, k, 2)`` holding ``[lo, hi]`` per axis."""
    pts = np.asarray(points, dtype=np.int64)
    bx = np.asarray(boxes, dtype=np.int64)
    if pts.ndim != 2 or bx.ndim != 3 or bx.shape[1] != pts.shape[1] or bx.shape[2] != 2:
        raise ValueError("points must be (p, k) and boxes (b, k, 2)")
    lo = bx[None, :, :, 0]
    hi = bx[None, :, :, 1]
    p = pts[:, None, :]
    return BinaryMatrix.from_array(((p >= lo) & (p <= hi)).all(axis=2))


def boxes(points: int, boxes: int, k: int = 2, seed: int = 0) -> BinaryMatrix:
    """Random axis-aligned boxes over random points of the grid ``[0, 4*points)^k``."""
    if points < 1 or boxes < 1 or k < 1:
        raise ValueError("boxes needs points >= 1, boxes >= 1 and k >= 1")
    rng = _rng(seed)
    span = 4 * points
    pts = rng.integers(0, span, size=(points, k))
    corners = np.sort(rng.integers(0, span, size=(boxes, k, 2)), axis=2)
    return box_matrix(pts, corners)


def random_bipartite(m: int, n: int, p: float = 0.5, seed: int = 0) -> BinaryMatrix:
    """I.i.d. entries equal to 1 with probability ``p``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if m < 0 or n < 0:
        raise ValueError("dimensions must be non-negative")
    return BinaryMatrix.from_array(_rng(seed).random((m, n)) < p)


# family -> (builder, {param: (type, default)}, size params filled by experiments)
FAMILIES = {
    "half_graph": (half_graph, {"n": (int, None)}, ("n",)),
    "matching": (matching, {"n": (int, None)}, ("n",)),
    "co_matching": (co_matching, {"n": (int, None)}, ("n",)),
    "interval": (interval, {"points": (int, None), "intervals": (int, None), "seed": (int, 0)}, ("points", "intervals")),
    "boxes": (boxes, {"points": (int, None), "boxes": (int, None), "k": (int, 2), "seed": (int, 0)}, ("points", "boxes")),
    "random_bipartite": (random_bipartite, {"m": (int, None), "n": (int, None), "p": (float, 0.5), "seed": (int, 0)}, ("m", "n")),
}


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        known = FAMILIES[self.family][1]
        for key in self.params:
            if key not in known:
                raise ValueError(f"family {self.family!r} has no parameter {key!r}")

    def with_params(self, **overrides) -> "GeneratorSpec":
        return GeneratorSpec(self.family, {**self.params, **overrides})

    def with_size(self, n: int) -> "GeneratorSpec":
        """Fill the family's size parameters that the spec leaves unset."""
        sizes = {k: n for k in FAMILIES[self.family][2] if k not in self.params}
        return self.with_params(**sizes)

    def resolved(self) -> dict:
        out = {}
        for key, (_, default) in FAMILIES[self.family][1].items():
            if key in self.params:
                out[key] = self.params[key]
            elif default is None:
                raise ValueError(f"family {self.family!r} needs parameter {key!r}")
            else:
                out[key] = default
        return out

    def __str__(self):
        if not self.params:
            return self.family
        return self.family + ":" + ",".join(f"{k}={v}" for k, v in self.params.items())


def parse_generator_spec(text: str) -> GeneratorSpec:
    """Parse ``family[:key=value,key=value,...]``."""
    family, _, rest = text.strip().partition(":")
    if family not in FAMILIES:
        raise ParseError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    types = FAMILIES[family][1]
    params = {}
    for item in filter(None, rest.split(",")):
        key, eq, value = item.partition("=")
        key = key.strip()
        if not eq or key not in types:
            raise ParseError(f"bad parameter {item!r} for family {family!r}")
        try:
            params[key] = types[key][0](value.strip())
        except ValueError:
            raise ParseError(f"parameter {key!r} expects {types[key][0].__name__}, got {value!r}") from None
    return GeneratorSpec(family, params)


def generate(spec: GeneratorSpec | str) -> BinaryMatrix:
    if isinstance(spec, str):
        spec = parse_generator_spec(spec)
    builder = FAMILIES[spec.family][0]
    return builder(**spec.resolved())


def declared_vc_bound(spec: GeneratorSpec) -> int | None:
    """A-priori upper bound on the matrix VC-dimension, where the family has one."""
    if spec.family in ("half_graph", "matching", "co_matching"):
        return 1
    if spec.family == "interval":
        return 2
    return None
