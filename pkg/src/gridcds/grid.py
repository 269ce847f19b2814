"""Grid graphs G_{m,n}, vertex sets over them, and the domination predicates.

Coordinates are 1-based ``(x, y)`` with ``x`` in ``[1, m]`` and ``y`` in
``[1, n]``.  A :class:`VertexSet` stores its members as an integer bitmask in
which vertex ``(x, y)`` owns bit ``(x - 1) * n + (y - 1)``, so increasing bit
order is lexicographic ``(x, y)`` order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Tuple

from .errors import RangeError

Vertex = Tuple[int, int]


@dataclass(frozen=True, order=True)
class GridDims:
    m: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise RangeError(f"grid dimensions must be integers, got {self.m!r}x{self.n!r}")
        if self.m < 1 or self.n < 1:
            raise RangeError(f"grid dimensions must be positive, got {self.m}x{self.n}")

    @property
    def size(self) -> int:
        return self.m * self.n

    @property
    def full_mask(self) -> int:
        return (1 << (self.m * self.n)) - 1

    def contains(self, v: Vertex) -> bool:
        x, y = v
        return 1 <= x <= self.m and 1 <= y <= self.n

    def index(self, v: Vertex) -> int:
        if not self.contains(v):
            raise RangeError(f"vertex {v} is outside the {self.m}x{self.n} grid")
        return (v[0] - 1) * self.n + (v[1] - 1)

    def vertex(self, i: int) -> Vertex:
        return (i // self.n + 1, i % self.n + 1)

    def transposed(self) -> "GridDims":
        return GridDims(self.n, self.m)

    def vertices(self) -> Iterator[Vertex]:
        for x in range(1, self.m + 1):
            for y in range(1, self.n + 1):
                yield (x, y)

    def __str__(self) -> str:
        return f"{self.m}x{self.n}"


def _as_dims(dims) -> GridDims:
    if isinstance(dims, GridDims):
        return dims
    return GridDims(*dims)


@lru_cache(maxsize=256)
def neighbor_masks(dims: GridDims) -> Tuple[int, ...]:
    """Open-neighbourhood bitmask of every vertex, indexed by bit position."""
    out = []
    for v in dims.vertices():
        mask = 0
        for w in neighbors(v, dims):
            mask |= 1 << dims.index(w)
        out.append(mask)
    return tuple(out)


@lru_cache(maxsize=256)
def closed_masks(dims: GridDims) -> Tuple[int, ...]:
    """Closed-neighbourhood bitmask N[v] of every vertex, indexed by bit position."""
    return tuple(mask | (1 << i) for i, mask in enumerate(neighbor_masks(dims)))


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def neighbors(v: Vertex, dims) -> list:
    """Orthogonal neighbours of ``v`` inside the grid, in lexicographic order."""
    dims = _as_dims(dims)
    if not dims.contains(v):
        raise RangeError(f"vertex {v} is outside the {dims} grid")
    x, y = v
    cand = [(x - 1, y), (x, y - 1), (x, y + 1), (x + 1, y)]
    return [w for w in cand if dims.contains(w)]


def dominated_mask(dims: GridDims, mask: int) -> int:
    """Bitmask of vertices dominated by the members of ``mask``."""
    closed = closed_masks(dims)
    out = 0
    for i in iter_bits(mask):
        out |= closed[i]
    return out


def component_mask(dims: GridDims, mask: int, start: int) -> int:
    """Bits of ``mask`` reachable from bit ``start`` through members of ``mask``."""
    nbrs = neighbor_masks(dims)
    seen = 1 << start
    frontier = seen
    while frontier:
        grow = 0
        for i in iter_bits(frontier):
            grow |= nbrs[i]
        grow &= mask & ~seen
        seen |= grow
        frontier = grow
    return seen


def mask_is_connected(dims: GridDims, mask: int) -> bool:
    if not mask:
        return False
    start = (mask & -mask).bit_length() - 1
    return component_mask(dims, mask, start) == mask


class VertexSet:
    """Immutable set of vertices bound to one grid.

    Supports ``in``, ``len``, iteration in lexicographic order, equality,
    hashing and the set operators ``| & - ^`` between sets on the same grid.
    """

    __slots__ = ("dims", "mask")

    def __init__(self, dims, vertices: Iterable[Vertex] = ()):
        dims = _as_dims(dims)
        mask = 0
        for v in vertices:
            v = (int(v[0]), int(v[1]))
            mask |= 1 << dims.index(v)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    @classmethod
    def from_mask(cls, dims, mask: int) -> "VertexSet":
        dims = _as_dims(dims)
        if mask < 0 or mask & ~dims.full_mask:
            raise RangeError(f"mask has bits outside the {dims} grid")
        obj = cls.__new__(cls)
        object.__setattr__(obj, "dims", dims)
        object.__setattr__(obj, "mask", mask)
        return obj

    @classmethod
    def full(cls, dims) -> "VertexSet":
        dims = _as_dims(dims)
        return cls.from_mask(dims, dims.full_mask)

    def __contains__(self, v) -> bool:
        if not self.dims.contains(v):
            return False
        return bool(self.mask >> self.dims.index(v) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[Vertex]:
        for i in iter_bits(self.mask):
            yield self.dims.vertex(i)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.dims == other.dims and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.dims, self.mask))

    def __lt__(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> tuple:
        return tuple(iter_bits(self.mask))

    def _check(self, other: "VertexSet") -> None:
        if not isinstance(other, VertexSet):
            raise TypeError(f"expected VertexSet, got {type(other).__name__}")
        if other.dims != self.dims:
            raise RangeError(f"vertex sets live on different grids ({self.dims} vs {other.dims})")

    def __or__(self, other):
        self._check(other)
        return VertexSet.from_mask(self.dims, self.mask | other.mask)

    def __and__(self, other):
        self._check(other)
        return VertexSet.from_mask(self.dims, self.mask & other.mask)

    def __sub__(self, other):
        self._check(other)
        return VertexSet.from_mask(self.dims, self.mask & ~other.mask)

    def __xor__(self, other):
        self._check(other)
        return VertexSet.from_mask(self.dims, self.mask ^ other.mask)

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & other.mask == 0

    def add(self, *vertices: Vertex) -> "VertexSet":
        return self | VertexSet(self.dims, vertices)

    def remove(self, *vertices: Vertex) -> "VertexSet":
        return self - VertexSet(self.dims, vertices)

    def to_list(self) -> list:
        return [list(v) for v in self]

    def __repr__(self) -> str:
        return f"VertexSet({self.dims}, {list(self)})"


def is_dominating(S: VertexSet) -> bool:
    """Every grid vertex is in ``S`` or adjacent to a member of ``S``."""
    return dominated_mask(S.dims, S.mask) == S.dims.full_mask


def is_connected(S: VertexSet) -> bool:
    """``S`` is nonempty and its induced subgraph is connected."""
    return mask_is_connected(S.dims, S.mask)


def is_cds(S: VertexSet) -> bool:
    return is_dominating(S) and is_connected(S)


def transpose(S: VertexSet) -> VertexSet:
    """Mirror ``S`` across the diagonal onto the n x m grid."""
    return VertexSet(S.dims.transposed(), ((y, x) for x, y in S))


def to_json_dict(S: VertexSet) -> dict:
    return {"m": S.dims.m, "n": S.dims.n, "vertices": S.to_list()}


def from_json_dict(data: dict) -> VertexSet:
    try:
        dims = GridDims(int(data["m"]), int(data["n"]))
        verts = data["vertices"]
    except (KeyError, TypeError) as exc:
        raise RangeError(f"malformed vertex-set JSON: {exc}") from exc
    for v in verts:
        if len(v) != 2:
            raise RangeError(f"vertex entries must be [x, y] pairs, got {v!r}")
    return VertexSet(dims, (tuple(v) for v in verts))


def dumps(S: VertexSet) -> str:
    return json.dumps(to_json_dict(S))


def loads(text: str) -> VertexSet:
    return from_json_dict(json.loads(text))


def render_ascii(S: VertexSet) -> str:
    """One text row per y (y = 1 on top), '#' for members and '.' otherwise."""
    rows = []
    for y in range(1, S.dims.n + 1):
        rows.append("".join("#" if (x, y) in S else "." for x in range(1, S.dims.m + 1)))
    return "\n".join(rows)


def parse_ascii(text: str) -> VertexSet:
    rows = [r.strip() for r in text.strip().splitlines() if r.strip()]
    if not rows:
        raise RangeError("empty ASCII grid")
    m = len(rows[0])
    if any(len(r) != m for r in rows):
        raise RangeError("ragged ASCII grid")
    dims = GridDims(m, len(rows))
    return VertexSet(dims, ((x + 1, y + 1) for y, r in enumerate(rows) for x, c in enumerate(r) if c == "#"))
