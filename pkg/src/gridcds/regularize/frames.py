"""Regularity frames ``(p', q')-(p, q)`` and the clauses they impose.

A frame in Q-mode (``q' == q``) says that row ``q`` is settled from
``x = p' + 1`` up to ``x = p``; a frame in P-mode (``p' == p``) says that
column ``p`` is settled from ``y = q' + 1`` up to ``y = q``.  Each mode carries
nine clauses (Q1..Q9 / P1..P9), each either forcing vertices into the set or
keeping them out, and a region of vertices the frame counts as regular.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Tuple

from ..errors import FrameError
from ..grid import GridDims, Vertex, VertexSet

REQUIRED = "in"
FORBIDDEN = "out"


@dataclass(frozen=True, order=True)
class RegularityFrame:
    p_prime: int
    q_prime: int
    p: int
    q: int

    @property
    def mode(self) -> str:
        if self.q_prime == self.q and self.p_prime != self.p:
            return "Q"
        if self.p_prime == self.p and self.q_prime != self.q:
            return "P"
        raise FrameError(f"{self} is neither a row frame nor a column frame")

    def validate(self, dims: GridDims) -> "RegularityFrame":
        """Return ``self`` if it fits ``dims``, else raise FrameError."""
        m, n = dims.m, dims.n
        mode = self.mode
        if mode == "Q":
            ok = 0 <= self.p_prime < self.p <= m and 2 <= self.q <= n
        else:
            ok = 0 <= self.q_prime < self.q <= n and 1 <= self.p <= m and self.q >= 2
        if not ok:
            raise FrameError(f"frame {self} does not fit the {dims} grid")
        return self

    def transposed(self) -> "RegularityFrame":
        return RegularityFrame(self.q_prime, self.p_prime, self.q, self.p)

    def as_list(self) -> list:
        return [self.p_prime, self.q_prime, self.p, self.q]

    def __str__(self) -> str:
        return f"({self.p_prime},{self.q_prime})-({self.p},{self.q})"


INITIAL_FRAME = RegularityFrame(0, 2, 1, 2)


@dataclass(frozen=True)
class FrameConstraints:
    required: VertexSet
    forbidden: VertexSet
    regular_region: VertexSet
    clauses: Dict[str, Tuple[str, VertexSet]] = field(compare=False, default_factory=dict)


def _cells(dims: GridDims, xs: Iterable[int], ys: Iterable[int]) -> list:
    ys = list(ys)
    return [(x, y) for x in xs for y in ys if dims.contains((x, y))]


def _span(a: int, b: int) -> range:
    return range(a, b + 1)


def _q_clauses(f: RegularityFrame, dims: GridDims) -> Dict[str, Tuple[str, list]]:
    m, n = dims.m, dims.n
    pp, p, q = f.p_prime, f.p, f.q
    c = {}
    c["Q1"] = (REQUIRED, _cells(dims, _span(pp + 1, p), [q]))
    if q >= 2:
        # empty ranges make the clause vacuous
        c["Q2"] = (FORBIDDEN, _cells(dims, _span(pp + 1, p - 1), [q - 1]))
    if q >= 2 and p == m:
        c["Q3"] = (FORBIDDEN, _cells(dims, [m], [q - 1]))
    if q >= 3:
        c["Q4"] = (FORBIDDEN, _cells(dims, _span(pp + 1, p), [q - 2]))
    if q >= 4:
        c["Q5"] = (REQUIRED, _cells(dims, _span(pp + 1, m), [q - 3]))
    if q >= 4 and pp >= 2:
        c["Q6"] = (REQUIRED, _cells(dims, [pp], _span(q - 3, n)))
    if pp >= 2:
        out = _cells(dims, [pp - 1], _span(q - 1, n)) if q >= 2 else []
        if q >= 3:
            out += _cells(dims, [pp - 1], _span(q - 2, n))
        c["Q7"] = (FORBIDDEN, out)
    if q >= 5:
        c["Q8"] = (FORBIDDEN, _cells(dims, _span(pp + 1, m), [q - 4]))
    if q == n - 1:
        c["Q9"] = (FORBIDDEN, _cells(dims, _span(pp + 1, p - 1), [n]))
    return c


def _p_clauses(f: RegularityFrame, dims: GridDims) -> Dict[str, Tuple[str, list]]:
    m, n = dims.m, dims.n
    qp, p, q = f.q_prime, f.p, f.q
    c = {}
    c["P1"] = (REQUIRED, _cells(dims, [p], _span(qp + 1, q)))
    if p >= 2:
        c["P2"] = (FORBIDDEN, _cells(dims, [p - 1], _span(qp + 1, q - 1)))
    if p >= 2 and q == n:
        c["P3"] = (FORBIDDEN, _cells(dims, [p - 1], [n]))
    if p >= 3:
        c["P4"] = (FORBIDDEN, _cells(dims, [p - 2], _span(qp + 1, q)))
    if p >= 4:
        c["P5"] = (REQUIRED, _cells(dims, [p - 3], _span(qp + 1, n)))
    if p >= 4:
        c["P6"] = (REQUIRED, _cells(dims, _span(p - 3, m), [qp]))
    elif p == 2:
        c["P6"] = (REQUIRED, _cells(dims, _span(1, m), [qp]))
    if qp >= 2:
        out = _cells(dims, _span(p - 1, m), [qp - 1]) if p >= 2 else []
        if p >= 3:
            out += _cells(dims, _span(p - 2, m), [qp - 1])
        c["P7"] = (FORBIDDEN, out)
    if p >= 5:
        c["P8"] = (FORBIDDEN, _cells(dims, [p - 4], _span(qp + 1, n)))
    if p == m - 1:
        c["P9"] = (FORBIDDEN, _cells(dims, [m], _span(qp + 1, q - 1)))
    return c


def _q_region(f: RegularityFrame, dims: GridDims) -> list:
    m, n = dims.m, dims.n
    pp, p, q = f.p_prime, f.p, f.q
    cells = _cells(dims, _span(pp + 1, p), [q])
    if q >= 2:
        cells += _cells(dims, _span(pp + 1, p - 1), [q - 1])
    if q >= 3:
        cells += _cells(dims, _span(pp + 1, p), [q - 2])
    if q >= 4:
        cells += _cells(dims, _span(pp + 1, m), _span(1, q - 3))
    if pp >= 1:
        cells += _cells(dims, _span(1, pp), _span(1, n))
    return cells


def _p_region(f: RegularityFrame, dims: GridDims) -> list:
    m, n = dims.m, dims.n
    qp, p, q = f.q_prime, f.p, f.q
    cells = _cells(dims, [p], _span(qp + 1, q))
    if p >= 2:
        cells += _cells(dims, [p - 1], _span(qp + 1, q - 1))
    if p >= 3:
        cells += _cells(dims, [p - 2], _span(qp + 1, q))
    if p >= 4:
        cells += _cells(dims, _span(1, p - 3), _span(qp + 1, n))
    if qp >= 1:
        cells += _cells(dims, _span(1, m), _span(1, qp))
    return cells


def frame_constraints(f: RegularityFrame, dims: GridDims) -> FrameConstraints:
    """Evaluate every clause of ``f`` on ``dims``.

    Raises:
        FrameError: ``f`` is malformed or does not fit the grid.
    """
    f.validate(dims)
    if f.mode == "Q":
        raw, region = _q_clauses(f, dims), _q_region(f, dims)
    else:
        raw, region = _p_clauses(f, dims), _p_region(f, dims)
    clauses = {label: (kind, VertexSet(dims, cells)) for label, (kind, cells) in raw.items()}
    required = VertexSet(dims)
    forbidden = VertexSet(dims)
    for kind, cells in clauses.values():
        if kind == REQUIRED:
            required = required | cells
        else:
            forbidden = forbidden | cells
    return FrameConstraints(required, forbidden, VertexSet(dims, region), clauses)


def regular_region(f: RegularityFrame, dims: GridDims) -> VertexSet:
    f.validate(dims)
    return VertexSet(dims, _q_region(f, dims) if f.mode == "Q" else _p_region(f, dims))


def violated_clauses(D: VertexSet, f: RegularityFrame) -> list:
    """Labels of the clauses of ``f`` that ``D`` breaks, in clause order."""
    out = []
    for label, (kind, cells) in frame_constraints(f, D.dims).clauses.items():
        if kind == REQUIRED and not cells.issubset(D):
            out.append(label)
        elif kind == FORBIDDEN and not cells.isdisjoint(D):
            out.append(label)
    return out


def is_frame_regular(D: VertexSet, f: RegularityFrame) -> bool:
    """True iff ``D`` holds every required vertex of ``f`` and no forbidden one."""
    fc = frame_constraints(f, D.dims)
    return fc.required.issubset(D) and fc.forbidden.isdisjoint(D)


def regular_part(D: VertexSet, f: RegularityFrame) -> VertexSet:
    """R(D): members of ``D`` inside the regular region of ``f``."""
    return D & regular_region(f, D.dims)


def irregular_part(D: VertexSet, f: RegularityFrame) -> VertexSet:
    """R-bar(D): members of ``D`` outside the regular region of ``f``."""
    return D - regular_region(f, D.dims)


def frame_from_list(values) -> RegularityFrame:
    if len(values) != 4:
        raise FrameError(f"a frame needs four integers, got {values!r}")
    return RegularityFrame(*(int(v) for v in values))


def vertex_list(vs: Iterable[Vertex]) -> list:
    return [list(v) for v in vs]
