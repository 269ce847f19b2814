"""Connectors, pre-connectors, dominators and mobiles of a regular set."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import FrameError
from ..grid import VertexSet, Vertex
from .frames import RegularityFrame, is_frame_regular, regular_part, regular_region


@dataclass(frozen=True)
class Classification:
    connectors: VertexSet
    preconnectors: VertexSet
    dominators: VertexSet
    irregular: VertexSet

    def counts(self) -> dict:
        return {
            "connectors": len(self.connectors),
            "preconnectors": len(self.preconnectors),
            "dominators": len(self.dominators),
            "irregular": len(self.irregular),
        }


def _interior(v: Vertex, m: int, n: int) -> bool:
    x, y = v
    return 2 <= x <= m - 1 and 2 <= y <= n - 1


def is_connector(v: Vertex, R: VertexSet) -> bool:
    m, n = R.dims.m, R.dims.n
    if v not in R or not _interior(v, m, n):
        return False
    x, y = v
    row = all(w in R for w in ((x + 1, y), (x - 1, y), (x - 1, y - 1), (x - 1, y + 1))) and (x, y - 1) not in R
    col = all(w in R for w in ((x, y + 1), (x, y - 1), (x - 1, y - 1), (x + 1, y - 1))) and (x - 1, y) not in R
    return row or col


def is_preconnector(v: Vertex, R: VertexSet) -> bool:
    m, n = R.dims.m, R.dims.n
    if v not in R or not _interior(v, m, n):
        return False
    x, y = v
    row = (
        all(w in R for w in ((x - 1, y), (x - 1, y - 1), (x - 1, y + 1)))
        and (x, y - 1) not in R
        and (x + 1, y) not in R
    )
    col = (
        all(w in R for w in ((x, y - 1), (x - 1, y - 1), (x + 1, y - 1)))
        and (x - 1, y) not in R
        and (x, y + 1) not in R
    )
    return row or col


def classify(D: VertexSet, f: RegularityFrame) -> Classification:
    """Split ``D`` into connectors, pre-connectors, dominators and irregulars.

    Raises:
        FrameError: ``D`` is not regular for ``f``.
    """
    if not is_frame_regular(D, f):
        raise FrameError(f"set is not {f}-regular")
    R = regular_part(D, f)
    con, pre, dom = [], [], []
    for v in R:
        if is_connector(v, R):
            con.append(v)
        elif is_preconnector(v, R):
            pre.append(v)
        else:
            dom.append(v)
    dims = D.dims
    return Classification(VertexSet(dims, con), VertexSet(dims, pre), VertexSet(dims, dom), D - R)


def mobile_kinds(v: Vertex, D: VertexSet) -> list:
    """Which of the mobile patterns (i)..(v) hold at ``v`` (membership in D)."""
    m, n = D.dims.m, D.dims.n
    x, y = v
    kinds = []
    inside = lambda *ws: all(w in D for w in ws)  # noqa: E731
    if _interior(v, m, n) and inside((x + 1, y), (x - 1, y), (x - 1, y - 1), (x - 1, y + 1)):
        kinds.append("i")
    if y == n and 2 <= x <= m - 1 and inside((x + 1, n), (x - 1, n), (x - 1, n - 1)):
        kinds.append("ii")
    if _interior(v, m, n) and inside((x, y + 1), (x, y - 1), (x - 1, y - 1), (x + 1, y - 1)):
        kinds.append("iii")
    if x == m and 2 <= y <= n - 1 and inside((m, y + 1), (m, y - 1), (m - 1, y - 1)):
        kinds.append("iv")
    if v == (1, 3) and inside((1, 4), (1, 2), (2, 2)):
        kinds.append("v")
    return kinds


def is_mobile(v: Vertex, D: VertexSet, f: RegularityFrame) -> bool:
    if v not in D or v in regular_region(f, D.dims):
        return False
    return bool(mobile_kinds(v, D))


def find_mobiles(D: VertexSet, f: RegularityFrame) -> VertexSet:
    """Every irregular member of ``D`` matching at least one mobile pattern."""
    region = regular_region(f, D.dims)
    return VertexSet(D.dims, [v for v in D if v not in region and mobile_kinds(v, D)])
