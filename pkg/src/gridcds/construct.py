"""Explicit optimal connected dominating sets for every m, n >= 4.

Every witness is the union of a full row ``A`` at y = 2, a column stub ``B``
at x = 2, evenly spaced full lines ``C`` three apart, and (for the mixed
residue classes) short column pairs/triples ``D`` plus an end cap ``E``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Tuple

from .errors import DomainError
from .grid import GridDims, VertexSet

PART_NAMES = ("A", "B", "C", "D", "E")


@dataclass(frozen=True)
class ConstructionCase:
    tag: str
    parts: Dict[str, VertexSet] = field(compare=False)

    def witness(self) -> VertexSet:
        out = None
        for name in PART_NAMES:
            out = self.parts[name] if out is None else out | self.parts[name]
        return out


def _progression(upper: int) -> range:
    # 5, 8, 11, ... up to and including ``upper``; empty when upper < 5
    return range(5, upper + 1, 3)


def _case_tag(m: int, n: int) -> str:
    rm, rn = m % 3, n % 3
    if rm == 0 and (rn != 0 or (n + 1) * m <= (m + 1) * n):
        return "0,*"
    if rn == 0:
        return "*,0"
    return f"{rm},{rn}"


def build_cds(m: int, n: int) -> Tuple[VertexSet, ConstructionCase]:
    """Return an optimal CDS of the m x n grid and its named parts.

    When both sides are multiples of 3 the cheaper of the column and row
    layouts is used, preferring columns on a tie.

    Raises:
        DomainError: if ``m < 4`` or ``n < 4``.
    """
    if m < 4 or n < 4:
        raise DomainError(f"constructions exist for m, n >= 4; got {m}x{n}")
    dims = GridDims(m, n)
    tag = _case_tag(m, n)

    A = [(x, 2) for x in range(1, m + 1)]
    B = [(2, y) for y in range(3, n + 1)]
    C, D, E = [], [], []
    if tag == "0,*":
        C = [(x, y) for x in _progression(m - 1) for y in range(3, n + 1)]
    elif tag == "*,0":
        C = [(x, y) for y in _progression(n - 1) for x in range(3, m + 1)]
    else:
        rm, rn = m % 3, n % 3
        c_top = n - 2 if rn == 1 else n - 3
        d_right = m - 2 if rm == 1 else m - 3
        d_rows = range(n - 1, n + 1) if rn == 1 else range(n - 2, n + 1)
        C = [(x, y) for y in _progression(c_top) for x in range(3, m + 1)]
        D = [(x, y) for x in _progression(d_right) for y in d_rows]
        E = {
            (1, 1): [(m, n - 1)],
            (1, 2): [(m, n - 2), (m, n - 1)],
            (2, 1): [(m, n - 1), (m, n)],
            (2, 2): [(m, n - 2), (m, n - 1), (m, n)],
        }[(rm, rn)]

    parts = {name: VertexSet(dims, verts) for name, verts in zip(PART_NAMES, (A, B, C, D, E))}
    case = ConstructionCase(tag, parts)
    return case.witness(), case


def cardinality_closed_form(m: int, n: int) -> int:
    """Size of the witness from its residue class, without building it."""
    if m < 4 or n < 4:
        raise DomainError(f"constructions exist for m, n >= 4; got {m}x{n}")
    rm, rn = m % 3, n % 3
    if rm == 0 and rn == 0:
        return min((n + 1) * m, (m + 1) * n) // 3
    if rm == 0:
        return (n + 1) * m // 3
    if rn == 0:
        return (m + 1) * n // 3
    if (rm, rn) == (1, 1):
        return (m * n + m + n - 3) // 3
    return (m * n + m + n - 2) // 3
