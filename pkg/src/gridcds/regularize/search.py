"""Exhaustive regularization step, used as a cross-check and as a fallback.

Given a regular set ``D`` and a target frame, look for ``D' = R(D) | X`` in
which ``X`` has exactly as many vertices as ``R-bar(D)`` and every member of
``X`` sits outside the current regular region.  ``D'`` must be a CDS that is
regular for the target frame and has strictly more regular vertices.  The
first such ``X`` in lexicographic order is returned.
"""

from __future__ import annotations

from typing import Optional

from ..grid import VertexSet, closed_masks, iter_bits, mask_is_connected
from .frames import RegularityFrame, frame_constraints, regular_region


def search_regularization(D: VertexSet, f: RegularityFrame, target: RegularityFrame) -> Optional[VertexSet]:
    dims = D.dims
    region = regular_region(f, dims)
    R = D & region
    k = len(D) - len(R)
    tc = frame_constraints(target, dims)
    if not R.isdisjoint(tc.forbidden):
        return None
    need = tc.required - R
    if not need.isdisjoint(region) or len(need) > k:
        return None
    base = (R | need).mask
    k -= len(need)
    target_region = tc.regular_region
    floor = len(R)

    closed = closed_masks(dims)
    free = dims.full_mask & ~region.mask & ~tc.forbidden.mask & ~base
    cand = list(iter_bits(free))
    dom0 = 0
    for i in iter_bits(base):
        dom0 |= closed[i]
    # last[j]: vertices whose final possible dominator is candidate j
    last = [0] * len(cand)
    for u in iter_bits(dims.full_mask & ~dom0):
        hits = [j for j, c in enumerate(cand) if closed[c] >> u & 1]
        if not hits:
            return None
        last[hits[-1]] |= 1 << u

    def accept(mask: int) -> bool:
        if not mask_is_connected(dims, mask):
            return False
        Dp = VertexSet.from_mask(dims, mask)
        if not tc.required.issubset(Dp) or not tc.forbidden.isdisjoint(Dp):
            return False
        return len(Dp & target_region) > floor

    full = dims.full_mask
    stack = [(0, base, 0, dom0)]
    while stack:
        j, S, size, dom = stack.pop()
        if size == k:
            if dom == full and accept(S):
                return VertexSet.from_mask(dims, S)
            continue
        if j == len(cand) or len(cand) - j < k - size:
            continue
        bit = 1 << cand[j]
        take_dom = dom | closed[cand[j]]
        must = last[j]
        if dom & must == must:
            stack.append((j + 1, S, size, dom))
        if take_dom & must == must:
            stack.append((j + 1, S | bit, size + 1, take_dom))
    return None
