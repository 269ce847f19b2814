"""Exact minimum connected dominating sets of small grids.

Two independent search routes live here:

* :func:`solve_gamma` grows connected vertex sets outward from a vertex of
  N[(1, 1)] and tries cardinalities k = 1, 2, ... in turn.  A connected set
  that gains a vertex gains at most three newly dominated vertices, so a
  partial set of size s with u undominated vertices is abandoned as soon as
  ``u > 3 * (k - s)``.
* :func:`enumerate_cds` walks all k-subsets in lexicographic order and only
  prunes on local facts (a vertex whose whole closed neighbourhood has been
  decided must already be dominated, and if chosen must have a chosen
  neighbour).  It is slower but shares no logic with
  the connected-growth search, which makes it a fair oracle for it.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterator, List, Optional

from .errors import CapacityError, InconclusiveError, InvariantViolation
from .grid import (
    GridDims,
    VertexSet,
    closed_masks,
    iter_bits,
    mask_is_connected,
    neighbor_masks,
    transpose,
)

DEFAULT_CEILING = 30


@dataclass(frozen=True)
class SolveResult:
    gamma: int
    witness: VertexSet
    node_count: int


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: Optional[int]):
        self.limit = limit
        self.used = 0


class _Found(Exception):
    def __init__(self, mask: int):
        self.mask = mask


def _check_capacity(dims: GridDims, ceiling: Optional[int]) -> None:
    if ceiling is not None and dims.size > ceiling:
        raise CapacityError(
            f"{dims} grid has {dims.size} vertices, above the solver ceiling of {ceiling}"
        )


def _search_size(dims: GridDims, k: int, budget: _Budget) -> Optional[int]:
    """First connected dominating set of exactly ``k`` vertices in search order, or None."""
    full = dims.full_mask
    nbrs = neighbor_masks(dims)
    closed = closed_masks(dims)

    def grow(S: int, size: int, dom: int, X: int, frontier: int) -> None:
        budget.used += 1
        if budget.limit is not None and budget.used > budget.limit:
            raise InconclusiveError(
                f"node budget {budget.limit} exhausted while testing k={k} on {dims}",
                budget.used,
            )
        und = full & ~dom
        if size == k:
            if not und:
                raise _Found(S)
            return
        if und.bit_count() > 3 * (k - size):
            return
        if not frontier:
            return
        low = frontier & -frontier
        v = low.bit_length() - 1
        # include v
        grow(S | low, size + 1, dom | closed[v], X, (frontier | nbrs[v]) & ~(S | low) & ~X)
        # exclude v: every undominated vertex next to v must keep a live dominator
        X2 = X | low
        for u in iter_bits(closed[v] & und):
            if not closed[u] & ~X2:
                return
        grow(S, size, dom, X2, frontier & ~low)

    # any CDS with two or more vertices meets N[(1,1)] = {(1,1), (1,2), (2,1)}
    if k == 1:
        roots = list(range(dims.size))
    else:
        roots = sorted(iter_bits(closed[0]))
    banned = 0
    for r in roots:
        bit = 1 << r
        try:
            grow(bit, 1, closed[r], banned, nbrs[r] & ~banned)
        except _Found as hit:
            return hit.mask
        if k > 1:
            banned |= bit
    return None


def solve_gamma(m: int, n: int, budget: Optional[int] = None, ceiling: Optional[int] = DEFAULT_CEILING) -> SolveResult:
    """Connected domination number of the m x n grid by exhaustive search.

    Args:
        budget: maximum number of search nodes, or ``None`` for no limit.
        ceiling: largest ``m * n`` accepted; ``None`` disables the check.

    Raises:
        CapacityError: the grid exceeds ``ceiling``.
        InconclusiveError: the node budget ran out before a verdict.
    """
    dims = GridDims(m, n)
    _check_capacity(dims, ceiling)
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * dims.size + 100))
    counter = _Budget(budget)
    try:
        for k in range(1, dims.size + 1):
            mask = _search_size(dims, k, counter)
            if mask is not None:
                return SolveResult(k, VertexSet.from_mask(dims, mask), counter.used)
    finally:
        sys.setrecursionlimit(limit)
    raise AssertionError("the full vertex set is always a CDS")  # pragma: no cover


def _iter_cds_masks(dims: GridDims, k: int) -> Iterator[int]:
    N = dims.size
    closed = closed_masks(dims)
    nbrs = neighbor_masks(dims)
    # must_by[i]: vertices whose closed neighbourhood ends at bit i
    must_by = [0] * N
    for u in range(N):
        must_by[closed[u].bit_length() - 1] |= 1 << u
    # reach[i]: vertices dominated by some position >= i
    reach = [0] * (N + 1)
    for i in range(N - 1, -1, -1):
        reach[i] = reach[i + 1] | closed[i]
    full = dims.full_mask
    stack = [(0, 0, 0, 0)]  # (next position, chosen mask, chosen count, dominated mask)
    while stack:
        i, S, size, dom = stack.pop()
        if size == k:
            # remaining positions are all skipped
            if dom == full and mask_is_connected(dims, S):
                yield S
            continue
        if i == N or N - i < k - size:
            continue
        und = full & ~dom
        if und & ~reach[i] or und.bit_count() > 5 * (k - size):
            continue
        must = must_by[i]
        skip_ok = (dom & must) == must and _no_isolated(S, must, nbrs, k)
        take_dom = dom | closed[i]
        S_take = S | (1 << i)
        take_ok = (take_dom & must) == must and _no_isolated(S_take, must, nbrs, k)
        # push skip first so that "take" (lexicographically smaller) pops first
        if skip_ok:
            stack.append((i + 1, S, size, dom))
        if take_ok:
            stack.append((i + 1, S_take, size + 1, take_dom))


def _no_isolated(S: int, settled: int, nbrs, k: int) -> bool:
    # a chosen vertex whose neighbourhood is fully decided needs a chosen neighbour
    if k == 1:
        return True
    for w in iter_bits(S & settled):
        if not nbrs[w] & S:
            return False
    return True


def enumerate_cds(m: int, n: int, k: int, cap: Optional[int] = None, ceiling: Optional[int] = DEFAULT_CEILING) -> List[VertexSet]:
    """All connected dominating sets of exactly ``k`` vertices, lexicographically."""
    dims = GridDims(m, n)
    _check_capacity(dims, ceiling)
    out = []
    for mask in _iter_cds_masks(dims, k):
        out.append(VertexSet.from_mask(dims, mask))
        if cap is not None and len(out) >= cap:
            break
    return out


@dataclass(frozen=True)
class MCDSEnumeration:
    gamma: int
    sets: tuple
    truncated: bool

    def __iter__(self):
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)

    def __getitem__(self, i):
        return self.sets[i]


def enumerate_mcds(m: int, n: int, cap: Optional[int] = None, ceiling: Optional[int] = DEFAULT_CEILING, gamma: Optional[int] = None) -> MCDSEnumeration:
    """Every minimum CDS of the m x n grid in lexicographic order, up to ``cap``.

    ``gamma`` may be passed when already known; otherwise :func:`solve_gamma`
    supplies it.  ``truncated`` is true when more MCDSs exist beyond ``cap``.
    """
    dims = GridDims(m, n)
    _check_capacity(dims, ceiling)
    if gamma is None:
        gamma = solve_gamma(m, n, ceiling=ceiling).gamma
    sets = []
    truncated = False
    for mask in _iter_cds_masks(dims, gamma):
        if cap is not None and len(sets) >= cap:
            truncated = True
            break
        sets.append(VertexSet.from_mask(dims, mask))
    return MCDSEnumeration(gamma, tuple(sets), truncated)


def normalize_origin(D: VertexSet, claimed_minimal: bool = True) -> VertexSet:
    """Return ``D`` if it holds (1, 2), else its mirror image when that holds (1, 2).

    Raises:
        InvariantViolation: neither (1, 2) nor (2, 1) is in ``D`` although ``D``
            is claimed to be minimal (every MCDS needs one of them to reach (1, 1)).
    """
    if (1, 2) in D:
        return D
    if (2, 1) in D:
        return transpose(D)
    if claimed_minimal:
        raise InvariantViolation(f"{D!r} contains neither (1, 2) nor (2, 1)")
    return D
