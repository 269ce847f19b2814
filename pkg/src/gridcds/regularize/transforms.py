"""Constructive regularization transforms.

Each routine case has a hand-built recipe that swaps a few irregular
vertices of an MCDS for vertices that extend the regular frame:

* row/column extension (cases C1, C2): :func:`extend_row` and its transpose;
* first corner (case C31): :func:`first_corner`;
* next line (cases C32, C33): :func:`next_line` for the generic position and
  :func:`near_top` / its transpose near the far border.

The recipes are generators of candidate sets, best first.  Callers validate
each candidate (CDS, same size, target frame regular) and keep the first that
passes, so a recipe only has to be right, not self-checking.  Recipes written
for one orientation are reused for the other by transposing the grid.
"""

from __future__ import annotations

import heapq
from typing import Iterator, List, Optional, Tuple

from ..errors import ConnectivityError, LemmaViolation, PreconditionError
from ..grid import GridDims, Vertex, VertexSet, is_cds, neighbors, transpose
from .classify import mobile_kinds
from .frames import RegularityFrame, regular_region

# ---------------------------------------------------------------- helpers


def _swap(D: VertexSet, out: List[Vertex], into: List[Vertex]) -> Optional[VertexSet]:
    dims = D.dims
    if not all(dims.contains(v) for v in into):
        return None
    return D.remove(*[v for v in out if dims.contains(v)]).add(*into)


def _transposed(gen, D: VertexSet, f: RegularityFrame, *args) -> Iterator[VertexSet]:
    for Dp in gen(transpose(D), f.transposed(), *args):
        yield transpose(Dp)


def path_exclusions(f: RegularityFrame, dims: GridDims) -> VertexSet:
    """Vertices a mobile-hunting path must avoid at frame ``f``."""
    p, q = f.p, f.q
    extra = (p, q + 1) if f.mode == "Q" else (p + 1, q)
    return VertexSet(dims, [v for v in ((p, q), extra) if dims.contains(v)])


def min_irregular_path(D: VertexSet, f: RegularityFrame, src: Vertex, dst: Vertex,
                       exclusions: Optional[VertexSet] = None) -> Optional[List[Vertex]]:
    """Simple path inside ``D`` from ``src`` to ``dst`` with the fewest irregular vertices.

    Ties go to the shorter path, then to the lexicographically smaller vertex
    sequence.  The endpoints are never excluded.  Returns None if no path exists.
    """
    dims = D.dims
    if src not in D or dst not in D:
        return None
    region = regular_region(f, dims)
    banned = set(exclusions or ()) - {src, dst}
    cost = lambda v: 0 if v in region else 1  # noqa: E731
    start = (cost(src), 1, (src,))
    heap = [start]
    best = {src: start[:2]}
    while heap:
        irr, length, path = heapq.heappop(heap)
        v = path[-1]
        if v == dst:
            return list(path)
        if best.get(v, (irr, length)) < (irr, length):
            continue
        for w in neighbors(v, dims):
            if w not in D or w in banned or w in path:
                continue
            key = (irr + cost(w), length + 1)
            if w in best and best[w] < key:
                continue
            best[w] = key
            heapq.heappush(heap, (key[0], key[1], path + (w,)))
    return None


def _irregular_count(D: VertexSet, f: RegularityFrame, path: List[Vertex]) -> int:
    region = regular_region(f, D.dims)
    return sum(1 for v in path if v not in region)


def mobiles_on_path(D: VertexSet, f: RegularityFrame, path: List[Vertex]) -> List[Vertex]:
    region = regular_region(f, D.dims)
    return [v for v in path if v not in region and mobile_kinds(v, D)]


def mobile_on_path(D: VertexSet, f: RegularityFrame, u: Vertex, v_bar: Vertex,
                   exclusions: Optional[VertexSet] = None) -> Tuple[Vertex, List[Vertex]]:
    """A mobile on a fewest-irregular path from regular ``u`` to irregular ``v_bar``.

    Raises:
        ConnectivityError: no path avoids ``exclusions``.
        LemmaViolation: the path carries no mobile.
    """
    if exclusions is None:
        exclusions = path_exclusions(f, D.dims)
    path = min_irregular_path(D, f, u, v_bar, exclusions)
    if path is None:
        raise ConnectivityError(f"no path from {u} to {v_bar} inside the set")
    found = mobiles_on_path(D, f, path)
    if not found:
        raise LemmaViolation(f"path {path} carries no mobile")
    return found[0], path


def _mv_candidates(D: VertexSet, f: RegularityFrame, u: Vertex, v_bar: Vertex, mid: Vertex,
                   exclusions: Optional[VertexSet] = None) -> Iterator[VertexSet]:
    """``D - v + mid`` for each mobile ``v`` on the fewest-irregular path from u to v_bar."""
    if exclusions is None:
        exclusions = path_exclusions(f, D.dims)
    path = min_irregular_path(D, f, u, v_bar, exclusions)
    if path is None:
        path = min_irregular_path(D, f, u, v_bar, None)
    if path is None:
        return
    for v in mobiles_on_path(D, f, path):
        Dp = _swap(D, [v], [mid])
        if Dp is not None:
            yield Dp


def mv_swap(D: VertexSet, f: RegularityFrame, kind: str, anchor: Vertex) -> VertexSet:
    """Pull a mobile in to fill the gap next to ``anchor``.

    ``kind="horizontal"`` fills (x+1, y) between anchor (x, y) and irregular
    (x+2, y); ``kind="vertical"`` fills (x, y+1) below irregular (x, y+2).

    Raises:
        PreconditionError: the anchor/far-vertex pattern is absent.
        LemmaViolation: no mobile swap yields a CDS.
    """
    x, y = anchor
    if kind == "horizontal":
        mid, far = (x + 1, y), (x + 2, y)
    elif kind == "vertical":
        mid, far = (x, y + 1), (x, y + 2)
    else:
        raise PreconditionError(f"unknown mobile swap kind {kind!r}")
    region = regular_region(f, D.dims)
    if anchor not in D or anchor not in region or far not in D or far in region:
        raise PreconditionError(f"{kind} swap needs regular {anchor} and irregular {far} in the set")
    for Dp in _mv_candidates(D, f, anchor, far, mid):
        if is_cds(Dp):
            return Dp
    raise LemmaViolation(f"no mobile swap fills {mid}")


# ------------------------------------------------------ row/column extension


def extend_row(D: VertexSet, f: RegularityFrame) -> Iterator[VertexSet]:
    """Candidates that also hold (p+1, q) for a row frame (case C1)."""
    if f.mode != "Q":
        raise PreconditionError(f"row extension needs a row frame, got {f}")
    p, q = f.p, f.q
    m = D.dims.m
    if p > m - 1:
        raise PreconditionError(f"row of {f} is already complete")
    inD = lambda *vs: all(v in D for v in vs)  # noqa: E731
    add = (p + 1, q)
    if inD(add):
        yield D
        return

    path = None
    if p + 2 <= m and inD((p + 2, q)):
        u = (p - 1, q) if p >= 2 else (p, q)
        excl = VertexSet(D.dims, [v for v in ((p, q), (p, q + 1)) if D.dims.contains(v)])
        path = min_irregular_path(D, f, (p + 2, q), u, None)
        detour = min_irregular_path(D, f, (p + 2, q), u, excl) if p >= 2 else None
        if detour is not None and path is not None and _irregular_count(D, f, detour) == _irregular_count(D, f, path):
            # case (a): a fewest-irregular path avoids the frame corner
            yield from _mv_candidates(D, f, u, (p + 2, q), add, excl)
            return
        in_b = True
    else:
        in_b = False

    # (p+1, q-1) has to be dominated by one of these
    for v in ((p + 1, q - 2), (p, q - 1)):
        if inD(v):
            Dp = _swap(D, [v], [add])
            if Dp is not None:
                yield Dp
    if inD((p + 1, q - 2)) or inD((p, q - 1)):
        return
    if not inD((p + 2, q - 1)):
        raise LemmaViolation(f"row extension at {f}: nothing dominates {(p + 1, q - 1)}")

    if in_b:
        on_path = set(path or ())
        if (p, q + 2) in on_path:
            yield from _opt(_swap(D, [(p, q + 1)], [add]))
        elif inD((p + 2, q + 1)):
            n = D.dims.n
            if q + 2 <= n and p + 3 <= m:
                yield from _opt(_swap(D, [(p, q + 1), (p + 2, q + 1), (p + 2, q - 1)],
                                      [add, (p + 1, q + 2), (p + 3, q)]))
            elif q + 2 <= n:
                yield from _opt(_swap(D, [(p, q + 1), (p + 2, q + 1)], [add, (p + 1, q + 2)]))
            else:
                yield from _opt(_swap(D, [(p, q + 1)], [add]))
        else:
            yield from _opt(_swap(D, [(p, q + 1)], [add]))
        return

    # case (c): (p+2, q) is missing or off the grid
    if inD((p + 2, q - 2)):
        if p + 3 <= m:
            yield from _opt(_swap(D, [(p + 2, q - 1), (p + 2, q - 2)], [add, (p + 3, q - 2)]))
        else:
            yield from _opt(_swap(D, [(p + 2, q - 1)], [add]))
    else:
        yield from _opt(_swap(D, [(p + 2, q - 1)], [add]))


def _opt(Dp: Optional[VertexSet]) -> Iterator[VertexSet]:
    if Dp is not None:
        yield Dp


def extend_column(D: VertexSet, f: RegularityFrame) -> Iterator[VertexSet]:
    """Candidates that also hold (p, q+1) for a column frame (case C2)."""
    if f.mode != "P":
        raise PreconditionError(f"column extension needs a column frame, got {f}")
    yield from _transposed(extend_row, D, f)


def _first_valid(gen, check) -> Optional[VertexSet]:
    for Dp in gen:
        if check(Dp):
            return Dp
    return None


def _extend_until(D: VertexSet, f: RegularityFrame, p_end: int):
    """Apply row extension until the row frame reaches ``p_end``; None on failure."""
    from .frames import is_frame_regular

    while f.p < p_end:
        g = RegularityFrame(f.p_prime, f.q_prime, f.p + 1, f.q)
        Dp = _first_valid(extend_row(D, f), lambda S, g=g: len(S) == len(D) and is_cds(S) and is_frame_regular(S, g))
        if Dp is None:
            return None, f
        D, f = Dp, g
    return D, f


# ------------------------------------------------------------- line shift


def _line_shift(D: VertexSet, f: RegularityFrame, c: int, q0: int) -> Iterator[VertexSet]:
    """Move the run of column ``c`` above row ``q0`` into column ``c + 1``.

    The run is ``(c, q0+1..y)`` in the set with ``(c+1, q0+1..y)`` outside.
    If it ends at the border or against a filled pair the run shifts right
    as is; otherwise it shifts diagonally and a mobile fills (c+1, q0+1).
    """
    n = D.dims.n
    if (c, q0 + 1) not in D or (c + 1, q0 + 1) in D:
        raise PreconditionError(f"line shift needs {(c, q0 + 1)} in and {(c + 1, q0 + 1)} out")
    y = q0 + 1
    while y + 1 <= n and (c, y + 1) in D and (c + 1, y + 1) not in D:
        y += 1
    run = [(c, j) for j in range(q0 + 1, y + 1)]
    if y == n or ((c, y + 1) in D and (c + 1, y + 1) in D):
        yield from _opt(_swap(D, run, [(c + 1, j) for j in range(q0 + 1, y + 1)]))
        return
    Dp = _swap(D, run, [(c + 1, j + 1) for j in range(q0 + 1, y + 1)])
    if Dp is None:
        return
    if (c + 1, q0 + 1) in Dp:
        yield Dp
        return
    yield from _mv_candidates(Dp, f, (c + 1, q0), (c + 1, q0 + 2), (c + 1, q0 + 1))


def lt_shift(D: VertexSet, f: RegularityFrame, variant: str) -> VertexSet:
    """Line shift toward the next frame; ``variant`` is ``"i"``, ``"ii"`` or ``"iii"``.

    (i) moves column p'+2 right for target (p'+3, q')-(p'+3, q'+1); (ii) is
    its transpose for target (p', q'+3)-(p'+1, q'+3); (iii) moves column 1 to
    column 2 at frame (0,2)-(m,2) for target (2,2)-(2,3).

    Raises:
        PreconditionError: the variant does not apply.
        LemmaViolation: no candidate is a CDS.
    """
    if variant == "i":
        gen = _line_shift(D, f, f.p_prime + 2, f.q_prime)
    elif variant == "ii":
        gen = _transposed(lambda D_, f_: _line_shift(D_, f_, f_.p_prime + 2, f_.q_prime), D, f)
    elif variant == "iii":
        if (f.p_prime, f.q_prime) != (0, 2) or (2, 3) in D:
            raise PreconditionError("variant iii needs frame (0,2)-(m,2) with (2,3) outside the set")
        gen = _line_shift(D, f, 1, 2)
    else:
        raise PreconditionError(f"unknown line shift variant {variant!r}")
    for Dp in gen:
        if is_cds(Dp) and len(Dp) == len(D):
            return Dp
    raise LemmaViolation(f"line shift {variant} failed at {f}")


# ------------------------------------------------------------ first corner


def first_corner(D: VertexSet, f: RegularityFrame) -> Iterator[VertexSet]:
    """Candidates regular for (2,2)-(2,3) from a (0,2)-(m,2)-regular set (case C31)."""
    if (2, 3) in D:
        yield D
        return
    if (1, 3) in D:
        yield from _line_shift(D, f, 1, 2)
        return
    if (2, 4) in D:
        yield from _mv_candidates(D, f, (2, 2), (2, 4), (2, 3))
        return
    raise LemmaViolation("first corner: none of (2,3), (1,3), (2,4) is in the set")


# --------------------------------------------------------------- next line


def next_line(D: VertexSet, f: RegularityFrame) -> Iterator[Tuple[str, VertexSet]]:
    """Labelled candidates for the generic next-line step.

    Yields ``("C33", D')`` for target (p'+3, q')-(p'+3, q'+1) and
    ``("C32", D')`` for target (p', q'+3)-(p'+1, q'+3), in proof order.
    """
    P0, Q0 = f.p_prime, f.q_prime
    if (P0 + 3, Q0 + 1) in D:
        yield "C33", D
        return
    if (P0 + 1, Q0 + 3) in D:
        yield "C32", D
        return
    if (P0 + 2, Q0 + 1) in D:
        for Dp in _line_shift(D, f, P0 + 2, Q0):
            yield "C33", Dp
        return
    if (P0 + 1, Q0 + 2) in D:
        for Dp in _transposed(lambda D_, f_: _line_shift(D_, f_, P0 + 2, Q0), D, f):
            yield "C32", Dp
        return
    if (P0 + 3, Q0 + 2) in D:
        for Dp in _mv_candidates(D, f, (P0 + 3, Q0), (P0 + 3, Q0 + 2), (P0 + 3, Q0 + 1)):
            yield "C33", Dp
        return
    if (P0 + 2, Q0 + 3) in D:
        for Dp in _mv_candidates(D, f, (P0, Q0 + 3), (P0 + 2, Q0 + 3), (P0 + 1, Q0 + 3)):
            yield "C32", Dp
        return
    raise LemmaViolation(f"next line at {f}: nothing dominates {(P0 + 2, Q0 + 2)}")


def near_top(D: VertexSet, f: RegularityFrame) -> Iterator[VertexSet]:
    """Candidates for target (p'+3, q')-(p'+3, q'+1) when q' is n-3 or n-2."""
    n = D.dims.n
    P0, Q0 = f.p_prime, f.q_prime
    if Q0 == n - 3:
        for label, Dp in next_line(D, f):
            if label == "C33":
                yield Dp
                continue
            # the other line closed at the top row: walk it to x = p'+3, then fold down
            g = RegularityFrame(P0, n, P0 + 1, n)
            Dq, g2 = _extend_until(Dp, g, P0 + 3)
            if Dq is None:
                continue
            yield from _opt(_swap(Dq, [(P0 + 1, n), (P0 + 2, n)], [(P0 + 3, n - 2), (P0 + 3, n - 1)]))
        return
    if Q0 != n - 2:
        raise PreconditionError(f"near-top step needs q' in {{n-3, n-2}}, got {f}")
    if (P0 + 3, n - 1) in D:
        yield D
    elif (P0 + 2, n - 1) in D:
        yield from _line_shift(D, f, P0 + 2, Q0)
    elif (P0 + 1, n) in D:
        Dp = _swap(D, [(P0 + 1, n)], [(P0 + 2, n - 1)])
        if Dp is not None:
            yield from _line_shift(Dp, f, P0 + 2, Q0)
    elif (P0 + 3, n) in D:
        yield from _mv_candidates(D, f, (P0 + 3, n - 2), (P0 + 3, n), (P0 + 3, n - 1))
    else:
        raise LemmaViolation(f"near-top step at {f}: nothing dominates {(P0 + 2, n)}")


def near_right(D: VertexSet, f: RegularityFrame) -> Iterator[VertexSet]:
    """Transpose of :func:`near_top`: target (p', q'+3)-(p'+1, q'+3) for p' in {m-3, m-2}."""
    yield from _transposed(near_top, D, f)


# ---------------------------------------------------------------- dispatch


def lemma_candidates(D: VertexSet, f: RegularityFrame, case_label: str) -> Iterator[VertexSet]:
    """Candidate sets for one routine case at frame ``f``, best first."""
    m, n = D.dims.m, D.dims.n
    if case_label == "C1":
        yield from extend_row(D, f)
    elif case_label == "C2":
        yield from extend_column(D, f)
    elif case_label == "C31":
        yield from first_corner(D, f)
    elif case_label in ("C32", "C33"):
        P0, Q0 = f.p_prime, f.q_prime
        if P0 <= m - 4 and Q0 <= n - 4:
            for label, Dp in next_line(D, f):
                if label == case_label:
                    yield Dp
        elif case_label == "C33":
            yield from near_top(D, f)
        else:
            yield from near_right(D, f)
    else:
        raise PreconditionError(f"no transform for case {case_label!r}")
