"""The regularization routine: case selection, one step, and the full run.

Starting from the frame (0,2)-(1,2), each step swaps irregular vertices of
the current MCDS for other vertices outside the current regular region, so
that the set stays an MCDS and becomes regular for a larger frame.  The run
stops at the terminal case C34.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..errors import DomainError, LemmaViolation, PreconditionError, RoutineStuck
from ..grid import GridDims, VertexSet, is_cds
from .frames import (
    INITIAL_FRAME,
    RegularityFrame,
    is_frame_regular,
    regular_region,
    violated_clauses,
    vertex_list,
)
from .search import search_regularization

CASE_LABELS = ("C1", "C2", "C31", "C32", "C33", "C34")
METHODS = ("lemma", "search", "auto")


@dataclass(frozen=True)
class StepRecord:
    case_label: str
    frame_before: RegularityFrame
    frame_after: RegularityFrame
    removed: VertexSet
    added: VertexSet
    method: str = "lemma"
    regular_before: int = 0
    regular_after: int = 0

    def to_json(self) -> dict:
        return {
            "case": self.case_label,
            "frame_before": self.frame_before.as_list(),
            "frame_after": self.frame_after.as_list(),
            "removed": vertex_list(self.removed),
            "added": vertex_list(self.added),
            "method": self.method,
        }


@dataclass
class RoutineTrace:
    initial: VertexSet
    steps: List[StepRecord] = field(default_factory=list)
    states: List[Tuple[VertexSet, RegularityFrame]] = field(default_factory=list)

    @property
    def cases(self) -> List[str]:
        return [s.case_label for s in self.steps]

    @property
    def tau(self) -> int:
        return len(self.steps)

    @property
    def final(self) -> Tuple[VertexSet, RegularityFrame]:
        return self.states[-1]

    def to_json(self) -> list:
        return [s.to_json() for s in self.steps]


def _case3_window(f: RegularityFrame, dims: GridDims) -> bool:
    m, n = dims.m, dims.n
    pp, qp = f.p_prime, f.q_prime
    return (
        (pp == f.p == m - 1)
        or (qp == f.q == n - 1)
        or (m - 3 <= pp <= m - 2 and n - 3 <= qp <= n - 2)
    )


def case_guards(f: RegularityFrame, dims: GridDims) -> List[str]:
    """Every case label whose guard holds at ``f``, in routine order."""
    m, n = dims.m, dims.n
    mode = f.mode
    pp, qp = f.p_prime, f.q_prime
    out = []
    if mode == "Q" and f.p <= m - 1:
        out.append("C1")
    if mode == "P" and f.q <= n - 1:
        out.append("C2")
    if (mode == "Q" and f.p == m) or (mode == "P" and f.q == n):
        if pp == 0:
            out.append("C31")
        if pp != 0 and pp <= m - 2 and qp <= n - 4:
            out.append("C32")
        if pp != 0 and pp <= m - 4 and qp <= n - 2:
            out.append("C33")
        if _case3_window(f, dims):
            out.append("C34")
    return out


def target_frame(f: RegularityFrame, label: str) -> RegularityFrame:
    pp, qp, p, q = f.p_prime, f.q_prime, f.p, f.q
    if label == "C1":
        return RegularityFrame(pp, qp, p + 1, q)
    if label == "C2":
        return RegularityFrame(pp, qp, p, q + 1)
    if label == "C31":
        return RegularityFrame(2, 2, 2, 3)
    if label == "C32":
        return RegularityFrame(pp, qp + 3, pp + 1, qp + 3)
    if label == "C33":
        return RegularityFrame(pp + 3, qp, pp + 3, qp + 1)
    if label == "C34":
        return f
    raise PreconditionError(f"unknown case label {label!r}")


def select_cases(f: RegularityFrame, dims: GridDims) -> List[str]:
    """Cases to attempt at ``f`` in order of preference.

    Only the C32/C33 overlap yields two labels; C32 is tried first.
    """
    guards = case_guards(f, dims)
    if not guards:
        raise RoutineStuck(f"no case applies at frame {f} on {dims}")
    return guards


def _check_step(D: VertexSet, f: RegularityFrame, Dp: VertexSet, g: RegularityFrame) -> Optional[str]:
    """Why ``D -> Dp`` is not a legal regularization into frame ``g``, or None."""
    if len(Dp) != len(D):
        return "cardinality changed"
    if not is_cds(Dp):
        return "result is not a CDS"
    bad = violated_clauses(Dp, g)
    if bad:
        return f"result breaks {', '.join(bad)} of {g}"
    region = regular_region(f, D.dims)
    if not (D - Dp).isdisjoint(region):
        return "a regular vertex was removed"
    if not (Dp - D).isdisjoint(region):
        return "an added vertex lies in the old regular region"
    if len(Dp & regular_region(g, D.dims)) <= len(D & region):
        return "regular part did not grow"
    return None


def apply_case(D: VertexSet, f: RegularityFrame, case_label: str, method: str = "auto"):
    """Run one routine case and return ``(D', f', record)``.

    ``method`` picks the step engine: ``"lemma"`` uses only the constructive
    transforms, ``"search"`` only the exhaustive search, and ``"auto"`` tries
    the transforms first and falls back to the search.

    Raises:
        PreconditionError: the guard of ``case_label`` does not hold at ``f``.
        LemmaViolation: no engine produced a legal step.
    """
    if method not in METHODS:
        raise PreconditionError(f"unknown method {method!r}")
    dims = D.dims
    if case_label not in case_guards(f, dims):
        raise PreconditionError(f"case {case_label} does not apply at frame {f}")
    g = target_frame(f, case_label)
    region = regular_region(f, dims)
    n_reg = len(D & region)
    if case_label == "C34":
        empty = VertexSet(dims)
        return D, f, StepRecord(case_label, f, f, empty, empty, "lemma", n_reg, n_reg)

    reasons = []
    if method in ("lemma", "auto"):
        from .transforms import lemma_candidates

        try:
            for Dp in lemma_candidates(D, f, case_label):
                why = _check_step(D, f, Dp, g)
                if why is None:
                    return Dp, g, _record(case_label, f, g, D, Dp, "lemma")
                reasons.append(why)
        except LemmaViolation as exc:
            reasons.append(str(exc))
            if method == "lemma":
                raise
    if method in ("search", "auto"):
        Dp = search_regularization(D, f, g)
        if Dp is not None:
            return Dp, g, _record(case_label, f, g, D, Dp, "search")
        reasons.append("exhaustive search found no regularization")
    raise LemmaViolation(f"case {case_label} at {f} failed: " + "; ".join(reasons or ["no candidate"]))


def _record(label, f, g, D, Dp, method) -> StepRecord:
    dims = D.dims
    return StepRecord(
        label, f, g, D - Dp, Dp - D, method,
        len(D & regular_region(f, dims)), len(Dp & regular_region(g, dims)),
    )


def run_routine(D0: VertexSet, method: str = "auto", max_steps: Optional[int] = None):
    """Regularize ``D0`` until the terminal case and return ``(D_tau, trace)``.

    Raises:
        DomainError: the grid is smaller than 4 x 4.
        PreconditionError: ``D0`` is not a CDS holding (1, 2).
        RoutineStuck: no case applies, or a step fails to grow the regular part.
    """
    dims = D0.dims
    if dims.m < 4 or dims.n < 4:
        raise DomainError(f"the routine needs m, n >= 4; got {dims}")
    if (1, 2) not in D0 or not is_cds(D0):
        raise PreconditionError("the routine starts from a CDS containing (1, 2)")
    f = INITIAL_FRAME
    if not is_frame_regular(D0, f):
        raise PreconditionError(f"initial set is not {f}-regular")
    if max_steps is None:
        max_steps = dims.size + 2
    trace = RoutineTrace(D0, [], [(D0, f)])
    D = D0
    for _ in range(max_steps):
        labels = select_cases(f, dims)
        if method == "auto":
            attempts = [(lb, "lemma") for lb in labels] + [(lb, "search") for lb in labels]
        else:
            attempts = [(lb, method) for lb in labels]
        last_error = None
        for label, how in attempts:
            try:
                D2, f2, rec = apply_case(D, f, label, how)
                break
            except LemmaViolation as exc:
                last_error = exc
        else:
            raise last_error
        trace.steps.append(rec)
        trace.states.append((D2, f2))
        if label == "C34":
            return D2, trace
        if rec.regular_after <= rec.regular_before:
            raise RoutineStuck(f"case {label} at {f} did not grow the regular part")
        D, f = D2, f2
    raise RoutineStuck(f"no terminal case after {max_steps} steps")
