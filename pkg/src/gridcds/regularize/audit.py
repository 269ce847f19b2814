"""Counting checks on a finished regularization run.

The final set D_tau splits into d dominators, c connectors and r-bar
irregular vertices, and ``a`` counts the grid vertices that no regular vertex
dominates.  A correct run satisfies ``mn = 3d + a`` and ``|D| = d + c + r-bar``
with ``a`` and ``r-bar`` fixed by the residues of m and n, which is where the
lower bound on gamma comes from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple

from ..bounds import a_prime, c_prime, r_bar_prime
from ..grid import VertexSet, dominated_mask
from .classify import classify
from .frames import RegularityFrame, regular_part
from .routine import RoutineTrace

Check = Tuple[str, bool, str]


@dataclass
class AuditReport:
    tau: int
    d: int
    c: int
    r_bar: int
    a: int
    dominated_by_dominators: int
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c[1]]

    def to_json(self) -> dict:
        return {
            "tau": self.tau,
            "d": self.d,
            "c": self.c,
            "r_bar": self.r_bar,
            "a": self.a,
            "dominated_by_dominators": self.dominated_by_dominators,
            "passed": self.passed,
            "checks": [{"name": n, "passed": ok, "detail": det} for n, ok, det in self.checks],
        }


def _dominated(S: VertexSet) -> int:
    return dominated_mask(S.dims, S.mask)


def _is_case3_frame(f: RegularityFrame, m: int, n: int) -> bool:
    return (f.mode == "Q" and f.p == m) or (f.mode == "P" and f.q == n)


def audit_step(D: VertexSet, f: RegularityFrame, produced_by: str) -> List[Check]:
    """Checks that hold right after a step labelled ``produced_by`` lands on ``(D, f)``."""
    m, n = D.dims.m, D.dims.n
    cl = classify(D, f)
    d = len(cl.dominators)
    covered = _dominated(cl.dominators | cl.preconnectors).bit_count()
    want = 3 * d if _is_case3_frame(f, m, n) else 3 * d + 1
    n_pre = len(cl.preconnectors)
    want_pre = 1 if produced_by in ("C31", "C32", "C33") else 0
    return [
        ("step-DR", covered == want, f"{produced_by} -> {f}: covered {covered}, expected {want}"),
        ("step-PCR", n_pre == want_pre, f"{produced_by} -> {f}: {n_pre} pre-connectors, expected {want_pre}"),
    ]


def audit_final(D_tau: VertexSet, trace: RoutineTrace, per_step: bool = True) -> AuditReport:
    """Evaluate the final counting identities, and optionally every step's ledger."""
    dims = D_tau.dims
    m, n = dims.m, dims.n
    f = trace.final[1]
    cl = classify(D_tau, f)
    R = regular_part(D_tau, f)
    d, c, r_bar = len(cl.dominators), len(cl.connectors), len(cl.irregular)
    dom_mask = _dominated(cl.dominators)
    n_dom = dom_mask.bit_count()
    a = m * n - _dominated(R).bit_count()
    checks: List[Check] = []

    def add(name, ok, detail):
        checks.append((name, bool(ok), detail))

    add("PCR", len(cl.preconnectors) == 0, f"{len(cl.preconnectors)} pre-connectors")
    add("DR", n_dom == 3 * d, f"{n_dom} dominated by {d} dominators")
    con_mask = _dominated(cl.connectors)
    add("CR0", con_mask & ~dom_mask == 0, "connector neighbourhoods covered by dominators")

    frames = [fr for _, fr in trace.states]
    first3 = next((i for i, s in enumerate(trace.steps) if s.case_label in ("C31", "C32", "C33")), None)
    pq_ok, pq_bad = True, ""
    for i, fr in enumerate(frames):
        early = first3 is None or i <= first3
        ok = (fr.p_prime, fr.q_prime) == (0, 2) if early else fr.p_prime % 3 == 2 and fr.q_prime % 3 == 2
        if not ok and pq_ok:
            pq_ok, pq_bad = False, f"frame {i} {fr}"
    add("PQ", pq_ok, pq_bad or f"{len(frames)} frames")

    ap, rp, cp = a_prime(m, n), r_bar_prime(m, n), c_prime(m, n)
    add("IR", a == ap and r_bar == rp, f"a={a} (expected {ap}), r_bar={r_bar} (expected {rp})")
    add("CR1", c >= cp, f"c={c} >= {cp}")
    add("Eq1", m * n == 3 * d + a, f"{m * n} = 3*{d} + {a}")
    add("Eq2", len(D_tau) == d + c + r_bar, f"{len(D_tau)} = {d} + {c} + {r_bar}")

    if per_step:
        ledger_ok, ledger_bad = True, ""
        for step, (Ds, fs) in zip(trace.steps, trace.states[1:]):
            for name, ok, detail in audit_step(Ds, fs, step.case_label):
                if not ok and ledger_ok:
                    ledger_ok, ledger_bad = False, f"{name}: {detail}"
        add("steps", ledger_ok, ledger_bad or f"{trace.tau} steps")

    return AuditReport(trace.tau, d, c, r_bar, a, n_dom, checks)
