"""Acceptance criteria. Each test prints one PASS/FAIL line."""

import random
import time

import pytest

from gridcds.bounds import fujie_bounds, gamma_formula, known_small_gamma, sn_lower_bound
from gridcds.construct import build_cds
from gridcds.grid import is_cds, is_dominating
from gridcds.regularize import audit_final, find_mobiles, regular_region, run_routine
from gridcds.solver import enumerate_mcds, normalize_origin, solve_gamma

BATTERY = [(4, 4), (4, 5), (4, 6), (5, 5)]


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {title}" + (f" ({detail})" if detail else ""))
        assert ok, detail
    return emit


@pytest.fixture(scope="module")
def battery_runs():
    runs = []
    for m, n in BATTERY:
        for D in enumerate_mcds(m, n, cap=200):
            D0 = normalize_origin(D)
            runs.append((D0, *run_routine(D0, method="auto")))
    return runs


def test_construction_equals_formula(report):
    t = time.perf_counter()
    bad = [(m, n) for m in range(4, 41) for n in range(4, 41)
           if not (lambda S: is_cds(S) and len(S) == gamma_formula(m, n).gamma)(build_cds(m, n)[0])]
    dt = time.perf_counter() - t
    report(1, "construction matches formula on 1369 grids", not bad and dt < 10, f"{dt:.1f}s, bad={bad[:5]}")


def test_solver_equals_formula(report):
    grids = [(4, 4), (4, 5), (4, 6), (4, 7), (5, 5), (5, 6)]
    got = {g: solve_gamma(*g).gamma for g in grids}
    bad = {g: v for g, v in got.items() if v != gamma_formula(*g).gamma}
    report(2, "solver equals formula on six grids", not bad, f"values={got}")


def test_prior_work(report):
    small = [(m, n) for m in (2, 3) for n in range(m, 9) if solve_gamma(m, n).gamma != known_small_gamma(m, n)]
    t = time.perf_counter()
    four = [n for n in range(4, 1001) if gamma_formula(4, n).gamma != 2 * n - n // 3]
    dt = time.perf_counter() - t
    report(3, "small closed forms and four-row formula", not small and not four and dt < 1,
           f"small mismatches={small}, 4xn mismatches={four[:5]}, {dt:.2f}s")


def test_sandwich_and_symmetry(report):
    t = time.perf_counter()
    bad = []
    for m in range(4, 201):
        for n in range(4, 201):
            g = gamma_formula(m, n).gamma
            if not (sn_lower_bound(m, n) <= g <= fujie_bounds(m, n)[1]) or g != gamma_formula(n, m).gamma:
                bad.append((m, n))
    dt = time.perf_counter() - t
    report(4, "bound sandwich and symmetry on 4..200", not bad and dt < 5, f"{dt:.2f}s, bad={bad[:5]}")


def test_routine_battery(report, battery_runs):
    problems = []
    fallback = 0
    for D0, D_tau, trace in battery_runs:
        dims = D0.dims
        for step, (before, _), (after, _) in zip(trace.steps, trace.states, trace.states[1:]):
            fallback += step.method == "search"
            old = regular_region(step.frame_before, dims)
            if len(after) != len(before) or not is_cds(after):
                problems.append((D0, step.case_label, "cardinality or CDS"))
            if not (step.removed.isdisjoint(old) and step.added.isdisjoint(old)):
                problems.append((D0, step.case_label, "regular vertex swapped"))
            if step.case_label != "C34" and step.regular_after <= step.regular_before:
                problems.append((D0, step.case_label, "no growth"))
        rep = audit_final(D_tau, trace)
        problems += [(D0, name, det) for name, _, det in rep.failures()]
    report(5, "routine battery with audits", not problems,
           f"{len(battery_runs)} runs, {fallback} search-fallback steps, problems={problems[:3]}")


def test_four_by_four_determinism(report, battery_runs):
    seen = set()
    for D0, D_tau, trace in battery_runs:
        if (D0.dims.m, D0.dims.n) != (4, 4):
            continue
        rep = audit_final(D_tau, trace)
        seen.add((tuple(trace.cases), rep.d, rep.c, rep.r_bar, rep.a))
    want = {(("C1", "C1", "C1", "C31", "C2", "C34"), 5, 1, 1, 1)}
    report(6, "4x4 case sequence and counts", seen == want, f"seen={seen}")


def test_mobile_soundness(report, battery_runs):
    states = [s for _, _, trace in battery_runs for s in trace.states]
    sample = random.Random(7).sample(states, 1000)
    bad = [(D, f, v) for D, f in sample for v in find_mobiles(D, f) if not is_dominating(D.remove(v))]
    mobiles = sum(len(find_mobiles(D, f)) for D, f in sample)
    report(7, "mobile removal keeps domination", not bad, f"1000 states, {mobiles} mobiles, bad={bad[:3]}")
