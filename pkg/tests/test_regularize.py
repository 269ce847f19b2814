import random

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from gridcds.errors import DomainError, FrameError, LemmaViolation, PreconditionError
from gridcds.grid import GridDims, VertexSet, is_cds, is_dominating, parse_ascii, transpose
from gridcds.regularize import (
    INITIAL_FRAME,
    RegularityFrame,
    apply_case,
    audit_final,
    case_guards,
    classify,
    find_mobiles,
    frame_constraints,
    irregular_part,
    is_frame_regular,
    regular_part,
    regular_region,
    run_routine,
    target_frame,
)
from gridcds.regularize.frames import frame_from_list
from gridcds.solver import enumerate_mcds, normalize_origin

from support import NO_CORNER_4x5, random_mcds


@st.composite
def frames(draw):
    m = draw(st.integers(4, 10))
    n = draw(st.integers(4, 10))
    if draw(st.booleans()):
        p = draw(st.integers(1, m))
        q = draw(st.integers(2, n))
        pp = draw(st.integers(0, p - 1))
        f = RegularityFrame(pp, q, p, q)
    else:
        q = draw(st.integers(2, n))
        p = draw(st.integers(1, m))
        qp = draw(st.integers(0, q - 1))
        f = RegularityFrame(p, qp, p, q)
    return GridDims(m, n), f


def test_modes():
    assert RegularityFrame(0, 2, 1, 2).mode == "Q"
    assert RegularityFrame(2, 2, 2, 3).mode == "P"
    with pytest.raises(FrameError):
        RegularityFrame(1, 2, 3, 4).mode
    with pytest.raises(FrameError):
        RegularityFrame(0, 2, 5, 2).validate(GridDims(4, 4))


def test_frame_text():
    f = frame_from_list([2, 2, 2, 3])
    assert str(f) == "(2,2)-(2,3)" and f.as_list() == [2, 2, 2, 3]


def test_initial_frame_requires_origin_neighbour():
    fc = frame_constraints(INITIAL_FRAME, GridDims(4, 4))
    assert (1, 2) in fc.required


@given(frames())
def test_constraint_invariants(df):
    dims, f = df
    fc = frame_constraints(f, dims)
    assert fc.required.issubset(fc.regular_region)
    assert fc.required.isdisjoint(fc.forbidden)


@given(frames())
def test_region_transposes(df):
    dims, f = df
    g = f.transposed()
    try:
        g.validate(dims.transposed())
    except FrameError:
        return
    assert transpose(regular_region(f, dims)) == regular_region(g, dims.transposed())


def test_targets():
    f = RegularityFrame(2, 2, 2, 5)
    assert target_frame(f, "C32") == RegularityFrame(2, 5, 3, 5)
    assert target_frame(f, "C33") == RegularityFrame(5, 2, 5, 3)
    assert target_frame(f, "C34") == f


def test_guards():
    dims = GridDims(4, 4)
    assert case_guards(INITIAL_FRAME, dims) == ["C1"]
    assert case_guards(RegularityFrame(0, 2, 4, 2), dims) == ["C31"]
    assert case_guards(RegularityFrame(2, 2, 2, 4), dims) == ["C34"]
    big = GridDims(12, 12)
    assert case_guards(RegularityFrame(2, 2, 12, 2), big) == ["C32", "C33"]


def _states(m, n, seed, count=3):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        D = random_mcds(m, n, rng, steps=300)
        _, trace = run_routine(D)
        out.extend(trace.states)
    return out


@settings(max_examples=15, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.integers(4, 7), st.integers(4, 7), st.integers(0, 10**6))
def test_partition_and_mobiles(m, n, seed):
    for D, f in _states(m, n, seed, count=1):
        assert is_frame_regular(D, f)
        cl = classify(D, f)
        parts = [cl.connectors, cl.preconnectors, cl.dominators, cl.irregular]
        for i, a in enumerate(parts):
            for b in parts[i + 1:]:
                assert a.isdisjoint(b)
        assert cl.connectors | cl.preconnectors | cl.dominators == regular_part(D, f)
        assert cl.irregular == irregular_part(D, f)
        for v in find_mobiles(D, f):
            assert v in cl.irregular
            assert is_dominating(D.remove(v))


def test_classify_rejects_irregular_set():
    D = VertexSet(GridDims(4, 4), [(2, 1), (2, 2), (2, 3), (3, 3)])
    with pytest.raises(FrameError):
        classify(D, INITIAL_FRAME)


@pytest.mark.parametrize("method", ["auto", "lemma", "search"])
def test_four_by_four(method):
    for D in enumerate_mcds(4, 4):
        D_tau, trace = run_routine(normalize_origin(D), method=method)
        assert trace.cases == ["C1", "C1", "C1", "C31", "C2", "C34"]
        rep = audit_final(D_tau, trace)
        assert rep.passed, rep.failures()
        assert (rep.d, rep.c, rep.r_bar, rep.a) == (5, 1, 1, 1)


def test_steps_are_legal():
    for D in enumerate_mcds(4, 6):
        D = normalize_origin(D)
        _, trace = run_routine(D)
        for step, (before, _), (after, _) in zip(trace.steps, trace.states, trace.states[1:]):
            assert len(after) == len(before) and is_cds(after)
            assert len(step.removed) == len(step.added)
            old = regular_region(step.frame_before, D.dims)
            assert step.removed.isdisjoint(old) and step.added.isdisjoint(old)
            if step.case_label != "C34":
                assert step.regular_after > step.regular_before


def test_trace_json():
    D = normalize_origin(enumerate_mcds(4, 4)[0])
    _, trace = run_routine(D)
    doc = trace.to_json()
    assert [s["case"] for s in doc] == trace.cases
    assert doc[0]["frame_before"] == [0, 2, 1, 2]
    assert set(doc[0]) == {"case", "frame_before", "frame_after", "removed", "added", "method"}


def test_corner_counterexample():
    D = parse_ascii(NO_CORNER_4x5)
    assert is_cds(D) and len(D) == 9
    assert not {(1, 3), (2, 3), (2, 4)} & set(D)
    with pytest.raises(LemmaViolation):
        run_routine(D, method="lemma")
    D_tau, trace = run_routine(D, method="auto")
    corner = [s for s in trace.steps if s.case_label == "C31"]
    assert [s.method for s in corner] == ["search"]
    assert list(corner[0].removed) == [(1, 5), (2, 5), (3, 3)]
    assert list(corner[0].added) == [(1, 4), (2, 3), (2, 4)]
    assert audit_final(D_tau, trace).passed


def test_larger_witnesses_lemma_only():
    from gridcds.construct import build_cds

    for m, n in [(9, 9), (10, 12), (12, 7), (13, 13)]:
        D_tau, trace = run_routine(build_cds(m, n)[0], method="lemma")
        assert audit_final(D_tau, trace).passed
        assert {"C32", "C33"} & set(trace.cases)


@settings(max_examples=20, deadline=None)
@given(st.integers(4, 8), st.integers(4, 8), st.integers(0, 10**6))
def test_random_mcds_audits(m, n, seed):
    D = random_mcds(m, n, random.Random(seed), steps=500)
    D_tau, trace = run_routine(D)
    rep = audit_final(D_tau, trace)
    assert rep.passed, rep.failures()


def test_preconditions():
    with pytest.raises(DomainError):
        run_routine(VertexSet.full(GridDims(3, 5)))
    D = normalize_origin(enumerate_mcds(4, 4)[0])
    with pytest.raises(PreconditionError):
        run_routine(D.remove((1, 2)).add((2, 1)))
    with pytest.raises(PreconditionError):
        apply_case(D, INITIAL_FRAME, "C2")
    with pytest.raises(PreconditionError):
        apply_case(D, INITIAL_FRAME, "C1", method="magic")
