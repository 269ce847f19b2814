import pytest
from hypothesis import given, settings, strategies as st

from gridcds.bounds import gamma_formula
from gridcds.construct import PART_NAMES, build_cds, cardinality_closed_form
from gridcds.errors import DomainError
from gridcds.grid import is_cds, transpose


@pytest.mark.parametrize("m,n", [(4, 4), (5, 5), (6, 9), (9, 6), (6, 6), (7, 11), (12, 4)])
def test_witness_is_optimal(m, n):
    S, case = build_cds(m, n)
    assert is_cds(S)
    assert len(S) == gamma_formula(m, n).gamma == cardinality_closed_form(m, n)
    assert set(case.parts) == set(PART_NAMES)
    assert case.witness() == S


def test_contains_origin_neighbour():
    S, _ = build_cds(8, 8)
    assert (1, 2) in S


def test_domain():
    with pytest.raises(DomainError):
        build_cds(3, 10)


def test_deterministic():
    assert build_cds(10, 13)[0] == build_cds(10, 13)[0]


@settings(max_examples=60)
@given(st.integers(4, 60), st.integers(4, 60))
def test_random_sizes(m, n):
    S, _ = build_cds(m, n)
    assert is_cds(S) and len(S) == gamma_formula(m, n).gamma
    assert len(transpose(S)) == len(build_cds(n, m)[0])
