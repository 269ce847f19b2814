import pytest
from hypothesis import given, strategies as st

from gridcds.errors import RangeError
from gridcds.grid import (
    GridDims,
    VertexSet,
    dumps,
    is_cds,
    is_connected,
    is_dominating,
    loads,
    parse_ascii,
    render_ascii,
    transpose,
)


@st.composite
def vertex_sets(draw, max_side=6):
    m = draw(st.integers(1, max_side))
    n = draw(st.integers(1, max_side))
    mask = draw(st.integers(0, (1 << (m * n)) - 1))
    return VertexSet.from_mask(GridDims(m, n), mask)


def test_bit_order_is_lex_order():
    dims = GridDims(3, 4)
    S = VertexSet(dims, [(3, 1), (1, 4), (2, 2)])
    assert list(S) == [(1, 4), (2, 2), (3, 1)]
    assert S.to_list() == [[1, 4], [2, 2], [3, 1]]


def test_out_of_grid_vertex_rejected():
    with pytest.raises(RangeError):
        VertexSet(GridDims(3, 3), [(4, 1)])


def test_mixed_grids_rejected():
    with pytest.raises(RangeError):
        VertexSet(GridDims(3, 3)) | VertexSet(GridDims(3, 4))


def test_middle_row_of_3xn_is_cds():
    S = VertexSet(GridDims(5, 3), [(x, 2) for x in range(1, 6)])
    assert is_cds(S)
    assert not is_cds(S.remove((1, 2)))  # (1,1) and (1,3) undominated


def test_disconnected_dominating_set():
    S = VertexSet(GridDims(1, 4), [(1, 1), (1, 4)])
    assert is_dominating(S) and not is_connected(S)


def test_empty_set_is_not_cds():
    assert not is_cds(VertexSet(GridDims(2, 2)))


@given(vertex_sets())
def test_json_round_trip(S):
    assert loads(dumps(S)) == S


@given(vertex_sets())
def test_ascii_round_trip(S):
    assert parse_ascii(render_ascii(S)) == S


@given(vertex_sets())
def test_transpose_preserves_cds(S):
    T = transpose(S)
    assert (T.dims.m, T.dims.n) == (S.dims.n, S.dims.m)
    assert is_cds(T) == is_cds(S)
    assert transpose(T) == S


def test_dumps_is_sorted_and_stable():
    S = VertexSet(GridDims(2, 2), [(2, 1), (1, 2)])
    assert dumps(S) == dumps(VertexSet(GridDims(2, 2), [(1, 2), (2, 1)]))
    assert list(loads(dumps(S))) == [(1, 2), (2, 1)]
