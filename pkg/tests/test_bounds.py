import pytest
from hypothesis import given, strategies as st

from gridcds.bounds import (
    a_prime,
    c_prime,
    fujie_bounds,
    gamma_formula,
    known_small_gamma,
    r_bar_prime,
    sn_lower_bound,
)
from gridcds.errors import DomainError

sides = st.integers(4, 300)


@pytest.mark.parametrize("m,n,gamma", [(4, 4, 7), (4, 5, 9), (4, 6, 10), (5, 5, 11), (5, 6, 12), (6, 6, 14), (7, 9, 24)])
def test_known_values(m, n, gamma):
    assert gamma_formula(m, n).gamma == gamma


def test_breakdown_parts():
    b = gamma_formula(5, 5)
    assert (b.a_prime, b.r_bar_prime, b.c_prime) == (4, 3, 1)
    assert b.as_dict()["gamma"] == 11


def test_r_bar_prime_table():
    assert [r_bar_prime(m, n) for m, n in [(4, 4), (5, 5), (5, 4), (6, 4)]] == [1, 3, 2, 0]


def test_c_prime_cases():
    assert c_prime(6, 9) == 2  # both multiples of 3
    assert c_prime(6, 7) == 2  # only m
    assert c_prime(7, 9) == 3  # only n
    assert c_prime(7, 8) == 3  # neither: 2 + 2 - 1


@pytest.mark.parametrize("m,n", [(3, 5), (5, 3), (0, 4)])
def test_domain(m, n):
    with pytest.raises(DomainError):
        gamma_formula(m, n)


def test_sn_bound_small():
    # ceil((48 + 8) / 9) = 7
    assert sn_lower_bound(4, 4) == 7


def test_small_closed_forms():
    assert known_small_gamma(2, 3) == 2
    assert known_small_gamma(2, 7) == 7
    assert known_small_gamma(3, 8) == 8
    with pytest.raises(DomainError):
        known_small_gamma(5, 5)


@given(sides, sides)
def test_symmetry(m, n):
    assert gamma_formula(m, n).gamma == gamma_formula(n, m).gamma


@given(sides, sides)
def test_sandwich(m, n):
    g = gamma_formula(m, n).gamma
    assert sn_lower_bound(m, n) <= g <= fujie_bounds(m, n)[1]
    assert fujie_bounds(m, n)[0] <= g


@given(sides, sides)
def test_counting_identity_is_integral(m, n):
    assert (m * n - a_prime(m, n)) % 3 == 0


@given(st.integers(4, 2000))
def test_four_rows(n):
    assert gamma_formula(4, n).gamma == 2 * n - n // 3 == known_small_gamma(4, n)
