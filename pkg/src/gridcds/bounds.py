"""Closed-form connected domination number of grid graphs and classic bounds.

All arithmetic is over integers; no floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .errors import DomainError


@dataclass(frozen=True)
class GammaBreakdown:
    m: int
    n: int
    a_prime: int
    r_bar_prime: int
    c_prime: int
    gamma: int

    def as_dict(self) -> dict:
        return asdict(self)


def _require_main_domain(m: int, n: int) -> None:
    if m < 4 or n < 4:
        raise DomainError(f"closed form is defined for m, n >= 4; got {m}x{n}")


def a_prime(m: int, n: int) -> int:
    """Product of the residues of ``m`` and ``n`` modulo 3."""
    _require_main_domain(m, n)
    return (m % 3) * (n % 3)


_R_BAR = {0: 0, 1: 1, 2: 2, 4: 3}


def r_bar_prime(m: int, n: int) -> int:
    """Irregular-vertex term: 4 -> 3, 2 -> 2, 1 -> 1, 0 -> 0 on ``a_prime``."""
    return _R_BAR[a_prime(m, n)]


def c_prime(m: int, n: int) -> int:
    """Connector term, keyed on which of ``m`` and ``n`` are multiples of 3."""
    _require_main_domain(m, n)
    m_div, n_div = m % 3 == 0, n % 3 == 0
    if m_div and n_div:
        return min(m // 3, n // 3)
    if m_div:
        return m // 3
    if n_div:
        return n // 3
    return m // 3 + n // 3 - 1


def gamma_formula(m: int, n: int) -> GammaBreakdown:
    """Connected domination number of the m x n grid for m, n >= 4.

    Raises:
        DomainError: if ``m < 4`` or ``n < 4``.  Small grids go through
            :func:`known_small_gamma` or the exact solver instead.
    """
    a = a_prime(m, n)
    numerator = m * n - a
    assert numerator % 3 == 0, (m, n, a)
    r = r_bar_prime(m, n)
    c = c_prime(m, n)
    return GammaBreakdown(m, n, a, r, c, numerator // 3 + r + c)


def known_small_gamma(m: int, n: int) -> int:
    """Published values for 2, 3 and 4 row grids (``m <= n``).

    gamma(2, 2) = gamma(2, 3) = 2, gamma(2, n) = n for n >= 4,
    gamma(3, n) = n for n >= 3, gamma(4, n) = 2n - floor(n / 3) for n >= 4.
    """
    if m == 2 and n >= 2:
        return 2 if n <= 3 else n
    if m == 3 and n >= 3:
        return n
    if m == 4 and n >= 4:
        return 2 * n - n // 3
    raise DomainError(f"no published closed form for {m}x{n} (need m in {{2,3,4}} and n >= m)")


def fujie_bounds(m: int, n: int) -> tuple:
    """Lower and upper bounds from the integer-programming study of grid MLSTs."""
    _require_main_domain(m, n)
    lower = m * n - (2 * m * n) // 3
    upper = min(
        2 * m + n - 4 + ((n - 4) // 3) * (m - 2),
        2 * n + m - 4 + ((m - 4) // 3) * (n - 2),
    )
    return lower, upper


def sn_lower_bound(m: int, n: int) -> int:
    """ceil((mn + 2 min(m, n) / 3) / 3), evaluated as ceil((3mn + 2 min) / 9)."""
    if m < 1 or n < 1:
        raise DomainError(f"grid dimensions must be positive, got {m}x{n}")
    num = 3 * m * n + 2 * min(m, n)
    return -(-num // 9)
