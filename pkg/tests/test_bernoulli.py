from __future__ import annotations

import math
from fractions import Fraction

import pytest

from helpers import akiyama_tanigawa
from zetabound.bernoulli import (
    bernoulli_number,
    bernoulli_numbers,
    periodic_bernoulli_sup,
    zeta_integer,
)
from zetabound.errors import DomainError
from zetabound.rigor import PI, pow_int


def test_small_values():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(3) == 0
    assert bernoulli_number(4) == Fraction(-1, 30)


def test_against_akiyama_tanigawa():
    other = akiyama_tanigawa(64)
    ours = bernoulli_numbers(64)
    assert ours[1] == -other[1]
    for j in range(65):
        if j != 1:
            assert ours[j] == other[j], j
    assert bernoulli_number(15) == other[15] == 0


def test_odd_vanishing_and_sign_alternation():
    for j in range(3, 65, 2):
        assert bernoulli_number(j) == 0
    signs = [bernoulli_number(2 * j) > 0 for j in range(1, 33)]
    assert all(signs[i] != signs[i + 1] for i in range(len(signs) - 1))


def test_index_limits():
    with pytest.raises(DomainError):
        bernoulli_number(-1)
    with pytest.raises(DomainError):
        periodic_bernoulli_sup(1)


def _fourier_cap(n: int) -> float:
    return (2 * math.factorial(n) * zeta_integer(n) / pow_int(2 * PI, n)).hi


def _grid_sup(n: int, points: int = 10**6) -> float:
    """max |B_n(x)| on a uniform grid plus a Lipschitz pad (|B_n'| = n|B_{n-1}| <= n)."""
    import numpy as np

    coeffs = [math.comb(n, j) * float(bernoulli_number(j)) for j in range(n + 1)]
    # B_n(x) = sum_j C(n, j) B_j x^(n-j); numpy wants highest degree first
    x = np.linspace(0.0, 1.0, points + 1)
    values = np.polyval(coeffs, x)
    lip = n * max(abs(np.polyval([math.comb(n - 1, j) * float(bernoulli_number(j))
                                  for j in range(n)], x)))
    return float(np.max(np.abs(values))), lip / points


def test_sup_n2_is_one_sixth():
    b = periodic_bernoulli_sup(2)
    assert Fraction(1, 6) <= Fraction(b.hi) <= Fraction(1, 6) * (1 + Fraction(1, 10**10))


@pytest.mark.parametrize("n", [4, 15])
def test_sup_against_grid_oracle(n):
    b = periodic_bernoulli_sup(n)
    grid_max, pad = _grid_sup(n)
    assert b.hi >= grid_max
    assert b.hi <= _fourier_cap(n) * (1 + 1e-15)
    assert 0 < b.hi < math.inf
    if n == 4:
        assert b.hi >= 1 / 30
    # the grid maximum is within the Lipschitz pad of the true sup
    assert b.hi <= 2 * (grid_max + pad) + 1e-12


def test_sup_dominates_endpoint_values():
    for n in range(2, 40, 2):
        assert periodic_bernoulli_sup(n).hi >= abs(bernoulli_number(n))


def test_zeta_integer_enclosure():
    assert zeta_integer(2).contains(math.pi**2 / 6)
    assert zeta_integer(4).contains(math.pi**4 / 90)
