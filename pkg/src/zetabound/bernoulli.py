"""Exact Bernoulli numbers and sup-norm bounds for periodic Bernoulli polynomials."""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .rigor import Interval, PI, pow_int

__all__ = ["bernoulli_number", "bernoulli_numbers", "periodic_bernoulli_sup", "zeta_integer"]

MAX_INDEX = 256

_lock = threading.Lock()
_table: list[Fraction] = [Fraction(1)]


def _extend(j: int) -> None:
    # sum_{i=0}^{n} C(n+1, i) B_i = 0  for n >= 1, which gives B_1 = -1/2
    with _lock:
        for n in range(len(_table), j + 1):
            if n >= 3 and n % 2 == 1:
                _table.append(Fraction(0))
                continue
            acc = sum(math.comb(n + 1, i) * _table[i] for i in range(n) if _table[i])
            _table.append(-acc / (n + 1))


def bernoulli_number(j: int) -> Fraction:
    """Exact B_j with the convention B_1 = -1/2."""
    if j < 0:
        raise DomainError(f"Bernoulli index must be >= 0, got {j}")
    if j > MAX_INDEX:
        raise DomainError(f"Bernoulli index above {MAX_INDEX} is not supported")
    if j >= len(_table):
        _extend(j)
    return _table[j]


def bernoulli_numbers(n: int) -> list[Fraction]:
    """[B_0, ..., B_n]."""
    bernoulli_number(n)
    return list(_table[: n + 1])


@lru_cache(maxsize=None)
def zeta_integer(n: int) -> Interval:
    """Enclosure of zeta(n) for an integer n >= 2.

    Uses 1 + 2^-n + 3^-n plus the tail bound sum_{j>=4} j^-n <= 3^(1-n)/(n-1).
    """
    if n < 2:
        raise DomainError(f"zeta(n) needs n >= 2, got {n}")
    head = Fraction(1) + Fraction(1, 2**n) + Fraction(1, 3**n)
    tail = Fraction(1, 3 ** (n - 1) * (n - 1))
    return Interval(head, head + tail)


@lru_cache(maxsize=None)
def periodic_bernoulli_sup(n: int) -> Interval:
    """Interval whose upper end bounds sup_x |B_n({x})|.

    For even n the supremum is attained at x = 0 and equals |B_n| exactly.
    For odd n the Fourier bound 2 n! zeta(n) / (2 pi)^n is used.
    """
    if n < 2:
        raise DomainError(f"periodic Bernoulli bound needs n >= 2, got {n}")
    if n % 2 == 0:
        return Interval(abs(bernoulli_number(n)))
    return 2 * math.factorial(n) * zeta_integer(n) / pow_int(2 * PI, n)
