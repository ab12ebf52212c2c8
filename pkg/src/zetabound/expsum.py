"""Second-derivative bound for the dyadic sums sum_{a<n<=2a} n^{-it}.

The sums are exponential sums sum e^{2 pi i f(n)} with the phase
f(x) = -t log(x) / (2 pi), whose second derivative t / (2 pi x^2) lies
between 1/W = t / (8 pi a^2) and 1/V = t / (2 pi a^2) on [a+1, 2a].
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ResourceError
from .rigor import PI, ComplexInterval, Interval, cpow_neg_sum, sqrt

__all__ = [
    "DyadicBlock",
    "cheng_graham",
    "second_derivative_window",
    "dyadic_bound",
    "dyadic_bound_closed_form",
    "expsum_bruteforce",
]

BRUTEFORCE_MAX_A = 10**6


@dataclass(frozen=True)
class DyadicBlock:
    """Block a < n <= 2a of the sum of n^{-it}; requires 8 pi a^2 > t."""

    a: int
    t: float

    def __post_init__(self):
        if self.a < 1:
            raise DomainError(f"block start a must be >= 1, got {self.a}")
        if not self.t >= 0:
            raise DomainError(f"t must be non-negative, got {self.t}")
        if not (8 * PI * self.a**2).lo > self.t:
            raise DomainError(f"block needs 8*pi*a^2 > t (a={self.a}, t={self.t})")


def cheng_graham(a: int, V, W) -> Interval:
    """(1/5)(a/V + 1)(8 sqrt(W) + 15) for W > 1 and V < W."""
    V = V if isinstance(V, Interval) else Interval(V)
    W = W if isinstance(W, Interval) else Interval(W)
    if a < 1:
        raise DomainError(f"a must be >= 1, got {a}")
    if not W.lo > 1:
        raise DomainError(f"need W > 1, got {W!r}")
    if not V.hi < W.lo:
        raise DomainError(f"need V < W, got V={V!r}, W={W!r}")
    if not V.lo > 0:
        raise DomainError(f"need V > 0, got {V!r}")
    return (a / V + 1) * (8 * sqrt(W) + 15) / 5


def second_derivative_window(block: DyadicBlock) -> tuple[Interval, Interval]:
    """(V, W) for the phase -t log(x) / (2 pi) on the block."""
    if block.t == 0:
        raise DomainError("t = 0 has a vanishing second derivative")
    a2 = Interval(block.a) ** 2
    t = Interval(block.t)
    return 2 * PI * a2 / t, 8 * PI * a2 / t


def dyadic_bound(block: DyadicBlock) -> Interval:
    """Upper bound on |sum_{a<n<=2a} n^{-it}| from the second-derivative test."""
    V, W = second_derivative_window(block)
    return cheng_graham(block.a, V, W)


def dyadic_bound_closed_form(block: DyadicBlock) -> Interval:
    """The same bound expanded in powers of t:

    t^{1/2} {(8/5) sqrt(2/pi) + 16 sqrt(2 pi) a / (5t) + 3 t^{1/2} / (2 pi a) + 3 t^{-1/2}}.
    """
    a = Interval(block.a)
    t = Interval(block.t)
    rt = sqrt(t)
    inner = (
        Interval(8) / 5 * sqrt(2 / PI)
        + 16 * sqrt(2 * PI) * a / (5 * t)
        + 3 * rt / (2 * PI * a)
        + 3 / rt
    )
    return rt * inner


def expsum_bruteforce(block: DyadicBlock) -> ComplexInterval:
    """Enclosure of sum_{a<n<=2a} n^{-it} by direct interval summation."""
    if block.a > BRUTEFORCE_MAX_A:
        raise ResourceError(f"brute force limited to a <= {BRUTEFORCE_MAX_A}, got {block.a}")
    return cpow_neg_sum(block.a + 1, 2 * block.a, ComplexInterval(0.0, block.t))
