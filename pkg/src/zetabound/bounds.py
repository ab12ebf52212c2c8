"""Closed-form evaluators for the explicit inequalities behind |zeta(1+it)| <= c log t.

All evaluators take and return :class:`~zetabound.rigor.Interval` values, so
their upper endpoints are rigorous upper bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bernoulli import bernoulli_number, periodic_bernoulli_sup
from .errors import DomainError, NotFoundError
from .rigor import LOG2, PI, Interval, hull, log, sqrt

__all__ = [
    "EULER_GAMMA",
    "TheoremParams",
    "feasible",
    "harmonic_upper",
    "backlund_rhs",
    "backlund_threshold",
    "a2_constant",
    "dyadic_count",
    "theorem_ratio",
    "theorem_sup_ratio",
]

_g = 0.5772156649015329
EULER_GAMMA = Interval(math.nextafter(_g, -math.inf), math.nextafter(_g, math.inf))


@dataclass(frozen=True)
class TheoremParams:
    """Parameters (k, m, A1, t0) of the master inequality.

    Construction checks only types and signs; the coupling constraints
    A1 > 1/sqrt(8 pi) and m*A1 <= sqrt(t0) are checked by :func:`feasible`.
    """

    k: int
    m: int
    A1: float
    t0: float

    def __post_init__(self):
        if not 1 <= self.k <= 63:
            raise DomainError(f"k must be in [1, 63], got {self.k}")
        if self.m < 1:
            raise DomainError(f"m must be >= 1, got {self.m}")
        if not self.A1 > 0:
            raise DomainError(f"A1 must be positive, got {self.A1}")
        if not self.t0 >= 3:
            raise DomainError(f"t0 must be >= 3, got {self.t0}")


def feasible(p: TheoremParams) -> bool:
    """A1 > 1/sqrt(8 pi) and m*A1 <= sqrt(t0), rejecting borderline rounding.

    The second constraint is decided exactly as (m*A1)^2 <= t0 on the
    rational values of the doubles.
    """
    a1 = Interval(p.A1)
    if not (8 * PI * a1.square()).lo > 1:
        return False
    return (p.m * Fraction(p.A1)) ** 2 <= Fraction(p.t0)


def _require_feasible(p: TheoremParams) -> None:
    if not feasible(p):
        raise DomainError(f"parameters violate A1 > 1/sqrt(8 pi), m*A1 <= sqrt(t0): {p}")


def _as_interval(t) -> Interval:
    return t if isinstance(t, Interval) else Interval(t)


def harmonic_upper(N: int) -> Interval:
    """log N + gamma + 1/N, an upper bound for the N-th harmonic number."""
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    return log(N) + EULER_GAMMA + Interval(1) / N


def backlund_rhs(t, m: int) -> Interval:
    """Right side of Backlund's inequality for |zeta(1+it)| - log t.

    -log m + gamma + 1/t + m/(2(t-m)) + m^2 (1+t)(4+t) / (24 (t-m)^2),
    evaluated through u = 1/(t-m) so that t may range up to +inf.
    """
    t = _as_interval(t)
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    if not t.lo > m:
        raise DomainError(f"need t > m, got t={t!r}, m={m}")
    u = 1 / (t - m)
    quad = (1 + (1 + m) * u) * (1 + (4 + m) * u)
    return -log(m) + EULER_GAMMA + 1 / t + m * u / 2 + Interval(m * m) / 24 * quad


def _negative_beyond(start: float, m: int, max_leaves: int = 10_000) -> bool:
    """Verify backlund_rhs < 0 on [start, +inf) by box subdivision."""
    if not backlund_rhs(Interval(10 * start, math.inf), m).hi < 0:
        return False
    stack = [(start, 10 * start)]
    leaves = 0
    while stack:
        lo, hi = stack.pop()
        if backlund_rhs(Interval(lo, hi), m).hi < 0:
            leaves += 1
            continue
        mid = lo + (hi - lo) / 2
        if not lo < mid < hi or leaves > max_leaves:
            return False
        stack.append((mid, hi))
        stack.append((lo, mid))
    return True


def backlund_threshold(m: int, tol: float = 1e-6) -> Interval:
    """Interval containing the largest root of backlund_rhs(., m).

    The right side decreases from +inf (t -> m) towards
    -log m + gamma + m^2/24, so a root exists only when that limit is
    negative.  The root is bracketed by a geometric scan, bisected to width
    ``tol``, and the right side is verified negative on [root, +inf).
    """
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    limit = -log(m) + EULER_GAMMA + Interval(m * m) / 24
    if limit.lo >= 0:
        raise NotFoundError(f"backlund_rhs(., {m}) stays positive: its limit is {limit!r}")
    hi = 2.0 * m
    while not backlund_rhs(hi, m).hi < 0:
        hi *= 2
        if hi > 1e12:
            raise NotFoundError(f"no sign change of backlund_rhs(., {m}) in ({m}, 1e12]")
    lo = hi / 2
    while not (lo > m and backlund_rhs(lo, m).lo > 0):
        lo = m + (lo - m) / 2
        if lo - m < 1e-9 * m:
            raise NotFoundError(f"no positive value of backlund_rhs(., {m}) found")
    while hi - lo > tol:
        mid = lo + (hi - lo) / 2
        v = backlund_rhs(mid, m)
        if v.lo > 0:
            lo = mid
        elif v.hi < 0:
            hi = mid
        else:
            break
    if not _negative_beyond(hi, m):
        raise NotFoundError(f"could not verify backlund_rhs(., {m}) < 0 beyond {hi}")
    return Interval(lo, hi)


def a2_constant(p: TheoremParams) -> Interval:
    """(8/5) sqrt(2/pi) + 16 sqrt(2 pi)/(5m) + 3/(2 pi A1) + 3 t0^(-1/2).

    Defined for any positive parameters; feasibility is not required.
    """
    A1 = Interval(p.A1)
    return (
        Interval(8) / 5 * sqrt(2 / PI)
        + 16 * sqrt(2 * PI) / (5 * p.m)
        + 3 / (2 * PI * A1)
        + 3 / sqrt(Interval(p.t0))
    )


def dyadic_count(t, p: TheoremParams) -> Interval:
    """Number of dyadic blocks covering (A1 t^(1/2), t/m]:

    (log(t)/2 - log(m A1) + log 2) / log 2.
    """
    t = _as_interval(t)
    if Fraction(t.lo) < (p.m * Fraction(p.A1)) ** 2:
        raise DomainError(f"need t >= (m*A1)^2, got t={t!r}")
    mA1 = p.m * Interval(p.A1)
    return (log(t) / 2 - log(mA1) + LOG2) / LOG2


@lru_cache(maxsize=4096)
def _series(k: int, m: int, t: Interval) -> tuple[Interval, Interval]:
    """The Bernoulli r-sum and the final remainder term at t.

    Products (1+t)...(r+t) (m/t)^(r+1) are formed factor by factor as
    (m/t) * prod m(1 + j/t), which stays in range for large t.
    """
    m_over_t = m / t
    prod = Interval(1)
    rsum = Interval(0)
    for r in range(1, k + 1):
        prod = prod * (m * (1 + r / t))
        b = bernoulli_number(r + 1)
        if b:
            coeff = Interval(abs(b) / math.factorial(r + 1))
            rsum = rsum + coeff * m_over_t * prod
    prod = prod * (m * (1 + (k + 1) / t))
    final = prod / ((k + 1) * math.factorial(k + 1)) * periodic_bernoulli_sup(k + 1)
    return rsum, final


def _constants(p: TheoremParams) -> tuple[Interval, Interval]:
    """(c1, c0): RHS = c1 log t + c0 + g(t)."""
    A1 = Interval(p.A1)
    A2 = a2_constant(p)
    c1 = Interval(1) / 2 + A2 / (2 * A1 * LOG2)
    c0 = (
        A2 * (LOG2 - log(p.m * A1)) / (A1 * LOG2)
        + log(A1)
        + EULER_GAMMA
        + 1 / (A1 * sqrt(Interval(p.t0)))
    )
    return c1, c0


def _g(t: Interval, p: TheoremParams) -> Interval:
    rsum, final = _series(p.k, p.m, t)
    return p.m / (2 * t) + 1 / t + rsum + final


def theorem_ratio(t, p: TheoremParams) -> Interval:
    """Right side of the master inequality divided by log t, for t >= t0."""
    t = _as_interval(t)
    _require_feasible(p)
    if t.lo < p.t0:
        raise DomainError(f"need t >= t0 = {p.t0}, got {t!r}")
    c1, c0 = _constants(p)
    return c1 + (c0 + _g(t, p)) / log(t)


@lru_cache(maxsize=1024)
def _g_terms_decreasing(k: int, t0: float) -> bool:
    """Check that every term of g has negative logarithmic derivative at t0.

    Term r behaves like prod_{j<=r}(j+t) / t^(r+1); its logarithmic
    derivative sum 1/(j+t) - (r+1)/t is negative for every t > 0 because
    each 1/(j+t) < 1/t, and the interval check confirms it at t0.
    """
    t0 = Interval(t0)
    partial = Interval(0)
    for r in range(1, k + 2):
        partial = partial + 1 / (r + t0)
        # r-sum terms have r factors over t^(r+1); the final term k+1 over t^(k+1)
        power = r + 1 if r <= k else r
        if not (partial - power / t0).hi < 0:
            return False
    return True


def theorem_sup_ratio(p: TheoremParams) -> Interval:
    """Interval whose upper endpoint bounds the ratio over all t >= t0.

    Writing the right side as c1 log t + c0 + g(t) with g positive and
    decreasing, the ratio c1 + (c0 + g(t))/log t is maximal at t0 when
    c0 + g(t0) >= 0, and stays below c1 otherwise.  The fallback returns the
    hull of c1 and the ratio on the grid t0 * 2^j up to 1024 t0.
    """
    _require_feasible(p)
    t0 = Interval(p.t0)
    c1, c0 = _constants(p)
    at_t0 = c1 + (c0 + _g(t0, p)) / log(t0)
    if _g_terms_decreasing(p.k, p.t0) and (c0 + _g(t0, p)).lo >= 0:
        return at_t0
    grid = [at_t0] + [theorem_ratio(p.t0 * 2.0**j, p) for j in range(1, 11)]
    if not _g_terms_decreasing(p.k, p.t0):
        # g bounded by g(t0) throughout
        numer = c0 + _g(t0, p)
        grid.append(c1 + Interval(0, max(numer.hi, 0.0)) / log(t0))
    return hull(c1, *grid)
