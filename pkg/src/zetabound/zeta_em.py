"""Rigorous enclosures of zeta(s) by Euler-Maclaurin summation.

With f(x) = x^-s, a = N and b -> infinity, the summation formula gives

    zeta(s) - sum_{n<=N} n^-s
        = N^(1-s)/(s-1) + B_1 N^-s
          + sum_{r=1}^{k} B_{r+1}/(r+1)! * s(s+1)...(s+r-1) * N^(-s-r)
          + R_k,

    |R_k| <= sup|B_{k+1}(x)| / (k+1)! * |s(s+1)...(s+k)| * N^(-sigma-k) / (sigma+k).

Adding N^-s back moves the sum to n <= N-1 and, for k = 1, recovers the
classical four-term expansion with the +N^-s/2 and s/(12 N^(s+1)) terms.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from math import factorial

from .bernoulli import bernoulli_number, periodic_bernoulli_sup
from .errors import DomainError
from .rigor import (
    ComplexInterval,
    Interval,
    abs_enclosure,
    cpow_neg,
    cpow_neg_sum,
    exp,
    log,
)

__all__ = ["EMConfig", "WidthMissWarning", "em_tail", "zeta_point", "zeta_on_box"]

MAX_K = 64
N_CAP = 10**7


class WidthMissWarning(UserWarning):
    """zeta_point could not reach the requested width within its caps."""


@dataclass(frozen=True)
class EMConfig:
    N: int
    k: int

    def __post_init__(self):
        if self.N < 1:
            raise DomainError(f"truncation point N must be >= 1, got {self.N}")
        if not 0 <= self.k <= MAX_K:
            raise DomainError(f"Euler-Maclaurin order k must be in [0, {MAX_K}], got {self.k}")


def _as_box(s) -> ComplexInterval:
    return s if isinstance(s, ComplexInterval) else ComplexInterval(s)


def _check_domain(s: ComplexInterval) -> None:
    if s.re.lo <= 0:
        raise DomainError(f"Re(s) must be positive on the whole box, got {s.re!r}")
    if s.re.contains(1.0) and s.im.contains(0.0):
        raise DomainError("the box contains the pole s = 1")


def _remainder_radius(s: ComplexInterval, N: int, k: int) -> float:
    sup = periodic_bernoulli_sup(k + 1)
    poly = Interval(1.0)
    for j in range(k + 1):
        poly = poly * abs_enclosure(s + j)
    sigma = Interval(s.re.lo)
    decay = exp(-(sigma + k) * log(N)) / (sigma + k)
    return (sup * poly * decay / factorial(k + 1)).hi


def _em_terms(s: ComplexInterval, cfg: EMConfig) -> dict:
    """The individual pieces of the tail expansion, for inspection and tests."""
    N, k = cfg.N, cfg.k
    n_s = cpow_neg(N, s)
    integral = N * n_s / (s - 1)
    b1_term = n_s * Interval(bernoulli_number(1))
    r_terms = []
    poly = s
    n_pow = Interval(1)
    for r in range(1, k + 1):
        n_pow = n_pow * N
        b = bernoulli_number(r + 1)
        if b:
            coeff = Interval(b / factorial(r + 1))
            r_terms.append(poly * n_s * (coeff / n_pow))
        else:
            r_terms.append(ComplexInterval(0.0, 0.0))
        poly = poly * (s + r)
    return {
        "integral": integral,
        "b1": b1_term,
        "r_terms": r_terms,
        "remainder": _remainder_radius(s, N, k),
    }


def em_tail(s, cfg: EMConfig) -> ComplexInterval:
    """Enclosure of zeta(s) - sum_{n<=N} n^-s over the box s."""
    s = _as_box(s)
    _check_domain(s)
    terms = _em_terms(s, cfg)
    total = terms["integral"] + terms["b1"]
    for term in terms["r_terms"]:
        total = total + term
    R = terms["remainder"]
    disc = Interval(-R, R)
    return ComplexInterval(total.re + disc, total.im + disc)


def _estimate_radius(sig_lo: float, sig_hi: float, t_mag: float, N: int, k: int) -> float:
    """Cheap float estimate of the remainder radius, for choosing (N, k)."""
    logr = math.log(periodic_bernoulli_sup(k + 1).hi) - math.lgamma(k + 2)
    for j in range(k + 1):
        logr += 0.5 * math.log((sig_hi + j) ** 2 + t_mag**2)
    logr -= (sig_lo + k) * math.log(N) + math.log(sig_lo + k)
    return math.exp(min(logr, 700.0))


def _evaluate(s: ComplexInterval, N: int, k: int) -> ComplexInterval:
    return cpow_neg_sum(1, N, s) + em_tail(s, EMConfig(N, k))


def zeta_point(s, target_width: float = 1e-10, *, full_output: bool = False):
    """Enclosure of zeta(s) of width at most ``target_width`` when attainable.

    (N, k) start at (max(ceil(|t|/3), 10), 2); N doubles and k increments
    alternately until the width is met, N exceeds 10**7, or a further step
    stops shrinking the enclosure (rounding-dominated).  A miss returns
    the last enclosure and issues :class:`WidthMissWarning`.  With
    ``full_output=True`` returns ``(enclosure, info)`` where ``info`` holds
    ``N``, ``k`` and ``width_met``.
    """
    if target_width <= 0:
        raise DomainError("target_width must be positive")
    s = _as_box(s)
    _check_domain(s)
    t_mag = s.im.mag
    N = max(math.ceil(t_mag / 3), 10)
    k = 2
    step = 0
    last_width = math.inf
    while True:
        est = 2 * _estimate_radius(s.re.lo, s.re.hi, t_mag, N, k)
        if est <= target_width / 2:
            value = _evaluate(s, N, k)
            if value.width <= target_width:
                met = True
                break
            if value.width >= last_width:
                # rounding error dominates; more terms only make it worse
                met = False
                break
            last_width = value.width
        if step % 2 == 0:
            if N * 2 > N_CAP:
                value = _evaluate(s, N, k)
                met = value.width <= target_width
                break
            N *= 2
        elif k < MAX_K:
            k += 1
        step += 1
    if not met:
        warnings.warn(
            f"zeta enclosure width {value.width:.3g} exceeds target {target_width:.3g}",
            WidthMissWarning,
            stacklevel=2,
        )
    if full_output:
        return value, {"N": N, "k": k, "width_met": met}
    return value


def box_parameters(t_hi: float, target_width: float, sigma: float = 1.0) -> EMConfig:
    """(N, k) used for a box with upper ordinate ``t_hi``.

    N is fixed by t_hi; k is the smallest order in [2, 64] whose remainder
    radius is below a quarter of the target (or the best available).
    """
    N = max(math.ceil(abs(t_hi) / 3), 10)
    best_k, best_r = 2, math.inf
    for k in range(2, MAX_K + 1):
        r = _estimate_radius(sigma, sigma, abs(t_hi), N, k)
        if r < best_r:
            best_k, best_r = k, r
        if r <= target_width / 4:
            return EMConfig(N, k)
    return EMConfig(N, best_k)


def zeta_on_box(t_range, target_width: float = 1e-3, *, cfg: EMConfig | None = None) -> ComplexInterval:
    """Enclosure of zeta(1+it) valid for every t in ``t_range``.

    The partial sum and the tail are evaluated with s = 1 + i*t_range as a
    genuine box and one (N, k) for the whole box.  A degenerate range is
    delegated to :func:`zeta_point`.
    """
    t_range = t_range if isinstance(t_range, Interval) else Interval(t_range)
    if t_range.lo <= 0:
        raise DomainError(f"t_range must lie in t > 0, got {t_range!r}")
    if cfg is None and t_range.lo == t_range.hi:
        return zeta_point(ComplexInterval(1.0, t_range), target_width)
    s = ComplexInterval(Interval(1.0), t_range)
    if cfg is None:
        cfg = box_parameters(t_range.hi, target_width)
    return _evaluate(s, cfg.N, cfg.k)
