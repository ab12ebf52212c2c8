"""Exhaustive grid search over (k, m, A1) for the smallest certified constant."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .bounds import TheoremParams, feasible, theorem_sup_ratio
from .errors import DomainError, NotFoundError
from .rigor import Interval

__all__ = ["SearchSpace", "SearchResult", "feasible", "optimize", "optimize_full", "refine_space"]


@dataclass(frozen=True)
class SearchSpace:
    """Inclusive integer ranges for k and m, an ordered A1 grid, and t0."""

    k_range: tuple[int, int]
    m_range: tuple[int, int]
    A1_grid: tuple[float, ...]
    t0: float

    def __post_init__(self):
        object.__setattr__(self, "A1_grid", tuple(sorted(float(a) for a in self.A1_grid)))
        for name in ("k_range", "m_range"):
            lo, hi = getattr(self, name)
            if lo < 1 or hi < lo:
                raise DomainError(f"{name} must be 1 <= lo <= hi, got {(lo, hi)}")
        if not self.A1_grid:
            raise DomainError("A1 grid is empty")

    @classmethod
    def default(cls, t0: float, k_max: int = 20, m_max: int = 12, a1_max: int = 100) -> SearchSpace:
        return cls((1, k_max), (1, m_max), tuple(float(a) for a in range(1, a1_max + 1)), t0)


@dataclass
class SearchResult:
    params: TheoremParams
    ratio: Interval
    evaluated: int = 0
    infeasible: int = 0
    skipped: list = field(default_factory=list, repr=False)


def _key(p: TheoremParams, ratio: Interval) -> tuple:
    return (ratio.hi, p.k, p.m, p.A1)


def _scan_m(args) -> tuple:
    """Best point for one m; returns (key, params, ratio, n_eval, n_infeasible)."""
    m, k_range, grid, t0 = args
    best = None
    n_eval = n_bad = 0
    for A1 in grid:
        probe = TheoremParams(k_range[0], m, A1, t0)
        if not feasible(probe):
            n_bad += k_range[1] - k_range[0] + 1
            continue
        for k in range(k_range[0], k_range[1] + 1):
            p = TheoremParams(k, m, A1, t0)
            ratio = theorem_sup_ratio(p)
            n_eval += 1
            key = _key(p, ratio)
            if best is None or key < best[0]:
                best = (key, p, ratio)
    if best is None:
        return (None, None, None, n_eval, n_bad)
    return (*best, n_eval, n_bad)


def optimize(space: SearchSpace, parallelism: int = 1) -> tuple[TheoremParams, Interval]:
    """Feasible grid point minimizing the upper end of the sup ratio.

    Ties go to smaller k, then m, then A1.  Raises NotFoundError when no grid
    point satisfies the constraints.
    """
    res = optimize_full(space, parallelism)
    return res.params, res.ratio


def optimize_full(space: SearchSpace, parallelism: int = 1) -> SearchResult:
    """:func:`optimize` with evaluation counters."""
    tasks = [(m, space.k_range, space.A1_grid, space.t0)
             for m in range(space.m_range[0], space.m_range[1] + 1)]
    if parallelism > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            results = list(pool.map(_scan_m, tasks))
    else:
        results = [_scan_m(t) for t in tasks]
    n_eval = sum(r[3] for r in results)
    n_bad = sum(r[4] for r in results)
    found = [r for r in results if r[0] is not None]
    if not found:
        raise NotFoundError(f"no feasible grid point for t0={space.t0}")
    key, params, ratio, _, _ = min(found, key=lambda r: r[0])
    return SearchResult(params, ratio, n_eval, n_bad)


def refine_space(space: SearchSpace, incumbent: TheoremParams, step: float = 0.1) -> SearchSpace:
    """A1 grid of the given step within one unit of the incumbent's A1."""
    if step <= 0:
        raise DomainError("refinement step must be positive")
    n = int(math.floor(1 / step + 1e-9))
    grid = {round(incumbent.A1 + i * step, 12) for i in range(-n, n + 1)}
    grid = tuple(a for a in sorted(grid) if a > 0)
    return SearchSpace(space.k_range, space.m_range, grid, space.t0)
