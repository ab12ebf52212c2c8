"""Certified checks of |zeta(1+it)| <= c log t on finite t-ranges.

The range is cut into cells of width min(0.25, (t_hi - t_lo)/64).  Each
cell is bisected depth-first until every leaf T satisfies

    sup_{t in T} |zeta(1+it)| < c * log(T.lo),

which is sufficient because log is increasing.  Cells are independent, so
they can be farmed out to worker processes; the merged certificate does not
depend on how cells were scheduled.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .errors import DomainError, NotFoundError
from .rigor import Interval, abs_enclosure, log
from .zeta_em import zeta_on_box, zeta_point

__all__ = [
    "Leaf",
    "Certificate",
    "verify_range",
    "check_certificate",
    "find_crossing",
    "initial_cells",
]

CERTIFIED = "certified"
FALSIFIED = "falsified"
INCONCLUSIVE = "inconclusive"
UNDECIDED = "undecided"

WITNESS_WIDTH = 5e-10
DEFAULT_TARGET = 1e-3

LEAF_FIELDS = ("t_lo", "t_hi", "zeta_abs_lo", "zeta_abs_hi", "bound_lo", "bound_hi", "verdict")


@dataclass(frozen=True)
class Leaf:
    """One decided subinterval: |zeta| enclosure and the c*log t enclosure.

    ``bound_lo`` is a lower bound of c*log(t_lo); ``bound_hi`` an upper
    bound of c*log(t_hi).
    """

    t_lo: float
    t_hi: float
    zeta_abs_lo: float
    zeta_abs_hi: float
    bound_lo: float
    bound_hi: float
    verdict: str


@dataclass
class Certificate:
    t_lo: float
    t_hi: float
    c: float
    status: str
    leaves: list[Leaf]
    max_depth: int
    wall_stats: dict = field(default_factory=dict)

    def to_json(self) -> str:
        doc = {
            "t_lo": _fmt(self.t_lo),
            "t_hi": _fmt(self.t_hi),
            "c": _fmt(self.c),
            "status": self.status,
            "leaves": [
                {k: (v if k == "verdict" else _fmt(v)) for k, v in asdict(leaf).items()}
                for leaf in self.leaves
            ],
            "max_depth": self.max_depth,
            "wall_stats": dict(sorted(self.wall_stats.items())),
        }
        return json.dumps(doc, indent=1)

    @classmethod
    def from_json(cls, text: str) -> Certificate:
        doc = json.loads(text)
        leaves = [
            Leaf(**{k: (v if k == "verdict" else float(v)) for k, v in leaf.items()})
            for leaf in doc["leaves"]
        ]
        return cls(
            float(doc["t_lo"]), float(doc["t_hi"]), float(doc["c"]), doc["status"],
            leaves, int(doc["max_depth"]), dict(doc.get("wall_stats", {})),
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(LEAF_FIELDS)
        for leaf in self.leaves:
            row = asdict(leaf)
            writer.writerow([row[k] if k == "verdict" else _fmt(row[k]) for k in LEAF_FIELDS])
        return buf.getvalue()


def _fmt(x: float) -> str:
    # repr of a float is the shortest string that round-trips
    return repr(float(x))


def _coeff(c) -> tuple[Interval, float]:
    """Enclosure of c and the double recorded in the certificate.

    The recorded double lies inside the enclosure, so a verdict reached with
    the enclosure also holds for the recorded value.
    """
    if isinstance(c, Interval):
        return c, c.mid
    if isinstance(c, str):
        return Interval.from_string(c), float(c)
    return Interval(float(c)), float(c)


def initial_cells(t_lo: float, t_hi: float) -> list[tuple[float, float]]:
    """Partition of [t_lo, t_hi] into cells of width min(0.25, (t_hi-t_lo)/64)."""
    width = min(0.25, (t_hi - t_lo) / 64)
    n = math.ceil((t_hi - t_lo) / width)
    edges = [t_lo + i * width for i in range(n)]
    edges = [e for e in edges if e < t_hi] + [t_hi]
    return list(zip(edges[:-1], edges[1:]))


def _examine(a: float, b: float, c: Interval, target: float):
    """Evaluate one box; return (|zeta| enclosure, c log a, c log b)."""
    A = abs_enclosure(zeta_on_box(Interval(a, b), target))
    return A, c * log(Interval(a)), c * log(Interval(b))


def _leaf(a, b, A, lo_bound, hi_bound, verdict) -> Leaf:
    return Leaf(a, b, A.lo, A.hi, lo_bound.lo, hi_bound.hi, verdict)


def _process_cell(args) -> tuple[str, list[Leaf], dict]:
    a0, b0, c, max_depth, target = args
    leaves: list[Leaf] = []
    stats = {"boxes_evaluated": 0, "depth_reached": 0}
    status = CERTIFIED
    stack = [(a0, b0, 0)]
    while stack:
        a, b, depth = stack.pop()
        stats["boxes_evaluated"] += 1
        stats["depth_reached"] = max(stats["depth_reached"], depth)
        A, left, right = _examine(a, b, c, target)
        if A.hi < left.lo:
            leaves.append(_leaf(a, b, A, left, right, CERTIFIED))
            continue
        if A.lo > right.hi:
            # violated on the whole box; confirm on a point-like box
            wb = b if b - a <= 1e-9 else a + WITNESS_WIDTH
            if wb > a:
                W, wl, wr = _examine(a, wb, c, target)
                stats["boxes_evaluated"] += 1
                if W.lo > wr.hi:
                    leaves.append(_leaf(a, wb, W, wl, wr, FALSIFIED))
                    return FALSIFIED, leaves, stats
        mid = a + (b - a) / 2
        if depth >= max_depth or not a < mid < b:
            leaves.append(_leaf(a, b, A, left, right, UNDECIDED))
            status = INCONCLUSIVE
            continue
        stack.append((mid, b, depth + 1))
        stack.append((a, mid, depth + 1))
    return status, leaves, stats


def _process_batch(batch):
    return [_process_cell(args) for args in batch]


def verify_range(
    t_lo: float,
    t_hi: float,
    c=0.75,
    max_depth: int = 30,
    *,
    parallelism: int = 1,
    target_width: float = DEFAULT_TARGET,
) -> Certificate:
    """Certify, falsify, or fail to decide |zeta(1+it)| <= c log t on [t_lo, t_hi].

    ``c`` may be a float, an :class:`Interval`, or a decimal string (which is
    enclosed by outward rounding).  Certification uses the lower end of c and
    falsification the upper end.
    """
    if not 2 <= t_lo < t_hi or not math.isfinite(t_hi):
        raise DomainError(f"need 2 <= t_lo < t_hi < inf, got [{t_lo}, {t_hi}]")
    c_iv, c_value = _coeff(c)
    if not c_iv.lo > 0:
        raise DomainError(f"coefficient must be positive, got {c}")
    if max_depth < 0:
        raise DomainError("max_depth must be >= 0")
    cells = initial_cells(float(t_lo), float(t_hi))
    tasks = [(a, b, c_iv, max_depth, target_width) for a, b in cells]

    if parallelism > 1:
        size = max(1, math.ceil(len(tasks) / (8 * parallelism)))
        batches = [tasks[i:i + size] for i in range(0, len(tasks), size)]
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            results = (r for batch in pool.map(_process_batch, batches) for r in batch)
            return _merge(t_lo, t_hi, c_value, max_depth, results)
    return _merge(t_lo, t_hi, c_value, max_depth, (_process_cell(t) for t in tasks))


def _merge(t_lo, t_hi, c_value, max_depth, results) -> Certificate:
    leaves: list[Leaf] = []
    stats = {"cells": 0, "boxes_evaluated": 0, "depth_reached": 0}
    status = CERTIFIED
    for cell_status, cell_leaves, cell_stats in results:
        stats["cells"] += 1
        stats["boxes_evaluated"] += cell_stats["boxes_evaluated"]
        stats["depth_reached"] = max(stats["depth_reached"], cell_stats["depth_reached"])
        leaves.extend(cell_leaves)
        if cell_status == FALSIFIED:
            status = FALSIFIED
            break
        if cell_status == INCONCLUSIVE:
            status = INCONCLUSIVE
    stats["leaves"] = len(leaves)
    return Certificate(float(t_lo), float(t_hi), c_value, status, leaves, max_depth, stats)


def check_certificate(cert: Certificate, *, recompute: bool = True,
                      target_width: float = DEFAULT_TARGET) -> str:
    """Re-validate a certificate and return the status it actually supports.

    Checks that certified leaves tile [t_lo, t_hi] edge to edge and, with
    ``recompute``, re-derives every leaf's enclosures from scratch instead
    of trusting the recorded numbers.
    """
    c = Interval(cert.c)
    for leaf in cert.leaves:
        if recompute:
            A, left, right = _examine(leaf.t_lo, leaf.t_hi, c, target_width)
        else:
            A = Interval(leaf.zeta_abs_lo, leaf.zeta_abs_hi)
            left = Interval(leaf.bound_lo, leaf.bound_lo)
            right = Interval(leaf.bound_hi, leaf.bound_hi)
        if leaf.verdict == FALSIFIED:
            if leaf.t_hi - leaf.t_lo <= 1e-9 and A.lo > right.hi:
                return FALSIFIED
            return INCONCLUSIVE
        if leaf.verdict == CERTIFIED and not A.hi < left.lo:
            return INCONCLUSIVE
    if any(leaf.verdict != CERTIFIED for leaf in cert.leaves):
        return INCONCLUSIVE
    edge = cert.t_lo
    for leaf in cert.leaves:
        if leaf.t_lo != edge or not leaf.t_lo < leaf.t_hi:
            return INCONCLUSIVE
        edge = leaf.t_hi
    if edge != cert.t_hi:
        return INCONCLUSIVE
    return CERTIFIED


def _h(T: Interval, c: Interval, target: float) -> Interval:
    """Enclosure of |zeta(1+it)| - c log t over T."""
    if T.is_point():
        A = abs_enclosure(zeta_point(complex(1.0, T.lo), 1e-12 * max(1.0, T.lo)))
    else:
        A = abs_enclosure(zeta_on_box(T, target))
    return A - c * log(T)


def find_crossing(c, search, tol: float = 1e-4, *, target_width: float = 1e-6) -> Interval:
    """Interval containing the largest zero of |zeta(1+it)| - c log t in ``search``.

    The sign must be verified positive at the left end and negative at the
    right end.  Boxes are scanned right to left; everything to the right of
    the returned interval is certified negative, and its left end is a
    point where the difference is certified positive.
    """
    c_iv, _ = _coeff(c)
    search = search if isinstance(search, Interval) else Interval(*search)
    if not 0 < search.lo < search.hi:
        raise DomainError(f"search window must satisfy 0 < lo < hi, got {search!r}")
    if not _h(Interval(search.lo), c_iv, target_width).lo > 0:
        raise NotFoundError(f"difference not certified positive at t = {search.lo}")
    if not _h(Interval(search.hi), c_iv, target_width).hi < 0:
        raise NotFoundError(f"difference not certified negative at t = {search.hi}")

    cells = initial_cells(search.lo, search.hi)
    stack = [(a, b) for a, b in cells]  # rightmost cell on top
    rightmost = None
    while stack:
        a, b = stack.pop()
        if _h(Interval(a, b), c_iv, target_width).hi < 0:
            continue
        mid = a + (b - a) / 2
        if b - a <= tol or not a < mid < b:
            rightmost = (a, b)
            break
        stack.append((a, mid))
        stack.append((mid, b))
    if rightmost is None:
        raise NotFoundError("difference certified negative on the whole window")

    a, b = rightmost
    step = b - a
    p = a
    while p > search.lo:
        if _h(Interval(p), c_iv, target_width).lo > 0:
            return Interval(p, b)
        step *= 2
        p = max(search.lo, a - step)
    return Interval(search.lo, b)
