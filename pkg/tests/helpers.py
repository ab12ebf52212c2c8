"""Shared oracles for the test suite."""

from __future__ import annotations

import json
import math
import random
from fractions import Fraction
from pathlib import Path

import mpmath

from zetabound.errors import DomainError
from zetabound.rigor import ComplexInterval, Interval, cos, exp, log, pow_int, sin, sqrt

DATA = Path(__file__).parent / "data"


def load_reference() -> list[dict]:
    """50-digit zeta(1+it) values produced by tests/oracles/zeta_reference.py."""
    with open(DATA / "zeta_reference.json") as fh:
        return json.load(fh)["points"]


def akiyama_tanigawa(n: int) -> list[Fraction]:
    """B_0..B_n by the Akiyama-Tanigawa triangle (gives B_1 = +1/2)."""
    out = []
    row = []
    for m in range(n + 1):
        row.append(Fraction(1, m + 1))
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    return out


# -- containment fuzzing ------------------------------------------------------

def _rand_float(rng: random.Random) -> float:
    kind = rng.random()
    if kind < 0.1:
        return float(rng.randint(-4, 4))
    if kind < 0.15:
        return 0.0
    mant = rng.uniform(1, 2) * rng.choice((-1, 1))
    return math.ldexp(mant, rng.randint(-30, 30))


def _rand_interval(rng: random.Random, positive: bool = False, bound: float | None = None) -> Interval:
    a, b = _rand_float(rng), _rand_float(rng)
    if rng.random() < 0.2:
        b = a
    if positive:
        a, b = abs(a), abs(b)
    if bound is not None:
        a = max(-bound, min(bound, a))
        b = max(-bound, min(bound, b))
    return Interval(min(a, b), max(a, b))


def _pick(rng: random.Random, iv: Interval) -> float:
    r = rng.random()
    if r < 0.25:
        return iv.lo
    if r < 0.5:
        return iv.hi
    x = iv.lo + rng.random() * (iv.hi - iv.lo)
    return min(max(x, iv.lo), iv.hi)


def _in(iv: Interval, v) -> bool:
    if isinstance(v, Fraction):
        return Fraction(iv.lo) <= v <= Fraction(iv.hi)
    return mpmath.mpf(iv.lo) <= v <= mpmath.mpf(iv.hi)


def _case(rng: random.Random):
    """One random operation: returns (name, ok) or None when off-domain."""
    op = rng.choice(
        ["add", "sub", "mul", "div", "square", "pow", "neg", "abs",
         "sqrt", "log", "exp", "cos", "sin", "cmul", "cdiv"]
    )
    F = Fraction
    if op in ("add", "sub", "mul", "div"):
        A, B = _rand_interval(rng), _rand_interval(rng)
        if op == "div" and B.lo <= 0 <= B.hi:
            return None
        x, y = F(_pick(rng, A)), F(_pick(rng, B))
        R = {"add": A + B, "sub": A - B, "mul": A * B, "div": A / B if op == "div" else None}[op]
        v = {"add": x + y, "sub": x - y, "mul": x * y, "div": x / y if op == "div" else None}[op]
        return op, _in(R, v)
    if op in ("square", "neg", "abs"):
        A = _rand_interval(rng)
        x = F(_pick(rng, A))
        R = {"square": A.square(), "neg": -A, "abs": abs(A)}[op]
        v = {"square": x * x, "neg": -x, "abs": abs(x)}[op]
        return op, _in(R, v)
    if op == "pow":
        A = _rand_interval(rng, bound=1e3)
        n = rng.randint(-4, 6)
        if n < 0 and A.lo <= 0 <= A.hi:
            return None
        x = F(_pick(rng, A))
        return op, _in(pow_int(A, n), x**n)
    mpmath.mp.dps = 40
    if op == "sqrt":
        A = _rand_interval(rng, positive=True)
        return op, _in(sqrt(A), mpmath.sqrt(mpmath.mpf(_pick(rng, A))))
    if op == "log":
        A = _rand_interval(rng, positive=True)
        if A.lo == 0:
            return None
        return op, _in(log(A), mpmath.log(mpmath.mpf(_pick(rng, A))))
    if op == "exp":
        A = _rand_interval(rng, bound=700.0)
        return op, _in(exp(A), mpmath.exp(mpmath.mpf(_pick(rng, A))))
    if op in ("cos", "sin"):
        A = _rand_interval(rng, bound=1e7)
        if A.hi - A.lo > 20 and rng.random() < 0.9:
            A = Interval(A.lo, A.lo + rng.random() * 5)
        x = mpmath.mpf(_pick(rng, A))
        fn, mfn = (cos, mpmath.cos) if op == "cos" else (sin, mpmath.sin)
        return op, _in(fn(A), mfn(x))
    Z = ComplexInterval(_rand_interval(rng, bound=1e6), _rand_interval(rng, bound=1e6))
    W = ComplexInterval(_rand_interval(rng, bound=1e6), _rand_interval(rng, bound=1e6))
    zr, zi = F(_pick(rng, Z.re)), F(_pick(rng, Z.im))
    wr, wi = F(_pick(rng, W.re)), F(_pick(rng, W.im))
    if op == "cmul":
        R = Z * W
        vr, vi = zr * wr - zi * wi, zr * wi + zi * wr
    else:
        try:
            R = Z / W
        except DomainError:
            return None
        den = wr * wr + wi * wi
        vr, vi = (zr * wr + zi * wi) / den, (zi * wr - zr * wi) / den
    return op, _in(R.re, vr) and _in(R.im, vi)


def fuzz_containment(n_cases: int, seed: int = 0) -> tuple[int, list[str]]:
    """Run ``n_cases`` random operations; return (cases run, violating op names)."""
    rng = random.Random(seed)
    done = 0
    failures = []
    while done < n_cases:
        result = _case(rng)
        if result is None:
            continue
        done += 1
        if not result[1]:
            failures.append(result[0])
    return done, failures
