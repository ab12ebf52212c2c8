"""Outward-rounded real and complex interval arithmetic on IEEE doubles.

Every operation returns an interval containing the exact result for all
points of its operands.  Field operations use error-free transforms
(TwoSum, Dekker's product) to round each endpoint in the right direction by
at most one ulp, so exact results stay exact.  Elementary functions are
evaluated in round-to-nearest and widened by two ulps.

The module also provides :func:`cpow_neg_sum`, a numpy-vectorized enclosure
of ``sum(n**-s for n in range(first, last + 1))`` over a complex box, which
is the hot loop of the zeta evaluator and the exponential-sum oracle.
"""

from __future__ import annotations

import math
import numbers
from fractions import Fraction

import numpy as np

from .errors import DomainError

__all__ = [
    "Interval",
    "ComplexInterval",
    "PI",
    "TWO_PI",
    "LOG2",
    "log",
    "exp",
    "sqrt",
    "pow_int",
    "cos",
    "sin",
    "hull",
    "cpow_neg",
    "abs_enclosure",
    "cpow_neg_sum",
]

INF = math.inf
MAX_FLOAT = 1.7976931348623157e308
_nextafter = math.nextafter
_isinf = math.isinf

# Dekker splitting is exact only away from overflow and underflow.
_SAFE_LO = 2.0**-500
_SAFE_HI = 2.0**500
_SPLITTER = 134217729.0  # 2**27 + 1


def _down(x: float) -> float:
    return _nextafter(x, -INF)


def _up(x: float) -> float:
    return _nextafter(x, INF)


def _safe(x: float) -> bool:
    ax = abs(x)
    return _SAFE_LO < ax < _SAFE_HI


def _prod_err(a: float, b: float, p: float) -> float:
    """Return e with a*b == p + e exactly (Dekker); requires _safe inputs."""
    c = _SPLITTER * a
    ah = c - (c - a)
    al = a - ah
    c = _SPLITTER * b
    bh = c - (c - b)
    bl = b - bh
    return ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _add_down(a: float, b: float) -> float:
    s = a + b
    if _isinf(s):
        if _isinf(a) or _isinf(b):
            return s
        return s if s < 0 else MAX_FLOAT
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s if err >= 0 else _nextafter(s, -INF)


def _add_up(a: float, b: float) -> float:
    s = a + b
    if _isinf(s):
        if _isinf(a) or _isinf(b):
            return s
        return s if s > 0 else -MAX_FLOAT
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s if err <= 0 else _nextafter(s, INF)


def _mul_down(a: float, b: float) -> float:
    if a == 0.0 or b == 0.0:
        return 0.0
    p = a * b
    if _isinf(p):
        if _isinf(a) or _isinf(b):
            return p
        return p if p < 0 else MAX_FLOAT
    if _safe(a) and _safe(b) and _safe(p):
        return p if _prod_err(a, b, p) >= 0 else _nextafter(p, -INF)
    if p == 0.0 and (a > 0) == (b > 0):
        return 0.0  # positive product underflowed
    return _nextafter(p, -INF)


def _mul_up(a: float, b: float) -> float:
    if a == 0.0 or b == 0.0:
        return 0.0
    p = a * b
    if _isinf(p):
        if _isinf(a) or _isinf(b):
            return p
        return p if p > 0 else -MAX_FLOAT
    if _safe(a) and _safe(b) and _safe(p):
        return p if _prod_err(a, b, p) <= 0 else _nextafter(p, INF)
    if p == 0.0 and (a > 0) != (b > 0):
        return 0.0  # negative product underflowed
    return _nextafter(p, INF)


def _div_dir(a: float, b: float) -> tuple[float, int]:
    """Quotient a/b in round-to-nearest and the sign of (exact - rounded)."""
    q = a / b
    if a == 0.0 or _isinf(a) or _isinf(b):
        return q, 0
    if _isinf(q) or not (_safe(a) and _safe(b) and _safe(q)):
        return q, 2  # direction unknown
    p = q * b
    r = (a - p) - _prod_err(q, b, p)
    if r == 0:
        return q, 0
    return q, (1 if (r > 0) == (b > 0) else -1)


def _div_down(a: float, b: float) -> float:
    q, d = _div_dir(a, b)
    if d == 0 or d == 1:
        return q
    if _isinf(q) and not (_isinf(a) or _isinf(b)):
        return q if q < 0 else MAX_FLOAT
    if q == 0.0 and (a > 0) == (b > 0):
        return 0.0
    return _nextafter(q, -INF)


def _div_up(a: float, b: float) -> float:
    q, d = _div_dir(a, b)
    if d == 0 or d == -1:
        return q
    if _isinf(q) and not (_isinf(a) or _isinf(b)):
        return q if q > 0 else -MAX_FLOAT
    if q == 0.0 and (a > 0) != (b > 0):
        return 0.0
    return _nextafter(q, INF)


def _sqrt_dir(x: float) -> tuple[float, int]:
    y = math.sqrt(x)
    if x == 0.0 or _isinf(x):
        return y, 0
    if not (_safe(x) and _safe(y)):
        return y, 2
    p = y * y
    r = (x - p) - _prod_err(y, y, p)
    return y, (0 if r == 0 else (1 if r > 0 else -1))


def _widen2(lo: float, hi: float) -> tuple[float, float]:
    return _down(_down(lo)), _up(_up(hi))


def _lower_of(x) -> float:
    if isinstance(x, float):
        return x
    if isinstance(x, numbers.Integral):
        x = int(x)
        try:
            f = float(x)
        except OverflowError:
            return MAX_FLOAT if x > 0 else -INF
        return f if int(f) <= x else _down(f)
    if isinstance(x, Fraction):
        f = float(x)
        return f if Fraction(f) <= x else _down(f)
    if isinstance(x, numbers.Real):
        return float(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an interval endpoint")


def _upper_of(x) -> float:
    if isinstance(x, float):
        return x
    if isinstance(x, numbers.Integral):
        x = int(x)
        try:
            f = float(x)
        except OverflowError:
            return INF if x > 0 else -MAX_FLOAT
        return f if int(f) >= x else _up(f)
    if isinstance(x, Fraction):
        f = float(x)
        return f if Fraction(f) >= x else _up(f)
    if isinstance(x, numbers.Real):
        return float(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an interval endpoint")


def _make(lo: float, hi: float) -> Interval:
    obj = object.__new__(Interval)
    obj.lo = lo
    obj.hi = hi
    return obj


class Interval:
    """Closed interval ``[lo, hi]`` of extended reals.

    Build from one number (a point, outward-rounded if it is not a double)
    or two endpoints.  Instances are treated as immutable values.
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if isinstance(lo, Interval) and hi is None:
            self.lo, self.hi = lo.lo, lo.hi
            return
        l = _lower_of(lo)
        h = _upper_of(lo if hi is None else hi)
        if l != l or h != h:
            raise DomainError("interval endpoint is NaN")
        if l > h:
            raise DomainError(f"empty interval [{l!r}, {h!r}]")
        if l == INF or h == -INF:
            raise DomainError("interval must contain a real number")
        self.lo = l
        self.hi = h

    @classmethod
    def from_string(cls, text: str) -> Interval:
        """Smallest double interval containing the decimal ``text``."""
        try:
            exact = Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not a decimal number: {text!r}") from exc
        return cls(exact)

    # -- queries ---------------------------------------------------------
    @property
    def mid(self) -> float:
        if _isinf(self.lo) or _isinf(self.hi):
            if _isinf(self.lo) and _isinf(self.hi):
                return 0.0
            return self.hi if _isinf(self.lo) else self.lo
        return self.lo + (self.hi - self.lo) / 2

    @property
    def width(self) -> float:
        """Upper bound on ``hi - lo``."""
        return _add_up(self.hi, -self.lo)

    @property
    def mag(self) -> float:
        return max(abs(self.lo), abs(self.hi))

    @property
    def mig(self) -> float:
        if self.lo <= 0.0 <= self.hi:
            return 0.0
        return min(abs(self.lo), abs(self.hi))

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    __contains__ = contains

    def intersects(self, other) -> bool:
        other = _as_interval(other)
        return self.lo <= other.hi and other.lo <= self.hi

    def hull(self, other) -> Interval:
        other = _as_interval(other)
        return _make(min(self.lo, other.lo), max(self.hi, other.hi))

    # -- arithmetic ------------------------------------------------------
    def __neg__(self) -> Interval:
        return _make(-self.hi, -self.lo)

    def __pos__(self) -> Interval:
        return self

    def __abs__(self) -> Interval:
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return _make(0.0, max(-self.lo, self.hi))

    def __add__(self, other) -> Interval:
        if not isinstance(other, Interval):
            if not isinstance(other, numbers.Real):
                return NotImplemented
            other = Interval(other)
        return _make(_add_down(self.lo, other.lo), _add_up(self.hi, other.hi))

    __radd__ = __add__

    def __sub__(self, other) -> Interval:
        if not isinstance(other, Interval):
            if not isinstance(other, numbers.Real):
                return NotImplemented
            other = Interval(other)
        return _make(_add_down(self.lo, -other.hi), _add_up(self.hi, -other.lo))

    def __rsub__(self, other) -> Interval:
        if not isinstance(other, numbers.Real):
            return NotImplemented
        return Interval(other) - self

    def __mul__(self, other) -> Interval:
        if not isinstance(other, Interval):
            if not isinstance(other, numbers.Real):
                return NotImplemented
            other = Interval(other)
        al, ah, bl, bh = self.lo, self.hi, other.lo, other.hi
        if al >= 0:
            if bl >= 0:
                return _make(_mul_down(al, bl), _mul_up(ah, bh))
            if bh <= 0:
                return _make(_mul_down(ah, bl), _mul_up(al, bh))
            return _make(_mul_down(ah, bl), _mul_up(ah, bh))
        if ah <= 0:
            if bl >= 0:
                return _make(_mul_down(al, bh), _mul_up(ah, bl))
            if bh <= 0:
                return _make(_mul_down(ah, bh), _mul_up(al, bl))
            return _make(_mul_down(al, bh), _mul_up(al, bl))
        if bl >= 0:
            return _make(_mul_down(al, bh), _mul_up(ah, bh))
        if bh <= 0:
            return _make(_mul_down(ah, bl), _mul_up(al, bl))
        return _make(
            min(_mul_down(al, bh), _mul_down(ah, bl)),
            max(_mul_up(al, bl), _mul_up(ah, bh)),
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> Interval:
        if not isinstance(other, Interval):
            if not isinstance(other, numbers.Real):
                return NotImplemented
            other = Interval(other)
        al, ah, bl, bh = self.lo, self.hi, other.lo, other.hi
        if bl <= 0.0 <= bh:
            raise DomainError(f"division by an interval containing zero: {other!r}")
        if bl > 0:
            if al >= 0:
                return _make(_div_down(al, bh), _div_up(ah, bl))
            if ah <= 0:
                return _make(_div_down(al, bl), _div_up(ah, bh))
            return _make(_div_down(al, bl), _div_up(ah, bl))
        if al >= 0:
            return _make(_div_down(ah, bh), _div_up(al, bl))
        if ah <= 0:
            return _make(_div_down(ah, bl), _div_up(al, bh))
        return _make(_div_down(ah, bh), _div_up(al, bh))

    def __rtruediv__(self, other) -> Interval:
        if not isinstance(other, numbers.Real):
            return NotImplemented
        return Interval(other) / self

    def __pow__(self, n) -> Interval:
        if not isinstance(n, numbers.Integral):
            return NotImplemented
        return pow_int(self, int(n))

    def square(self) -> Interval:
        a = abs(self)
        return _make(_mul_down(a.lo, a.lo), _mul_up(a.hi, a.hi))

    # -- dunder plumbing -------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Interval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __reduce__(self):
        return (_make, (self.lo, self.hi))


def _as_interval(x) -> Interval:
    return x if isinstance(x, Interval) else Interval(x)


def hull(*items) -> Interval:
    """Smallest interval containing every argument."""
    ivs = [_as_interval(x) for x in items]
    return _make(min(i.lo for i in ivs), max(i.hi for i in ivs))


PI = _make(math.pi, _up(math.pi))  # math.pi rounds pi down
TWO_PI = _make(2 * math.pi, _up(2 * math.pi))
HALF_PI = _make(math.pi / 2, _up(math.pi / 2))
LOG2 = _make(_down(math.log(2.0)), _up(math.log(2.0)))


# -- elementary functions ---------------------------------------------------

def sqrt(a) -> Interval:
    a = _as_interval(a)
    if a.lo < 0:
        raise DomainError(f"sqrt of an interval with negative part: {a!r}")
    y, d = _sqrt_dir(a.lo)
    lo = y if d in (0, 1) else _down(y)
    y, d = _sqrt_dir(a.hi)
    hi = y if d in (0, -1) else _up(y)
    return _make(lo, hi)


def log(a) -> Interval:
    a = _as_interval(a)
    if a.lo <= 0:
        raise DomainError(f"log of an interval reaching zero or below: {a!r}")
    lo = 0.0 if a.lo == 1.0 else _down(_down(math.log(a.lo)))
    if a.hi == 1.0:
        hi = 0.0
    elif _isinf(a.hi):
        hi = INF
    else:
        hi = _up(_up(math.log(a.hi)))
    return _make(lo, hi)


def _exp1(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return INF


def exp(a) -> Interval:
    a = _as_interval(a)
    if a.lo == 0.0:
        lo = 1.0
    else:
        lo = max(0.0, _down(_down(_exp1(a.lo))))
    if a.hi == 0.0:
        hi = 1.0
    else:
        v = _exp1(a.hi)
        hi = v if _isinf(v) else _up(_up(v))
    return _make(lo, hi)


def _pow_point(x: float, n: int) -> Interval:
    result = _make(1.0, 1.0)
    base = _make(x, x)
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def pow_int(a, n: int) -> Interval:
    """``a**n`` for an integer exponent, without dependency blow-up."""
    a = _as_interval(a)
    if n < 0:
        return 1 / pow_int(a, -n)
    if n == 0:
        return _make(1.0, 1.0)
    if n % 2 == 0:
        b = abs(a)
        lo = _pow_point(b.lo, n).lo if b.lo > 0 else 0.0
        return _make(lo, _pow_point(b.hi, n).hi)
    return _make(_pow_point(a.lo, n).lo, _pow_point(a.hi, n).hi)


def _critical_residues(x_lo: float, x_hi: float):
    """Residues mod 4 of the integers j with j*pi/2 possibly in [x_lo, x_hi].

    Returns None when every residue occurs.  Errs toward reporting extra
    critical points, which only widens the result.
    """
    q_lo = x_lo / (math.pi / 2)
    q_hi = x_hi / (math.pi / 2)
    eps = 1e-15 * max(abs(q_lo), abs(q_hi)) + 1e-15
    j_lo = math.ceil(q_lo - eps)
    j_hi = math.floor(q_hi + eps)
    if j_hi - j_lo >= 3:
        return None
    return {j % 4 for j in range(j_lo, j_hi + 1)}


def _trig(a: Interval, fn, r_max: int, r_min: int) -> Interval:
    if _isinf(a.lo) or _isinf(a.hi) or a.hi - a.lo >= 4 * math.pi:
        return _make(-1.0, 1.0)
    res = _critical_residues(a.lo, a.hi)
    if res is None:
        return _make(-1.0, 1.0)
    v1, v2 = fn(a.lo), fn(a.hi)
    lo, hi = _widen2(min(v1, v2), max(v1, v2))
    if r_min in res:
        lo = -1.0
    if r_max in res:
        hi = 1.0
    return _make(max(lo, -1.0), min(hi, 1.0))


def cos(a) -> Interval:
    return _trig(_as_interval(a), math.cos, 0, 2)


def sin(a) -> Interval:
    return _trig(_as_interval(a), math.sin, 1, 3)


# -- complex boxes ----------------------------------------------------------

class ComplexInterval:
    """Axis-aligned rectangle ``re x im`` in the complex plane."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        if isinstance(re, ComplexInterval) and im is None:
            self.re, self.im = re.re, re.im
            return
        if im is None and isinstance(re, numbers.Complex) and not isinstance(re, numbers.Real):
            re, im = re.real, re.imag
        self.re = _as_interval(re)
        self.im = _as_interval(0.0 if im is None else im)

    @property
    def width(self) -> float:
        return max(self.re.width, self.im.width)

    @property
    def mid(self) -> complex:
        return complex(self.re.mid, self.im.mid)

    def contains(self, z) -> bool:
        if isinstance(z, ComplexInterval):
            return self.re.contains(z.re) and self.im.contains(z.im)
        z = complex(z)
        return self.re.contains(z.real) and self.im.contains(z.imag)

    __contains__ = contains

    def intersects(self, other) -> bool:
        other = _as_complex(other)
        return self.re.intersects(other.re) and self.im.intersects(other.im)

    def hull(self, other) -> ComplexInterval:
        other = _as_complex(other)
        return _cmake(self.re.hull(other.re), self.im.hull(other.im))

    def conj(self) -> ComplexInterval:
        return _cmake(self.re, -self.im)

    def __neg__(self) -> ComplexInterval:
        return _cmake(-self.re, -self.im)

    def __add__(self, other) -> ComplexInterval:
        other = _coerce_complex(other)
        if other is None:
            return NotImplemented
        return _cmake(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> ComplexInterval:
        other = _coerce_complex(other)
        if other is None:
            return NotImplemented
        return _cmake(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> ComplexInterval:
        other = _coerce_complex(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> ComplexInterval:
        if isinstance(other, Interval) or isinstance(other, numbers.Real):
            return _cmake(self.re * other, self.im * other)
        other = _coerce_complex(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return _cmake(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other) -> ComplexInterval:
        if isinstance(other, Interval) or isinstance(other, numbers.Real):
            return _cmake(self.re / other, self.im / other)
        other = _coerce_complex(other)
        if other is None:
            return NotImplemented
        c, d = other.re, other.im
        den = c.square() + d.square()
        if den.lo <= 0:
            raise DomainError(f"division by a box containing zero: {other!r}")
        a, b = self.re, self.im
        return _cmake((a * c + b * d) / den, (b * c - a * d) / den)

    def __rtruediv__(self, other) -> ComplexInterval:
        other = _coerce_complex(other)
        if other is None:
            return NotImplemented
        return other / self

    def __abs__(self) -> Interval:
        return abs_enclosure(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ComplexInterval):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"ComplexInterval({self.re!r}, {self.im!r})"

    def __reduce__(self):
        return (_cmake, (self.re, self.im))


def _cmake(re: Interval, im: Interval) -> ComplexInterval:
    obj = object.__new__(ComplexInterval)
    obj.re = re
    obj.im = im
    return obj


def _coerce_complex(x):
    if isinstance(x, ComplexInterval):
        return x
    if isinstance(x, (Interval, numbers.Complex)):
        return ComplexInterval(x)
    return None


def _as_complex(x) -> ComplexInterval:
    z = _coerce_complex(x)
    if z is None:
        raise TypeError(f"cannot convert {type(x).__name__} to ComplexInterval")
    return z


def abs_enclosure(z) -> Interval:
    """Interval containing ``|w|`` for every ``w`` in the box ``z``."""
    z = _as_complex(z)
    r = sqrt(z.re.square() + z.im.square())
    return r if r.lo >= 0 else _make(0.0, r.hi)


def cpow_neg(n: int, s) -> ComplexInterval:
    """Enclosure of ``n**(-s) = exp(-s log n)`` for every ``s`` in the box."""
    if n < 1:
        raise DomainError(f"cpow_neg needs n >= 1, got {n}")
    s = _as_complex(s)
    if n == 1:
        return _cmake(_make(1.0, 1.0), _make(0.0, 0.0))
    ln = log(n)
    mag = exp(-(s.re * ln))
    arg = s.im * ln
    return _cmake(mag * cos(arg), -(mag * sin(arg)))


# -- vectorized sums of n**-s -------------------------------------------------

# numpy may dispatch float64 transcendentals to SIMD kernels with errors of a
# few ulps, so vectorized exp/sin/cos results are widened by 2**-46 (about
# 64 ulps at 1): relative for exp, absolute for sin/cos.
_VEC_REL = 2.0**-46
_VEC_ABS = 2.0**-46
_TABLE_LIMIT = 1 << 22
_log_cache: dict[str, np.ndarray] = {}


def _log_values(first: int, last: int) -> tuple[np.ndarray, np.ndarray]:
    # math.log is faithfully rounded; two ulps of widening as in log()
    vals = np.fromiter((math.log(n) for n in range(first, last + 1)), np.float64, last - first + 1)
    lo = np.nextafter(np.nextafter(vals, -np.inf), -np.inf)
    hi = np.nextafter(np.nextafter(vals, np.inf), np.inf)
    lo[vals == 0.0] = 0.0
    hi[vals == 0.0] = 0.0
    return lo, hi


def _log_range(first: int, last: int) -> tuple[np.ndarray, np.ndarray]:
    """Enclosures of log n for n = first..last as (lo, hi) arrays."""
    if last > _TABLE_LIMIT:
        return _log_values(first, last)
    table = _log_cache.get("lo")
    if table is None or table.size < last:
        size = min(_TABLE_LIMIT, max(last, 2 * (0 if table is None else table.size), 4096))
        _log_cache["lo"], _log_cache["hi"] = _log_values(1, size)
    return _log_cache["lo"][first - 1:last], _log_cache["hi"][first - 1:last]


def _vec_trig(x_lo: np.ndarray, x_hi: np.ndarray):
    """Vectorized cos and sin enclosures over [x_lo, x_hi] elementwise."""
    c1, c2 = np.cos(x_lo), np.cos(x_hi)
    s1, s2 = np.sin(x_lo), np.sin(x_hi)
    c_lo = np.minimum(c1, c2) - _VEC_ABS
    c_hi = np.maximum(c1, c2) + _VEC_ABS
    s_lo = np.minimum(s1, s2) - _VEC_ABS
    s_hi = np.maximum(s1, s2) + _VEC_ABS
    q_lo = x_lo / (np.pi / 2)
    q_hi = x_hi / (np.pi / 2)
    eps = 1e-15 * np.maximum(np.abs(q_lo), np.abs(q_hi)) + 1e-15
    j_lo = np.ceil(q_lo - eps)
    span = np.floor(q_hi + eps) - j_lo
    full = span >= 3
    base = np.mod(j_lo, 4)

    def has(r):
        return full | ((span >= 0) & (np.mod(r - base, 4) <= span))

    c_hi = np.where(has(0), 1.0, np.minimum(c_hi, 1.0))
    s_hi = np.where(has(1), 1.0, np.minimum(s_hi, 1.0))
    c_lo = np.where(has(2), -1.0, np.maximum(c_lo, -1.0))
    s_lo = np.where(has(3), -1.0, np.maximum(s_lo, -1.0))
    return c_lo, c_hi, s_lo, s_hi


def _vec_scale(m_lo, m_hi, v_lo, v_hi):
    """[m_lo, m_hi] * [v_lo, v_hi] elementwise for positive m."""
    lo = np.where(v_lo >= 0, m_lo * v_lo, m_hi * v_lo)
    hi = np.where(v_hi >= 0, m_hi * v_hi, m_lo * v_hi)
    return np.nextafter(lo, -np.inf), np.nextafter(hi, np.inf)


def _rigorous_sum(lo: np.ndarray, hi: np.ndarray) -> Interval:
    """Enclosure of the exact sums of the lo and hi arrays."""
    n = lo.size
    if n == 0:
        return _make(0.0, 0.0)
    # any summation order errs by at most (n-1)u/(1-(n-1)u) * sum|x|
    gamma = (n * 1.12e-16) / (1 - n * 1.12e-16)
    s_lo = float(np.sum(lo))
    s_hi = float(np.sum(hi))
    e_lo = float(np.sum(np.abs(lo))) * gamma + n * 1e-300
    e_hi = float(np.sum(np.abs(hi))) * gamma + n * 1e-300
    return _make(_down(s_lo - e_lo), _up(s_hi + e_hi))


def cpow_neg_sum(first: int, last: int, s) -> ComplexInterval:
    """Enclosure of ``sum(n**-s for n in first..last)`` for all s in the box.

    Requires ``Re(s) >= 0`` on the whole box.
    """
    s = _as_complex(s)
    if first < 1:
        raise DomainError(f"summation must start at n >= 1, got {first}")
    if last < first:
        return _cmake(_make(0.0, 0.0), _make(0.0, 0.0))
    sig, t = s.re, s.im
    if sig.lo < 0:
        raise DomainError("cpow_neg_sum requires Re(s) >= 0")
    L_lo, L_hi = _log_range(first, last)
    n = last - first + 1
    if sig.lo == sig.hi == 0.0:
        m_lo = m_hi = np.ones(n)
    elif sig.lo == sig.hi == 1.0:
        ns = np.arange(first, last + 1, dtype=np.float64)
        q = 1.0 / ns
        m_lo, m_hi = np.nextafter(q, -np.inf), np.nextafter(q, np.inf)
    else:
        e_lo = np.nextafter(-sig.hi * L_hi, -np.inf)
        e_hi = np.nextafter(-sig.lo * L_lo, np.inf)
        m_lo = np.nextafter(np.exp(e_lo) * (1 - _VEC_REL), -np.inf)
        m_hi = np.nextafter(np.exp(e_hi) * (1 + _VEC_REL), np.inf)
    if t.lo == t.hi == 0.0:
        # real terms: no angles to round
        zero = _make(0.0, 0.0)
        if sig.lo == sig.hi == 0.0:
            return _cmake(_make(float(n), float(n)), zero)
        return _cmake(_rigorous_sum(m_lo, m_hi), zero)
    x_lo = np.nextafter(t.lo * (L_lo if t.lo >= 0 else L_hi), -np.inf)
    x_hi = np.nextafter(t.hi * (L_hi if t.hi >= 0 else L_lo), np.inf)
    c_lo, c_hi, s_lo, s_hi = _vec_trig(x_lo, x_hi)
    re_lo, re_hi = _vec_scale(m_lo, m_hi, c_lo, c_hi)
    im_lo, im_hi = _vec_scale(m_lo, m_hi, s_lo, s_hi)
    re = _rigorous_sum(re_lo, re_hi)
    im = _rigorous_sum(im_lo, im_hi)
    return _cmake(re, -im)
