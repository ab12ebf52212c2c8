"""Certified interval computations for explicit bounds on |zeta(1+it)|."""

from __future__ import annotations

from .bounds import (
    TheoremParams,
    backlund_rhs,
    backlund_threshold,
    feasible,
    theorem_ratio,
    theorem_sup_ratio,
)
from .errors import DomainError, NotFoundError, ResourceError, ZetaBoundError
from .expsum import DyadicBlock, cheng_graham, dyadic_bound, expsum_bruteforce
from .optimizer import SearchSpace, optimize
from .rigor import ComplexInterval, Interval, abs_enclosure
from .verifier import Certificate, check_certificate, find_crossing, verify_range
from .zeta_em import EMConfig, em_tail, zeta_on_box, zeta_point

__version__ = "0.1.0"

__all__ = [
    "Interval",
    "ComplexInterval",
    "abs_enclosure",
    "EMConfig",
    "em_tail",
    "zeta_point",
    "zeta_on_box",
    "DyadicBlock",
    "cheng_graham",
    "dyadic_bound",
    "expsum_bruteforce",
    "TheoremParams",
    "feasible",
    "backlund_rhs",
    "backlund_threshold",
    "theorem_ratio",
    "theorem_sup_ratio",
    "SearchSpace",
    "optimize",
    "Certificate",
    "verify_range",
    "check_certificate",
    "find_crossing",
    "ZetaBoundError",
    "DomainError",
    "NotFoundError",
    "ResourceError",
]
