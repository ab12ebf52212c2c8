"""Command-line front end: ``zetabound <command> [options]``.

Exit status: 0 success or certified, 1 falsified or not found,
2 inconclusive, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import random
import sys
import warnings
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation

from .bounds import backlund_threshold
from .errors import DomainError, NotFoundError, ZetaBoundError
from .expsum import DyadicBlock, dyadic_bound, expsum_bruteforce
from .optimizer import SearchSpace, optimize_full, refine_space
from .rigor import Interval, abs_enclosure
from .verifier import Certificate, check_certificate, find_crossing, verify_range
from .zeta_em import WidthMissWarning, zeta_on_box, zeta_point

__all__ = ["RunConfig", "build_parser", "run", "main"]

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64

JOBS_ENV = "ZETABOUND_JOBS"
COMMANDS = ("eval", "verify", "optimize", "backlund", "expsum-check", "crossing")
STATUS_EXIT = {"certified": EXIT_OK, "falsified": EXIT_NEGATIVE, "inconclusive": EXIT_INCONCLUSIVE}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    """Validated command line: the command, its parameters and output options."""

    command: str
    params: dict = field(default_factory=dict)
    output_format: str = "table"
    output_path: str | None = None
    parallelism: int = 1

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.output_format not in ("table", "json", "csv"):
            raise UsageError(f"unknown format {self.output_format!r}")
        if self.parallelism < 1:
            raise UsageError("--jobs must be >= 1")


def _decimal(text: str) -> Interval:
    """Outward enclosure of a decimal literal (scientific notation allowed)."""
    try:
        if not Decimal(text).is_finite():
            raise InvalidOperation
        return Interval.from_string(text)
    except (InvalidOperation, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"not a finite decimal: {text!r}") from exc


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--output", "-o", help="write results to this file instead of stdout")
    common.add_argument("--jobs", type=_positive_int, default=None,
                        help=f"worker processes (default ${JOBS_ENV} or 1)")

    parser = _Parser(prog="zetabound", description="Certified bounds for |zeta(1+it)|.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="enclose zeta(sigma+it)")
    p.add_argument("--t", type=_decimal, required=True)
    p.add_argument("--sigma", type=_decimal, default=Interval(1))
    p.add_argument("--width", type=float, default=1e-10, help="target enclosure width")

    p = sub.add_parser("verify", parents=[common], help="certify |zeta(1+it)| <= c log t on a range")
    p.add_argument("--from", dest="t_from", type=_decimal)
    p.add_argument("--to", dest="t_to", type=_decimal)
    p.add_argument("--coeff", default="0.75")
    p.add_argument("--max-depth", type=int, default=30)
    p.add_argument("--check-cert", metavar="FILE", help="re-validate a JSON certificate")
    p.add_argument("--no-recompute", action="store_true",
                   help="with --check-cert, check recorded numbers only")

    p = sub.add_parser("optimize", parents=[common], help="grid search over (k, m, A1)")
    p.add_argument("--t0", type=_decimal, default=Interval(1e8))
    p.add_argument("--k-max", type=_positive_int, default=20)
    p.add_argument("--m-max", type=_positive_int, default=12)
    p.add_argument("--a1-max", type=_positive_int, default=100)
    p.add_argument("--a1-step", type=float, default=None,
                   help="refine A1 around the integer optimum with this step")

    p = sub.add_parser("backlund", parents=[common], help="threshold of Backlund's inequality")
    p.add_argument("--m", type=_positive_int, required=True)
    p.add_argument("--tol", type=float, default=1e-6)

    p = sub.add_parser("expsum-check", parents=[common],
                       help="compare the dyadic bound with a brute-force sum")
    p.add_argument("--a", type=_positive_int)
    p.add_argument("--t", type=float)
    p.add_argument("--random", type=_positive_int, metavar="N", help="check N random blocks")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("crossing", parents=[common],
                       help="largest zero of |zeta(1+it)| - c log t in a window")
    p.add_argument("--coeff", required=True)
    p.add_argument("--lo", type=_decimal, required=True)
    p.add_argument("--hi", type=_decimal, required=True)
    return parser


def parse_config(argv) -> RunConfig:
    args = build_parser().parse_args(argv)
    params = {k: v for k, v in vars(args).items()
              if k not in ("command", "format", "output", "jobs")}
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    cfg = RunConfig(args.command, params, args.format, args.output, jobs)
    _validate(cfg)
    return cfg


def _validate(cfg: RunConfig) -> None:
    p = cfg.params
    if cfg.command == "verify" and p["check_cert"] is None:
        if p["t_from"] is None or p["t_to"] is None:
            raise UsageError("verify needs --from and --to (or --check-cert)")
        if not 2 <= p["t_from"].lo < p["t_to"].hi:
            raise UsageError("verify needs 2 <= --from < --to")
        if p["max_depth"] < 0:
            raise UsageError("--max-depth must be >= 0")
    if cfg.command in ("verify", "crossing"):
        try:
            coeff = _decimal(p["coeff"])
        except argparse.ArgumentTypeError as exc:
            raise UsageError(f"--coeff: {exc}") from None
        if not coeff.lo > 0:
            raise UsageError("--coeff must be positive")
    if cfg.command == "crossing" and not 0 < p["lo"].lo < p["hi"].hi:
        raise UsageError("crossing needs 0 < --lo < --hi")
    if cfg.command == "optimize" and not p["t0"].lo >= 3:
        raise UsageError("--t0 must be >= 3")
    if cfg.command == "expsum-check":
        if p["random"] is None and (p["a"] is None or p["t"] is None):
            raise UsageError("expsum-check needs --a and --t, or --random N")
    if cfg.command == "eval" and not p["width"] > 0:
        raise UsageError("--width must be positive")


def _f(x: float) -> str:
    return repr(float(x))


def _render(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows if len(rows) != 1 else rows[0], indent=1) + "\n"
    cols = list(rows[0]) if rows else []
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, cols, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols}
    lines = ["  ".join(c.ljust(widths[c]) for c in cols)]
    lines.append("  ".join("-" * widths[c] for c in cols))
    lines += ["  ".join(str(r[c]).ljust(widths[c]) for c in cols) for r in rows]
    return "\n".join(lines) + "\n"


def _cmd_eval(cfg: RunConfig):
    p = cfg.params
    t, sigma = p["t"], p["sigma"]
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", WidthMissWarning)
        if sigma.is_point() and sigma.lo == 1 and t.lo > 0:
            z = zeta_on_box(t, p["width"])
        elif sigma.is_point() and t.is_point():
            z = zeta_point(complex(sigma.lo, t.lo), p["width"])
        else:
            raise DomainError("off the line sigma = 1, sigma and t must be exact doubles")
    a = abs_enclosure(z)
    row = {
        "sigma": _f(sigma.mid), "t": _f(t.mid),
        "re_lo": _f(z.re.lo), "re_hi": _f(z.re.hi),
        "im_lo": _f(z.im.lo), "im_hi": _f(z.im.hi),
        "abs_lo": _f(a.lo), "abs_hi": _f(a.hi),
        "width_met": str(not caught).lower(),
    }
    return [row], EXIT_OK


def _cmd_verify(cfg: RunConfig):
    p = cfg.params
    if p["check_cert"] is not None:
        with open(p["check_cert"]) as fh:
            cert = Certificate.from_json(fh.read())
        status = check_certificate(cert, recompute=not p["no_recompute"])
        row = {"file": p["check_cert"], "recorded_status": cert.status, "checked_status": status,
               "leaves": len(cert.leaves)}
        code = STATUS_EXIT[status] if status == cert.status else EXIT_INCONCLUSIVE
        return [row], code
    cert = verify_range(p["t_from"].lo, p["t_to"].hi, p["coeff"], p["max_depth"],
                        parallelism=cfg.parallelism)
    if cfg.output_format == "json":
        return cert.to_json() + "\n", STATUS_EXIT[cert.status]
    if cfg.output_format == "csv":
        return cert.to_csv(), STATUS_EXIT[cert.status]
    row = {"t_lo": _f(cert.t_lo), "t_hi": _f(cert.t_hi), "c": _f(cert.c), "status": cert.status,
           **cert.wall_stats}
    return [row], STATUS_EXIT[cert.status]


def _cmd_optimize(cfg: RunConfig):
    p = cfg.params
    space = SearchSpace.default(p["t0"].lo, p["k_max"], p["m_max"], p["a1_max"])
    res = optimize_full(space, cfg.parallelism)
    if p["a1_step"] is not None:
        fine = optimize_full(refine_space(space, res.params, p["a1_step"]), cfg.parallelism)
        if fine.ratio.hi < res.ratio.hi:
            res = fine
    row = {"t0": _f(res.params.t0), "k": res.params.k, "m": res.params.m, "A1": _f(res.params.A1),
           "ratio_lo": _f(res.ratio.lo), "ratio_hi": _f(res.ratio.hi),
           "evaluated": res.evaluated}
    return [row], EXIT_OK


def _cmd_backlund(cfg: RunConfig):
    m = cfg.params["m"]
    root = backlund_threshold(m, cfg.params["tol"])
    return [{"m": m, "threshold_lo": _f(root.lo), "threshold_hi": _f(root.hi)}], EXIT_OK


def _expsum_row(a: int, t: float) -> dict:
    block = DyadicBlock(a, t)
    bound = dyadic_bound(block)
    brute = abs_enclosure(expsum_bruteforce(block))
    return {"a": a, "t": _f(t), "bound_hi": _f(bound.hi), "sum_abs_hi": _f(brute.hi),
            "ok": str(bound.hi >= brute.hi - 1e-6).lower()}


def _cmd_expsum(cfg: RunConfig):
    p = cfg.params
    if p["random"] is None:
        rows = [_expsum_row(p["a"], p["t"])]
    else:
        rng = random.Random(p["seed"])
        rows = []
        for _ in range(p["random"]):
            a = rng.randint(20, 5000)
            rows.append(_expsum_row(a, rng.uniform(1.0, 0.999 * 8 * math.pi * a * a)))
    ok = all(r["ok"] == "true" for r in rows)
    return rows, EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_crossing(cfg: RunConfig):
    p = cfg.params
    window = Interval(p["lo"].lo, p["hi"].hi)
    root = find_crossing(p["coeff"], window)
    return [{"c": p["coeff"], "crossing_lo": _f(root.lo), "crossing_hi": _f(root.hi)}], EXIT_OK


_DISPATCH = {
    "eval": _cmd_eval,
    "verify": _cmd_verify,
    "optimize": _cmd_optimize,
    "backlund": _cmd_backlund,
    "expsum-check": _cmd_expsum,
    "crossing": _cmd_crossing,
}


def run(cfg: RunConfig) -> int:
    """Execute a validated configuration and return the exit status."""
    try:
        payload, code = _DISPATCH[cfg.command](cfg)
    except NotFoundError as exc:
        print(f"zetabound: not found: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (ZetaBoundError, OSError, ValueError, KeyError) as exc:
        print(f"zetabound: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = payload if isinstance(payload, str) else _render(payload, cfg.output_format)
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main(argv=None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"zetabound: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
