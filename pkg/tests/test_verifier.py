from __future__ import annotations

import math
import random

import pytest

from zetabound.errors import DomainError, NotFoundError
from zetabound.rigor import Interval, abs_enclosure
from zetabound.verifier import (
    Certificate,
    check_certificate,
    find_crossing,
    initial_cells,
    verify_range,
)
from zetabound.zeta_em import zeta_point


@pytest.fixture(scope="module")
def cert_3_100():
    return verify_range(3, 100, 0.75)


def test_certified_range_tiles_exactly(cert_3_100):
    cert = cert_3_100
    assert cert.status == "certified"
    assert cert.leaves[0].t_lo == 3 and cert.leaves[-1].t_hi == 100
    for a, b in zip(cert.leaves, cert.leaves[1:]):
        assert a.t_hi == b.t_lo
    for leaf in cert.leaves:
        assert leaf.verdict == "certified"
        assert leaf.zeta_abs_hi < leaf.bound_lo
        assert leaf.bound_lo <= 0.75 * math.log(leaf.t_lo)


def test_soundness_spot_check(cert_3_100):
    rng = random.Random(8)
    for _ in range(100):
        t = rng.uniform(3, 100)
        value = abs_enclosure(zeta_point(complex(1, t), 1e-10))
        assert value.hi < 0.75 * math.log(t)


def test_backlund_coefficient_certifies():
    assert verify_range(3, 100, 1).status == "certified"


def test_below_crossing_is_not_certified():
    cert = verify_range(2.2, 2.3, 0.75)
    assert cert.status in ("falsified", "inconclusive")
    assert cert.status == "falsified"
    witness = cert.leaves[-1]
    assert witness.t_hi - witness.t_lo <= 1e-9
    assert witness.zeta_abs_lo > witness.bound_hi


def test_exhausted_depth_is_inconclusive():
    # just above the crossing the margin is tiny, so depth 0 cannot decide
    cert = verify_range(2.3912, 2.5, 0.75, max_depth=0)
    assert cert.status == "inconclusive"
    assert any(leaf.verdict == "undecided" for leaf in cert.leaves)


def test_monotone_strengthening():
    a = verify_range(3, 40, 0.75)
    b = verify_range(3, 40, 0.8)
    assert a.status == b.status == "certified"
    assert b.wall_stats["depth_reached"] <= a.wall_stats["depth_reached"]
    assert len(b.leaves) <= len(a.leaves)


def test_determinism_and_parallel_merge():
    one = verify_range(3, 60, 0.75).to_json()
    two = verify_range(3, 60, 0.75).to_json()
    many = verify_range(3, 60, 0.75, parallelism=3).to_json()
    assert one == two == many


def test_json_roundtrip_and_check(cert_3_100):
    text = cert_3_100.to_json()
    back = Certificate.from_json(text)
    assert back.to_json() == text
    assert check_certificate(back, recompute=False) == "certified"


def test_recheck_recomputes_leaves():
    cert = verify_range(3, 10, 0.75)
    assert check_certificate(cert) == "certified"
    # recorded numbers are not trusted: a smaller coefficient must fail the recheck
    cert.c = 0.3
    assert check_certificate(cert) == "inconclusive"


def test_tampered_coverage_is_rejected():
    cert = verify_range(3, 10, 0.75)
    del cert.leaves[5]
    assert check_certificate(cert, recompute=False) == "inconclusive"


def test_csv_matches_json(cert_3_100):
    import csv
    import io
    import json

    rows = list(csv.DictReader(io.StringIO(cert_3_100.to_csv())))
    leaves = json.loads(cert_3_100.to_json())["leaves"]
    assert rows == leaves


def test_decimal_coefficient():
    cert = verify_range(3, 5, "0.75")
    assert cert.c == 0.75 and cert.status == "certified"


def test_range_validation():
    with pytest.raises(DomainError):
        verify_range(1, 3, 0.75)
    with pytest.raises(DomainError):
        verify_range(5, 3, 0.75)
    with pytest.raises(DomainError):
        verify_range(3, 5, -1)


def test_initial_cells():
    cells = initial_cells(3.0, 100.0)
    assert cells[0][0] == 3.0 and cells[-1][1] == 100.0
    assert max(b - a for a, b in cells) <= 0.25 + 1e-12
    small = initial_cells(3.0, 3.64)
    assert len(small) == 64


def test_crossing_three_quarters():
    root = find_crossing(0.75, Interval(2, 3))
    assert root.width <= 1e-3
    assert root.contains(2.391)


def test_crossing_backlund():
    root = find_crossing(1, Interval(1.5, 3))
    assert root.width <= 1e-3
    assert root.contains(2.0012)


def test_crossing_not_found():
    with pytest.raises(NotFoundError):
        find_crossing(10, Interval(3, 10))
