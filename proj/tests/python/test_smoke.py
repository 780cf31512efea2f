import json
import math
import os
import subprocess
from fractions import Fraction

import pytest

import gjms6


def test_spectrum():
    assert gjms6.sphere_eigenvalues(10, 1) == [5040, 20160]
    assert gjms6.q_sphere(10) == 2520
    assert gjms6.factorization_ok()


def test_beta_ratio():
    n = 13
    assert gjms6.beta_ratio(0, -8, 2, -10, n) == Fraction(n - 10, n)
    assert gjms6.beta_ratio(2, -8, 2, -10, n) == Fraction(n - 10, 2 * (n - 4))


def test_psi4_and_log():
    n = 12
    c = gjms6.psi4_coefficients(n, seed=3)
    assert c[0] == -Fraction(1, 135 * (n - 2))
    lc = gjms6.log_coefficient_n10()
    assert lc["raw_over_norm"] == Fraction(1, 4320)
    assert lc["raw_over_norm"] == -lc["f4_h0"] / lc["divisor"]


def test_bubble():
    for n in (7, 10, 12):
        assert math.isclose(gjms6.sobolev_quotient(n, 0.2), gjms6.y6_sphere(n), rel_tol=1e-8)
    assert gjms6.limit_bracket(11) == Fraction(-184171, 18304)
    a = gjms6.coefficient_A(12, 1e-3) / 1e-12
    assert math.isclose(a, gjms6.coefficient_A_limit(12), rel_tol=1e-2)


def test_run_matches_cli():
    report = gjms6.run("green", n=11, seed=5)
    assert report["version"] == gjms6.__version__
    statuses = {c["claim_id"]: c["status"] for c in report["claims"]}
    assert statuses["prop2.1e.bracket1"] == "match"
    assert statuses["prop2.1e.tail"] == "documented-discrepancy"
    tool = os.environ.get("GJMS6_TOOL")
    if tool:
        out = subprocess.run([tool, "green", "--n", "11", "--seed", "5"], capture_output=True, check=True, text=True)
        assert json.loads(out.stdout)["claims"] == report["claims"]


def test_usage_errors():
    with pytest.raises(ValueError):
        gjms6.run("spectrum", n=6)
    with pytest.raises(ValueError):
        gjms6.run("spectrum", n=10, colour="red")
