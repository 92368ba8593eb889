import os
import json
from fractions import Fraction
from pathlib import Path

import pytest

import pyrodrigues as pr

DATA = Path(os.environ.get("RODRIGUES_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def load(name):
    return json.loads((DATA / name).read_text())


def unit_logs(poly):
    """Collapse La, Lb to 1 and drop n-dependence check: returns rationals per x power."""
    out = []
    for terms in poly:
        total = Fraction(0)
        for t in terms:
            assert t["n"] == 0
            total += Fraction(t["coef"])
        out.append(total)
    return out


def test_hermite_kernels():
    q = pr.kernels(load("hermite-symbolic.json"), 3)
    assert len(q) == 4
    assert unit_logs(q[2]) == [-2, 0, 4]
    assert pr.kernel_strings(load("hermite-symbolic.json"), 1) == ["1", "-2*Lb*x"]


def test_theta_eval():
    assert pr.theta_eval(load("hermite.json"), 2, 1.0) == pytest.approx(2.0, rel=1e-12)
    assert pr.theta_eval(load("hkdf.json"), 2, 1.0) == pytest.approx(6.0, rel=1e-12)


def test_identities_verify():
    fam = load("cubic-psi.json")
    assert pr.verify_genfun(fam, 10)["status"] == "verified"
    statuses = {r["identity"]: r["status"] for r in pr.sweep(fam, 6)}
    assert statuses["cor22"] == "skipped"
    assert all(s == "verified" for k, s in statuses.items() if k != "cor22")
    assert pr.residual("aa11", fam, 4) == []


def test_ode_hermite_and_residual():
    fam = load("hermite.json")
    ode = pr.synthesize_ode(fam, 2, specialize=True)
    assert ode["order"] == 2
    ode_sym = pr.synthesize_ode(fam, 2)
    for n in range(6):
        assert pr.ode_residual(ode_sym, fam, n) == []


def test_bilateral_and_bernoulli():
    assert pr.verify_bilateral(load("bernoulli-bilateral.json"), load("x4.json"), 6, 6)["status"] == "verified"
    assert pr.apostol_bernoulli(2) == [Fraction(1, 6), -1, 1]


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        pr.residual("cor22", load("psi-not-one.json"), 1)
    with pytest.raises(ValueError):
        pr.kernels({"phi1": {"poly": [1]}}, 2)
