import os
import sys

sys.path.insert(0, os.environ.get("QSL2_EXT_DIR", "."))

import _qsl2 as q


def test_normalize_straightening():
    assert q.normalize('e*F(1)') == "F(1) e + K - K^-1"
    assert q.normalize('K*e - v^2 e K') == "0"


def test_hopf_maps():
    assert q.delta("e") == "K (x) e + e (x) 1"
    assert q.counit("C") == "v^-1 + v"
    assert q.antipode("e") == "-K^-1 e"


def test_center():
    assert q.central_expand("C^2") == "(v^-2 + 2 + v^2) sigma(0) + sigma(1)"
    assert q.is_central("sigma(2)*C")
    assert not q.is_central("e")
    assert q.hc("sigma(1)") == "(v^-2)K^-2 + (-v^-2 - v^2) + (v^2)K^2"


def test_membership_and_truncation():
    assert q.member("K - K^-1", ideal="U1pow", n=1) == "IN"
    assert q.member("F(1)", ideal="U1pow", n=1) == "OUT"
    assert q.truncate("br(2)*br(1)*K", filtration="Un", n=2) == "0"


def test_theta_and_scalars():
    assert q.theta(terms=2) == "1 (x) 1 - F(1) (x) e"
    assert q.qbinomial(4, 2) == "v^-4 + v^-2 + 2 + v^2 + v^4"
    assert q.balanced_cyclo(2) == "v^-1 + v"
    # integrality of the four-parameter kernel
    assert q.theta_kernel(1, 0, 1, 1) == q.normalize("qb(3,1)*qb(4,1)")


def test_adjoint():
    assert q.ad("K", "F(1)") == q.normalize("v^-2 F(1)")


def test_grade():
    parts = q.grade("F(2)*K*e^3 + e", grading="Z")
    assert set(parts) == {1}


def test_errors():
    import pytest

    with pytest.raises(Exception):
        q.normalize("F(-1)")
    with pytest.raises(Exception):
        q.normalize("e +")


def test_verify_suite():
    results = q.verify(suite="qcomb", max=3, seed=5)
    assert results
    assert all(passed for (_, passed, _, _) in results)
