"""The identity checks: small-case outcomes, report shape, determinism."""

import json

import pytest

from graphdet.graphs import CapExceeded
from graphdet.verify import (
    SuiteConfig,
    rooted_forest_poly,
    run_check,
    run_suite,
    suite_cells,
    verify_codim1,
    verify_derivative,
    verify_diag,
    verify_direct,
    verify_direct_prime,
    verify_expansion,
    verify_kirchhoff_codim1,
    verify_kirchhoff_diag,
    verify_lapl_tutte,
    verify_minor_pairing,
    verify_mobius_equiv,
    verify_operator_laws,
    verify_specval,
    verify_theta,
)
from graphdet.poly import MultiPoly, w

var = MultiPoly.variable


def test_direct_small_cells():
    for n, k in [(1, 0), (1, 1), (2, 0), (2, 2), (3, 2)]:
        assert verify_direct(n, k).ok
        assert verify_direct_prime(n, k).ok


def test_mobius_small_cells():
    for n, k in [(1, 1), (2, 2), (3, 1)]:
        r = verify_mobius_equiv(n, k)
        assert r.ok and r.total_cases == (n * n) ** k


def test_diag_and_codim1():
    assert verify_diag(2, 1, (2,)).ok
    assert verify_diag(2, 2, ()).ok
    assert verify_diag(3, 3, (1,)).ok
    assert verify_codim1(2, 1, 1, 2).ok
    assert verify_codim1(3, 2, 1, 3).ok
    assert verify_codim1(2, 2, 1, 1).ok  # diagonal case


def test_expansion_sign():
    r = verify_expansion(2, 2)
    assert r.status == "pass_with_sign" and r.sign == -1
    r0 = verify_expansion(2, 1)  # both sides vanish
    assert r0.status == "pass_with_sign" and r0.sign is None and r0.ok


def test_derivative_sign():
    r = verify_derivative(2, 2, 1, 1)
    assert r.status == "pass_with_sign" and r.sign == -1
    # even order cannot separate the signs
    r2 = verify_derivative(2, 2, 1, 2)
    assert r2.ok and r2.sign is None
    with pytest.raises(ValueError):
        verify_derivative(2, 2, 1, 3)


def test_minor_pairing():
    for n in (1, 2, 3):
        r = verify_minor_pairing(n)
        assert r.ok
        assert r.total_cases == 2 ** n + n * n


def test_forest_oracle():
    # trees on two vertices into root 1: the single edge 2->1
    assert rooted_forest_poly(2, {1}) == var(w(2, 1))
    # n=3 root {1}: three trees
    expected = (
        var(w(2, 1)) * var(w(3, 1))
        + var(w(2, 1)) * var(w(3, 2))
        + var(w(2, 3)) * var(w(3, 1))
    )
    assert rooted_forest_poly(3, {1}) == expected
    assert rooted_forest_poly(2, {1, 2}) == 1  # empty product


def test_kirchhoff_checks():
    assert verify_kirchhoff_diag(2, (1,)).ok
    assert verify_kirchhoff_diag(3, (1, 3)).ok
    assert verify_kirchhoff_diag(4, (1, 2, 3, 4)).ok
    assert verify_kirchhoff_codim1(2, 1, 2).ok
    assert verify_kirchhoff_codim1(3, 2, 3).ok
    with pytest.raises(ValueError):
        verify_kirchhoff_diag(3, ())
    with pytest.raises(ValueError):
        verify_kirchhoff_codim1(3, 2, 2)


def test_specval_and_lapl_tutte():
    assert verify_specval(2, 2).ok
    assert verify_specval(3, 1).ok
    assert verify_lapl_tutte(2, 2).ok
    assert verify_lapl_tutte(3, 2).ok


def test_operator_laws():
    for n, k in [(1, 2), (2, 0), (2, 2), (3, 2)]:
        assert verify_operator_laws(n, k).ok


def test_theta_outcomes():
    r2 = verify_theta(2)
    assert r2.ok
    # the stated right-hand side is unreachable beyond n=2; the check fails
    # honestly while the derived identities in the notes hold
    r3 = verify_theta(3)
    assert r3.status == "fail" and r3.failures
    assert any("derived componentwise image holds: True" in n for n in r3.notes)
    assert any("pairing law holds: True" in n for n in r3.notes)


def test_report_json_schema():
    r = verify_direct(2, 1)
    d = r.to_json_dict()
    assert list(d) == [
        "check", "params", "status", "sign", "total_cases", "failures", "elapsed_ms",
    ]
    assert d["status"] in ("pass", "fail", "pass_with_sign")
    assert d["sign"] in (1, -1, None)
    assert isinstance(d["total_cases"], int)
    assert isinstance(d["failures"], list)
    json.dumps(d)  # serializable


def test_failure_payload_shape():
    r = verify_theta(3)
    f = r.failures[0]
    assert set(f) == {"graph", "expected", "actual"}
    assert all(len(e) == 2 for e in f["graph"])
    assert "/" in f["expected"] and "/" in f["actual"]


def test_jobs_do_not_change_payload():
    # the (3,4) and (3,3) domains are above the chunking threshold, so
    # jobs=8 really goes through the worker pool
    for fn, args in [
        (verify_direct, (3, 4)),
        (verify_mobius_equiv, (3, 3)),
        (verify_specval, (3, 4)),
    ]:
        a = fn(*args, jobs=1).to_json_dict()
        b = fn(*args, jobs=8).to_json_dict()
        a.pop("elapsed_ms")
        b.pop("elapsed_ms")
        assert a == b


def test_cap_guard_raises():
    with pytest.raises(CapExceeded):
        verify_direct(9, 9)
    with pytest.raises(CapExceeded):
        verify_diag(3, 3, (), cap=10)


def test_run_check_dispatch():
    r = run_check("diag", {"n": 2, "k": 1, "I": (2,)})
    assert r.check == "diag" and r.ok
    with pytest.raises(KeyError):
        run_check("nonsense", {})


def test_suite_small_grid():
    cfg = SuiteConfig(max_n=2, max_k=1, include_theta=False)
    reports = run_suite(cfg)
    assert len(reports) == len(suite_cells(cfg))
    assert all(r.ok for r in reports if r.status != "skipped")


def test_suite_marks_capped_cells_skipped():
    cfg = SuiteConfig(max_n=2, max_k=2, cap=5, include_theta=False)
    reports = run_suite(cfg)
    assert any(r.status == "skipped" for r in reports)
    for r in reports:
        if r.status == "skipped":
            assert r.total_cases == 0 and not r.failures


def test_suite_config_validation():
    with pytest.raises(ValueError):
        SuiteConfig(max_n=0)
    with pytest.raises(ValueError):
        SuiteConfig(jobs=0)
