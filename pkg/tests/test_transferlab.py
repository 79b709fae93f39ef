from __future__ import annotations

import pytest

from cohitlab import refdata, transferlab
from cohitlab.cohit import EngineConfig
from cohitlab.transferlab import (
    SUITE_NAMES,
    CheckResult,
    SuiteReport,
    TransferReport,
    transfer_matrix,
    verdict,
    verify_all,
    verify_suite,
)


def test_report_flag_semantics():
    rep = TransferReport(4, 9, 2, 3, 2, [], [])
    assert rep.injective and not rep.surjective and not rep.isomorphism
    rep = TransferReport(4, 9, 3, 2, 2, [], [])
    assert rep.surjective and not rep.injective
    rep = TransferReport(4, 9, 2, 2, 2, [], [])
    assert rep.isomorphism


def test_degree_zero_is_the_identity(config):
    for q in (1, 2, 3, 4):
        rep = verdict(q, 0, config)
        assert (rep.domain_dim, rep.codomain_dim, rep.rank) == (1, 1, 1)
        assert rep.isomorphism
        assert rep.matrix == [(1,)]


def test_degree_nine_is_an_isomorphism(config):
    rep = verdict(4, 9, config)
    assert rep.domain_dim == rep.codomain_dim == rep.rank == 1
    assert rep.matrix == [(1,)]
    assert rep.isomorphism
    js = rep.to_json()
    assert js["isomorphism"] is True
    assert js["matrix"] == [[1]]
    assert len(js["representatives"]) == 1


def test_empty_domain_gives_the_empty_matrix(config):
    rep = verdict(4, 21, config)
    assert rep.domain_dim == 0 and rep.codomain_dim == 0
    assert rep.matrix == []
    assert rep.isomorphism  # vacuously


def test_rank_three_degree_eight(config):
    rep = verdict(3, 8, config)
    assert (rep.domain_dim, rep.codomain_dim, rep.isomorphism) == (1, 1, True)


def test_transfer_matrix_rows_are_homology_coordinates(config):
    data, rows = transfer_matrix(4, 9, config)
    assert data.dim == len(rows) == 1
    assert rows[0] == (1,)


def test_small_fixture_verdicts(config):
    for (q, n), want in refdata.TRANSFER_VERDICTS.items():
        if n <= 10:
            rep = verdict(q, n, config)
            assert (rep.domain_dim, rep.codomain_dim, rep.isomorphism) == want


def test_unknown_suite_name_raises():
    with pytest.raises(ValueError, match="unknown suite"):
        verify_suite("nope")


def test_suite_names_are_stable():
    assert SUITE_NAMES == (
        "dlc1",
        "dlc2",
        "dlct",
        "dlc3",
        "dlct2",
        "remark26",
        "eq6",
        "exttables",
    )


def test_identity_suites_pass(config):
    for name in ("remark26", "eq6"):
        report = verify_suite(name, config)
        assert report.passed and report.complete
        assert all(c.status == "pass" for c in report.checks)
        js = report.to_json()
        assert js["name"] == name and js["passed"] is True


def test_stretch_suites_skip_without_the_flag(config):
    for name in ("dlct", "dlct2"):
        report = verify_suite(name, config, stretch=False)
        assert report.passed  # skipped is not failed
        assert not report.complete
        assert all(c.status == "skipped" for c in report.checks)
        assert "COHITLAB_STRETCH" in report.checks[0].detail


def test_resource_caps_mark_checks_as_skipped(tmp_path):
    tight = EngineConfig(cache_dir=tmp_path / "c", max_columns=40)
    report = verify_suite("dlc2", tight)
    assert not report.complete
    skipped = [c for c in report.checks if c.status == "skipped"]
    assert skipped
    assert any("budget" in c.detail for c in skipped)
    # a partially run suite that never mismatched still counts as passing
    assert report.passed


def test_mismatch_is_reported_with_a_diff(config, monkeypatch):
    broken = dict(refdata.PSI_RAW_TERM_IMAGES_9)
    broken[(1, 6, 1, 1)] = ((2, 5, 1, 1),)
    monkeypatch.setattr(refdata, "PSI_RAW_TERM_IMAGES_9", broken)
    report = verify_suite("remark26", config)
    assert not report.passed
    bad = [c for c in report.checks if c.status == "fail"]
    assert any("(1, 6, 1, 1)" in c.name for c in bad)
    assert all("got" in c.detail and "want" in c.detail for c in bad)


def test_verify_all_preserves_order(config):
    reports = verify_all(("eq6", "remark26"), config)
    assert [r.name for r in reports] == ["eq6", "remark26"]


def test_verify_all_with_process_fanout(config):
    reports = verify_all(("remark26", "eq6"), config, jobs=2)
    assert [r.name for r in reports] == ["remark26", "eq6"]
    assert all(r.passed for r in reports)


def test_check_result_json_round_trip():
    c = CheckResult("s", "check", "fail", "got 1, want 2")
    assert c.to_json() == {
        "suite": "s",
        "name": "check",
        "status": "fail",
        "detail": "got 1, want 2",
    }
    assert not c.ok
    report = SuiteReport("s", [c])
    assert not report.passed
    assert report.complete
