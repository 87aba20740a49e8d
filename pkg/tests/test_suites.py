import json

import pytest

from soclelab.cli import main
from soclelab.suites import (SUITES, case_seed, replay_case, reports_to_json, reports_to_markdown, run_suite,
                             thread_count)


def test_case_seeds_are_stable_and_distinct():
    seeds = {case_seed(42, "order-length", i) for i in range(500)}
    assert len(seeds) == 500
    assert case_seed(42, "order-length", 3) == case_seed(42, "order-length", 3)
    assert case_seed(42, "order-length", 3) != case_seed(43, "order-length", 3)


def test_thread_count_env(monkeypatch):
    monkeypatch.setenv("SOCLELAB_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("SOCLELAB_THREADS", "0")
    with pytest.raises(ValueError):
        thread_count()


@pytest.mark.parametrize("suite_id", ["inter-fred", "root-div", "semi-min-q"])
def test_report_independent_of_threads(suite_id):
    one = run_suite(suite_id, 7, threads=1)
    many = run_suite(suite_id, 7, threads=4)
    assert reports_to_json([one], 7) == reports_to_json([many], 7)


def test_replay_reproduces_cases():
    rep = run_suite("semisimple-equiv", 11, threads=1)
    for case in rep.cases[::17]:
        again = replay_case("semisimple-equiv", case["family"], case["case_seed"])
        assert {k: v for k, v in again.items()} == {k: v for k, v in case.items() if k != "id"}


def test_preconditions_are_skips():
    rep = run_suite("fred-th-equiv", 5, threads=1)
    assert rep.verdict == "pass"
    skipped = rep.skipped
    assert skipped and all(c["family"].startswith("triangular") for c in skipped)
    assert all(c["reason"].startswith("NotSemiprime") for c in skipped)
    assert rep.to_dict()["skip_reasons"] == {"NotSemiprime": len(skipped)}


def test_experimental_suite_never_fails():
    rep = run_suite("delta-equality", 3, threads=1)
    assert rep.verdict == "experimental-observation"
    assert SUITES["delta-equality"].experimental


def test_fail_verdict_and_exit_code(monkeypatch, tmp_path, capsys):
    import soclelab.suites as S

    def broken(key, rng, seed):
        return S.VIOLATION, {"algebra": key}, {}

    fake = S.Suite("always-fails", "a deliberately false statement", (S.Part(broken, ("matrix:M1:GF(17)",), 3),))
    monkeypatch.setitem(S.SUITES, "always-fails", fake)
    rep = run_suite("always-fails", 1, threads=1)
    assert rep.verdict == "fail" and len(rep.violations) == 3
    assert all("case_seed" in c for c in rep.violations)
    out = tmp_path / "r.json"
    assert main(["suite", "--name", "always-fails", "--seed", "1", "--out", str(out)]) == 1
    doc = json.loads(out.read_text())
    assert doc["passed"] is False and doc["suites"][0]["violation_count"] == 3
    assert "always-fails" in out.with_suffix(".md").read_text()


def test_markdown_escapes_pipes():
    rep = run_suite("root-div", 2, threads=1)
    md = reports_to_markdown([rep], 2)
    row = next(l for l in md.splitlines() if l.startswith("| root-div"))
    assert row.count(" | ") == 5
