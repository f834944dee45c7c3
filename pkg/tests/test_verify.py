import json

import pytest

from bicliq.verify import RunConfig, run_verify_paper


def strip_timings(d: dict) -> dict:
    out = json.loads(json.dumps(d))
    for check in out["checks"]:
        check.pop("elapsed_ms")
    out["summary"].pop("elapsed_ms", None)
    return out


def test_full_run_passes():
    report = run_verify_paper(RunConfig())
    assert report.exit_code == 0
    counts = report.counts
    assert counts["fail"] == 0 and counts["budget-exceeded"] == 0
    assert counts["pass"] == len(report.checks) == 51


def test_zero_budget_degrades_to_exit_2():
    report = run_verify_paper(RunConfig(budget_ms=0))
    counts = report.counts
    assert counts["fail"] == 0
    assert counts["budget-exceeded"] >= 1
    assert report.exit_code == 2
    # the starved checks still report rigorous information
    starved = [c for c in report.checks if c.status == "budget-exceeded"]
    assert all("budget" in c.computed or c.computed for c in starved)


def test_report_shape_and_stability():
    a = run_verify_paper(RunConfig()).to_dict()
    b = run_verify_paper(RunConfig()).to_dict()
    assert strip_timings(a) == strip_timings(b)  # stable modulo walltime
    assert a["config"]["seed"] == 0
    assert a["config"]["threads"] == 1
    assert {c["status"] for c in a["checks"]} == {"pass"}
    assert a["summary"]["pass"] == 51
    assert a["exit_code"] == 0


def test_text_rendering():
    report = run_verify_paper(RunConfig(fmt="text"))
    text = report.to_text()
    lines = text.strip().splitlines()
    assert len(lines) == 51 + 1  # one per check plus the summary
    assert lines[-1].startswith("51 checks:")
    assert all(" PASS " in line or "PASS" in line for line in lines[:-1])


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(budget_ms=-1)
    with pytest.raises(ValueError):
        RunConfig(threads=0)
    with pytest.raises(ValueError):
        RunConfig(fmt="yaml")
