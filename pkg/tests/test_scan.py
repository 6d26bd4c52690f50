import pytest

from probeiep import scan
from probeiep.scan import CHECKS, ScanReport, resolve_threads, run_scan


@pytest.mark.parametrize("check", sorted(CHECKS))
def test_every_check_passes_small(check):
    rep = run_scan(check, 5)
    assert rep.tested > 0
    assert rep.ok, rep.exhibits


def test_thread_count_does_not_change_report():
    one = run_scan("gplus-cases", 6, threads=1).to_json()
    four = run_scan("gplus-cases", 6, threads=4).to_json()
    one.pop("wall_time")
    four.pop("wall_time")
    assert one == four


def test_threads_flag_overrides_environment(monkeypatch):
    monkeypatch.setenv(scan.THREADS_ENV, "3")
    assert resolve_threads(None) == 3
    assert resolve_threads(2) == 2
    monkeypatch.setenv(scan.THREADS_ENV, "many")
    assert resolve_threads(None) == 1
    monkeypatch.delenv(scan.THREADS_ENV)
    assert resolve_threads(None) == 1
    assert resolve_threads(0) == 1


def test_report_caps_exhibits():
    rep = ScanReport("x", {})
    rep.merge(30, [{"i": i} for i in range(30)])
    assert rep.failed == 30 and rep.passed == 0
    assert len(rep.exhibits) == scan.MAX_EXHIBITS
    assert not rep.ok


def test_unknown_check():
    with pytest.raises(KeyError):
        run_scan("nope", 4)


def test_progress_callback():
    msgs = []
    run_scan("path-cycle", 6, progress=msgs.append)
    assert msgs and msgs[-1].startswith("path-cycle:")
