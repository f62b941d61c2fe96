import pytest

from contracta import verify
from contracta.errors import LimitExceeded


@pytest.mark.parametrize("section", verify.SECTIONS)
def test_sections_pass(section):
    checks = verify.RUNNERS[section](6)
    assert checks
    failed = [c.line() for c in checks if not c.ok]
    assert failed == []


def test_check_lines():
    assert verify.Check("x", True).line() == "PASS x"
    assert verify.Check("x", False, "3 graphs fail").line() == "FAIL x: 3 graphs fail"


def test_sweep_cap():
    with pytest.raises(LimitExceeded):
        verify.verify_claw_section(9)


def test_parallel_sweeps_match(monkeypatch):
    monkeypatch.setenv("CONTRACTA_THREADS", "2")
    assert verify.workers() == 2
    assert all(c.ok for c in verify.verify_critical_section(6))
    monkeypatch.setenv("CONTRACTA_THREADS", "zero")
    assert verify.workers() == 1
