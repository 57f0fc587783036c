import os
import re
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from merodec.stabcode import parse_code

settings.register_profile(
    "thorough",
    max_examples=1000,
    deadline=None,
    database=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "thorough"))

ROOT = Path(__file__).resolve().parent.parent
CODES = ROOT / "codes"


def load(name):
    return parse_code((CODES / f"{name}.code").read_text())


@pytest.fixture(scope="session")
def codes():
    return {p.stem: parse_code(p.read_text()).validate() for p in sorted(CODES.glob("*.code"))}


_AC = re.compile(r"test_acceptance\.py::test_ac(\d+)_")
_ac_results = {}


def pytest_runtest_logreport(report):
    m = _AC.search(report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    failed = report.failed
    prev = _ac_results.get(n, "PASS")
    if report.when == "call" or failed:
        _ac_results[n] = "FAIL" if failed or prev == "FAIL" else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _ac_results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ac_results):
        terminalreporter.write_line(f"AC{n}: {_ac_results[n]}")
