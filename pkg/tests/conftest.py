import re

import pytest

from dihedral_mip.gf import FieldSpec

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")
_results: dict[int, tuple[str, str]] = {}


@pytest.fixture(scope="session")
def gf2():
    return FieldSpec(1)


@pytest.fixture(scope="session")
def gf4():
    return FieldSpec(2)


def pytest_runtest_logreport(report):
    match = _CRITERION.search(report.nodeid)
    if not match:
        return
    num, name = int(match.group(1)), match.group(2)
    if report.when == "call" or report.outcome != "passed":
        prev = _results.get(num, (name, "PASS"))[1]
        status = "PASS" if report.outcome == "passed" and prev == "PASS" else "FAIL"
        _results[num] = (name, status)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results):
        name, status = _results[num]
        terminalreporter.write_line(f"criterion {num:2d} {name.replace('_', ' ')}: {status}")
