from fractions import Fraction as F

import pytest

from asyncdds.stepmat import SystemSpec

_acceptance_lines = []


@pytest.fixture
def record_criterion(request):
    """Tag an acceptance test with its criterion label for the summary lines."""
    def record(label):
        request.node.user_properties.append(("criterion", label))
    return record


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    for key, value in report.user_properties:
        if key == "criterion":
            status = "PASS" if report.passed else "FAIL"
            _acceptance_lines.append(f"[{status}] {value}")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


# parameter sets used throughout the published examples

@pytest.fixture
def spec_12():
    """(1, 2) system with alpha=2, beta=1, gamma=-1, delta=1."""
    return SystemSpec(1, 2, [[2, 1], [-1, 1]])


@pytest.fixture
def spec_23():
    return SystemSpec(2, 3, [[-1, F(1, 5)], [F(1, 4), F(-1, 4)]])


P_ROT = ((F(-1, 16), F(1, 8)), (F(-1, 8), F(-1, 16)))
P_SECOND = ((F(-1, 11), F(1, 10)), (F(-2, 15), F(1, 15)))
# parameters consistent with the printed (2,1) operator; see README "Known misprints"
P_THIRD = ((F(-9), F(-1)), (F(1089, 40), F(3)))
P_THIRD_PRINTED = ((F(-8), F(-1)), (F(1089, 40), F(4)))
PSI_23 = ((F(-7, 10), F(1, 10)), (F(-9, 16), F(29, 80)))
