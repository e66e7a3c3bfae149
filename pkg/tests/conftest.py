"""Collects per-criterion outcomes of the acceptance suite and prints a summary."""

import pytest

_CRITERIA = {
    "AC1": "golden example, seven finite places",
    "AC2": "golden example, five finite places with infinity",
    "AC3": "closed forms equal the oracle over the sweep",
    "AC4": "Riemann-Roch consistency of the dimension oracle",
    "AC5": "cardinality, projection and emptiness properties",
    "AC6": "witness monomials realize every generator",
    "AC7": "closure equals oracle membership and recovers Gamma",
    "AC8": "byte-identical CLI output across runs and workers",
}
_outcomes: dict[str, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(ac): test belongs to an acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark:
            item.user_properties.append(("acceptance", mark.args[0]))


def pytest_runtest_logreport(report):
    ac = dict(report.user_properties).get("acceptance")
    if ac is None:
        return
    if report.when == "call" or report.failed:
        _outcomes.setdefault(ac, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for ac, title in _CRITERIA.items():
        if ac not in _outcomes:
            continue
        status = "PASS" if all(_outcomes[ac]) else "FAIL"
        terminalreporter.write_line(f"{ac} {status}  {title}")
