"""Shared pytest hooks.

Prints a one-line PASS/FAIL verdict per acceptance criterion at the end of
the run so the acceptance checklist can be read off the terminal summary.
"""

import re

_CRITERION_RE = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")

_LABELS = {
    1: "worked examples, exact",
    2: "transfer-chain round trips",
    3: "doubly stochastic vs majorization witnesses",
    4: "Birkhoff round trips",
    5: "exhaustive probability-vector bounds",
    6: "affine dimension of orbit sets",
    7: "membership certificates",
    8: "permutation-algebra identities",
}

_outcomes = {}


def pytest_runtest_logreport(report):
    match = _CRITERION_RE.search(report.nodeid)
    if not match:
        return
    number = int(match.group(1))
    if report.failed:
        _outcomes[number] = "FAIL"
    elif report.when == "call" and report.passed:
        _outcomes.setdefault(number, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.write_line("")
    for number in sorted(_outcomes):
        label = _LABELS.get(number, "criterion")
        verdict = _outcomes[number]
        terminalreporter.write_line(
            f"ACCEPTANCE criterion {number} ({label}): {verdict}"
        )
