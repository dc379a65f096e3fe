"""Shared pytest plumbing for the suite.

The acceptance tests report one verdict line per numbered criterion;
the hook below prints them as a block after the normal summary so the
pass/fail state of each criterion is visible at a glance.
"""

from __future__ import annotations

# tag -> (description, passed); populated by tests/test_acceptance.py
_CRITERIA: dict[str, tuple[str, bool]] = {}


def record_criterion(tag: str, description: str, passed: bool) -> bool:
    _CRITERIA[tag] = (description, passed)
    return passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for tag in sorted(_CRITERIA):
        description, passed = _CRITERIA[tag]
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{tag}] {verdict} {description}")
