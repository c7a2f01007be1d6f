"""Shared test plumbing.

The acceptance tests funnel their verdicts through `record_criterion` so a
plain `pytest` run ends with one visible PASS/FAIL line per criterion even
under output capture.
"""

import pytest

_criterion_lines: list[str] = []


def record_criterion(number: int, ok: bool, detail: str = "") -> None:
    line = f"[criterion-{number}] {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" {detail}"
    _criterion_lines.append(line)
    print(line)


@pytest.hookimpl(trylast=True)
def pytest_terminal_summary(terminalreporter):
    if _criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in _criterion_lines:
            terminalreporter.write_line(line)
