import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

ACCEPTANCE_PREFIX = "tests/test_acceptance.py::"


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when == "call" and rep.nodeid.startswith(ACCEPTANCE_PREFIX):
                lines.append((rep.nodeid, outcome))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in sorted(lines, key=lambda x: _criterion_number(x[0])):
        name = nodeid[len(ACCEPTANCE_PREFIX):]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


def _criterion_number(nodeid):
    name = nodeid.split("::")[-1]
    digits = "".join(ch for ch in name.split("_")[1] if ch.isdigit()) if "_" in name else ""
    return int(digits) if digits else 0
