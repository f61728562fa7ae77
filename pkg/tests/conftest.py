"""Prints the acceptance verdict lines after the run, bypassing capture."""

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = []
    for name, module in sys.modules.items():
        if name.rpartition(".")[2] == "test_acceptance":
            lines = getattr(module, "VERDICT_LINES", [])
            break
    if not lines:
        return
    terminalreporter.ensure_newline()
    terminalreporter.section("acceptance gates", sep="-")
    for line in lines:
        terminalreporter.write_line(line)
