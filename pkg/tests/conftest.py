import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import acceptance_log


def pytest_terminal_summary(terminalreporter):
    if not acceptance_log.results:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in acceptance_log.results:
        terminalreporter.write_line(f"ACCEPTANCE {outcome}: {name}")
