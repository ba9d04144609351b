"""Print the acceptance scoreboard after every run that collected it."""

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    for name in ("test_acceptance", "tests.test_acceptance"):
        mod = sys.modules.get(name)
        if mod is not None and getattr(mod, "SCOREBOARD", None):
            terminalreporter.section("acceptance criteria")
            for line in mod.SCOREBOARD:
                terminalreporter.write_line(line)
            break
