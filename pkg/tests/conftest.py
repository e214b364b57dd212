"""Terminal reporting for the acceptance suite."""

import helpers


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if helpers.ACCEPTANCE_VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in helpers.ACCEPTANCE_VERDICTS:
            terminalreporter.write_line(line)
