"""Shared test plumbing: collect acceptance verdicts and show them at the end.

pytest's default fd-level capture swallows anything a passing test prints,
so the acceptance tests register their ``CRITERION n: PASS/FAIL`` lines here
and a terminal-summary hook replays the full verdict table after capture is
torn down — every run of the suite ends with one line per criterion.
"""

VERDICTS: list[str] = []


def record_verdict(line: str) -> None:
    VERDICTS.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in VERDICTS:
            terminalreporter.write_line(line)
