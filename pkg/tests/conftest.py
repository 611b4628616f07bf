"""Shared pytest plumbing.

The acceptance suite records one pass/fail line per criterion; printing
them from a terminal-summary hook keeps them visible under pytest's
file-descriptor capture.
"""

criterion_lines = []


def pytest_terminal_summary(terminalreporter):
    if criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in criterion_lines:
            terminalreporter.write_line(line)
