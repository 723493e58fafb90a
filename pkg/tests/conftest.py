from __future__ import annotations

import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n, label, ok in sorted(results):
        terminalreporter.write_line(f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {label}")
