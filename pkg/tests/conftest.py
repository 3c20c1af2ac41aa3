import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in range(1, 13):
        if k in results:
            title, ok = results[k]
            terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {k:2d}: {title}")
        else:
            terminalreporter.write_line(f"FAIL criterion {k:2d}: not run")
