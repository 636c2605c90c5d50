import time

SUITE_BUDGET = 180.0
_start = time.perf_counter()


def _results(session):
    mod = next((m for name, m in list(__import__("sys").modules.items())
                if name.endswith("test_acceptance")), None)
    return getattr(mod, "RESULTS", {}) if mod else {}


def pytest_sessionfinish(session, exitstatus):
    results = _results(session)
    if not results:
        return
    elapsed = time.perf_counter() - _start
    ok = elapsed < SUITE_BUDGET
    results["10b"] = (ok, f"full suite wall time {elapsed:.1f} s (limit {SUITE_BUDGET:.0f} s)")
    if not ok and session.exitstatus == 0:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    results = _results(terminalreporter)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results, key=lambda k: (int(str(k).rstrip("ab")), str(k))):
        ok, detail = results[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
