import pytest
from hypothesis import settings

# Fixed example generation keeps test_output.txt reproducible between runs.
settings.register_profile("repro", derandomize=True, deadline=None)
settings.load_profile("repro")

CRITERIA: dict[int, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.skipped):
        status = "skipped" if rep.skipped else ("passed" if rep.passed else "failed")
        CRITERIA.setdefault(mark.args[0], []).append((item.name, status))


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        results = CRITERIA[num]
        failed = [name for name, s in results if s == "failed"]
        ran = [name for name, s in results if s != "skipped"]
        if failed:
            verdict = "FAIL"
        elif ran:
            verdict = "PASS"
        else:
            verdict = "SKIP"
        skipped = len(results) - len(ran)
        extra = f", {skipped} slow skipped" if skipped else ""
        line = f"criterion {num:2d}: {verdict} ({len(ran) - len(failed)}/{len(ran)} checks{extra})"
        if failed:
            line += " failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
