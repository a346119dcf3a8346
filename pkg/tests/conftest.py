import time
from collections import defaultdict

import pytest

from qid.harness import run_plan
from qid.harness.acceptance import acceptance_plan

CRITERIA = {
    1: "catalog verification over the acceptance ranges",
    2: "spot values for id1, id3, id4",
    3: "reduction chain c=0 and lemma_bN assembly",
    4: "id2 summand antisymmetry for L <= 10",
    5: "classical limit suites",
    6: "id1 benchmark counts and ratio growth",
    7: "negative control via perturbed RHS",
    8: "randomized property suites",
}

_outcomes = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _outcomes[mark.args[0]].append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, desc in CRITERIA.items():
        runs = _outcomes.get(n)
        if not runs:
            status = "NOT RUN"
        else:
            status = "PASS" if all(runs) else "FAIL"
        tr.write_line(f"criterion {n}: {status:<7} {desc} ({sum(runs or [])}/{len(runs or [])} tests)")


@pytest.fixture(scope="session")
def acceptance_report():
    t0 = time.perf_counter()
    report = run_plan(acceptance_plan(), timings=True, write=False)
    return report, time.perf_counter() - t0
