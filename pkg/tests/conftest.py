import sys
import time

import pytest

from mckaylab.bijection import default_grid, run_grid


@pytest.fixture(scope="session")
def grid_run():
    """One full label-level grid run shared by the acceptance criteria.

    Oracle comparisons are exercised separately on the small cells, so the
    grid pass itself runs label-level only.
    """
    t0 = time.perf_counter()
    reports = run_grid(default_grid(), with_oracle=False)
    elapsed = time.perf_counter() - t0
    return {"reports": reports, "elapsed": elapsed}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo the one-line acceptance verdicts even under output capture."""
    mod = sys.modules.get("test_acceptance") \
        or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "ACCEPTANCE_LINES", ()) if mod else ()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
