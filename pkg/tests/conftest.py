import os
from pathlib import Path

import numpy as np
import pytest

from itemset_synth import Dataset

_CRITERIA: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, label = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        state = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        prev = _CRITERIA.get(number, (None, label))[0]
        # a criterion split over several tests fails if any part fails
        if prev in ("FAIL",) or (prev == "SKIP" and state == "PASS"):
            state = prev
        _CRITERIA[number] = (state, label)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        state, label = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:>2}: {state}  {label}")


def random_dataset(rng: np.random.Generator, max_items: int = 12, max_transactions: int = 64,
                   allow_empty: bool = False) -> Dataset:
    """Random dataset with a random density, alphabet and size."""
    n_items = int(rng.integers(1, max_items + 1))
    n = int(rng.integers(1, max_transactions + 1))
    density = rng.uniform(0.1, 0.9)
    rows = []
    for _ in range(n):
        t = np.flatnonzero(rng.random(n_items) < density)
        if len(t) == 0 and not allow_empty:
            t = [int(rng.integers(n_items))]
        rows.append([int(i) + 1 for i in t])
    return Dataset(rows)


@pytest.fixture
def d4():
    return Dataset([[1, 2], [1, 2, 3], [1, 3], [2, 3]], name="d4")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def benchmark_dir():
    root = os.environ.get("ITEMSET_SYNTH_DATA")
    return Path(root) if root else None
