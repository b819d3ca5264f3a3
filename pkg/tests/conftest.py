import random
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from crossmax.graph import WeightedGraph

FIXTURES = Path(__file__).parent / "fixtures"

settings.register_profile(
    "repo", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repo")


def random_graph(rng: random.Random, n: int, p: float = 0.5, low: int = -10, high: int = 10) -> WeightedGraph:
    edges = [
        (u, v, rng.randint(low, high))
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return WeightedGraph(n, tuple(edges))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config._criteria = {}


@pytest.fixture
def detail(request):
    """Attach a measured detail to the acceptance summary line."""
    notes = []
    request.node._criterion_notes = notes
    return notes.append


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    number, title = mark.args
    notes = "; ".join(getattr(item, "_criterion_notes", []))
    item.config._criteria[number] = (rep.passed, title, notes)


def pytest_terminal_summary(terminalreporter, config):
    criteria = getattr(config, "_criteria", {})
    if not criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(criteria):
        ok, title, notes = criteria[number]
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}"
        if notes:
            line += f"  [{notes}]"
        terminalreporter.write_line(line)
