import random

import pytest
from hypothesis import strategies as st

from girth_thickness.graph_core import Graph

# criterion number -> (title, outcomes of every test carrying that marker)
_acceptance: dict[int, tuple[str, list[bool]]] = {}


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniformly random labelled tree on n vertices, decoded from a random Prüfer sequence."""
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    a, b = (v for v in range(n) if degree[v] == 1)
    edges.append((a, b))
    return Graph.from_edges(n, edges)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@st.composite
def trees(draw, min_n=2, max_n=30):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    perm = draw(st.permutations(list(range(n))))
    return Graph.from_edges(n, [(perm[p], perm[i + 1]) for i, p in enumerate(parents)])


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    _acceptance.setdefault(number, (title, []))[1].append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, outcomes = _acceptance[number]
        status = "PASS" if all(outcomes) else "FAIL"
        runs = f" ({sum(outcomes)}/{len(outcomes)} cases)" if len(outcomes) > 1 else ""
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}{runs}")
