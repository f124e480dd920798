import itertools

import pytest

from perfcolor.graph import build_graph

PAW_EDGES = [(0, 1), (0, 2), (1, 2), (2, 3)]


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n):
    return build_graph(n, list(itertools.combinations(range(n), 2)))


def multipartite(*sizes):
    part = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(part)
    return build_graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if part[u] != part[v]])


def disjoint_union(*graphs):
    edges, offset = [], 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return build_graph(offset, edges)


def all_graphs(n):
    """Every labeled graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


@pytest.fixture
def paw():
    return build_graph(4, PAW_EDGES)


@pytest.fixture
def bowtie():
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    lines = []
    yield lines.append
    call = getattr(request.node, "rep_call", None)
    status = "PASS" if call is not None and call.passed else "FAIL"
    detail = lines[-1] if lines else ""
    ACCEPTANCE_LINES.append(f"{status}  {request.node.name}: {detail}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
