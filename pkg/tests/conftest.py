"""Independent oracles shared by the tests.

Nothing here imports the package's construction or search code: neighbors come
straight from the coordinate rule and connectivity from networkx.
"""

import itertools

import networkx as nx
import pytest

from bhconn.topology import build


def rule_neighbors(v, n):
    """Neighbors of coordinate tuple ``v`` by the base-4 coordinate rule."""
    a0 = v[0]
    s = 1 if a0 % 2 == 0 else -1
    out = []
    for d in (1, -1):
        out.append(((a0 + d) % 4,) + tuple(v[1:]))
    for i in range(1, n):
        for d in (1, -1):
            w = list(v)
            w[0] = (a0 + d) % 4
            w[i] = (w[i] + s) % 4
            out.append(tuple(w))
    return out


def vid(coords):
    return sum(a * 4**i for i, a in enumerate(coords))


def rule_graph(n):
    g = nx.Graph()
    for v in itertools.product(range(4), repeat=n):
        g.add_node(vid(v))
        for w in rule_neighbors(v, n):
            g.add_edge(vid(v), vid(w))
    return g


def nx_disconnects(g, removed):
    h = g.subgraph(set(g) - set(removed))
    return h.number_of_nodes() <= 1 or not nx.is_connected(h)


@pytest.fixture(scope="session")
def bh():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = build(n)
        return cache[n]

    return get


@pytest.fixture(scope="session")
def oracle_graph():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = rule_graph(n)
        return cache[n]

    return get


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  [{detail}]")
