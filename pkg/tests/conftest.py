"""Shared strategies and the independent brute-force oracle.

The oracle deliberately shares no code with the package's solver: distances
come from networkx and subsets are enumerated naively without any pruning.
"""

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import strategies as st

from coronadim.graph import Graph, is_connected


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def from_nx(G: nx.Graph) -> Graph:
    G = nx.convert_node_labels_to_integers(G)
    return Graph(G.number_of_nodes(), G.edges())


def brute_force_dim(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Smallest size and lexicographically first resolving set, by enumeration."""
    G = to_nx(g)
    d = dict(nx.all_pairs_shortest_path_length(G))
    for k in range(1, g.n + 1):
        for s in combinations(range(g.n), k):
            if len({tuple(d[v][x] for x in s) for v in range(g.n)}) == g.n:
                return k, s
    raise AssertionError("no resolving set")


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, (p for p, keep in zip(pairs, mask) if keep))


@st.composite
def connected_graphs(draw, min_n=1, max_n=7):
    """Random spanning tree plus random extra edges, so always connected."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        edges.add((draw(st.integers(0, v - 1)), v))
    pairs = [p for p in combinations(range(n), 2) if p not in edges]
    extra = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    g = Graph(n, edges | set(extra))
    assert is_connected(g)
    return g


@pytest.fixture(scope="session")
def atlas():
    """All graphs on up to 7 vertices, from networkx's graph atlas."""
    return [from_nx(G) for G in nx.graph_atlas_g()[1:]]


# (criterion number, "PASS"/"FAIL", description) lines from test_acceptance.py
ACCEPTANCE: list[tuple[int, str, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, text in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{status} criterion {number:2d}: {text}")
