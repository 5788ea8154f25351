from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest

from bindlab.graph import from_edge_list


def to_graph(H: nx.Graph):
    return from_edge_list(H.number_of_nodes(), H.edges())


@pytest.fixture(scope="session")
def atlas():
    """Every graph on 1..7 vertices up to isomorphism (1252 graphs)."""
    return [to_graph(H) for H in nx.graph_atlas_g()[1:]]


@pytest.fixture(scope="session")
def atlas_small(atlas):
    return [G for G in atlas if G.n <= 6]


def brute_binding(G):
    """Minimum |N(X)|/|X| straight from the definition, with the size/mask tie-break."""
    best = None
    for mask in range(1, 1 << G.n):
        members = [v for v in range(G.n) if mask >> v & 1]
        nb = set()
        for v in members:
            nb |= {u for u in range(G.n) if G.has_edge(u, v)}
        if len(nb) == G.n:
            continue
        key = (Fraction(len(nb), len(members)), len(members), mask)
        if best is None or key < best:
            best = key
    return best


def all_subsets(n):
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            yield set(combo)


_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_line():
    """Record a one-line PASS/FAIL summary for the terminal report."""

    def record(label: str, ok: bool, detail: str = "") -> None:
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        _ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
