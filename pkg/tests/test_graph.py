import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bindlab import generators as gen
from bindlab.graph import (
    Graph,
    GraphError,
    VertexSet,
    delete_vertices,
    edges_between,
    edges_within,
    from_edge_list,
    independent_set_masks,
    independent_sets,
    is_independent,
    neighborhood,
)

from conftest import all_subsets


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


@st.composite
def graph_and_sets(draw):
    G = draw(graphs())
    sub = st.integers(0, (1 << G.n) - 1)
    return G, VertexSet(draw(sub), G.n), VertexSet(draw(sub), G.n)


def test_from_edge_list_path_and_cycle():
    P3 = from_edge_list(3, [(0, 1), (1, 2)])
    assert P3.edges == ((0, 1), (1, 2))
    assert P3.degrees() == [1, 2, 1]
    C4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert C4.edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert C4.degrees() == [2, 2, 2, 2]


def test_from_edge_list_dedupes():
    G = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert G.m == 1


@pytest.mark.parametrize("n, pairs", [(2, [(0, 0)]), (2, [(0, 2)]), (3, [(-1, 1)])])
def test_from_edge_list_rejects(n, pairs):
    with pytest.raises(GraphError):
        from_edge_list(n, pairs)


def test_graph_rejects_bad_adjacency():
    with pytest.raises(GraphError):
        Graph.from_adjacency([0b10, 0b00])  # asymmetric
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b01), ())  # edge list disagrees
    with pytest.raises(GraphError):
        from_edge_list(25, [])


def test_neighborhood_examples():
    assert neighborhood(gen.complete(3), [0]).members() == (1, 2)
    assert neighborhood(gen.cycle(4), [0, 2]).members() == (1, 3)
    assert len(neighborhood(gen.cycle(4), [])) == 0


def test_edges_between_examples():
    assert edges_between(gen.complete(4), [0], [1, 2]) == 2
    assert edges_between(gen.cycle(4), [0], [2]) == 0
    assert edges_between(gen.cycle(4), [], [1, 2]) == 0
    with pytest.raises(GraphError):
        edges_between(gen.cycle(4), [0, 1], [1])


def test_delete_vertices_examples():
    d = delete_vertices(gen.cycle(4), [0])
    assert d.graph.edges == gen.path(3).edges
    assert d.new_to_old == (1, 2, 3)
    assert d.old_to_new == {1: 0, 2: 1, 3: 2}
    G = gen.wheel(5)
    assert delete_vertices(G, []).graph == G
    assert delete_vertices(gen.complete(3), [0, 1, 2]).graph.n == 0


def test_is_independent_examples():
    assert is_independent(gen.cycle(4), [0, 2])
    assert not is_independent(gen.complete(2), [0, 1])
    assert is_independent(gen.cycle(5), [])


@pytest.mark.parametrize(
    "G, expected",
    [
        (gen.path(3), [(), (0,), (1,), (2,), (0, 2)]),
        (gen.complete(4), [(), (0,), (1,), (2,), (3,)]),
    ],
)
def test_independent_sets_listing(G, expected):
    assert [I.members() for I in independent_sets(G)] == expected


def test_independent_sets_counts():
    assert sum(1 for _ in independent_sets(gen.cycle(5))) == 11
    for n in range(1, 8):
        assert sum(1 for _ in independent_sets(gen.complete(n))) == n + 1
    assert sum(1 for _ in independent_sets(gen.empty(10))) == 1024


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=12))
def test_independent_sets_match_brute_force(G):
    got = list(independent_set_masks(G))
    brute = [
        sum(1 << v for v in X)
        for X in all_subsets(G.n)
        if not any(G.has_edge(u, v) for u in X for v in X if u < v)
    ]
    assert sorted(got) == sorted(brute)
    assert len(got) == len(set(got))
    assert got == sorted(got, key=lambda s: (s.bit_count(), s))


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_handshake(G):
    assert sum(G.degrees()) == 2 * G.m


@settings(max_examples=150, deadline=None)
@given(graph_and_sets())
def test_neighborhood_distributes_over_union(case):
    G, X, Y = case
    assert neighborhood(G, X | Y) == neighborhood(G, X) | neighborhood(G, Y)


@settings(max_examples=150, deadline=None)
@given(graph_and_sets())
def test_independent_iff_no_internal_edges(case):
    G, X, _ = case
    sub = delete_vertices(G, X.complement()).graph
    assert is_independent(G, X) == (sub.m == 0) == (edges_within(G, X) == 0)


@settings(max_examples=100, deadline=None)
@given(graph_and_sets())
def test_deletion_is_induced_subgraph(case):
    G, S, _ = case
    d = delete_vertices(G, S)
    for (i, j) in d.graph.edges:
        assert G.has_edge(d.new_to_old[i], d.new_to_old[j])
    kept = [v for v in range(G.n) if v not in S]
    expected_m = sum(1 for u, v in G.edges if u in kept and v in kept)
    assert d.graph.m == expected_m
