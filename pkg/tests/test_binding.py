from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bindlab import generators as gen
from bindlab.binding import BindingError, binding_number, binding_number_pruned, woodall_bound
from bindlab.graph import from_edge_list, neighborhood

from conftest import brute_binding
from test_graph import graphs


def test_single_vertex():
    bw = binding_number(gen.complete(1))
    assert bw.value == 0 and bw.witness_set.members() == (0,)


def test_star_k13():
    bw = binding_number(gen.star(3))
    assert bw.value == Fraction(1, 3)
    assert bw.witness_set.members() == (1, 2, 3)


def test_c4_and_c5():
    assert binding_number(gen.cycle(4)).value == 1
    assert binding_number(gen.cycle(4)).witness_set.members() == (0, 2)
    bw = binding_number(gen.cycle(5))
    assert bw.value == Fraction(4, 3)
    assert bw.witness_set.members() == (0, 1, 3)


def test_complete_graph_ties_to_vertex_zero():
    for f in (binding_number, binding_number_pruned):
        bw = f(gen.complete(6))
        assert bw.value == 5 and bw.witness_set.members() == (0,)


def test_edgeless_graph_is_zero():
    assert binding_number(gen.empty(4)).value == 0


def test_null_graph_rejected():
    for f in (binding_number, binding_number_pruned):
        with pytest.raises(BindingError):
            f(gen.empty(0))


def test_matches_definition_on_atlas(atlas):
    for G in atlas:
        value, size, mask = brute_binding(G)
        for f in (binding_number, binding_number_pruned):
            bw = f(G)
            assert (bw.value, bw.witness_set.mask) == (value, mask), G.edges


def test_chunked_scan_on_larger_graph(monkeypatch):
    import bindlab._subsets as subsets

    G = gen.random_gnp(13, Fraction(3, 5), 11)
    whole = binding_number(G)
    monkeypatch.setattr(subsets, "CHUNK_BITS", 5)
    assert binding_number(G) == whole == binding_number_pruned(G)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10).filter(lambda G: G.n >= 1))
def test_routes_agree(G):
    a, b = binding_number(G), binding_number_pruned(G)
    assert a == b
    X = a.witness_set
    N = neighborhood(G, X)
    assert len(X) > 0 and len(N) < G.n
    assert Fraction(len(N), len(X)) == a.value
    assert 0 <= a.value <= G.n - 1


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9).filter(lambda G: G.m < G.n * (G.n - 1) // 2), st.data())
def test_adding_an_edge_never_lowers_binding(G, data):
    missing = [(u, v) for u in range(G.n) for v in range(u + 1, G.n) if not G.has_edge(u, v)]
    u, v = data.draw(st.sampled_from(missing))
    assert binding_number(G.add_edge(u, v)).value >= binding_number(G).value


@pytest.mark.parametrize(
    "G, delta, bound",
    [
        (gen.complete(4), 3, Fraction(3)),
        (gen.cycle(4), 2, Fraction(1)),
        (gen.cycle(5), 2, Fraction(2)),
    ],
)
def test_woodall_examples(G, delta, bound):
    chk = woodall_bound(G)
    assert (chk.min_degree, chk.bound, chk.holds) == (delta, bound, True)


def test_woodall_requires_positive_binding():
    with pytest.raises(BindingError):
        woodall_bound(from_edge_list(3, [(0, 1)]))
    with pytest.raises(BindingError):
        woodall_bound(gen.complete(1))


def test_woodall_holds_on_atlas(atlas):
    for G in atlas:
        if G.n >= 2 and binding_number(G).value > 0:
            assert woodall_bound(G).holds, G.edges
