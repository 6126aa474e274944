from itertools import permutations

import pytest
from hypothesis import given, settings

from coronadim.errors import InvalidDescriptorError, InvalidVertexError, SizeLimitError
from coronadim.graph import (
    Graph,
    complement,
    complete_graph,
    corona,
    cycle_graph,
    disjoint_union,
    empty_graph,
    family,
    from_edge_list,
    iterated_corona,
    join,
    make_family,
    path_graph,
    to_edge_list,
    wheel_graph,
)

from conftest import graphs


def test_graph_normalizes_edges():
    g = Graph(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == {(0, 1), (1, 2)}
    assert g.has_edge(1, 0) and not g.has_edge(0, 2)
    assert g.degrees() == [1, 2, 1]


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 0)]])
def test_graph_rejects_bad_edges(edges):
    with pytest.raises((ValueError, InvalidVertexError)):
        Graph(3, edges)


def test_neighbors_out_of_range():
    with pytest.raises(InvalidVertexError):
        path_graph(3).neighbors(3)


def test_make_family_examples():
    p1 = make_family(family("path", 1))
    assert p1.n == 1 and p1.size == 0
    w4 = make_family(family("wheel", 4))
    assert (w4.n, w4.size) == (5, 8)
    assert w4.neighbors(0) == {1, 2, 3, 4}
    assert (make_family(family("complete", 4)).n, make_family(family("complete", 4)).size) == (4, 6)


@pytest.mark.parametrize(
    "tag,params",
    [("cycle", (2,)), ("path", (0,)), ("wheel", (2,)), ("complete_bipartite", (0, 2)), ("fan", (0,))],
)
def test_make_family_rejects_small_parameters(tag, params):
    with pytest.raises(InvalidDescriptorError):
        family(tag, *params)


def test_family_definitions_by_join():
    assert make_family(family("wheel", 5)) == join(complete_graph(1), cycle_graph(5))
    assert make_family(family("fan", 4)) == join(complete_graph(1), path_graph(4))
    assert make_family(family("star", 3)) == make_family(family("complete_bipartite", 1, 3))


def test_join_examples():
    assert join(complete_graph(1), cycle_graph(5)) == wheel_graph(5)
    assert join(empty_graph(2), empty_graph(2)) == make_family(family("complete_bipartite", 2, 2))
    g = join(complete_graph(1), disjoint_union(complete_graph(1), complete_graph(2)))
    assert g.n == 4
    assert g.edge_list() == [(0, 1), (0, 2), (0, 3), (2, 3)]


def test_disjoint_union_examples():
    assert disjoint_union(complete_graph(1), complete_graph(1)) == empty_graph(2)
    u = disjoint_union(path_graph(2), path_graph(3))
    assert (u.n, u.size) == (5, 3)
    assert disjoint_union(empty_graph(0), cycle_graph(3)) == cycle_graph(3)


def test_complement_examples():
    assert complement(complete_graph(3)) == empty_graph(3)
    c5 = cycle_graph(5)
    comp = complement(c5)
    # self-complementary: some relabeling maps the complement onto C5
    assert any(
        Graph(5, ((p[u], p[v]) for u, v in comp.edges)) == c5 for p in permutations(range(5))
    )


@given(graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g


@settings(max_examples=60)
@given(graphs(max_n=4), graphs(max_n=3))
def test_join_complement_is_union_of_complements(g, h):
    assert complement(join(g, h)) == disjoint_union(complement(g), complement(h))


@given(graphs(max_n=4), graphs(max_n=4))
def test_join_edge_count(g, h):
    j = join(g, h)
    assert j.n == g.n + h.n
    assert j.size == g.size + h.size + g.n * h.n


def test_corona_examples():
    wheel, _ = corona(complete_graph(1), cycle_graph(4))
    assert wheel == wheel_graph(4)
    g, cs = corona(path_graph(2), complete_graph(2))
    assert (g.n, g.size) == (6, 7)
    assert cs.spine == (0, 1) and cs.copies == ((2, 3), (4, 5))
    p4, _ = corona(path_graph(2), empty_graph(1))
    assert sorted(p4.degrees()) == [1, 1, 2, 2] and p4.size == 3


def test_corona_with_null_graph_returns_g():
    g = cycle_graph(4)
    product, cs = corona(g, empty_graph(0))
    assert product == g
    assert cs.copies == ((), (), (), ())


@given(graphs(min_n=1, max_n=5), graphs(max_n=4))
def test_corona_structure_invariants(g, h):
    product, cs = corona(g, h)
    n1, n2 = g.n, h.n
    assert product.n == n1 * (n2 + 1)
    assert product.size == g.size + n1 * (h.size + n2)
    everything = list(cs.spine) + [v for c in cs.copies for v in c]
    assert sorted(everything) == list(range(product.n))
    assert len(cs.spine) == n1 and all(len(c) == n2 for c in cs.copies)
    for i, copy in enumerate(cs.copies):
        assert product.degree(cs.spine[i]) == g.degree(i) + n2
        for j, v in enumerate(copy):
            assert product.has_edge(cs.spine[i], v)
            assert product.degree(v) == h.degree(j) + 1


@pytest.mark.parametrize("n", range(3, 10))
def test_wheel_is_corona_of_cycle(n):
    assert make_family(family("wheel", n)) == corona(complete_graph(1), cycle_graph(n))[0]


@pytest.mark.parametrize(
    "g,h,k,order",
    [(path_graph(2), complete_graph(2), 1, 6), (path_graph(2), complete_graph(2), 2, 18),
     (path_graph(3), empty_graph(1), 3, 24)],
)
def test_iterated_corona_order(g, h, k, order):
    product, structures = iterated_corona(g, h, k)
    assert product.n == order == g.n * (h.n + 1) ** k
    assert len(structures) == k
    assert structures[-1].n1 == g.n * (h.n + 1) ** (k - 1)


def test_iterated_corona_size_limit():
    with pytest.raises(SizeLimitError):
        iterated_corona(path_graph(3), complete_graph(3), 20)
    with pytest.raises(SizeLimitError):
        iterated_corona(path_graph(3), complete_graph(3), 3, max_order=100)


def test_descriptor_corona_matches_iterated_corona():
    desc = family("corona", family("path", 2), family("complete", 2), 2)
    assert desc.order == 18
    assert make_family(desc) == iterated_corona(path_graph(2), complete_graph(2), 2)[0]


@given(graphs())
def test_edge_list_round_trip(g):
    text = to_edge_list(g)
    assert from_edge_list(text) == g
    lines = text.splitlines()
    assert lines[0] == f"n {g.n}"
    assert [tuple(map(int, l.split())) for l in lines[1:]] == g.edge_list()


@pytest.mark.parametrize("text", ["", "4\n0 1\n", "n 3\n0 1 2\n", "n 2\n0 5\n", "n x\n"])
def test_edge_list_rejects_garbage(text):
    with pytest.raises((ValueError, InvalidVertexError)):
        from_edge_list(text)
