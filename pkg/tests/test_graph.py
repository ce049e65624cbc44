import pickle

import pytest
from hypothesis import given, settings, strategies as st

from pcfcolor import generators as gen
from pcfcolor.errors import InputError
from pcfcolor.graph import CyclePath, Graph, cut_edges, girth_cycle, square

import oracles


@st.composite
def small_graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, edges)


def test_graph_normalizes_edges():
    g = Graph(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edge_count == 2
    assert g.adjacency == ((1,), (0, 2), (1,))
    assert g.max_degree == 2
    assert Graph(4).max_degree == 0


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(-1, 1)]])
def test_graph_rejects_bad_edges(edges):
    with pytest.raises(InputError):
        Graph(3, edges)


def test_graph_pickles():
    g = gen.petersen()
    assert pickle.loads(pickle.dumps(g)) == g


def test_square_of_c5_is_k5():
    assert square(gen.cycle(5)) == gen.complete(5)


def test_square_of_edgeless_is_itself():
    assert square(Graph(4)) == Graph(4)


def test_square_of_p4():
    assert set(square(gen.path(4)).edges()) == {(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)}


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_square_matches_bfs_distances(g):
    d = oracles.distances(g)
    sq = square(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert sq.has_edge(u, v) == (d[u].get(v, 99) <= 2)
    assert set(square(sq).edges()) >= set(sq.edges())
    assert sq.max_degree <= g.max_degree ** 2


def test_girth_cycle_examples():
    c6 = girth_cycle(gen.cycle(6))
    assert c6.length == 6 and c6.is_valid_in(gen.cycle(6))
    assert girth_cycle(gen.ktree(1, 7, 3)) is None
    k4 = girth_cycle(gen.complete(4))
    assert k4.length == 3 and k4.is_valid_in(gen.complete(4))


@settings(max_examples=80, deadline=None)
@given(small_graphs())
def test_girth_cycle_is_shortest(g):
    cycles = oracles.all_cycles(g)
    gc = girth_cycle(g)
    if not cycles:
        assert gc is None
        return
    assert gc.is_cycle and gc.is_valid_in(g)
    assert gc.length == min(len(c) for c in cycles)
    # the last vertex has minimum degree among vertices on shortest cycles
    shortest = {v for c in cycles if len(c) == gc.length for v in c}
    assert g.degree(gc.vertices[-1]) == min(g.degree(v) for v in shortest)


def test_cut_edges_examples():
    assert cut_edges(gen.path(3)) == [(0, 1), (1, 2)]
    assert cut_edges(gen.cycle(5)) == []
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    assert cut_edges(two_triangles) == [(2, 3)]


@settings(max_examples=80, deadline=None)
@given(small_graphs())
def test_cut_edges_match_removal_oracle(g):
    assert set(cut_edges(g)) == oracles.bridges(g)


def test_subgraph_ops():
    k4 = gen.complete(4).remove_edge(0, 1)
    assert (k4.n, k4.edge_count) == (4, 5)
    p4, idx = gen.cycle(5).remove_vertices([0])
    assert p4 == gen.path(4) or sorted(p4.degrees()) == [1, 1, 2, 2]
    assert idx == [1, 2, 3, 4]
    g3 = gen.gen_latin_gn(3)
    cells, idx = g3.induced(range(9))
    assert cells.n == 9 and cells.edge_count == 0
    assert [g3.label(v) for v in idx][:2] == ["v1,1", "v1,2"]


def test_subgraph_ops_errors():
    g = gen.cycle(4)
    with pytest.raises(InputError):
        g.remove_edge(0, 2)
    with pytest.raises(InputError):
        g.remove_vertices([7])
    with pytest.raises(InputError):
        g.induced([0, 9])


def test_cycle_path_validity():
    g = gen.cycle(4)
    assert CyclePath((0, 1, 2, 3), True).is_valid_in(g)
    assert not CyclePath((0, 1, 2), True).is_valid_in(g)
    assert CyclePath((0, 1, 2), False).is_valid_in(g)
    assert CyclePath((0, 1, 2, 3), True).length == 4


def test_components_and_distances():
    g = Graph(5, [(0, 1), (3, 4)])
    assert g.components() == [[0, 1], [2], [3, 4]]
    assert not g.is_connected()
    assert gen.cycle(5).is_connected()
