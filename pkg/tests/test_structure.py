import math

import pytest
from hypothesis import given, settings, strategies as st

from pcfcolor import generators as gen
from pcfcolor.errors import BudgetExceeded, InputError, StructureError
from pcfcolor.graph import Graph, cut_edges, girth_cycle
from pcfcolor.structure import (VertexOrdering, chordal_certificate, check_ear_decomposition,
                                check_ordering, dense_pair, ear_decompose, greedy_clique_cover, is_peo,
                                lcc, maximum_independent_set, minimum_clique_cover, paper_ordering,
                                star_free)

import oracles
from test_graph import small_graphs


def two_edge_connected_corpus():
    out = [gen.cycle(5), gen.complete(4), gen.theta(1, 2, 3), gen.petersen(), gen.wheel(6),
           gen.gen_latin_gn(2), gen.complete_bipartite(3, 3)]
    out += [g for g in gen.atlas_graphs(6) if g.edge_count and not cut_edges(g)]
    return out


@pytest.mark.parametrize("g, ears", [(gen.cycle(7), 1), (gen.complete(4), 3), (gen.theta(1, 1, 1), 2)])
def test_ear_counts(g, ears):
    dec = ear_decompose(g, girth_cycle(g))
    assert len(dec) == ears == g.edge_count - g.n + 1
    assert check_ear_decomposition(g, dec) == []


def test_ear_decompose_rejects_bridges():
    g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    with pytest.raises(StructureError):
        ear_decompose(g, girth_cycle(g))
    with pytest.raises(StructureError):
        paper_ordering(g)
    with pytest.raises(InputError):
        ear_decompose(gen.cycle(4), girth_cycle(gen.cycle(5)))


def test_ear_checker_detects_tampering():
    g = gen.theta(1, 1, 1)
    dec = ear_decompose(g, girth_cycle(g))
    broken = type(dec)(dec.ears[:1], dec.internal_vertices[:1])
    assert check_ear_decomposition(g, broken)


def test_ear_decompositions_and_orderings_on_corpus():
    for g in two_edge_connected_corpus():
        dec = ear_decompose(g, girth_cycle(g))
        assert check_ear_decomposition(g, dec) == []
        assert len(dec) == g.edge_count - g.n + 1
        order = paper_ordering(g)
        assert check_ordering(g, order) == [], (g, order)


def test_ordering_of_c5_starts_cycle_at_zero():
    order = paper_ordering(gen.cycle(5))
    assert order.cycle_start == 0 and check_ordering(gen.cycle(5), order) == []


def test_ordering_checker_detects_bad_orders():
    g = gen.theta(1, 2, 3)
    order = paper_ordering(g)
    assert check_ordering(g, VertexOrdering(tuple(reversed(order.order)), order.cycle_start))
    assert check_ordering(g, VertexOrdering(order.order[:-1], order.cycle_start))


def test_with_cycle_end_rotates():
    order = paper_ordering(gen.cycle(5))
    v = order.order[1]
    assert order.with_cycle_end(v).order[-1] == v


@settings(max_examples=80, deadline=None)
@given(small_graphs(8))
def test_chordality_matches_brute_force(g):
    cert = chordal_certificate(g)
    assert (cert is not None) == oracles.is_chordal(g)
    if cert is not None:
        assert is_peo(g, cert.peo)
        for i in range(g.n):
            assert g.is_clique(cert.later_neighbors(g, i))
        assert cert.s_value == max(cert.simplicial_clique_sizes, default=0)
        assert cert.s_value <= oracles.max_clique_size(g) or g.n == 0


def test_chordal_examples():
    assert chordal_certificate(gen.cycle(4)) is None
    assert chordal_certificate(gen.complete(5)).s_value == 5
    assert chordal_certificate(gen.ktree(3, 20, 4)).s_value == 4
    assert chordal_certificate(gen.ktree(1, 10, 0)).s_value == 2


@settings(max_examples=60, deadline=None)
@given(small_graphs(8))
def test_independent_set_and_cover(g):
    vs = list(range(g.n))
    mis = maximum_independent_set(g, vs)
    assert len(mis) == oracles.independence_number(g, vs)
    assert all(not g.has_edge(a, b) for a in mis for b in mis if a != b)
    cover = minimum_clique_cover(g, vs)
    assert sorted(v for c in cover for v in c) == vs
    assert all(g.is_clique(c) for c in cover)
    assert len(cover) >= len(mis)
    assert len(greedy_clique_cover(g, vs)) >= len(cover)


def test_lcc_examples():
    assert lcc(gen.complete(6)).value == 1
    assert lcc(gen.cycle(6)).value == 2
    assert lcc(gen.star(4)).value == 4
    assert lcc(gen.line_graph(gen.petersen())).value == 2
    res = lcc(gen.star(4), cap=2)
    assert res.exceeds_cap and res.value is None
    with pytest.raises(BudgetExceeded):
        lcc(gen.star(25), budget=20)
    res = lcc(gen.star(25), budget=20, fallback=True)
    assert not res.exact and res.value == 25


@settings(max_examples=60, deadline=None)
@given(small_graphs(8))
def test_line_graphs_have_lcc_at_most_two(base):
    lg = gen.line_graph(base)
    assert lcc(lg).value <= 2
    assert star_free(lg, 2)[0]


def test_star_free_examples_and_witness():
    ok, wit = star_free(gen.star(3), 2)
    assert not ok and wit.center == 0 and len(wit.leaves) == 3
    assert star_free(gen.star(3), 3) == (True, None)
    assert star_free(gen.petersen(), 2)[0] is False
    with pytest.raises(InputError):
        star_free(gen.cycle(4), 0)


@settings(max_examples=80, deadline=None)
@given(small_graphs(8), st.integers(1, 3))
def test_dense_pair_properties(g, ell):
    if g.max_degree == 0 or not star_free(g, ell)[0]:
        return
    dp = dense_pair(g, ell)
    assert g.has_edge(dp.v1, dp.v2)
    assert dp.size >= math.ceil(g.max_degree / ell) + 1
    assert dp.common == g.closed_neighbor_set(dp.v1) & g.closed_neighbor_set(dp.v2)
    assert g.is_clique(sorted(dp.common)) or ell > 1
    if ell == 2:
        assert g.is_clique(dp.clique) and dp.v1 in dp.clique


def test_dense_pair_errors():
    with pytest.raises(StructureError):
        dense_pair(gen.empty(3), 2)
    with pytest.raises(StructureError):
        dense_pair(gen.star(3), 2)
