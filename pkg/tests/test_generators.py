import pytest

from pcfcolor import generators as gen
from pcfcolor.errors import InputError
from pcfcolor.graph import cut_edges, square
from pcfcolor.structure import chordal_certificate, lcc

import oracles


def test_fixed_families():
    assert gen.cycle(5).edge_count == 5 and gen.path(5).edge_count == 4
    assert gen.complete(6).edge_count == 15
    assert gen.complete_bipartite(2, 3).edge_count == 6
    assert gen.star(4).degree(0) == 4
    w = gen.wheel(5)
    assert w.degree(0) == 5 and all(w.degree(v) == 3 for v in range(1, 6))
    p = gen.petersen()
    assert p.n == 10 and set(p.degrees()) == {3}
    assert oracles.to_nx(p).number_of_edges() == 15
    t = gen.theta(1, 2, 3)
    assert t.n == 8 and t.degree(0) == t.degree(1) == 3 and not cut_edges(t)


def test_line_graph_matches_networkx():
    import networkx as nx

    g = gen.random_graph(9, 0.4, 2)
    lg = gen.line_graph(g)
    ref = nx.line_graph(oracles.to_nx(g))
    assert lg.n == ref.number_of_nodes() and lg.edge_count == ref.number_of_edges()
    es = g.edges()
    assert lg.label(0) == f"{es[0][0]}-{es[0][1]}"


def test_random_families_are_deterministic():
    for spec in ("random:12,0.3,5", "random_maxdeg:15,4,0.5,1", "random_regular:3,10,2",
                 "two_edge_connected:12,4,3", "ktree:2,20,9", "chordal:20,3"):
        assert gen.gen_family(spec) == gen.gen_family(spec)
    assert gen.random_graph(12, 0.3, 5) != gen.random_graph(12, 0.3, 6)


def test_random_family_properties():
    assert gen.random_maxdeg(30, 4, 0.5, 0).max_degree <= 4
    assert set(gen.random_regular(4, 12, 1).degrees()) == {4}
    g = gen.random_two_edge_connected(15, 5, 2)
    assert g.is_connected() and not cut_edges(g)
    kt = gen.ktree(3, 25, 1)
    assert kt.edge_count == 6 + 3 * (25 - 4)
    assert chordal_certificate(kt).s_value == 4
    rc = gen.random_chordal(30, 4)
    assert rc.is_connected() and oracles.is_chordal(rc)


def test_atlas_counts():
    # connected graphs on 1..5 vertices: 1 + 1 + 2 + 6 + 21
    assert len(gen.atlas_graphs(5)) == 31
    assert len(gen.atlas_graphs(7)) == 31 + 112 + 853


@pytest.mark.parametrize("n", [2, 3, 5])
def test_latin_family(n):
    fam = gen.LatinFamily.build(n)
    assert fam.check() == []
    g = gen.gen_latin_gn(n)
    assert g.n == n * n + (n - 1) * n + 2 * n
    assert gen.check_latin_certificate(g, n) == []
    roles = gen.latin_roles(g)
    assert len(roles["v"]) == n * n and len(roles["s"]) == (n - 1) * n
    assert g.max_degree == n + 1
    assert square(g).is_clique(gen.latin_square_clique(n))


def test_latin_rejects_composite_order():
    with pytest.raises(InputError):
        gen.gen_latin_gn(4)


def test_latin_certificate_detects_damage():
    g = gen.gen_latin_gn(3).remove_edge(0, gen.latin_ids(3)["r"](0))
    assert gen.check_latin_certificate(g, 3)


def test_gen_family_specs():
    assert gen.gen_family("cycle:5") == gen.cycle(5)
    assert gen.gen_family("ktree:k=2,n=10,seed=1") == gen.ktree(2, 10, 1)
    assert lcc(gen.gen_family("line:petersen")).value == 2
    for bad in ("nope:3", "cycle:n=5,x=1", "cycle:a", "cycle:5,6,7"):
        with pytest.raises(InputError):
            gen.gen_family(bad)
    with pytest.raises(InputError):
        gen.cycle(2)
