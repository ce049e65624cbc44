import time

import pytest
from hypothesis import given, settings

from pcfcolor import generators as gen
from pcfcolor.errors import InputError
from pcfcolor.exact import ExactQuery, chain, chromatic, exists_coloring, maximum_clique, search
from pcfcolor.graph import square
from pcfcolor.verify import verify

import oracles
from test_graph import small_graphs


def value(g, mode, h=1):
    res = chromatic(g, ExactQuery(mode, None, h))
    assert res.status == "exact"
    return res.value


def test_c5_decisions():
    g = gen.cycle(5)
    assert exists_coloring(g, ExactQuery("hcf", 4, 1)).status == "none"
    res = exists_coloring(g, ExactQuery("hcf", 5, 1))
    assert res.found and verify(g, res.coloring).pcf_ok


def test_k2_and_trivial():
    assert value(gen.complete(2), "pcf") == 2
    assert value(gen.empty(3), "proper") == 1
    assert value(gen.empty(0), "odd") == 0


def test_c6_chain():
    vals = chain(gen.cycle(6))
    assert [vals[m].value for m in ("proper", "odd", "pcf", "square")] == [2, 3, 3, 3]


def test_g2_pcf_value_in_window():
    g = gen.gen_latin_gn(2)
    v = value(g, "pcf")
    assert 4 <= v <= 5
    assert v == 4


def test_budget_status():
    res = search(gen.petersen(), "hcf", 5, 3, max_nodes=5)
    assert res.status in ("budget", "found", "none")
    res = chromatic(gen.random_regular(4, 14, 1), ExactQuery("hcf", None, 3, max_nodes=3))
    assert res.status == "budget" and res.value is None


def test_query_validation():
    with pytest.raises(InputError):
        ExactQuery("nope")
    with pytest.raises(InputError):
        ExactQuery("pcf", h=0)
    with pytest.raises(InputError):
        exists_coloring(gen.cycle(3), ExactQuery("pcf"))


def test_fixed_vertices_respected():
    g = gen.cycle(5)
    res = search(g, "pcf", 5, fixed={0: 3, 2: 1})
    assert res.found and res.coloring[0] == 3 and res.coloring[2] == 1
    assert search(g, "pcf", 5, fixed={0: 1, 1: 1}).status == "none"


@settings(max_examples=40, deadline=None)
@given(small_graphs(6))
def test_minimums_match_brute_force(g):
    if g.n > 6:
        return
    assert value(g, "proper") == oracles.brute_min(g, lambda c: oracles.is_proper(g, c), g.n)
    assert value(g, "odd") == oracles.brute_min(g, lambda c: oracles.odd_ok(g, c), g.n)
    assert value(g, "pcf") == oracles.brute_min(g, lambda c: oracles.hcf_ok(g, c, 1), g.n)
    assert value(g, "hcf", 2) == oracles.brute_min(g, lambda c: oracles.hcf_ok(g, c, 2), g.n)


@settings(max_examples=40, deadline=None)
@given(small_graphs(7))
def test_symmetry_breaking_does_not_change_answers(g):
    for k in (2, 3, 4):
        a = search(g, "pcf", k, symmetry=True).status
        b = search(g, "pcf", k, symmetry=False).status
        assert a == b


@settings(max_examples=40, deadline=None)
@given(small_graphs(7))
def test_hcf_monotone_in_h_and_saturates_at_square(g):
    delta = g.max_degree
    vals = [value(g, "hcf", h) for h in range(1, delta + 2)]
    assert vals == sorted(vals)
    sq = value(g, "square")
    for h in range(max(1, delta - 1), delta + 2):
        assert vals[h - 1] == sq


def test_maximum_clique():
    assert len(maximum_clique(gen.complete(5))) == 5
    assert len(maximum_clique(gen.petersen())) == 2
    assert len(maximum_clique(square(gen.cycle(5)))) == 5


def test_square_mode_matches_proper_on_square():
    g = gen.petersen()
    assert value(g, "square") == value(square(g), "proper") == 10


def test_c5_fast():
    t = time.perf_counter()
    assert value(gen.cycle(5), "odd") == 5
    assert time.perf_counter() - t < 1
