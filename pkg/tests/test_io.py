import pytest
from hypothesis import given, settings, strategies as st

from pcfcolor import generators as gen
from pcfcolor.errors import InputError
from pcfcolor.graph import Graph
from pcfcolor.io import (format_coloring, format_dimacs, format_edgelist, parse_coloring,
                         parse_dimacs, parse_edgelist, parse_graph, read_graph, write_graph)
from pcfcolor.verify import PartialColoring

from test_graph import small_graphs


def test_dimacs_parse():
    text = "c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"
    g = parse_dimacs(text)
    assert g == gen.complete(3)
    assert format_dimacs(g) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"


def test_edgelist_parse_and_detect():
    text = "4 3\n0 1\n1 2\n2 3\n"
    assert parse_edgelist(text) == gen.path(4)
    assert parse_graph(text) == gen.path(4)
    assert parse_graph(format_dimacs(gen.path(4))) == gen.path(4)


@pytest.mark.parametrize("text", [
    "p edge 3 2\ne 1 2\n",          # edge count mismatch
    "e 1 2\n",                       # missing header
    "p edge 2 1\ne 1 5\n",           # vertex out of range
    "p edge 2 1\nx 1 2\n",           # unknown record
])
def test_dimacs_errors(text):
    with pytest.raises(InputError):
        parse_dimacs(text)


def test_edgelist_errors():
    with pytest.raises(InputError):
        parse_edgelist("3\n0 1\n")
    with pytest.raises(InputError):
        parse_edgelist("3 2\n0 1\n")
    with pytest.raises(InputError):
        parse_graph("")


@settings(max_examples=60, deadline=None)
@given(small_graphs(10))
def test_round_trip_is_bit_exact(g):
    for fmt, writer in (("dimacs", format_dimacs), ("edgelist", format_edgelist)):
        text = writer(g)
        back = parse_graph(text, fmt)
        assert back == g
        assert writer(back) == text


def test_file_round_trip(tmp_path):
    g = gen.petersen()
    path = tmp_path / "p.col"
    write_graph(g, path, "dimacs")
    assert read_graph(path) == g
    with pytest.raises(InputError):
        read_graph(tmp_path / "missing.txt")


def test_coloring_formats():
    col = PartialColoring((1, 2, 0), 3)
    assert parse_coloring(format_coloring(col)) == col
    assert parse_coloring("1 2 0").colors == (1, 2, 0)
    with pytest.raises(InputError):
        parse_coloring("1 2", n=3)
    with pytest.raises(InputError):
        parse_coloring('{"palette_size": 2, "colors": [3]}')
    with pytest.raises(InputError):
        parse_coloring("a b")
