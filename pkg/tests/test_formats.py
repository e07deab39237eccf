import pytest

from pvcdim import Graph, InputError, build_hypergraph
from pvcdim.formats import (
    format_graph,
    format_hypergraph,
    format_levels,
    parse_graph,
    parse_hypergraph,
    parse_levels,
)
from pvcdim.generate import grid_graph, random_hypergraph


def test_hypergraph_round_trip():
    H = build_hypergraph(4, [{1, 3}, set(), {2, 3, 4}])
    text = format_hypergraph(H)
    assert text == "p phg 4 3\ne 1 3\ne\ne 2 3 4\n"
    again = parse_hypergraph(text)
    assert again.n == H.n and again.edges == H.edges
    # parse -> emit -> parse is the identity
    assert format_hypergraph(again) == text


def test_hypergraph_round_trip_random():
    for seed in range(25):
        H = random_hypergraph(9, 13, 0.4, seed)
        assert parse_hypergraph(format_hypergraph(H)).edges == H.edges


def test_comments_and_whitespace_tolerated():
    text = "c a comment\nc another\np phg 2 2\n e 1   2 \ne\n"
    H = parse_hypergraph(text)
    assert H.edges == (0b11, 0)


def test_bare_e_is_empty_edge():
    H = parse_hypergraph("p phg 3 1\ne\n")
    assert H.edges == (0,)


@pytest.mark.parametrize("bad", [
    "",
    "p cnf 2 1\ne 1\n",
    "p phg 2 2\ne 1\n",          # fewer edges than promised
    "p phg 2 1\ne 3\n",          # vertex out of range
    "p phg two 1\ne 1\n",
    "p phg 2 1\nx 1\n",
])
def test_hypergraph_errors(bad):
    with pytest.raises(InputError):
        parse_hypergraph(bad)


def test_graph_round_trip():
    G = Graph.from_edges(4, [(1, 2), (2, 3), (1, 4)])
    text = format_graph(G)
    assert text == "p edge 4 3\ne 1 2\ne 1 4\ne 2 3\n"
    again = parse_graph(text)
    assert again == G


def test_graph_errors():
    with pytest.raises(InputError):
        parse_graph("p edge 2 1\ne 1 1\n")
    with pytest.raises(InputError):
        parse_graph("p edge 2 1\ne 1\n")


def test_levels_round_trip():
    _, levels = grid_graph(3, 3)
    text = format_levels(levels)
    assert parse_levels(text, 9) == levels


def test_levels_errors():
    with pytest.raises(InputError, match="vertex 2"):
        parse_levels("l 1 1\n", 2)
    with pytest.raises(InputError, match="duplicate"):
        parse_levels("l 1 1\nl 1 2\n", 1)
