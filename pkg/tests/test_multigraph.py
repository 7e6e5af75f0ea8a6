"""Tests for the multigraph container and its text format."""

from __future__ import annotations

import pytest

from klsparse import (
    EdgeCountMismatchError,
    MalformedEdgeError,
    MalformedHeaderError,
    Multigraph,
    NegativeWeightError,
    NodeIdOutOfRangeError,
    parse_graph,
    serialize_graph,
)


def test_canonical_endpoint_storage():
    g = Multigraph(4, [(3, 1), (0, 2), (2, 2)])
    assert g.endpoints(0) == (1, 3)
    assert g.endpoints(1) == (0, 2)
    assert g.endpoints(2) == (2, 2)


def test_loop_and_parallel_bookkeeping():
    g = Multigraph(3, [(0, 1), (1, 0), (2, 2)])
    assert g.m == 3
    assert g.is_loop(2)
    assert not g.is_loop(0)
    # parallel edges both appear in the incidence lists
    assert sorted(g.incidence[0]) == [0, 1]
    assert sorted(g.incidence[1]) == [0, 1]
    # a loop contributes two to the degree but is listed once
    assert g.incidence[2] == [2]
    assert g.degree[2] == 2
    assert g.degree[0] == 2


def test_edges_list_round_trip():
    edges = [(0, 1), (1, 2), (0, 0)]
    g = Multigraph(3, edges)
    assert g.edges() == [(0, 1), (1, 2), (0, 0)]


def test_equality_and_weights():
    a = Multigraph(3, [(0, 1)], weights=[2.0])
    b = Multigraph(3, [(0, 1)], weights=[2.0])
    c = Multigraph(3, [(0, 1)], weights=[3.0])
    assert a == b
    assert a != c
    assert a.is_weighted
    assert not Multigraph(3, [(0, 1)]).is_weighted


def test_node_id_validation():
    with pytest.raises(ValueError):
        Multigraph(2, [(0, 2)])
    with pytest.raises(ValueError):
        Multigraph(2, [(-1, 0)])


def test_negative_weight_rejected():
    with pytest.raises(ValueError):
        Multigraph(2, [(0, 1)], weights=[-1.0])
    with pytest.raises(NegativeWeightError) as info:
        parse_graph("kl-graph 2 1 weighted\n0 1 -2.5\n")
    assert info.value.line == 2


def test_parse_basic():
    text = "kl-graph 3 2\n0 1\n1 2\n"
    g = parse_graph(text)
    assert g.n == 3
    assert g.m == 2
    assert g.edges() == [(0, 1), (1, 2)]
    assert not g.is_weighted


def test_parse_weighted_and_comments():
    text = "# a comment\nkl-graph 2 1 weighted\n\n0 1 2.5\n"
    g = parse_graph(text)
    assert g.is_weighted
    assert g.weights == [2.5]


def test_parse_serialize_round_trip():
    g = Multigraph(4, [(0, 1), (1, 1), (2, 3)], weights=[1.0, 0.5, 2.25])
    again = parse_graph(serialize_graph(g))
    assert again == g
    plain = Multigraph(4, [(0, 1), (1, 1), (2, 3)])
    assert parse_graph(serialize_graph(plain)) == plain


def test_parse_malformed_header():
    with pytest.raises(MalformedHeaderError) as info:
        parse_graph("graph 3 2\n0 1\n1 2\n")
    assert info.value.line == 1


def test_parse_malformed_edge_line_number():
    with pytest.raises(MalformedEdgeError) as info:
        parse_graph("kl-graph 3 2\n0 1\n1 banana\n")
    assert info.value.line == 3


def test_parse_node_out_of_range():
    with pytest.raises(NodeIdOutOfRangeError) as info:
        parse_graph("kl-graph 3 1\n0 7\n")
    assert info.value.line == 2


def test_parse_edge_count_mismatch():
    with pytest.raises(EdgeCountMismatchError):
        parse_graph("kl-graph 3 2\n0 1\n")
    with pytest.raises(EdgeCountMismatchError):
        parse_graph("kl-graph 3 1\n0 1\n1 2\n")


def test_parse_weight_on_unweighted_graph():
    with pytest.raises(MalformedEdgeError):
        parse_graph("kl-graph 2 1\n0 1 3.5\n")


def test_parse_missing_weight_on_weighted_graph():
    with pytest.raises(MalformedEdgeError):
        parse_graph("kl-graph 2 1 weighted\n0 1\n")
