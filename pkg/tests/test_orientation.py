"""Tests for the bounded-indegree orientation and its searches."""

from __future__ import annotations

import pytest

from klsparse import (
    IndegreeOverflowError,
    InnerDigraph,
    Instrumentation,
    StalePathError,
)


def build_path_digraph() -> InnerDigraph:
    """Arcs 0->1->2 with k = 1, so node 0 is the only deficient node."""
    d = InnerDigraph(3, 1)
    d.insert_arc(0, 0, 1)
    d.insert_arc(1, 1, 2)
    return d


def test_insert_arc_updates_state():
    d = InnerDigraph(3, 2)
    a = d.insert_arc(7, 0, 1)
    assert a == 0
    assert d.arc_tail[a] == 0
    assert d.arc_head[a] == 1
    assert d.arc_edge[a] == 7
    assert d.indeg == [0, 1, 0]
    assert d.arc_count == 1
    assert a in d.inc[0] and a in d.inc[1]
    assert d.in_arcs[1] == [a]


def test_loop_arc_listed_once():
    d = InnerDigraph(2, 2)
    a = d.insert_arc(0, 1, 1)
    assert d.inc[1] == [a]
    assert d.in_arcs[1] == [a]
    assert d.indeg[1] == 1


def test_indegree_overflow_rejected():
    d = InnerDigraph(2, 1)
    d.insert_arc(0, 0, 1)
    with pytest.raises(IndegreeOverflowError):
        d.insert_arc(1, 0, 1)


def test_find_reversal_path_nearest_source():
    d = build_path_digraph()
    path = d.find_reversal_path((2,))
    assert path is not None
    assert path.source == 0
    assert path.target == 2
    assert len(path.steps) == 2


def test_reverse_moves_indegree():
    d = build_path_digraph()
    path = d.find_reversal_path((2,))
    d.reverse(path)
    assert d.indeg == [1, 1, 0]
    assert d.arc_tail == [1, 2]
    assert d.arc_head == [0, 1]
    # the in-arc lists follow the flips
    assert d.in_arcs[0] == [0]
    assert d.in_arcs[1] == [1]
    assert d.in_arcs[2] == []


def test_reverse_stale_path_rejected():
    d = build_path_digraph()
    path = d.find_reversal_path((2,))
    d.reverse(path)
    with pytest.raises(StalePathError):
        d.reverse(path)


def test_forbidden_sources_skipped():
    d = build_path_digraph()
    assert d.find_reversal_path((2,), forbidden_sources=(0,)) is None


def test_target_not_its_own_source():
    d = InnerDigraph(2, 1)
    d.insert_arc(0, 0, 1)
    # node 1 is saturated and node 0 is deficient
    path = d.find_reversal_path((1,))
    assert path.source == 0
    # searching from the deficient node itself finds nothing upstream
    assert d.find_reversal_path((0,)) is None


def test_saturated_closure():
    d = build_path_digraph()
    # node 2's backward closure contains the deficient node 0
    assert d.saturated_closure((2,)) is None
    d.reverse(d.find_reversal_path((2,)))
    d2 = InnerDigraph(3, 1)
    d2.insert_arc(0, 0, 1)
    d2.insert_arc(1, 1, 0)
    # the 2-cycle is saturated on both nodes
    closure = d2.saturated_closure((0,))
    assert closure is not None
    assert sorted(closure) == [0, 1]


def test_multi_source_forward_reach():
    d = build_path_digraph()
    reach = d.multi_source_forward_reach(lambda x: d.indeg[x] < 1)
    assert sorted(reach) == [0, 1, 2]
    reach = d.multi_source_forward_reach(lambda x: d.indeg[x] < 1, excluded=(1,))
    assert sorted(reach) == [0]


def test_counters_accumulate():
    c = Instrumentation()
    d = InnerDigraph(3, 1, counters=c)
    d.insert_arc(0, 0, 1)
    d.insert_arc(1, 1, 2)
    d.find_reversal_path((2,))
    assert c.bfs_node_visits > 0
    assert c.lazy_reset_work == c.bfs_node_visits
    before = c.path_reversals
    d.reverse(d.find_reversal_path((2,)))
    # the deficiency moved to node 2, so the next path targets node 0
    d.reverse(d.find_reversal_path((0,)))
    assert c.path_reversals == before + 2


def test_in_arcs_consistent_after_many_reversals():
    d = InnerDigraph(4, 2)
    arcs = [(0, 1), (1, 2), (2, 3), (1, 3), (0, 2)]
    for e, (t, h) in enumerate(arcs):
        d.insert_arc(e, t, h)
    for target in (3, 2, 3, 1):
        path = d.find_reversal_path((target,))
        if path is not None:
            d.reverse(path)
        for x in range(4):
            assert sorted(d.in_arcs[x]) == sorted(
                a for a in range(d.arc_count) if d.arc_head[a] == x
            )
            assert d.indeg[x] == len(d.in_arcs[x])


def test_undirected_edges():
    d = build_path_digraph()
    assert sorted(d.undirected_edges()) == [(0, 1, 0), (1, 2, 1)]
    d.reverse(d.find_reversal_path((2,)))
    # reversal changes arc directions, not the underlying edge set
    assert sorted(d.undirected_edges()) == [(0, 1, 0), (1, 2, 1)]
