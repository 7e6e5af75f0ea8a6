"""Tests for the one-pass maximal extraction at l = 2k."""

from __future__ import annotations

import random

import pytest

from klsparse import (
    Multigraph,
    NotSimpleInputError,
    Reason,
    SparsityParams,
    TwoKEngine,
    extract_maximal_2k,
    insertable,
    is_maximal_2k,
    is_sparse_bruteforce,
    naive_l2k_check,
    zero_pair_indegrees,
)
from conftest import complete_graph, random_simple_graph


def test_frozen_maximal_sizes():
    tri = Multigraph(3, [(0, 1), (0, 2), (1, 2)])
    rep = extract_maximal_2k(tri, 1)
    assert sorted(rep.accepted) == [0]

    # storage order grows a star, which is maximal but not maximum
    assert extract_maximal_2k(complete_graph(4), 1).accepted_count == 2
    assert extract_maximal_2k(complete_graph(4), 2).accepted_count == 3
    assert extract_maximal_2k(complete_graph(5), 3).accepted_count == 9
    assert extract_maximal_2k(complete_graph(6), 2).accepted_count == 5


def test_output_is_sparse_and_maximal():
    rng = random.Random(55)
    for _ in range(30):
        g = random_simple_graph(rng, max_n=9)
        for k in (1, 2, 3):
            rep = extract_maximal_2k(g, k)
            sub = Multigraph(g.n, [g.endpoints(e) for e in sorted(rep.accepted)])
            ok, witness = is_sparse_bruteforce(sub, SparsityParams(k, 2 * k))
            assert ok, witness
            assert is_maximal_2k(g, rep.accepted, k)


def test_loop_input_rejected():
    with pytest.raises(NotSimpleInputError):
        extract_maximal_2k(Multigraph(2, [(0, 1), (1, 1)]), 1)


def test_parallel_input_rejected():
    with pytest.raises(NotSimpleInputError):
        extract_maximal_2k(Multigraph(2, [(0, 1), (0, 1)]), 1)


def test_zero_pair_reversal_bound():
    rng = random.Random(57)
    for _ in range(20):
        g = random_simple_graph(rng, max_n=8)
        for k in (1, 2):
            rep = extract_maximal_2k(g, k)
            for v in rep.verdicts:
                assert v.reversals_used <= 2 * k


def test_zero_pair_clears_both_endpoints():
    g = complete_graph(5)
    k = 2
    engine = TwoKEngine(g, k)
    for e in range(g.m):
        u, v = g.edge_u[e], g.edge_v[e]
        zero_pair_indegrees(engine.digraph, u, v)
        assert engine.digraph.indeg[u] == 0
        assert engine.digraph.indeg[v] == 0
        if insertable(engine.digraph, u, v):
            engine.digraph.insert_arc(e, u, v)


def test_insertable_matches_naive_check():
    rng = random.Random(59)
    points = 0
    for _ in range(45):
        g = random_simple_graph(rng, max_n=8)
        for k in (1, 2, 3):
            engine = TwoKEngine(g, k)
            for e in range(g.m):
                u, v = g.edge_u[e], g.edge_v[e]
                zero_pair_indegrees(engine.digraph, u, v)
                fast = insertable(engine.digraph, u, v)
                slow = naive_l2k_check(engine.digraph, u, v, k)
                assert fast == slow
                if fast:
                    engine.digraph.insert_arc(e, u, v)
                points += 1
    assert points > 500


def test_verdict_reasons():
    rep = extract_maximal_2k(complete_graph(4), 1)
    reasons = [v.reason for v in rep.verdicts]
    assert reasons.count(Reason.ACCEPTED) == 2
    assert reasons.count(Reason.INDEGREE_BLOCKED) == 4
    # no early termination in the maximal pass: every edge is examined
    assert Reason.EARLY_TERMINATED not in reasons


def test_empty_and_tiny_graphs():
    assert extract_maximal_2k(Multigraph(1, []), 2).accepted_count == 0
    assert extract_maximal_2k(Multigraph(2, [(0, 1)]), 1).accepted_count == 1
