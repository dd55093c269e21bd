from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from cyclemod4.atlas import enumerate_euler, named_graph, smallest_member
from cyclemod4.errors import MissingLabel
from cyclemod4.graceful import (complement_labeling, format_labeling, parse_labeling, rosa_golomb,
                                search_graceful, verify_labeling)
from cyclemod4.graph_core import build_graph
from cyclemod4.oracles import brute_graceful


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_verify_examples():
    tri = cycle(3)
    assert verify_labeling(tri, [0, 1, 3])
    assert not verify_labeling(tri, [0, 1, 2])
    assert verify_labeling(cycle(4), [0, 4, 2, 3])
    with pytest.raises(MissingLabel):
        verify_labeling(tri, {0: 0, 1: 1})


def test_verify_rejects_repeats_and_range():
    assert not verify_labeling(cycle(3), [0, 3, 3])
    assert not verify_labeling(cycle(3), [0, 1, 4])


def test_rosa_golomb():
    assert not rosa_golomb(10)
    assert rosa_golomb(12)
    assert rosa_golomb(3)
    assert [q for q in range(1, 13) if rosa_golomb(q)] == [3, 4, 7, 8, 11, 12]
    with pytest.raises(ValueError):
        rosa_golomb(0)


@pytest.mark.parametrize("n", range(3, 13))
def test_cycles(n):
    res = search_graceful(cycle(n))
    assert (res.status == "found") == (n % 4 in (0, 3))
    assert res.status != "budget_exceeded"
    if res.labels:
        assert verify_labeling(cycle(n), res.labels)


def test_named_examples():
    g = named_graph("eps013-min")
    res = search_graceful(g)
    assert res.status == "found" and verify_labeling(g, res.labels)
    assert search_graceful(cycle(5)).status == "exhausted_none"
    w = smallest_member("012", 8)
    assert (w.p, w.q) == (8, 10)
    assert search_graceful(w).status == "exhausted_none"


def test_budget():
    res = search_graceful(named_graph("pythagoras"), budget=3)
    assert res.status == "budget_exceeded" and res.nodes_expanded == 4


@st.composite
def small_graphs(draw):
    p = draw(st.integers(2, 6))
    pairs = list(combinations(range(p), 2))
    edges = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=7, unique=True))
    used = sorted({v for e in edges for v in e})
    pos = {v: i for i, v in enumerate(used)}
    return build_graph(len(used), [(pos[a], pos[b]) for a, b in edges])


@settings(max_examples=120, deadline=None)
@given(small_graphs())
def test_search_matches_brute_force(g):
    res = search_graceful(g)
    assert (res.status == "found") == brute_graceful(g.p, g.edges())
    if res.labels:
        assert verify_labeling(g, res.labels)
        assert verify_labeling(g, complement_labeling(g.q, res.labels))


@pytest.mark.parametrize("p", range(3, 8))
def test_rosa_golomb_implies_exhausted(p):
    for g in enumerate_euler(p):
        if g.q > 12:
            continue
        res = search_graceful(g)
        assert res.status != "budget_exceeded"
        if not rosa_golomb(g.q):
            assert res.status == "exhausted_none"
        if res.labels:
            assert verify_labeling(g, res.labels)
            assert verify_labeling(g, complement_labeling(g.q, res.labels))


def test_labeling_text_round_trip():
    text = format_labeling([0, 3, 1])
    assert text == "0:0\n1:3\n2:1\n"
    assert parse_labeling(text) == {0: 0, 1: 3, 2: 1}
