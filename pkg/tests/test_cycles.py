from itertools import combinations

import pytest
from hypothesis import assume, given, settings, strategies as st

from cyclemod4.atlas import enumerate_euler, named_graph
from cyclemod4.cycles import (Cycle, CycleSpectrum, all_cycles, chord_split, classify, combined_cycle,
                              cycle_lengths, epsilon_tag, shared_paths, spectrum, split_on_intersections,
                              tag_for_types)
from cyclemod4.errors import ChordEndpointsAdjacent, MultipleIntersections, NoEdgeIntersection, TruncatedSpectrum
from cyclemod4.graph_core import build_graph, relabel
from cyclemod4.oracles import brute_cycle_count


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return build_graph(n, combinations(range(n), 2))


@st.composite
def graphs(draw, max_p=7):
    p = draw(st.integers(3, max_p))
    pairs = list(combinations(range(p), 2))
    return build_graph(p, draw(st.lists(st.sampled_from(pairs), unique=True)))


def test_cycle_rotation_and_reflection_are_one_cycle():
    assert Cycle.of([2, 0, 1]) == Cycle.of([0, 1, 2]) == Cycle.of([1, 0, 2])
    c = Cycle.of([3, 1, 4, 0])
    assert c.length == 4 and c.type == 0


def test_cycle_rejects_repeats_and_short():
    with pytest.raises(ValueError):
        Cycle.of([0, 1, 0])
    with pytest.raises(ValueError):
        Cycle.of([0, 1])


def test_all_cycles_small_examples():
    assert [c.length for c in all_cycles(cycle(7)).cycles] == [7]
    assert len(all_cycles(complete(4)).cycles) == 7
    lengths = [c.length for c in all_cycles(complete(5)).cycles]
    assert len(lengths) == 37
    assert (lengths.count(3), lengths.count(4), lengths.count(5)) == (10, 15, 12)


def test_all_cycles_are_simple_and_in_graph():
    g = named_graph("pythagoras")
    cl = all_cycles(g)
    assert not cl.truncated
    assert all(c.in_graph(g) for c in cl.cycles)
    assert len(set(cl.cycles)) == len(cl.cycles)


def test_all_cycles_cap():
    cl = all_cycles(complete(6), cap=10)
    assert cl.truncated and len(cl.cycles) >= 10


@pytest.mark.parametrize("p", [3, 4, 5, 6])
def test_all_cycles_match_oracle_on_euler_graphs(p):
    for g in enumerate_euler(p):
        n, lengths = brute_cycle_count(g.p, g.edges())
        cl = all_cycles(g)
        assert len(cl.cycles) == n
        assert {c.length for c in cl.cycles} == lengths


@settings(max_examples=60, deadline=None)
@given(graphs(max_p=7))
def test_all_cycles_match_oracle_random(g):
    n, lengths = brute_cycle_count(g.p, g.edges())
    assert len(all_cycles(g).cycles) == n
    assert cycle_lengths(g) == lengths


@settings(max_examples=60, deadline=None)
@given(graphs(max_p=10))
def test_length_dp_agrees_with_enumeration(g):
    assert cycle_lengths(g) == {c.length for c in all_cycles(g).cycles}


def test_spectrum_examples():
    s = spectrum(complete(5))
    assert s.lengths == (3, 4, 5) and s.types_present == {3, 0, 1}
    s = spectrum(cycle(5))
    assert s.lengths == (5,) and s.types_present == {1}
    s = spectrum(named_graph("pythagoras"))
    assert s.types_present == {0, 1, 3} and s.lengths == (3, 4, 5, 7, 9)
    assert not s.truncated


@settings(max_examples=40, deadline=None)
@given(graphs(max_p=9), st.randoms(use_true_random=False))
def test_spectrum_isomorphism_invariant(g, rnd):
    perm = list(range(g.p))
    rnd.shuffle(perm)
    assert spectrum(g) == spectrum(relabel(g, perm))


def test_epsilon_tags():
    assert str(epsilon_tag(spectrum(complete(5)))) == "triple(0,1,3)"
    assert str(epsilon_tag(spectrum(cycle(6)))) == "single(2)"
    assert str(tag_for_types(set())) == "acyclic"
    assert str(tag_for_types({0, 2})) == "pair(0,2)"
    assert str(classify(build_graph(4, [(0, 1), (1, 2), (2, 3)]))) == "acyclic"


def test_quad_witness_at_7_9():
    quads = [g for g in enumerate_euler(7) if g.q == 9 and classify(g).kind == "quad"]
    assert quads
    assert str(epsilon_tag(spectrum(quads[0]))) == "quad"


def test_epsilon_tag_refuses_truncated():
    with pytest.raises(TruncatedSpectrum):
        epsilon_tag(CycleSpectrum.from_lengths([3, 4], truncated=True))


def test_chord_split_examples():
    c5 = Cycle.of(range(5))
    s = chord_split(c5, (0, 2))
    assert s.arc_lengths == (2, 3) and s.cycle_lengths == (3, 4) and s.odd_chord
    assert s.cycle_types() == (3, 0)
    c6 = Cycle.of(range(6))
    s = chord_split(c6, (0, 3))
    assert s.arc_lengths == (3, 3) and s.cycle_lengths == (4, 4) and not s.odd_chord
    s = chord_split(c6, (0, 2))
    assert s.arc_lengths == (2, 4) and s.cycle_lengths == (3, 5) and s.odd_chord
    with pytest.raises(ChordEndpointsAdjacent):
        chord_split(c6, (0, 1))


@pytest.mark.parametrize("n", [5, 7, 9, 11, 13])
def test_odd_cycle_chord_types_cycle_convention(n):
    # the two chord cycles have lengths summing to n + 2
    expect = [{1, 2}, {3, 0}] if n % 4 == 1 else [{3, 2}, {1, 0}]
    for d in range(2, n - 1):
        s = chord_split(Cycle.of(range(n)), (0, d))
        assert set(s.cycle_types()) in expect
        assert sum(s.cycle_lengths) == n + 2


def test_shared_paths_examples():
    a, b = Cycle.of([0, 1, 2]), Cycle.of([0, 1, 3])
    assert [(sp.nodes, sp.length) for sp in shared_paths(a, b)] == [((0, 1), 1)]
    (full,) = shared_paths(a, a)
    assert full.full_overlap and full.length == 3
    c1 = Cycle.of([0, 1, 2, 3, 4, 5])
    c2 = Cycle.of([0, 1, 6, 3, 4, 7])
    sp = shared_paths(c1, c2)
    assert [x.length for x in sp] == [1, 1]


def test_split_one_shared_path():
    a, b = Cycle.of([0, 1, 2, 3]), Cycle.of([0, 1, 2, 4, 5])
    (c,) = split_on_intersections(a, b)
    assert c.length == 4 + 5 - 2 * 2


def test_split_two_shared_edges():
    # two 6-cycles sharing edges 01 and 34; 8 edges remain, so at most two cycles
    c1 = Cycle.of([0, 1, 2, 3, 4, 5])
    parallel = split_on_intersections(c1, Cycle.of([0, 1, 6, 3, 4, 7]))
    assert sorted(c.length for c in parallel) == [4, 4]
    crossed = split_on_intersections(c1, Cycle.of([0, 1, 6, 4, 3, 7]))
    assert [c.length for c in crossed] == [8]


def test_split_three_shared_edges():
    # 9-cycle and a cycle sharing its edges 01, 34, 67 in the same direction
    c1 = Cycle.of(range(9))
    c2 = Cycle.of([0, 1, 9, 3, 4, 10, 6, 7, 11])
    pieces = split_on_intersections(c1, c2)
    assert 1 <= len(pieces) <= 3
    assert sum(c.length for c in pieces) == 9 + 9 - 2 * 3
    assert sorted(c.length for c in pieces) == [4, 4, 4]


def test_split_requires_shared_edge():
    with pytest.raises(NoEdgeIntersection):
        split_on_intersections(Cycle.of([0, 1, 2]), Cycle.of([0, 3, 4]))
    with pytest.raises(MultipleIntersections):
        split_on_intersections(Cycle.of([0, 1, 2]), Cycle.of([0, 1, 2]))


def test_combined_cycle_examples():
    assert combined_cycle(Cycle.of([0, 1, 2]), Cycle.of([0, 1, 3])).length == 4
    c = combined_cycle(Cycle.of([0, 1, 2, 3]), Cycle.of([0, 1, 2, 4, 5]))
    assert c.length == 5
    with pytest.raises(MultipleIntersections):
        combined_cycle(Cycle.of([0, 1, 2, 3, 4, 5]), Cycle.of([0, 1, 6, 3, 4, 7]))


@settings(max_examples=200)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 6))
def test_combined_cycle_length_identity(l, a1, a2):
    # shared path 0..l, then two arcs of a1 and a2 edges back to 0
    assume(a1 + a2 >= 3 and l + a1 >= 3 and l + a2 >= 3)
    path = list(range(l + 1))
    arc1 = list(range(l + 1, l + a1))
    arc2 = list(range(l + a1, l + a1 + a2 - 1))
    c1, c2 = Cycle.of(path + arc1), Cycle.of(path + arc2)
    n1, n2 = c1.length, c2.length
    c = combined_cycle(c1, c2)
    assert c.length == n1 + n2 - 2 * l
    assert c.type == (c1.type + c2.type - 2 * l) % 4
