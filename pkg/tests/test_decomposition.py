from itertools import combinations

import pytest

from cyclemod4.atlas import enumerate_euler, named_graph
from cyclemod4.cycles import Cycle
from cyclemod4.decomposition import (Decomposition, XiVector, cycle_decompose, decomposition_variants,
                                     euler_circuit, graceful_candidate, necessary_parity, size_congruence, xi)
from cyclemod4.errors import InconsistentXi, NotEuler
from cyclemod4.graph_core import build_graph


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def k5():
    return build_graph(5, combinations(range(5), 2))


def assert_valid(g, d):
    seen = set()
    for c in d.cycles:
        assert c.in_graph(g)
        assert not seen & c.edges()
        seen |= c.edges()
    assert d.covers and seen == {frozenset(e) for e in g.edges()}
    assert d.total_length == g.q


def test_euler_circuit_uses_every_edge_once():
    g = named_graph("pythagoras")
    walk = euler_circuit(g)
    assert walk[0] == walk[-1]
    steps = [frozenset(e) for e in zip(walk, walk[1:])]
    assert len(steps) == len(set(steps)) == g.q


def test_decompose_examples():
    (c,) = cycle_decompose(cycle(6)).cycles
    assert c.length == 6
    d = cycle_decompose(k5())
    assert_valid(k5(), d)
    assert d.total_length == 10


def test_decompose_rejects_non_euler():
    with pytest.raises(NotEuler):
        cycle_decompose(build_graph(4, [(0, 1), (1, 2), (2, 3)]))


def test_xi_examples():
    assert xi(cycle_decompose(cycle(6))) == (0, 0, 1, 0)
    two_fives = Decomposition((Cycle.of([0, 1, 2, 3, 4]), Cycle.of([0, 2, 4, 1, 3])), True)
    assert_valid(k5(), two_fives)
    assert xi(two_fives) == (0, 2, 0, 0)
    # pythagoras: each square absorbs one triangle edge
    g = named_graph("pythagoras")
    squares = Decomposition((Cycle.of([0, 1, 3, 4]), Cycle.of([1, 2, 5, 6]), Cycle.of([0, 2, 7, 8])), True)
    assert_valid(g, squares)
    assert xi(squares) == (3, 0, 0, 0)
    assert size_congruence(g, squares) == (0, 0, True)


def test_size_congruence_examples():
    assert size_congruence(named_graph("pythagoras")) == (0, 0, True)
    assert size_congruence(k5()) == (2, 2, True)
    assert size_congruence(cycle(5)) == (1, 1, True)


@pytest.mark.parametrize("p", range(3, 10))
def test_congruence_across_variants(p):
    for g in enumerate_euler(p):
        ds = decomposition_variants(g, 3)
        for d in ds:
            assert_valid(g, d)
        assert {xi(d).weighted_mod4() for d in ds} == {g.q % 4}
        if g.q > g.p:
            assert len({d.cycles for d in ds}) > 1


def test_variants_differ_somewhere():
    g = named_graph("pythagoras")
    ds = decomposition_variants(g, 3)
    assert len({d.cycles for d in ds}) > 1


def test_graceful_candidate():
    g10 = build_graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 0), (2, 6), (6, 7), (7, 2)])
    assert g10.q == 10 and graceful_candidate(g10) == "nongraceful_by_RG"
    assert graceful_candidate(named_graph("eps013-min")) == "candidate"
    assert graceful_candidate(named_graph("pythagoras")) == "candidate"
    with pytest.raises(NotEuler):
        graceful_candidate(build_graph(3, [(0, 1), (1, 2)]))


def test_necessary_parity_examples():
    r = necessary_parity("012", XiVector(1, 2, 1, 0))
    assert r.weighted_mod4 == 0 and r.applicable and r.holds
    r = necessary_parity("023", XiVector(1, 0, 2, 1))
    assert r.weighted_mod4 == 3 and r.applicable and r.holds
    assert "stated" in r.condition
    r = necessary_parity("123", XiVector(0, 2, 1, 2))
    assert r.weighted_mod4 == 2 and not r.applicable and r.holds is None


def test_necessary_parity_rejects_outside_types():
    with pytest.raises(InconsistentXi):
        necessary_parity("012", XiVector(0, 1, 0, 1))


def test_parity_conditions_hold_on_graceful_candidates():
    # each weighted residue fixes the parity of the odd-type count
    for x in [XiVector(a, b, c, d) for a in range(3) for b in range(4) for c in range(3) for d in range(4)]:
        for fam, outside in (("012", 3), ("023", 1), ("123", 0), ("0123", None)):
            if outside is not None and x[outside]:
                continue
            r = necessary_parity(fam, x)
            if r.applicable:
                assert r.holds
