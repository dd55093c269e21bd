"""Edge-disjoint cycle decompositions and the xi-vector congruences.

Any decomposition of an Euler graph into edge-disjoint cycles has total
length q, so sum(t * xi_t) == q (mod 4) whatever decomposition is used.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .cycles import Cycle
from .errors import InconsistentXi, NotEuler
from .graph_core import Graph, is_euler


@dataclass(frozen=True)
class Decomposition:
    cycles: tuple[Cycle, ...]
    covers: bool

    @property
    def total_length(self) -> int:
        return sum(c.length for c in self.cycles)


class XiVector(NamedTuple):
    xi0: int
    xi1: int
    xi2: int
    xi3: int

    def weighted_mod4(self) -> int:
        return (self.xi1 + 2 * self.xi2 + 3 * self.xi3) % 4


def euler_circuit(g: Graph, start: int = 0, reverse: bool = False) -> list[int]:
    """Hierholzer's algorithm; neighbors tried smallest-first (or largest)."""
    remaining = list(g.adj)
    stack = [start]
    circuit: list[int] = []
    while stack:
        v = stack[-1]
        row = remaining[v]
        if row:
            u = row.bit_length() - 1 if reverse else (row & -row).bit_length() - 1
            remaining[v] &= ~(1 << u)
            remaining[u] &= ~(1 << v)
            stack.append(u)
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    return circuit


def _split_closed_walk(walk: list[int]) -> list[Cycle]:
    out = []
    path: list[int] = []
    where: dict[int, int] = {}
    for v in walk:
        if v in where:
            i = where[v]
            out.append(Cycle.of(path[i:]))
            for w in path[i + 1:]:
                del where[w]
            del path[i + 1:]
        else:
            where[v] = len(path)
            path.append(v)
    return out


def cycle_decompose(g: Graph, start: int | None = None, reverse: bool = False) -> Decomposition:
    """Split an Euler circuit at each first node repetition.

    ``start`` and ``reverse`` select a variant; the default (start at node 0,
    smallest neighbor first) is the deterministic decomposition.
    """
    if not is_euler(g):
        raise NotEuler("graph is not Euler (connected with all degrees even)")
    s = 0 if start is None else start
    cycles = _split_closed_walk(euler_circuit(g, s, reverse))
    seen: set[frozenset[int]] = set()
    for c in cycles:
        es = c.edges()
        if seen & es:
            raise AssertionError("decomposition cycles overlap")
        seen |= es
    covers = seen == {frozenset(e) for e in g.edges()}
    return Decomposition(tuple(cycles), covers)


def decomposition_variants(g: Graph, count: int = 3) -> list[Decomposition]:
    """``count`` decompositions; circuit start and neighbor order alternate."""
    starts = sorted({0, g.p // 2, g.p - 1})
    plans = [(s, bool(k % 2)) for k, s in enumerate(starts)]
    plans += [(s, not r) for s, r in plans]
    return [cycle_decompose(g, *plans[k % len(plans)]) for k in range(count)]


def xi(d: Decomposition) -> XiVector:
    counts = [0, 0, 0, 0]
    for c in d.cycles:
        counts[c.type] += 1
    return XiVector(*counts)


class Congruence(NamedTuple):
    q_mod4: int
    xi_sum_mod4: int
    agrees: bool


def size_congruence(g: Graph, d: Decomposition | None = None) -> Congruence:
    d = d or cycle_decompose(g)
    a, b = g.q % 4, xi(d).weighted_mod4()
    return Congruence(a, b, a == b)


def graceful_candidate(g: Graph) -> str:
    """``nongraceful_by_RG`` when q = 1, 2 (mod 4), else ``candidate``."""
    if not is_euler(g):
        raise NotEuler("graph is not Euler")
    return "nongraceful_by_RG" if g.q % 4 in (1, 2) else "candidate"


# (weighted sum residue that triggers the clause, human-readable condition, predicate)
_PARITY_RULES = {
    "012": [
        (0, "xi1 even", lambda x: x.xi1 % 2 == 0),
        (3, "xi1 odd (stated: xi1 - 3 even or xi1 odd)", lambda x: x.xi1 % 2 == 1),
    ],
    # no explicit clause is published for 0,1,3; this is the same derivation
    "013": [
        (0, "xi1 + 3*xi3 even", lambda x: (x.xi1 + 3 * x.xi3) % 2 == 0),
        (3, "xi1 + 3*xi3 odd", lambda x: (x.xi1 + 3 * x.xi3) % 2 == 1),
    ],
    "023": [
        (0, "xi3 even", lambda x: x.xi3 % 2 == 0),
        (3, "xi3 odd (stated: xi3 - 1 even)", lambda x: x.xi3 % 2 == 1),
    ],
    "123": [
        (0, "xi1 + 3*xi3 even", lambda x: (x.xi1 + 3 * x.xi3) % 2 == 0),
        (3, "xi1 + 3*(xi3 - 1) even", lambda x: (x.xi1 + 3 * (x.xi3 - 1)) % 2 == 0),
    ],
    "0123": [
        (0, "xi1 + 3*xi3 even", lambda x: (x.xi1 + 3 * x.xi3) % 2 == 0),
        (3, "xi1 + 3*(xi3 - 1) even (stated: or xi1 + 3*xi3 odd)",
         lambda x: (x.xi1 + 3 * (x.xi3 - 1)) % 2 == 0),
    ],
}


class ParityCheck(NamedTuple):
    family: str
    weighted_mod4: int
    applicable: bool
    condition: str
    holds: bool | None


def necessary_parity(family, x: XiVector) -> ParityCheck:
    """Evaluate the family's parity condition for the branch that applies.

    When the weighted sum is 1 or 2 (mod 4) the graph is already
    nongraceful and no condition applies.
    """
    fam = family if isinstance(family, str) else "".join(map(str, sorted(family)))
    if fam not in _PARITY_RULES:
        raise InconsistentXi(f"unknown family {fam!r}")
    allowed = {int(ch) for ch in fam}
    for t in range(4):
        if x[t] and t not in allowed:
            raise InconsistentXi(f"xi{t} = {x[t]} but type {t} is outside family {fam}")
    w = x.weighted_mod4()
    for residue, text, pred in _PARITY_RULES[fam]:
        if residue == w:
            return ParityCheck(fam, w, True, text, pred(x))
    return ParityCheck(fam, w, False, "not applicable (Rosa-Golomb excludes q = 1, 2 mod 4)", None)
