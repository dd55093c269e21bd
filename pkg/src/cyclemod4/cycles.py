"""Simple cycles, cycle-length spectra modulo 4, and cycle surgery.

Lengths are always counted in edges.  A single shared node is a path of
length 0 and never counts as an intersection for combining cycles.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import (
    ChordEndpointsAdjacent,
    MultipleIntersections,
    NoEdgeIntersection,
    TruncatedSpectrum,
)
from .graph_core import Graph, bits

DEFAULT_CAP = 1_000_000
# subset DP is exact and fast up to here; beyond it fall back to capped DFS
DP_MAX_ORDER = 16


def _canonical_rotation(nodes: Sequence[int]) -> tuple[int, ...]:
    n = len(nodes)
    i = min(range(n), key=nodes.__getitem__)
    fwd = [nodes[(i + k) % n] for k in range(n)]
    bwd = [nodes[(i - k) % n] for k in range(n)]
    return tuple(min(fwd, bwd))


@dataclass(frozen=True)
class Cycle:
    nodes: tuple[int, ...]

    def __post_init__(self):
        if len(self.nodes) < 3 or len(set(self.nodes)) != len(self.nodes):
            raise ValueError(f"not a simple cycle: {self.nodes}")

    @classmethod
    def of(cls, nodes: Sequence[int]) -> "Cycle":
        return cls(_canonical_rotation(list(nodes)))

    @property
    def length(self) -> int:
        return len(self.nodes)

    @property
    def type(self) -> int:
        return len(self.nodes) % 4

    def edges(self) -> frozenset[frozenset[int]]:
        n = len(self.nodes)
        return frozenset(frozenset((self.nodes[i], self.nodes[(i + 1) % n])) for i in range(n))

    def edge_mask(self, p: int) -> int:
        """Bit ``u*p+v`` (u<v) per edge; handy for fast set algebra."""
        m = 0
        n = len(self.nodes)
        for i in range(n):
            a, b = self.nodes[i], self.nodes[(i + 1) % n]
            if a > b:
                a, b = b, a
            m |= 1 << (a * p + b)
        return m

    def in_graph(self, g: Graph) -> bool:
        n = len(self.nodes)
        return all(g.has_edge(self.nodes[i], self.nodes[(i + 1) % n]) for i in range(n))


class CycleList(NamedTuple):
    cycles: list[Cycle]
    truncated: bool


@dataclass(frozen=True)
class CycleSpectrum:
    lengths: tuple[int, ...]
    types_present: frozenset[int]
    truncated: bool = False

    @classmethod
    def from_lengths(cls, lengths, truncated=False) -> "CycleSpectrum":
        ls = tuple(sorted(set(lengths)))
        return cls(ls, frozenset(n % 4 for n in ls), truncated)


@dataclass(frozen=True)
class EpsilonTag:
    kind: str  # acyclic | single | pair | triple | quad
    types: tuple[int, ...]

    def __str__(self) -> str:
        if self.kind in ("acyclic", "quad"):
            return self.kind
        return f"{self.kind}({','.join(map(str, self.types))})"

    @property
    def family(self) -> str:
        return "".join(map(str, self.types))


# ---------------------------------------------------------------------------
# enumeration


def all_cycles(g: Graph, cap: int = DEFAULT_CAP) -> CycleList:
    """Every simple cycle once, rooted at its smallest node.

    Direction is fixed by requiring the second node to be smaller than the
    last, so the emitted node tuples are already canonical rotations.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    adj = g.adj
    out: list[tuple[int, ...]] = []
    truncated = False
    for s in range(g.p):
        higher = ~((2 << s) - 1)
        path = [s]
        on_path = 1 << s
        stack = [iter(list(bits(adj[s] & higher)))]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path &= ~(1 << path.pop())
                continue
            if len(path) >= 2 and adj[nxt] >> s & 1 and path[1] < nxt:
                out.append(tuple(path) + (nxt,))
                if len(out) >= cap:
                    truncated = True
                    break
            path.append(nxt)
            on_path |= 1 << nxt
            stack.append(iter(list(bits(adj[nxt] & higher & ~on_path))))
        if truncated:
            break
    out.sort(key=lambda c: (len(c), c))
    return CycleList([Cycle(c) for c in out], truncated)


def _lengths_dp(g: Graph, types_only: bool = False) -> set[int]:
    """Cycle lengths by a subset DP over simple paths.

    ``layer`` maps a node set to the bitset of nodes at which a simple path
    covering exactly that set can end, the path starting at the set's
    smallest node.  A cycle of length |set| closes when an end is adjacent
    to the start.
    """
    p = g.p
    adj = g.adj
    full = (1 << p) - 1
    found: set[int] = set()
    types: set[int] = set()
    layer = {1 << s: 1 << s for s in range(p) if adj[s].bit_count() >= 2}
    size = 1
    while layer and size < p:
        nxt: dict[int, int] = {}
        get = nxt.get
        for mask, ends in layer.items():
            low = mask & -mask
            higher = full & ~mask & ~((low << 1) - 1)
            reach = 0
            for v in bits(ends):
                reach |= adj[v]
            for u in bits(reach & higher):
                b = 1 << u
                m2 = mask | b
                nxt[m2] = get(m2, 0) | b
        size += 1
        layer = nxt
        if size >= 3:
            for mask, ends in layer.items():
                low = mask & -mask
                if ends & adj[low.bit_length() - 1]:
                    found.add(size)
                    types.add(size % 4)
                    break
            if types_only and len(types) == 4:
                break
    return found


def cycle_lengths(g: Graph) -> set[int]:
    return _lengths_dp(g)


def spectrum(g: Graph, cap: int = DEFAULT_CAP) -> CycleSpectrum:
    if g.p <= DP_MAX_ORDER:
        return CycleSpectrum.from_lengths(_lengths_dp(g))
    cl = all_cycles(g, cap)
    return CycleSpectrum.from_lengths((c.length for c in cl.cycles), cl.truncated)


def cycle_types(g: Graph) -> frozenset[int]:
    """Types present; stops as soon as all four residues have appeared."""
    if g.p <= DP_MAX_ORDER:
        return frozenset(n % 4 for n in _lengths_dp(g, types_only=True))
    return spectrum(g).types_present


_KINDS = {1: "single", 2: "pair", 3: "triple"}


def tag_for_types(types) -> EpsilonTag:
    ts = tuple(sorted(types))
    if not ts:
        return EpsilonTag("acyclic", ())
    if len(ts) == 4:
        return EpsilonTag("quad", ts)
    return EpsilonTag(_KINDS[len(ts)], ts)


def epsilon_tag(s: CycleSpectrum) -> EpsilonTag:
    if s.truncated:
        raise TruncatedSpectrum("cycle enumeration hit its cap; tag would be unreliable")
    return tag_for_types(s.types_present)


def classify(g: Graph) -> EpsilonTag:
    return tag_for_types(cycle_types(g))


# ---------------------------------------------------------------------------
# chords


class ChordSplit(NamedTuple):
    arc_lengths: tuple[int, int]
    cycle_lengths: tuple[int, int]
    odd_chord: bool

    def cycle_types(self) -> tuple[int, int]:
        return (self.cycle_lengths[0] % 4, self.cycle_lengths[1] % 4)

    def arc_types(self) -> tuple[int, int]:
        return (self.arc_lengths[0] % 4, self.arc_lengths[1] % 4)


def chord_split(c: Cycle, chord: tuple[int, int]) -> ChordSplit:
    """Split ``c`` along a chord; reports both the arc and the cycle reading.

    The arc reading gives the two arcs of ``c`` between the endpoints, the
    cycle reading the two cycles each arc forms together with the chord.
    """
    a, b = chord
    n = c.length
    try:
        i, j = c.nodes.index(a), c.nodes.index(b)
    except ValueError:
        raise ValueError(f"chord {chord} not on cycle {c.nodes}") from None
    fwd = (j - i) % n
    d = min(fwd, n - fwd)
    if d <= 1:
        raise ChordEndpointsAdjacent(f"{a} and {b} are adjacent (or equal) along the cycle")
    cyc = (d + 1, n - d + 1)
    return ChordSplit((d, n - d), cyc, any(x % 2 for x in cyc))


# ---------------------------------------------------------------------------
# intersections


class SharedPath(NamedTuple):
    nodes: tuple[int, ...]
    length: int
    full_overlap: bool = False


def shared_paths(c1: Cycle, c2: Cycle) -> list[SharedPath]:
    """Maximal common paths of two cycles, including lone shared nodes."""
    common_edges = c1.edges() & c2.edges()
    common_nodes = set(c1.nodes) & set(c2.nodes)
    if c1.edges() == c2.edges():
        return [SharedPath(c1.nodes, c1.length, True)]
    nbr: dict[int, list[int]] = {}
    for e in common_edges:
        u, v = tuple(e)
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)
    out: list[SharedPath] = []
    seen: set[int] = set()
    for start in sorted(nbr):
        if start in seen or len(nbr[start]) != 1:
            continue
        walk = [start]
        seen.add(start)
        prev, cur = None, start
        while True:
            step = [w for w in nbr[cur] if w != prev]
            if not step:
                break
            prev, cur = cur, step[0]
            walk.append(cur)
            seen.add(cur)
        if walk[-1] < walk[0]:
            walk.reverse()
        out.append(SharedPath(tuple(walk), len(walk) - 1))
    for v in sorted(common_nodes - seen):
        out.append(SharedPath((v,), 0))
    out.sort(key=lambda sp: (-sp.length, sp.nodes))
    return out


def _cycles_of_2regular(edges: set[frozenset[int]]) -> list[Cycle]:
    nbr: dict[int, list[int]] = {}
    for e in edges:
        u, v = tuple(e)
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)
    if any(len(x) != 2 for x in nbr.values()):
        raise MultipleIntersections("cycles touch outside their shared paths")
    out = []
    seen: set[int] = set()
    for s in sorted(nbr):
        if s in seen:
            continue
        walk = [s]
        seen.add(s)
        prev, cur = s, nbr[s][0]
        while cur != s:
            walk.append(cur)
            seen.add(cur)
            a, b = nbr[cur]
            prev, cur = cur, (b if a == prev else a)
        out.append(Cycle.of(walk))
    out.sort(key=lambda c: (c.length, c.nodes))
    return out


def split_on_intersections(c1: Cycle, c2: Cycle) -> list[Cycle]:
    """Cycles left after deleting the shared paths (end nodes kept).

    With m shared edge-paths the remainder is 2-regular and falls into
    between 1 and m cycles, depending on how the second cycle threads the
    shared paths.
    """
    sp = shared_paths(c1, c2)
    if sp and sp[0].full_overlap:
        raise MultipleIntersections("identical cycles")
    if not any(x.length > 0 for x in sp):
        raise NoEdgeIntersection("cycles share no edge")
    return _cycles_of_2regular(set(c1.edges() ^ c2.edges()))


def combined_cycle(c1: Cycle, c2: Cycle) -> Cycle:
    sp = shared_paths(c1, c2)
    if not sp or sp[0].length == 0:
        raise NoEdgeIntersection("cycles share no edge")
    if len(sp) != 1 or sp[0].full_overlap:
        raise MultipleIntersections(f"{len(sp)} separate intersections; use split_on_intersections")
    (c,) = _cycles_of_2regular(set(c1.edges() ^ c2.edges()))
    return c
