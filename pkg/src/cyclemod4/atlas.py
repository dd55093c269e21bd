"""Exhaustive small Euler graphs and the audits run over them.

Generation builds every even graph (all degrees even, isolated nodes
allowed) on p nodes from those on p - 1 nodes:

* add an isolated node;
* add a degree-2 node, either subdividing an edge ab or joining a
  non-adjacent pair a, b while also adding the edge ab;
* graphs with minimum degree >= 4 come from smaller-size even graphs on p
  nodes by adding an edge-disjoint triangle or 4-cycle through every node of
  degree below 4.  Below 17 nodes every node of degree >= 4 lies on a
  triangle or 4-cycle, so this step is complete.

Isomorphs are removed by canonical code; Euler graphs are the connected
ones without isolated nodes.
"""
from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .calculus import CaseConfig, derived_types, family_name, parse_family
from .cycles import Cycle, all_cycles, classify, tag_for_types
from .errors import BaseHasPendant, NotATree, OrderTooLarge, UnknownName
from .graceful import search_graceful
from .graph_core import Graph, bits, build_graph, canonical_code, canonical_pair, emit_graph6, is_euler

MAX_ORDER = 11
# conjectured: every member above this order has a node of degree two
DEGREE2_THRESHOLD = {"012": 7, "013": 5, "023": 7, "123": 8}


def worker_count() -> int:
    raw = os.environ.get("EULER_THREADS")
    if raw:
        return max(1, int(raw))
    return os.cpu_count() or 1


def parallel_map(fn: Callable, items: Sequence, chunk: int = 256) -> list:
    """Order-preserving map; uses worker processes when EULER_THREADS > 1."""
    n = worker_count()
    if n <= 1 or len(items) < 2 * chunk:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


# ---------------------------------------------------------------------------
# generation


def _add_node(g: Graph, nbrs: Iterable[int], extra_edge: tuple[int, int] | None = None,
              drop_edge: tuple[int, int] | None = None) -> Graph:
    adj = list(g.adj) + [0]
    n = g.p
    for a in nbrs:
        adj[a] |= 1 << n
        adj[n] |= 1 << a
    if extra_edge:
        a, b = extra_edge
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    if drop_edge:
        a, b = drop_edge
        adj[a] &= ~(1 << b)
        adj[b] &= ~(1 << a)
    return Graph(n + 1, tuple(adj))


def _with_cycle(g: Graph, cyc: Sequence[int]) -> Graph | None:
    adj = list(g.adj)
    k = len(cyc)
    for t in range(k):
        a, b = cyc[t], cyc[(t + 1) % k]
        if adj[a] >> b & 1:
            return None
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return Graph(g.p, tuple(adj))


def _short_cycles_through(p: int, must: set[int]):
    """Node sequences of every 3- and 4-cycle of K_p containing ``must``."""
    rest = [v for v in range(p) if v not in must]
    for size in (3, 4):
        if len(must) > size:
            continue
        for extra in combinations(rest, size - len(must)):
            nodes = sorted(must | set(extra))
            if size == 3:
                yield nodes
            else:
                a, b, c, d = nodes
                yield (a, b, c, d)
                yield (a, b, d, c)
                yield (a, c, b, d)


def _vertex_key(adj: Sequence[int], v: int) -> tuple:
    row = adj[v]
    inner = sum((adj[u] & row).bit_count() for u in bits(row)) // 2
    return (sorted(adj[u].bit_count() for u in bits(row)), inner)


def _preferred(h: Graph, degree: int) -> set[int]:
    """Nodes of the given degree whose local invariant is largest."""
    cands = [v for v in range(h.p) if h.adj[v].bit_count() == degree]
    if not cands:
        return set()
    keys = {v: _vertex_key(h.adj, v) for v in cands}
    best = max(keys.values())
    return {v for v in cands if keys[v] == best}


def _is_preferred_cycle(h: Graph, cyc: Sequence[int]) -> bool:
    """Accept only cycles that a fixed invariant rule would remove from h.

    The rule: the cycle passes through a preferred minimum-degree node, and
    is a triangle whenever some preferred node lies on a triangle.  Every
    graph of minimum degree >= 4 on at most 16 nodes has such a cycle, so
    nothing is lost; most redundant augmentations are skipped before the
    canonical labeling is computed.
    """
    pref = _preferred(h, min(h.degrees()))
    if not pref.intersection(cyc):
        return False
    if len(cyc) == 4:
        adj = h.adj
        for v in pref:
            row = adj[v]
            if any(adj[u] & row for u in bits(row)):
                return False
    return True


def _augmenting_cycles(p: int, low: set[int], degs: list[int]):
    """Short cycles to add: through every low-degree node, else a min-degree one.

    With at most 16 nodes every node of degree >= 4 lies on a triangle or
    4-cycle, so a graph of minimum degree >= 4 always loses such a cycle
    through one of its minimum-degree nodes, which stays minimum after the
    removal.
    """
    if low:
        yield from _short_cycles_through(p, low)
        return
    d = min(degs)
    mins = [v for v in range(p) if degs[v] == d]
    for t, v in enumerate(mins):
        earlier = set(mins[:t])
        for cyc in _short_cycles_through(p, {v}):
            if not earlier.intersection(cyc):
                yield cyc


@lru_cache(maxsize=None)
def even_graphs(p: int) -> dict[bytes, Graph]:
    """All even graphs on p nodes up to isomorphism, keyed by canonical code."""
    if p < 1:
        raise ValueError("p must be >= 1")
    if p > MAX_ORDER:
        raise OrderTooLarge(f"order {p} exceeds {MAX_ORDER}")
    if p == 1:
        g = Graph(1, (0,))
        return {canonical_code(g): g}
    found: dict[bytes, Graph] = {}

    def keep(h: Graph) -> None:
        c, form = canonical_pair(h)
        if c not in found:
            found[c] = form

    for g in even_graphs(p - 1).values():
        keep(_add_node(g, ()))
        n = g.p
        for a, b in g.edges():
            h = _add_node(g, (a, b), drop_edge=(a, b))
            if n in _preferred(h, 2):
                keep(h)
        for a, b in combinations(range(n), 2):
            if not g.has_edge(a, b):
                h = _add_node(g, (a, b), extra_edge=(a, b))
                if n in _preferred(h, 2):
                    keep(h)
    by_q: dict[int, list[Graph]] = {}
    for g in found.values():
        by_q.setdefault(g.q, []).append(g)
    top = p * (p - 1) // 2
    for q in range(top + 1):
        for g in by_q.get(q, []):
            degs = g.degrees()
            if 0 in degs:
                continue
            low = {v for v, d in enumerate(degs) if d < 4}
            if len(low) > 4:
                continue
            for cyc in _augmenting_cycles(p, low, degs):
                h = _with_cycle(g, cyc)
                if h is None or not _is_preferred_cycle(h, cyc):
                    continue
                c, form = canonical_pair(h)
                if c not in found:
                    found[c] = form
                    by_q.setdefault(form.q, []).append(form)
    return found


@lru_cache(maxsize=None)
def _euler_list(p: int) -> tuple[tuple[bytes, Graph], ...]:
    rows = [(c, g) for c, g in even_graphs(p).items() if is_euler(g)]
    rows.sort(key=lambda r: (r[1].q, r[0]))
    return tuple(rows)


def enumerate_euler(p: int) -> list[Graph]:
    """Every Euler graph on p nodes once, sorted by (q, canonical code)."""
    if p > MAX_ORDER:
        raise OrderTooLarge(f"order {p} exceeds {MAX_ORDER}")
    if p < 3:
        return []
    return [g for _, g in _euler_list(p)]


def _tag_of(g: Graph) -> str:
    return str(classify(g))


@lru_cache(maxsize=None)
def tagged_euler(p: int) -> tuple[tuple[Graph, str], ...]:
    gs = enumerate_euler(p)
    return tuple(zip(gs, parallel_map(_tag_of, gs)))


def family_members(f, p: int) -> list[Graph]:
    want = str(tag_for_types(parse_family(f)))
    return [g for g, t in tagged_euler(p) if t == want]


# ---------------------------------------------------------------------------
# census and audits


@dataclass(frozen=True)
class CensusRow:
    p: int
    counts: dict[str, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def census(p_max: int, p_min: int = 3) -> list[CensusRow]:
    if p_max > MAX_ORDER:
        raise OrderTooLarge(f"order {p_max} exceeds {MAX_ORDER}")
    out = []
    for p in range(p_min, p_max + 1):
        counts: dict[str, int] = {}
        for _, t in tagged_euler(p):
            counts[t] = counts.get(t, 0) + 1
        out.append(CensusRow(p, dict(sorted(counts.items()))))
    return out


def min_order(f, p_max: int) -> int | None:
    if p_max > MAX_ORDER:
        raise OrderTooLarge(f"order {p_max} exceeds {MAX_ORDER}")
    for p in range(3, p_max + 1):
        if family_members(f, p):
            return p
    return None


def smallest_member(f, p_max: int) -> Graph | None:
    """The first member of the smallest order, in (q, code) order."""
    p = min_order(f, p_max)
    return family_members(f, p)[0] if p else None


@dataclass(frozen=True)
class AuditFinding:
    conjecture: str
    family: str
    p_max: int
    counterexamples: tuple[str, ...]  # graph6 of the canonical forms
    checked: int

    @property
    def status(self) -> str:
        return "refuted" if self.counterexamples else "consistent"


def degree2_audit(f, p_max: int) -> AuditFinding:
    """Members above the family's threshold order with minimum degree >= 4."""
    fam = family_name(f)
    if p_max > MAX_ORDER:
        raise OrderTooLarge(f"order {p_max} exceeds {MAX_ORDER}")
    bad = []
    checked = 0
    for p in range(DEGREE2_THRESHOLD[fam] + 1, p_max + 1):
        for g in family_members(fam, p):
            checked += 1
            if min(g.degrees()) >= 4:
                bad.append(emit_graph6(g))
    return AuditFinding("degree-two node", fam, p_max, tuple(bad), checked)


def regular_audit(f, p_max: int) -> list[Graph]:
    """Regular members (degree >= 4) of the family up to ``p_max``."""
    if p_max > MAX_ORDER:
        raise OrderTooLarge(f"order {p_max} exceeds {MAX_ORDER}")
    want = str(tag_for_types(parse_family(f)))
    out = []
    for p in range(3, p_max + 1):
        for g in enumerate_euler(p):
            degs = g.degrees()
            if degs[0] >= 4 and len(set(degs)) == 1 and _tag_of(g) == want:
                out.append(g)
    return out


# ---------------------------------------------------------------------------
# named constructions


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def _pythagoras() -> Graph:
    # triangle 0,1,2 with a square erected on each side
    edges = [(0, 1), (1, 2), (0, 2)]
    nxt = 3
    for a, b in [(0, 1), (1, 2), (0, 2)]:
        c, d = nxt, nxt + 1
        nxt += 2
        edges += [(b, c), (c, d), (d, a)]
    return build_graph(9, edges)


def _eps013_min() -> Graph:
    # 5-cycle v1..v5 (0..4), chord v1v3, apex 5 adjacent to v1 and v3
    return build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2), (0, 5), (2, 5)])


def _block_cycles() -> Graph:
    # a 5-cycle, a 6-cycle and a triangle chained at cut nodes 4 and 9
    edges = [(i, i + 1) for i in range(4)] + [(4, 0)]
    edges += [(i, i + 1) for i in range(4, 9)] + [(9, 4)]
    edges += [(9, 10), (10, 11), (11, 9)]
    return build_graph(12, edges)


NAMED = {
    "k5": lambda: complete_graph(5),
    "pythagoras": _pythagoras,
    "eps013-min": _eps013_min,
    "block-cycles-1-2-3": _block_cycles,
    "butterfly": lambda: build_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]),
}


def named_graph(name: str) -> Graph:
    key = name.lower()
    if key in NAMED:
        return NAMED[key]()
    if key.startswith("c") and key[1:].isdigit() and 3 <= int(key[1:]) <= 32:
        return cycle_graph(int(key[1:]))
    if key.startswith("k") and key[1:].isdigit() and 1 <= int(key[1:]) <= 32:
        return complete_graph(int(key[1:]))
    raise UnknownName(f"no graph named {name!r}; known: {', '.join(sorted(NAMED))}, cN, kN")


# ---------------------------------------------------------------------------
# planting trees


def plant(base: Graph, node: int, tree_edges: Sequence[tuple[int, int]]) -> Graph:
    """Attach a tree whose node 0 is identified with ``node`` of ``base``.

    Tree nodes 1..t-1 become new nodes p..p+t-2 in order.
    """
    if base.p > 1 and min(base.degrees()) < 2:
        raise BaseHasPendant("base graph has a node of degree below two")
    if not tree_edges:
        return base
    t = 1 + max(max(e) for e in tree_edges)
    if len(tree_edges) != t - 1:
        raise NotATree(f"{len(tree_edges)} edges on {t} nodes")
    parent = list(range(t))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in tree_edges:
        ra, rb = find(a), find(b)
        if a == b or ra == rb:
            raise NotATree("tree edges contain a cycle or loop")
        parent[ra] = rb
    if not 0 <= node < base.p:
        raise ValueError(f"node {node} not in base")
    ids = [node] + [base.p + s for s in range(t - 1)]
    return build_graph(base.p + t - 1, list(base.edges()) + [(ids[a], ids[b]) for a, b in tree_edges])


def core_graph(g: Graph) -> Graph:
    """Delete degree <= 1 nodes until none is left; remaining nodes keep their order."""
    alive = (1 << g.p) - 1
    while True:
        drop = 0
        for v in bits(alive):
            if (g.adj[v] & alive).bit_count() <= 1:
                drop |= 1 << v
        if not drop:
            break
        alive &= ~drop
    keep = list(bits(alive))
    pos = {v: i for i, v in enumerate(keep)}
    return build_graph(max(len(keep), 1), [(pos[u], pos[v]) for u, v in g.edges()
                                             if alive >> u & 1 and alive >> v & 1])


def random_planting(base: Graph, extra: int, rng: random.Random) -> tuple[Graph, list[tuple[int, int]]]:
    """Add ``extra`` pendant-tree nodes, each joined to a random earlier node."""
    edges = list(base.edges())
    added = []
    for s in range(extra):
        v = base.p + s
        u = rng.randrange(v)
        edges.append((u, v))
        added.append((u, v))
    return build_graph(base.p + extra, edges), added


@dataclass(frozen=True)
class SampleRow:
    trial: int
    base: str
    attachments: tuple[tuple[int, int], ...]
    p: int
    q: int
    status: str
    expanded: int


def eulerforest_graceful_sample(f, trials: int, seed: int, p_max: int = 8,
                                budget: int = 2_000_000) -> list[SampleRow]:
    """Plant up to three tree nodes on random members and search for labelings.

    The number of added nodes is chosen so the planted graph's size is 0 or
    3 mod 4, i.e. it passes the Rosa-Golomb congruence.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    pool = [g for p in range(3, p_max + 1) for g in family_members(f, p)]
    if not pool:
        return []
    out = []
    for t in range(trials):
        base = pool[rng.randrange(len(pool))]
        extra = rng.choice([k for k in (1, 2, 3) if (base.q + k) % 4 in (0, 3)])
        g, att = random_planting(base, extra, rng)
        res = search_graceful(g, budget)
        out.append(SampleRow(t, emit_graph6(base), tuple(att), g.p, g.q, res.status, res.nodes_expanded))
    return out


# ---------------------------------------------------------------------------
# witnesses for three-cycle configurations


@dataclass(frozen=True)
class _C:
    cycle: Cycle
    type: int
    nodes: int
    edges: int  # bit u*p+v per edge


def _edge_nodes(mask: int, p: int) -> int:
    out = 0
    for b in bits(mask):
        out |= 1 << (b // p) | 1 << (b % p)
    return out


def _single_path(a: _C, b: _C, p: int) -> int | None:
    """Length of the one shared path (>= 1) with nothing else shared, or None."""
    e = a.edges & b.edges
    if not e or e == a.edges or e == b.edges:
        return None
    if _edge_nodes(e, p) != a.nodes & b.nodes or e.bit_count() != (a.nodes & b.nodes).bit_count() - 1:
        return None
    return e.bit_count()


def _sym_cycle_length(masks: Iterable[int], p: int) -> int | None:
    """Length of the symmetric difference if it is a single cycle."""
    m = 0
    for x in masks:
        m ^= x
    if not m:
        return None
    deg: dict[int, int] = {}
    for b in bits(m):
        for v in (b // p, b % p):
            deg[v] = deg.get(v, 0) + 1
    if any(d != 2 for d in deg.values()):
        return None
    # connected iff a walk covers all edges
    edges = [(b // p, b % p) for b in bits(m)]
    seen = {edges[0][0]}
    grew = True
    while grew:
        grew = False
        for u, v in edges:
            if (u in seen) != (v in seen):
                seen.update((u, v))
                grew = True
    return len(edges) if len(seen) == len(deg) else None


def _matches(shape: str, parities, ci: _C, cj: _C, ck: _C, p: int) -> bool:
    if shape == "A":
        (l,) = parities
        e = ci.edges & cj.edges
        return (_single_path(ci, cj, p) is not None and e.bit_count() % 2 == l
                and ci.edges & ck.edges == e and cj.edges & ck.edges == e
                and ci.nodes & ck.nodes == ci.nodes & cj.nodes == cj.nodes & ck.nodes)
    if shape == "B":
        l, m = parities
        a = _single_path(ci, cj, p)
        b, c = _single_path(ci, ck, p), _single_path(cj, ck, p)
        if a is None or b is None or c is None or a % 2 != l or b % 2 != m:
            return False
        q = ci.edges & ck.edges
        return q == cj.edges & ck.edges and q & ci.edges & cj.edges == q and q != ci.edges & cj.edges
    if shape in ("C", "E"):
        l, m = parities
        a, b = _single_path(ci, cj, p), _single_path(cj, ck, p)
        if a is None or b is None or a % 2 != l or b % 2 != m or ci.edges & ck.edges:
            return False
        touch = (ci.nodes & ck.nodes).bit_count()
        return touch == 0 if shape == "C" else touch == 1 and bool(ci.nodes & cj.nodes & ck.nodes)
    l, m, n = parities
    a, b, c = _single_path(ci, cj, p), _single_path(cj, ck, p), _single_path(ci, ck, p)
    if None in (a, b, c) or (a % 2, b % 2, c % 2) != (l, m, n):
        return False
    common = ci.nodes & cj.nodes & ck.nodes
    return common.bit_count() == 1 and not (ci.edges & cj.edges & ck.edges)


@dataclass(frozen=True)
class Witness:
    graph: Graph
    cycles: tuple[Cycle, Cycle, Cycle]
    combined_lengths: tuple[int, ...]


def combined_lengths(shape: str, cycles: Sequence[Cycle], p: int) -> tuple[int, ...] | None:
    """Lengths of the combined cycles in the order of the shape's formulas."""
    ci, cj, ck = (c.edge_mask(p) for c in cycles)
    groups = {"A": [(ci, cj), (ci, ck), (cj, ck)], "B": [(ci, cj), (ci, ck), (cj, ck)],
              "C": [(ci, cj), (cj, ck), (ci, cj, ck)], "E": [(ci, cj), (cj, ck), (ci, cj, ck)],
              "F": [(ci, cj), (cj, ck), (ci, ck), (ci, cj, ck)]}[shape]
    out = []
    for grp in groups:
        n = _sym_cycle_length(grp, p)
        if n is None:
            return None
        out.append(n)
    return tuple(out)


def verify_witness(row: CaseConfig, w: Witness) -> bool:
    ts = tuple(c.type for c in w.cycles)
    if ts != row.types:
        return False
    got = combined_lengths(row.shape, w.cycles, w.graph.p)
    return got is not None and tuple(n % 4 for n in got) == derived_types(row.shape, row.types, row.parities)


def find_configuration(g: Graph, row: CaseConfig, cap: int = 200_000) -> tuple[Cycle, Cycle, Cycle] | None:
    cl = all_cycles(g, cap)
    p = g.p
    by_type: dict[int, list[_C]] = {0: [], 1: [], 2: [], 3: []}
    for c in cl.cycles:
        by_type[c.type].append(_C(c, c.type, sum(1 << v for v in c.nodes), c.edge_mask(p)))
    i, j, k = row.types
    for ci in by_type[i]:
        for cj in by_type[j]:
            if cj is ci:
                continue
            # every shape has Ci and Cj meeting in exactly one path
            if _single_path(ci, cj, p) is None:
                continue
            for ck in by_type[k]:
                if ck is ci or ck is cj:
                    continue
                if _matches(row.shape, row.parities, ci, cj, ck, p):
                    return ci.cycle, cj.cycle, ck.cycle
    return None


def witness_search(row: CaseConfig, f, p_max: int) -> Witness | None:
    """Smallest member (by order, then size and code) containing the row's shape."""
    if p_max > MAX_ORDER:
        raise OrderTooLarge(f"order {p_max} exceeds {MAX_ORDER}")
    allowed = set(parse_family(f))
    if not set(row.derived) <= allowed:
        return None  # every realization contains an escaping combined cycle
    for p in range(3, p_max + 1):
        for g in family_members(f, p):
            cyc = find_configuration(g, row)
            if cyc is not None:
                return Witness(g, cyc, combined_lengths(row.shape, cyc, p))
    return None
