"""Simple undirected graphs on at most 32 nodes, stored as adjacency bitsets.

Row ``adj[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge.
Besides construction and the Euler predicate this module owns the two
bit-exact text formats (graph6 and the plain edge list) and canonical
labeling by partition refinement with automorphism pruning.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from .errors import DuplicateEdge, LoopEdge, MalformedEdgeList, MalformedGraph6, OutOfRange

MAX_NODES = 32


def bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    p: int
    adj: tuple[int, ...]

    @property
    def q(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.p) for u in bits(self.adj[v] & ((1 << v) - 1))]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def __repr__(self) -> str:
        return f"Graph(p={self.p}, q={self.q}, g6={emit_graph6(self)!r})"


def build_graph(p: int, edges: Iterable[Sequence[int]]) -> Graph:
    if not 1 <= p <= MAX_NODES:
        raise OutOfRange(f"order {p} outside 1..{MAX_NODES}")
    adj = [0] * p
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < p and 0 <= v < p):
            raise OutOfRange(f"edge {u}-{v} has an endpoint outside 0..{p - 1}")
        if u == v:
            raise LoopEdge(f"loop at node {u}")
        if adj[u] >> v & 1:
            raise DuplicateEdge(f"edge {min(u, v)}-{max(u, v)} given twice")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(p, tuple(adj))


def from_adjacency(adj: Sequence[int]) -> Graph:
    return Graph(len(adj), tuple(adj))


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.p) - 1


def is_euler(g: Graph) -> bool:
    """Connected, and every node has even degree of at least two."""
    for row in g.adj:
        d = row.bit_count()
        if d == 0 or d & 1:
            return False
    return is_connected(g)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph in which node ``v`` of ``g`` becomes ``perm[v]``."""
    adj = [0] * g.p
    for v in range(g.p):
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << perm[u]
        adj[perm[v]] = row
    return Graph(g.p, tuple(adj))


def complement(g: Graph) -> Graph:
    full = (1 << g.p) - 1
    return Graph(g.p, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


# ---------------------------------------------------------------------------
# graph6


def _size_prefix(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    # 18-bit form; only reachable for n > 62, which Graph never holds.
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def emit_graph6(g: Graph) -> str:
    n = g.p
    out = [_size_prefix(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise MalformedGraph6(f"character {ch!r} outside graph6 range")
    n = ord(s[0]) - 63
    body = s[1:]
    if n == 63:
        raise MalformedGraph6("graphs with more than 62 nodes are not supported")
    if not 1 <= n <= MAX_NODES:
        raise MalformedGraph6(f"order {n} outside 1..{MAX_NODES}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (ord(body[k // 6]) - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# plain edge list: "p q" header then one "u v" line per edge, u < v


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.p} {g.q}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges()))
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 2:
        raise MalformedEdgeList("missing 'p q' header")
    try:
        p, q = int(rows[0][0]), int(rows[0][1])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise MalformedEdgeList(str(exc)) from None
    if len(edges) != q:
        raise MalformedEdgeList(f"header announces {q} edges, found {len(edges)}")
    return build_graph(p, edges)


def read_graph(text: str) -> Graph:
    """Sniff the first non-blank byte: a digit means edge list, else graph6."""
    s = text.lstrip()
    if s[:1].isdigit():
        return parse_edge_list(s)
    return parse_graph6(s.splitlines()[0] if s else s)


# ---------------------------------------------------------------------------
# canonical labeling


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; cell order depends only on invariants.

    Each round splits every cell by the vector of neighbor counts into all
    current cells, keeping groups in sorted key order.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                groups.setdefault(tuple((row & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                new.append(cell)
            else:
                new.extend(groups[k] for k in sorted(groups))
        if len(new) == len(cells):
            return cells
        cells = new


def _leaf_code(adj: Sequence[int], order: Sequence[int]) -> int:
    n = len(order)
    code = 0
    for j in range(1, n):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def canonical_order(g: Graph) -> list[int]:
    """Node order whose induced upper-triangle bit string is maximal.

    Individualization-refinement search.  Two prunings keep symmetric graphs
    cheap: orbit pruning with discovered automorphisms that fix the current
    prefix, and a jump back to the common ancestor whenever a leaf reproduces
    the best code.
    """
    adj = g.adj
    n = g.p
    if n <= 1:
        return list(range(n))
    degree_cells: dict[int, list[int]] = {}
    for v in range(n):
        degree_cells.setdefault(adj[v].bit_count(), []).append(v)
    root = _refine(adj, [degree_cells[d] for d in sorted(degree_cells)])

    best_code = -1
    best_path: list[int] = []
    best_order: list[int] = []
    autos: list[list[int]] = []

    def orbit_rep(prefix: list[int]) -> list[int]:
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in autos:
            if all(gamma[v] == v for v in prefix):
                for v in range(n):
                    a, b = find(v), find(gamma[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(n)]

    def search(cells: list[list[int]], path: list[int]) -> int:
        # returns the level to resume at; len(path) means "carry on"
        nonlocal best_code, best_path, best_order
        if len(cells) == n:
            order = [c[0] for c in cells]
            code = _leaf_code(adj, order)
            if code > best_code:
                best_code, best_path, best_order = code, list(path), order
                return len(path)
            if code == best_code:
                gamma = [0] * n
                for a, b in zip(best_order, order):
                    gamma[a] = b
                autos.append(gamma)
                common = 0
                while common < len(path) and path[common] == best_path[common]:
                    common += 1
                return common
            return len(path)
        ti = min(range(len(cells)), key=lambda i: (len(cells[i]) == 1, len(cells[i]), i))
        target = cells[ti]
        level = len(path)
        tried: list[int] = []
        for v in target:
            if tried:
                rep = orbit_rep(path)
                if any(rep[v] == rep[w] for w in tried):
                    continue
            tried.append(v)
            rest = [w for w in target if w != v]
            child = cells[:ti] + [[v], rest] + cells[ti + 1:]
            back = search(_refine(adj, child), path + [v])
            if back < level:
                return back
        return level

    search(root, [])
    return best_order


def canonical_form(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.p
    for i, v in enumerate(order):
        perm[v] = i
    return relabel(g, perm)


def canonical_pair(g: Graph) -> tuple[bytes, Graph]:
    """Canonical code and canonical form from a single search."""
    h = canonical_form(g)
    return emit_graph6(h).encode("ascii"), h


def canonical_code(g: Graph) -> bytes:
    """graph6 bytes of the canonical relabeling; equal iff isomorphic."""
    return canonical_pair(g)[0]


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Permutation oracle; only sensible for small orders."""
    if g.p != h.p or g.q != h.q or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    for perm in permutations(range(g.p)):
        if relabel(g, perm) == h:
            return True
    return False
