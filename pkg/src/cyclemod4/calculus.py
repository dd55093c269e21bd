"""Mod-4 arithmetic of combined cycles and three-cycle case analysis.

Two cycles of types t1, t2 sharing one path of length l combine into a
cycle of type (t1 + t2 - 2l) mod 4, so only the parity of l matters.  On
top of that rule this module regenerates the feasibility tables for the
three-cycle shapes A, B, C, E, F and runs a bounded stop/continue
expansion of a configuration.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable

from .errors import DepthTooLarge, TypeNotInFamily
from .graph_core import bits

FAMILIES = ("012", "013", "023", "123")
SHAPES = ("A", "B", "C", "E", "F")
PARITY_NAMES = {"A": ("l",), "B": ("l", "m"), "C": ("l", "m"), "E": ("l", "m"), "F": ("l", "m", "n")}
MAX_DEPTH = 3


def parse_family(f) -> tuple[int, ...]:
    """Accept "013", (0, 1, 3) or {0, 1, 3}; return the sorted type triple."""
    ts = tuple(sorted(int(c) for c in f))
    if len(ts) != 3 or len(set(ts)) != 3 or not set(ts) <= {0, 1, 2, 3}:
        raise ValueError(f"not a family of three distinct types: {f!r}")
    return ts


def family_name(f) -> str:
    return "".join(map(str, parse_family(f)))


def parity_letter(p: int) -> str:
    return "d" if p else "e"


def cc_type(t1: int, t2: int, p: int) -> int:
    return (t1 + t2 - 2 * p) % 4


# ---------------------------------------------------------------------------
# combined-cycle tables


@dataclass(frozen=True)
class CCRow:
    t1: int
    t2: int
    even: int
    odd: int
    even_escapes: bool
    odd_escapes: bool


def cc_table(f) -> list[CCRow]:
    ts = parse_family(f)
    allowed = set(ts)
    rows = []
    for a in range(3):
        for b in range(a, 3):
            t1, t2 = ts[a], ts[b]
            e, o = cc_type(t1, t2, 0), cc_type(t1, t2, 1)
            rows.append(CCRow(t1, t2, e, o, e not in allowed, o not in allowed))
    return rows


def divide_possibilities(t: int, f) -> list[tuple[int, int, int]]:
    """Ordered (t1, t2, parity) with cc_type(t1, t2, parity) == t."""
    ts = parse_family(f)
    if t not in ts:
        raise TypeNotInFamily(f"type {t} not in family {family_name(f)}")
    return sorted((a, b, p) for a in ts for b in ts for p in (0, 1) if cc_type(a, b, p) == t)


# ---------------------------------------------------------------------------
# three-cycle configurations


def derived_types(shape: str, types: tuple[int, ...], parities: tuple[int, ...]) -> tuple[int, ...]:
    i, j, k = types
    if shape == "A":
        (l,) = parities
        return (cc_type(i, j, l), cc_type(i, k, l), cc_type(j, k, l))
    if shape == "B":
        l, m = parities
        return (cc_type(i, j, l), cc_type(i, k, m), cc_type(j, k, m))
    if shape in ("C", "E"):
        l, m = parities
        return (cc_type(i, j, l), cc_type(j, k, m), (i + j + k - 2 * l - 2 * m) % 4)
    if shape == "F":
        l, m, n = parities
        return (cc_type(i, j, l), cc_type(j, k, m), cc_type(i, k, n),
                (i + j + k - 2 * (l + m + n)) % 4)
    raise ValueError(f"unknown shape {shape!r}")


@dataclass(frozen=True)
class CaseConfig:
    shape: str
    types: tuple[int, int, int]
    parities: tuple[int, ...]

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise ValueError(f"unknown shape {self.shape!r}")
        if len(self.parities) != len(PARITY_NAMES[self.shape]):
            raise ValueError(f"shape {self.shape} takes {len(PARITY_NAMES[self.shape])} parities")

    @property
    def derived(self) -> tuple[int, ...]:
        return derived_types(self.shape, self.types, self.parities)

    def label(self) -> str:
        return f"{','.join(map(str, self.types))};{''.join(map(parity_letter, self.parities))}"


def _orbit(shape: str, types, pars) -> list[tuple]:
    i, j, k = types
    if shape == "A":
        return [(tuple(t), pars) for t in permutations(types)]
    if shape == "B":
        return [(types, pars), ((j, i, k), pars)]
    if shape in ("C", "E"):
        l, m = pars
        return [(types, pars), ((k, j, i), (m, l))]
    l, m, n = pars
    return [(types, pars), ((j, k, i), (m, n, l)), ((k, i, j), (n, l, m))]


def feasible_configs(shape: str, f, repeated_types: bool = False) -> list[CaseConfig]:
    """Rows whose derived combined types all stay in the family.

    Symmetric duplicates are folded to the lexicographically least member
    of their orbit: any permutation for A, i<->j for B, reversal for C and
    E, rotations for F.  ``repeated_types`` lets a type occur more than once.
    """
    ts = parse_family(f)
    allowed = set(ts)
    triples = product(ts, repeat=3) if repeated_types else permutations(ts)
    seen = set()
    out = []
    for types in triples:
        for pars in product((0, 1), repeat=len(PARITY_NAMES[shape])):
            if not set(derived_types(shape, types, pars)) <= allowed:
                continue
            rep = min(_orbit(shape, tuple(types), pars))
            if rep in seen:
                continue
            seen.add(rep)
            out.append(CaseConfig(shape, rep[0], rep[1]))
    out.sort(key=lambda c: (c.types, c.parities))
    return out


# ---------------------------------------------------------------------------
# symbolic configurations: segments with unknown lengths mod 4


@dataclass
class Frame:
    """A configuration as a multigraph of paths ("segments").

    Each segment has an unknown length; only its residue mod 4 matters.
    Named cycles carry a known type.  ``fixed`` pins single edges to
    residue 1, ``parity`` pins sums of segments mod 2.
    """
    ends: list[tuple[str, str]]
    names: list[str]
    cycles: list[tuple[str, int, int]]  # (name, segment mask, type)
    fixed: dict[int, int] = field(default_factory=dict)
    parity: list[tuple[int, int]] = field(default_factory=list)  # (segment mask, parity)
    ancestry: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def copy(self) -> "Frame":
        return Frame(list(self.ends), list(self.names), list(self.cycles), dict(self.fixed),
                     list(self.parity), dict(self.ancestry))

    def add_segment(self, name: str, a: str, b: str) -> int:
        self.ends.append((a, b))
        self.names.append(name)
        return len(self.ends) - 1

    def cycle_named(self, name: str) -> tuple[str, int, int]:
        return next(c for c in self.cycles if c[0] == name)

    def mask_names(self, mask: int) -> list[str]:
        return [self.names[i] for i in bits(mask)]


def _root_frame(c: CaseConfig) -> tuple[Frame, int, str]:
    """Build the shape's segment multigraph; also return the anchor segment and end."""
    i, j, k = c.types
    if c.shape == "A":
        (l,) = c.parities
        fr = Frame([("u", "w")] * 4, ["P", "Pi", "Pj", "Pk"],
                   [("Ci", 0b0011, i), ("Cj", 0b0101, j), ("Ck", 0b1001, k)],
                   parity=[(0b0001, l)])
        return fr, 0, "u"
    if c.shape == "B":
        l, m = c.parities
        fr = Frame([("u", "w"), ("w", "v"), ("u", "v"), ("u", "v"), ("w", "v")],
                   ["S", "T", "Pi", "Pj", "Pk"],
                   [("Ci", 0b00111, i), ("Cj", 0b01011, j), ("Ck", 0b10010, k)],
                   parity=[(0b00011, l), (0b00010, m)])
        return fr, 0, "u"
    if c.shape in ("C", "E"):
        l, m = c.parities
        if c.shape == "C":
            ends = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "b"), ("c", "d")]
            names = ["P", "X", "Q", "Y", "Pi", "Pk"]
            cyc = [("Ci", 0b010001, i), ("Cj", 0b001111, j), ("Ck", 0b100100, k)]
            par = [(0b000001, l), (0b000100, m)]
        else:
            ends = [("a", "b"), ("b", "d"), ("d", "a"), ("a", "b"), ("b", "d")]
            names = ["P", "Q", "Y", "Pi", "Pk"]
            cyc = [("Ci", 0b01001, i), ("Cj", 0b00111, j), ("Ck", 0b10010, k)]
            par = [(0b00001, l), (0b00010, m)]
        return Frame(ends, names, cyc, parity=par), 0, "a"
    l, m, n = c.parities
    fr = Frame([("x", "a"), ("x", "b"), ("x", "c"), ("a", "c"), ("a", "b"), ("b", "c")],
               ["L", "M", "N", "Oi", "Oj", "Ok"],
               [("Ci", 0b001101, i), ("Cj", 0b010011, j), ("Ck", 0b100110, k)],
               parity=[(0b000001, l), (0b000010, m), (0b000100, n)])
    # L = Ci & Cj, M = Cj & Ck, N = Ci & Ck all meet at x
    return fr, 0, "x"


def _cycle_space(fr: Frame) -> list[int]:
    """Every simple cycle of the segment multigraph as a segment mask."""
    nodes = sorted({v for e in fr.ends for v in e})
    parent: dict[str, tuple[str, int] | None] = {}
    tree = 0
    basis = []
    adj: dict[str, list[tuple[str, int]]] = {v: [] for v in nodes}
    for s, (a, b) in enumerate(fr.ends):
        adj[a].append((b, s))
        adj[b].append((a, s))
    depth: dict[str, int] = {}
    for root in nodes:
        if root in parent:
            continue
        parent[root] = None
        depth[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w, s in adj[v]:
                if w not in parent:
                    parent[w] = (v, s)
                    depth[w] = depth[v] + 1
                    tree |= 1 << s
                    stack.append(w)

    def path_mask(a: str, b: str) -> int:
        m = 0
        while a != b:
            if depth[a] < depth[b]:
                a, b = b, a
            pa, s = parent[a]
            m ^= 1 << s
            a = pa
        return m

    for s, (a, b) in enumerate(fr.ends):
        if not tree >> s & 1:
            basis.append((1 << s) ^ path_mask(a, b))
    out = []
    for combo in range(1, 1 << len(basis)):
        m = 0
        for t in bits(combo):
            m ^= basis[t]
        if _is_single_cycle(fr, m):
            out.append(m)
    out.sort(key=lambda m: (m.bit_count(), m))
    return out


def _is_single_cycle(fr: Frame, mask: int) -> bool:
    deg: dict[str, int] = {}
    for s in bits(mask):
        for v in fr.ends[s]:
            deg[v] = deg.get(v, 0) + 1
    if any(d != 2 for d in deg.values()):
        return False
    # connected: walk from one segment
    segs = list(bits(mask))
    seen = {segs[0]}
    frontier = [segs[0]]
    while frontier:
        s = frontier.pop()
        for t in segs:
            if t not in seen and set(fr.ends[s]) & set(fr.ends[t]):
                seen.add(t)
                frontier.append(t)
    return len(seen) == len(segs)


Constraint = tuple[int, int, frozenset]


def _base_constraints(fr: Frame) -> list[Constraint]:
    cons: list[Constraint] = [(1 << s, 4, frozenset({r})) for s, r in fr.fixed.items()]
    cons += [(m, 2, frozenset({p})) for m, p in fr.parity]
    cons += [(m, 4, frozenset({t})) for _, m, t in fr.cycles]
    return cons


def _solve(n: int, cons: Iterable[Constraint]) -> list[int] | None:
    """A residue per segment satisfying every constraint, or None."""
    by_last: list[list[Constraint]] = [[] for _ in range(n)]
    for c in cons:
        if c[0] == 0:
            if 0 not in c[2]:
                return None
            continue
        by_last[c[0].bit_length() - 1].append(c)
    val = [0] * n

    def rec(k: int) -> bool:
        if k == n:
            return True
        for r in range(4):
            val[k] = r
            for mask, mod, allowed in by_last[k]:
                if sum(val[s] for s in bits(mask)) % mod not in allowed:
                    break
            else:
                if rec(k + 1):
                    return True
        return False

    return list(val) if rec(0) else None


@dataclass(frozen=True)
class StopReason:
    kind: str  # combined | forced | parity | joint
    detail: str
    cycles: tuple[str, ...] = ()
    types: tuple[int, ...] = ()
    shared_parity: int | None = None
    escaping: int | None = None


def _verdict(fr: Frame, allowed: frozenset) -> tuple[str, StopReason | None, list[int] | None]:
    n = len(fr.ends)
    base = _base_constraints(fr)
    all_cycles = _cycle_space(fr)
    family_cons = [(m, 4, allowed) for m in all_cycles]
    sol = _solve(n, base + family_cons)
    if sol is not None:
        return "continue", None, sol
    if _solve(n, base) is None:
        return "stop", StopReason("parity", "named types and path parities admit no lengths"), None
    # a pair of named cycles sharing one path whose parity is forced
    named = fr.cycles
    for a in range(len(named)):
        for b in range(a + 1, len(named)):
            na, ma, ta = named[a]
            nb, mb, tb = named[b]
            shared = ma & mb
            if not shared or not _is_single_cycle(fr, ma ^ mb):
                continue
            pars = [p for p in (0, 1) if _solve(n, base + [(shared, 2, frozenset({p}))]) is not None]
            if len(pars) == 1:
                t = cc_type(ta, tb, pars[0])
                if t not in allowed:
                    detail = (f"{na}({ta}) and {nb}({tb}) share a path of parity "
                              f"{parity_letter(pars[0])}: combined type {t}")
                    return "stop", StopReason("combined", detail, (na, nb), (ta, tb), pars[0], t), None
    for m in all_cycles:
        types = [t for t in range(4) if _solve(n, base + [(m, 4, frozenset({t}))]) is not None]
        if types and not set(types) & allowed:
            segs = "+".join(fr.mask_names(m))
            return "stop", StopReason("forced", f"cycle {segs} is forced to type {types}",
                                      (segs,), tuple(types), None, types[0]), None
    return "stop", StopReason("joint", "every admissible length assignment leaves some cycle outside the family"), None


# ---------------------------------------------------------------------------
# expansion


@dataclass(frozen=True)
class CaseNode:
    index: int
    parent: int | None
    depth: int
    target: str | None
    split: str | None
    move: tuple[int, int, int] | None
    new_cycles: tuple[str, ...]
    verdict: str
    reason: StopReason | None
    residues: tuple[int, ...] | None = None  # segment residues realizing a continue

    def move_label(self) -> str:
        if self.move is None:
            return "root"
        a, b, p = self.move
        return f"{a},{b};{parity_letter(p)}"


@dataclass
class CaseTree:
    root: CaseConfig
    family: str
    nodes: list[CaseNode]
    depth: int
    frames: dict[int, Frame] = field(default_factory=dict, repr=False)

    def children(self, index: int) -> list[CaseNode]:
        return [n for n in self.nodes if n.parent == index]

    def level(self, d: int) -> list[CaseNode]:
        return [n for n in self.nodes if n.depth == d]


@dataclass
class _State:
    frame: Frame
    anchor_seg: int
    anchor_end: str
    newest: tuple[str, ...]  # cycles created by the last move
    parent_cycle: str | None
    counter: list[int]


def _split(fr: Frame, s: int, at_end: str, new_node: str, pin_first: bool) -> tuple[int, int]:
    """Split segment ``s`` at ``new_node``; piece one touches ``at_end``."""
    a, b = fr.ends[s]
    far = b if a == at_end else a
    name = fr.names[s]
    fr.ends[s] = (at_end, new_node)
    fr.names[s] = name + ".1"
    t = fr.add_segment(name + ".2", new_node, far)
    bit_s, bit_t = 1 << s, 1 << t
    fr.cycles = [(nm, m | bit_t if m & bit_s else m, ty) for nm, m, ty in fr.cycles]
    fr.parity = [(m | bit_t if m & bit_s else m, p) for m, p in fr.parity]
    if s in fr.fixed:
        raise ValueError("cannot split a single edge")
    if pin_first:
        fr.fixed[s] = 1
    return s, t


def _arcs(fr: Frame, mask: int, v: str, x: str) -> tuple[int, int]:
    """The two v-x arcs of the cycle ``mask``; the first leaves v by its lowest segment."""
    segs = list(bits(mask))
    start = min(s for s in segs if v in fr.ends[s])
    arcs = []
    for first in [start] + [s for s in segs if v in fr.ends[s] and s != start][:1]:
        m = 0
        cur, s = v, first
        while True:
            m |= 1 << s
            a, b = fr.ends[s]
            cur = b if a == cur else a
            if cur == x:
                break
            s = next(t for t in segs if t != s and not m >> t & 1 and cur in fr.ends[t])
        arcs.append(m)
    return arcs[0], arcs[1]


def _ancestors(fr: Frame, name: str) -> set[str]:
    out = set()
    todo = [name]
    while todo:
        for p in fr.ancestry.get(todo.pop(), ()):
            if p not in out:
                out.add(p)
                todo.append(p)
    return out


def _private_segments(fr: Frame, target: str, exclude: int = 0) -> list[int]:
    _, m, _ = fr.cycle_named(target)
    kin = _ancestors(fr, target) | {target}
    others = 0
    for nm, om, _ in fr.cycles:
        if nm not in kin:
            others |= om
    return [s for s in bits(m & ~others & ~exclude) if s not in fr.fixed]


def _moves(state: _State, allowed, restrict: str | None) -> list[tuple]:
    fr = state.frame
    out = []
    targets = [nm for nm, m, _ in fr.cycles if m >> state.anchor_seg & 1]
    if state.newest:
        targets = [t for t in state.newest if t in targets]
    if restrict is not None:
        targets = [t for t in targets if t == restrict]
    for t in targets:
        _, m, ty = fr.cycle_named(t)
        for s in _private_segments(fr, t, exclude=1 << state.anchor_seg):
            for mv in divide_possibilities(ty, allowed):
                out.append((t, s, mv))
    return out


def _apply(state: _State, target: str, seg: int, move) -> tuple[_State, tuple[str, str], str]:
    fr = state.frame.copy()
    k = state.counter[0] = state.counter[0] + 1
    v, x = f"v{k}", f"x{k}"
    seg_name = fr.names[seg]
    a, _b = _split(fr, state.anchor_seg, state.anchor_end, v, pin_first=True)
    _split(fr, seg, fr.ends[seg][0], x, pin_first=False)
    r = fr.add_segment(f"R{k}", v, x)
    _, tm, _ = fr.cycle_named(target)
    arc1, arc2 = _arcs(fr, tm, v, x)
    if not arc1 >> a & 1:
        arc1, arc2 = arc2, arc1
    t1, t2, p = move
    n1, n2 = f"{target}.1", f"{target}.2"
    fr.cycles.append((n1, arc1 | 1 << r, t1))
    fr.cycles.append((n2, arc2 | 1 << r, t2))
    fr.parity.append((1 << r, p))
    fr.ancestry[n1] = fr.ancestry[n2] = (target,)
    new = _State(fr, r, v, (n1, n2), target, state.counter)
    return new, (n1, n2), seg_name


def explore(c: CaseConfig, f, max_depth: int = 1, divide: int | str | None = None) -> CaseTree:
    """Breadth-first stop/continue expansion of a configuration.

    Level one draws a path from the neighbor of the anchor end along the
    first shared path to an interior node of a private path of a cycle,
    splitting that cycle by every divide move.  Deeper levels start the
    path on the newest dividing path and split one of the two newest
    cycles.  A node continues when some choice of path lengths keeps every
    cycle of the configuration inside the family, and stops otherwise.
    ``divide`` restricts level one to one root cycle (index 0..2 or name).
    """
    if max_depth > MAX_DEPTH:
        raise DepthTooLarge(f"max_depth {max_depth} exceeds {MAX_DEPTH}")
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    ts = parse_family(f)
    allowed = frozenset(ts)
    fr, anchor, end = _root_frame(c)
    restrict = ("Ci", "Cj", "Ck")[divide] if isinstance(divide, int) else divide
    verdict, reason, sol = _verdict(fr, allowed)
    if max_depth == 0:
        verdict, reason = "continue", None
    nodes = [CaseNode(0, None, 0, None, None, None, ("Ci", "Cj", "Ck"), verdict, reason,
                      tuple(sol) if sol else None)]
    frames = {0: fr}
    frontier = [(0, _State(fr, anchor, end, (), None, [0]))]
    for depth in range(1, max_depth + 1):
        nxt = []
        for idx, st in frontier:
            if nodes[idx].verdict != "continue":
                continue
            for target, seg, mv in _moves(st, ts, restrict if depth == 1 else None):
                child, new_names, seg_name = _apply(st, target, seg, mv)
                v, why, sol = _verdict(child.frame, allowed)
                node = CaseNode(len(nodes), idx, depth, target, seg_name, mv, new_names, v, why,
                                tuple(sol) if sol else None)
                nodes.append(node)
                frames[node.index] = child.frame
                nxt.append((node.index, child))
        frontier = nxt
    return CaseTree(c, "".join(map(str, ts)), nodes, max_depth, frames)


def realize(tree: CaseTree, index: int):
    """A concrete graph for a continue node: each segment becomes a path.

    A segment of residue r gets length r (4 when r is 0); parallel
    segments that would both be single edges get 4 more edges.
    """
    from .graph_core import build_graph

    node = tree.nodes[index]
    if node.residues is None:
        raise ValueError(f"node {index} has no realizing residues")
    fr = tree.frames[index]
    ids: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    single: set[frozenset] = set()

    def vid(name: str) -> int:
        if name not in ids:
            ids[name] = len(ids)
        return ids[name]

    for s, (a, b) in enumerate(fr.ends):
        length = node.residues[s] or 4
        key = frozenset((a, b))
        if length == 1:
            if key in single:
                length = 5
            else:
                single.add(key)
        chain = [vid(a)] + [vid(f"{fr.names[s]}#{t}") for t in range(1, length)] + [vid(b)]
        edges.extend(zip(chain, chain[1:]))
    return build_graph(len(ids), edges)


def replay_reason(reason: StopReason) -> bool:
    """Recompute a combined-type stop reason from its recorded inputs."""
    if reason.kind != "combined":
        return reason.kind in ("forced", "parity", "joint")
    t1, t2 = reason.types
    return cc_type(t1, t2, reason.shared_parity) == reason.escaping


# ---------------------------------------------------------------------------
# symbolic audit of stated claims


@dataclass(frozen=True)
class ClaimCheck:
    claim: str
    holds: bool
    detail: str


def chord_convention_audit(n_values: Iterable[int]) -> dict[str, list[tuple[int, int, int, tuple, tuple]]]:
    """For each n and chord distance d, the arc and cycle type pairs."""
    rows = []
    for n in n_values:
        for d in range(2, n // 2 + 1):
            arcs = (d, n - d)
            cyc = (d + 1, n - d + 1)
            rows.append((n, d, n % 4, tuple(x % 4 for x in arcs), tuple(x % 4 for x in cyc)))
    return {"rows": rows}


def _obs_even(n_values, convention: str) -> bool:
    # a cycle of length 2 mod 4 splits into two even pieces of different
    # parity classes (one 0 and one 2 mod 4)
    for n, d, _, arcs, cyc in chord_convention_audit(n_values)["rows"]:
        pair = arcs if convention == "arc" else cyc
        if d % 2 == 0 and set(pair) != {0, 2}:
            return False
    return True


def _obs_odd(n_values, convention: str, residue: int) -> bool:
    # an odd chord on a cycle of odd length splits it into an odd and an
    # even piece: odd 1 pairs with even 2, odd 3 with even 0
    partner = {1: 2, 3: 0}
    for n, d, r, arcs, cyc in chord_convention_audit(n_values)["rows"]:
        if r != residue:
            continue
        pair = arcs if convention == "arc" else cyc
        odd = [x for x in pair if x % 2]
        even = [x for x in pair if not x % 2]
        if len(odd) != 1 or partner[odd[0]] != even[0]:
            return False
    return True


def audit_claims() -> list[ClaimCheck]:
    out = []

    def escapes(fam: str, to: int) -> list[tuple[int, int, int]]:
        return sorted((r.t1, r.t2, p) for r in cc_table(fam)
                      for p, t in ((0, r.even), (1, r.odd)) if t == to)

    e012 = escapes("012", 3)
    out.append(ClaimCheck("012 escapes to 3 exactly at (0,1,odd) and (1,2,even)",
                          e012 == [(0, 1, 1), (1, 2, 0)], f"escapes={e012}"))
    e013 = escapes("013", 2)
    outside = [t for r in cc_table("013") for t in (r.even, r.odd) if t not in (0, 1, 3)]
    out.append(ClaimCheck("013 escapes only to 2, exactly at (0,0,odd),(1,1,even),(1,3,odd),(3,3,even)",
                          e013 == [(0, 0, 1), (1, 1, 0), (1, 3, 1), (3, 3, 0)] and set(outside) == {2},
                          f"escapes={e013}"))
    e023 = escapes("023", 1)
    out.append(ClaimCheck("023 escapes to 1 exactly at (0,3,odd) and (2,3,even)",
                          e023 == [(0, 3, 1), (2, 3, 0)], f"escapes={e023}"))
    ok10 = True
    for types in [(0, 2, 3), (0, 3, 2), (2, 0, 3)]:
        for l, m in product((0, 1), repeat=2):
            if ((sum(types) - 2 * (l + m)) % 4 == 1) != ((l + m) % 2 == 0):
                ok10 = False
    out.append(ClaimCheck("023 three-cycle sum i+j+k-2(l+m) is 1 iff l+m even for (0,2,3),(0,3,2),(2,0,3)",
                          ok10, "checked all four (l,m)"))
    e123 = escapes("123", 0)
    out.append(ClaimCheck("123 escapes to 0 exactly at (1,1,odd),(1,3,even),(2,2,even),(3,3,odd)",
                          e123 == [(1, 1, 1), (1, 3, 0), (2, 2, 0), (3, 3, 1)], f"escapes={e123}"))
    evens = [6, 10, 14]
    arc1, cyc1 = _obs_even(evens, "arc"), _obs_even(evens, "cycle")
    out.append(ClaimCheck("odd chord on C_n, n=2 mod 4, gives pieces of types 0 and 2",
                          arc1 or cyc1, _verdict_text(arc1, cyc1)))
    odds = [5, 7, 9, 11, 13]
    for r in (1, 3):
        a, c = _obs_odd(odds, "arc", r), _obs_odd(odds, "cycle", r)
        out.append(ClaimCheck(f"odd chord on C_n, n={r} mod 4, pairs odd 1 with 2 and odd 3 with 0",
                              a or c, _verdict_text(a, c)))
    a, c = _obs_odd(odds, "arc", 1) and _obs_odd(odds, "arc", 3), _obs_odd(odds, "cycle", 1) and _obs_odd(odds, "cycle", 3)
    out.append(ClaimCheck("odd chord on any odd C_n pairs odd 1 with 2 and odd 3 with 0",
                          a or c, _verdict_text(a, c)))
    return out


def _verdict_text(arc: bool, cyc: bool) -> str:
    if arc and cyc:
        return "holds under both conventions"
    if arc:
        return "holds under arc convention only"
    if cyc:
        return "holds under cycle convention only"
    return "fails under both conventions"
