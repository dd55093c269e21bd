"""Graceful labelings: verification, backtracking search, Rosa-Golomb test.

A labeling is a list ``labels[v]`` of distinct integers in ``0..q``; it is
graceful when the edge differences ``|labels[u] - labels[v]|`` are exactly
``1..q``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import MissingLabel
from .graph_core import Graph, bits

DEFAULT_BUDGET = 50_000_000


def rosa_golomb(q: int) -> bool:
    """Necessary condition for a graceful Euler graph: floor((q+1)/2) even."""
    if q < 1:
        raise ValueError("q must be >= 1")
    return ((q + 1) // 2) % 2 == 0


def _as_list(g: Graph, labels) -> list[int]:
    if isinstance(labels, Mapping):
        missing = [v for v in range(g.p) if v not in labels]
        if missing:
            raise MissingLabel(f"node {missing[0]} has no label")
        return [int(labels[v]) for v in range(g.p)]
    out = list(labels)
    if len(out) < g.p:
        raise MissingLabel(f"node {len(out)} has no label")
    return out


def edge_labels(g: Graph, labels) -> list[int]:
    lab = _as_list(g, labels)
    return sorted(abs(lab[u] - lab[v]) for u, v in g.edges())


def verify_labeling(g: Graph, labels) -> bool:
    lab = _as_list(g, labels)
    q = g.q
    if len(set(lab)) != g.p or any(not 0 <= x <= q for x in lab):
        return False
    return edge_labels(g, lab) == list(range(1, q + 1))


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # found | exhausted_none | budget_exceeded
    labels: tuple[int, ...] | None
    nodes_expanded: int


class _BudgetExceeded(Exception):
    pass


def search_graceful(g: Graph, budget: int = DEFAULT_BUDGET) -> SearchOutcome:
    """Assign edge labels from q downward, branching on the label pair.

    Edge label k needs a pair of node labels (a, a+k) on adjacent nodes.
    Every newly labeled node is forward-checked against its labeled
    neighbors, so a used edge label is never produced twice.  The node
    labeled 0 is required to have a smaller index than the node labeled q;
    the complement labeling q - f covers the other orientation.
    """
    p, q, adj = g.p, g.q, g.adj
    if q == 0:
        return SearchOutcome("found" if p == 1 else "exhausted_none", (0,) if p == 1 else None, 0)
    if p > q + 1:
        return SearchOutcome("exhausted_none", None, 0)
    label = [-1] * p
    node_at = [-1] * (q + 1)
    used = [False] * (q + 1)
    expanded = 0

    def place(v: int, a: int) -> list[int] | None:
        """Label v with a; return the edge labels it creates, or None on clash."""
        made = []
        for u in bits(adj[v]):
            if label[u] >= 0:
                d = abs(label[u] - a)
                if d == 0 or used[d] or d in made:
                    return None
                made.append(d)
        label[v] = a
        node_at[a] = v
        for d in made:
            used[d] = True
        return made

    def unplace(v: int, made: list[int]) -> None:
        node_at[label[v]] = -1
        label[v] = -1
        for d in made:
            used[d] = False

    def solve(k: int) -> bool:
        nonlocal expanded
        while k > 0 and used[k]:
            k -= 1
        if k == 0:
            return True
        expanded += 1
        if expanded > budget:
            raise _BudgetExceeded
        for a in range(q - k + 1):
            b = a + k
            x, y = node_at[a], node_at[b]
            if x >= 0 and y >= 0:
                continue
            if x >= 0 or y >= 0:
                anchor, free = (x, b) if x >= 0 else (y, a)
                for v in bits(adj[anchor]):
                    if label[v] < 0:
                        made = place(v, free)
                        if made is None:
                            continue
                        if solve(k - 1):
                            return True
                        unplace(v, made)
                continue
            for u, v in g.edges():
                if label[u] >= 0 or label[v] >= 0:
                    continue
                for s, t in ((u, v), (v, u)):
                    if k == q and not s < t:
                        continue  # symmetry: label 0 on the smaller index
                    m1 = place(s, a)
                    if m1 is None:
                        continue
                    m2 = place(t, b)
                    if m2 is None:
                        unplace(s, m1)
                        continue
                    if solve(k - 1):
                        return True
                    unplace(t, m2)
                    unplace(s, m1)
        return False

    try:
        ok = solve(q)
    except _BudgetExceeded:
        return SearchOutcome("budget_exceeded", None, expanded)
    if not ok:
        return SearchOutcome("exhausted_none", None, expanded)
    # isolated nodes (never present in Euler graphs) take any spare labels
    spare = iter(x for x in range(q + 1) if node_at[x] < 0)
    for v in range(p):
        if label[v] < 0:
            label[v] = next(spare)
    return SearchOutcome("found", tuple(label), expanded)


def complement_labeling(q: int, labels: Sequence[int]) -> tuple[int, ...]:
    return tuple(q - x for x in labels)


def format_labeling(labels: Sequence[int]) -> str:
    return "".join(f"{v}:{x}\n" for v, x in enumerate(labels))


def parse_labeling(text: str) -> dict[int, int]:
    out = {}
    for line in text.splitlines():
        if line.strip():
            v, x = line.split(":")
            out[int(v)] = int(x)
    return out
