"""Slow, obviously-correct reference computations for cross-checking."""
from itertools import combinations, permutations


def edge_code(p, edges, perm):
    """Sorted relabeled edge tuple; the minimum over all perms is a certificate."""
    return tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))


def iso_certificate(p, edges):
    return min(edge_code(p, edges, perm) for perm in permutations(range(p)))


def brute_euler_classes(p):
    """Certificates of all connected graphs on p nodes with every degree even and >= 2."""
    pairs = list(combinations(range(p), 2))
    out = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        deg = [0] * p
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if any(d == 0 or d % 2 for d in deg):
            continue
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for u, v in edges:
                for a, b in ((u, v), (v, u)):
                    if a == x and b not in seen:
                        seen.add(b)
                        stack.append(b)
        if len(seen) == p:
            out.add(iso_certificate(p, edges))
    return out


def brute_cycle_count(p, edges):
    """Count simple cycles by checking every cyclic node sequence."""
    adj = {frozenset(e) for e in edges}
    count = 0
    lengths = set()
    for k in range(3, p + 1):
        for nodes in combinations(range(p), k):
            first, rest = nodes[0], nodes[1:]
            for order in permutations(rest):
                if order[0] > order[-1]:
                    continue  # each cycle once per direction
                seq = (first,) + order
                if all(frozenset((seq[i], seq[(i + 1) % k])) in adj for i in range(k)):
                    count += 1
                    lengths.add(k)
    return count, lengths


def brute_isomorphic(p, e1, e2):
    target = edge_code(p, e2, list(range(p)))
    return any(edge_code(p, e1, perm) == target for perm in permutations(range(p)))


def brute_graceful(p, edges):
    """True iff some injective labeling into 0..q is graceful."""
    q = len(edges)
    want = list(range(1, q + 1))
    for labels in permutations(range(q + 1), p):
        if sorted(abs(labels[u] - labels[v]) for u, v in edges) == want:
            return True
    return False


def brute_iso_classes(p):
    """Class id for every labeled graph on p nodes, by sweeping permutation orbits.

    Returns (pairs, cls) where bit i of a mask is the edge pairs[i].
    """
    pairs = list(combinations(range(p), 2))
    index = {e: i for i, e in enumerate(pairs)}
    perm_maps = []
    for perm in permutations(range(p)):
        perm_maps.append([index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs])
    cls = [-1] * (1 << len(pairs))
    n = 0
    for mask in range(len(cls)):
        if cls[mask] >= 0:
            continue
        for pm in perm_maps:
            img = 0
            for i, j in enumerate(pm):
                if mask >> i & 1:
                    img |= 1 << j
            cls[img] = n
        n += 1
    return pairs, cls
