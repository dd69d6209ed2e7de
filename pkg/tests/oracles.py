"""Naive reference implementations used only by the tests.

Each one enumerates everything it can instead of searching cleverly, and none
of them imports the solver or bounds code it is compared against.
"""

from itertools import combinations, permutations, product

from sympy.utilities.iterables import multiset_partitions


def subsets(n):
    for k in range(n + 1):
        yield from combinations(range(n), k)


def vertex_cover(n, edges):
    return next(len(c) for c in subsets(n) if all(set(c) & set(e) for e in edges))


def independence(n, edges):
    best = 0
    for s in subsets(n):
        if all(not set(e) <= set(s) for e in edges):
            best = max(best, len(s))
    return best


def two_colorable(vertices, edges):
    vertices = sorted(vertices)
    for bits in product((0, 1), repeat=len(vertices)):
        col = dict(zip(vertices, bits))
        if all(len({col[v] for v in e}) == 2 for e in edges):
            return True
    return False


def cd2(n, edges):
    for removed in subsets(n):
        left = set(range(n)) - set(removed)
        kept = [e for e in edges if set(e) <= left]
        if two_colorable(left, kept):
            return len(removed)


def kneser_adjacency(edges):
    m = len(edges)
    return {(i, j) for i in range(m) for j in range(m)
            if i != j and not set(edges[i]) & set(edges[j])}


def chromatic_number(n, adjacent_pairs):
    """Smallest k with a proper k-colouring, by trying every assignment."""
    if n == 0:
        return 0
    for k in range(1, n + 1):
        for col in product(range(k), repeat=n):
            if all(col[i] != col[j] for i, j in adjacent_pairs):
                return k


def kg_chromatic(edges):
    return chromatic_number(len(edges), kneser_adjacency(edges))


def intersecting_set_partitions(edges):
    """Set partitions of the edges whose blocks are pairwise intersecting."""
    out = []
    for part in multiset_partitions(list(range(len(edges)))):
        if all(set(edges[a]) & set(edges[b]) for block in part for a, b in combinations(block, 2)):
            out.append(part)
    return out


def is_iso(n, edges_a, edges_b):
    ea = {frozenset(e) for e in edges_a}
    eb = {frozenset(e) for e in edges_b}
    if len(ea) != len(eb):
        return False
    return any({frozenset(perm[v] for v in e) for e in ea} == eb
               for perm in permutations(range(n)))


PATTERNS = {
    "co-claw": (4, [(0, 1), (0, 2), (1, 2)]),
    "claw": (4, [(0, 1), (0, 2), (0, 3)]),
    "butterfly": (5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]),
    "K3": (3, [(0, 1), (0, 2), (1, 2)]),
    "K4": (4, list(combinations(range(4), 2))),
}


def induced_pattern_exists(n, edges, pattern):
    k, pat = PATTERNS[pattern]
    es = {frozenset(e) for e in edges}
    for combo in combinations(range(n), k):
        index = {v: i for i, v in enumerate(combo)}
        sub = [(index[u], index[v]) for u, v in combinations(combo, 2) if frozenset((u, v)) in es]
        if is_iso(k, sub, pat):
            return True
    return False


def zigzag_exists(n, adjacent, colour, t):
    """Brute force over all vertex subsets for both side orientations."""
    small, large = t // 2, (t + 1) // 2
    odd = [v for v in range(n) if colour[v] % 2]
    even = [v for v in range(n) if not colour[v] % 2]
    for a_size, b_size in {(large, small), (small, large)}:
        for a in combinations(odd, a_size):
            if len({colour[v] for v in a}) < a_size:
                continue
            for b in combinations(even, b_size):
                if len({colour[v] for v in b}) < b_size:
                    continue
                if all((u, v) in adjacent or (v, u) in adjacent for u in a for v in b):
                    return True
    return False
