"""Deterministic constructors for the graph and hypergraph families in use.

Ground sets are ``0..n-1``; circular distances are computed on these labels.
"""

from __future__ import annotations

from itertools import combinations

from .graph import AnyGraph, Graph, GraphError, Hypergraph, build_graph, build_hypergraph, \
    disjoint_union, join


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return build_graph(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return build_graph(n, [])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    if n < 1:
        raise GraphError("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_cycles(m: int, length: int = 7) -> Graph:
    """``m`` vertex-disjoint cycles of the given length (7 by default)."""
    if m < 1:
        raise GraphError("need at least one cycle")
    return disjoint_union([cycle(length)] * m)


def butterfly() -> Graph:
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def co_claw() -> Graph:
    return build_graph(4, [(0, 1), (0, 2), (1, 2)])


def _stable_pair(i: int, j: int, n: int, s: int) -> bool:
    return s <= abs(i - j) <= n - s


def web(n: int, s: int) -> Graph:
    """Web graph: ``i ~ j`` exactly when ``s <= |i - j| <= n - s``."""
    if s < 1 or n < 2 * s:
        raise GraphError(f"web({n},{s}) needs s >= 1 and n >= 2s")
    return build_graph(n, [(i, j) for i, j in combinations(range(n), 2)
                           if _stable_pair(i, j, n, s)])


def stable_kneser_hypergraph(n: int, k: int, s: int) -> Hypergraph:
    """All ``s``-stable ``k``-subsets of ``0..n-1`` as hyperedges."""
    if k < 1 or s < 1 or n < k * s:
        raise GraphError(f"stable_kneser_hypergraph({n},{k},{s}) needs n >= k*s")
    edges = [c for c in combinations(range(n), k)
             if all(_stable_pair(i, j, n, s) for i, j in combinations(c, 2))]
    return build_hypergraph(n, edges)


def complete_uniform_hypergraph(n: int, r: int) -> Hypergraph:
    if not 1 <= r <= n:
        raise GraphError(f"complete_uniform_hypergraph({n},{r}) needs 1 <= r <= n")
    return build_hypergraph(n, combinations(range(n), r))


def gadget(h: AnyGraph, k: int, r: int = 2) -> AnyGraph:
    """Join of ``h`` with ``k`` disjoint copies of the complete ``r``-uniform
    hypergraph on ``2r - 1`` vertices (``k`` triangles when ``r = 2``).

    The copies are first put side by side and the result joined with ``h`` as a
    single operand, so there are no cross edges between copies.
    """
    if k < 1:
        raise GraphError("gadget needs k >= 1")
    if r < 2:
        raise GraphError("gadget needs r >= 2")
    if isinstance(h, Graph):
        if r != 2:
            raise GraphError("a graph gadget uses r = 2")
        block = complete(3)
    else:
        if not h.is_uniform(r):
            raise GraphError(f"hypergraph is not {r}-uniform")
        block = complete_uniform_hypergraph(2 * r - 1, r)
    result = join(h, disjoint_union([block] * k))
    expected = h.m + k * block.m + h.n * k * block.n
    assert result.m == expected, (result.m, expected)
    return result


def doubled(h: Graph, x: int) -> Graph:
    """Two copies of ``h`` linked by an edge between the two copies of ``x``."""
    if not 0 <= x < h.n:
        raise GraphError(f"vertex {x} not in graph")
    if h.m == 0 or not h.is_connected():
        raise GraphError("doubled() needs a connected graph with an edge")
    two = disjoint_union([h, h])
    return build_graph(2 * h.n, list(two.edges) + [(x, h.n + x)])


FAMILIES = {
    "complete": complete,
    "empty": empty,
    "cycle": cycle,
    "path": path,
    "cycles": disjoint_cycles,
    "web": web,
    "stable": stable_kneser_hypergraph,
    "uniform": complete_uniform_hypergraph,
    "butterfly": butterfly,
    "coclaw": co_claw,
}


def from_spec(spec: str) -> AnyGraph:
    """Build a family member from an inline spec such as ``web:7,3``."""
    name, _, params = spec.partition(":")
    name = name.strip().lower()
    if name not in FAMILIES:
        raise GraphError(f"unknown family {name!r} (known: {', '.join(sorted(FAMILIES))})")
    try:
        args = [int(p) for p in params.split(",") if p.strip()]
    except ValueError:
        raise GraphError(f"non-integer parameter in {spec!r}") from None
    try:
        return FAMILIES[name](*args)
    except TypeError:
        raise GraphError(f"wrong number of parameters in {spec!r}") from None
