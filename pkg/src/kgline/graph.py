"""Graphs, hypergraphs and the constructions used throughout the package.

Vertices are always the integers ``0..n-1``.  Graph edges are stored as
ordered pairs ``(u, v)`` with ``u < v``; hypergraph edges as frozensets.
Multigraphs are not modelled: parallel copies of an edge only duplicate a
vertex of the Kneser graph without adding edges between the copies, so the
chromatic number is unchanged and callers can pass the underlying simple
graph instead.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence, Union

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graph or hypergraph input."""


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop edge ({u}, {v})")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            norm.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        """Edges in lexicographic order; this order indexes Kneser-graph vertices."""
        return tuple(sorted(self.edges))

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def incident(self, x: int) -> frozenset:
        """The set of edges incident to ``x``."""
        return frozenset(_norm_edge(x, y) for y in self.adj[x])

    def closed_neighborhood(self, v: int) -> frozenset:
        return self.adj[v] | {v}

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled onto ``0..k-1`` in increasing order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return Graph(len(keep), frozenset(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index))

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [], deque([s])
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edge_list)})"


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        norm = set()
        for e in self.edges:
            e = frozenset(e)
            if not e:
                raise GraphError("empty hyperedge")
            bad = [v for v in e if not 0 <= v < self.n]
            if bad:
                raise GraphError(f"hyperedge {sorted(e)} has vertices outside 0..{self.n - 1}")
            norm.add(e)
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_graph(cls, g: Graph) -> "Hypergraph":
        return cls(g.n, frozenset(frozenset(e) for e in g.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(tuple(sorted(e)) for e in self.edges))

    def uniformity(self) -> Optional[int]:
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def is_uniform(self, r: int) -> bool:
        return all(len(e) == r for e in self.edges)

    def as_graph(self) -> Graph:
        if not self.is_uniform(2):
            raise GraphError("hypergraph is not 2-uniform")
        return Graph(self.n, frozenset(tuple(sorted(e)) for e in self.edges))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, edges={[list(e) for e in self.edge_list]})"


AnyGraph = Union[Graph, Hypergraph]


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate and canonicalise an edge list (duplicates are merged)."""
    pairs = []
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"edge {tuple(e)} does not have two endpoints")
        pairs.append((int(e[0]), int(e[1])))
    return Graph(n, frozenset(pairs))


def build_hypergraph(n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    return Hypergraph(n, frozenset(frozenset(int(v) for v in e) for e in edges))


def edge_sets(h: AnyGraph) -> list[frozenset]:
    """Edges of a graph or hypergraph as vertex sets, in canonical order."""
    return [frozenset(e) for e in h.edge_list]


def edge_masks(h: AnyGraph) -> list[int]:
    masks = []
    for e in h.edge_list:
        m = 0
        for v in e:
            m |= 1 << v
        masks.append(m)
    return masks


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(
        (u, v) for u, v in combinations(range(g.n), 2) if (u, v) not in g.edges))


def kneser_graph_of(h: AnyGraph) -> tuple[Graph, tuple]:
    """Kneser graph of ``h`` and the list mapping its vertices to edges of ``h``.

    Vertex ``i`` of the result is ``h.edge_list[i]``; two vertices are adjacent
    when the corresponding edges are disjoint.  For a graph this is the
    complement of its line graph.
    """
    if h.m == 0:
        raise GraphError("Kneser graph of an edgeless (hyper)graph has no vertices")
    labels = h.edge_list
    masks = edge_masks(h)
    kg_edges = [(i, j) for i, j in combinations(range(len(masks)), 2)
                if not masks[i] & masks[j]]
    return Graph(len(labels), frozenset(kg_edges)), labels


def _shifted(h: AnyGraph, offset: int) -> list:
    return [tuple(v + offset for v in e) for e in h.edge_list]


def join(a: AnyGraph, b: AnyGraph) -> AnyGraph:
    """Disjoint union of ``a`` and ``b`` plus every 2-edge between them.

    ``b`` is relabelled onto ``v(a)..v(a)+v(b)-1``.  The result is a Graph when
    both operands are graphs, otherwise a Hypergraph.
    """
    edges = _shifted(a, 0) + _shifted(b, a.n)
    edges += [(u, a.n + w) for u in range(a.n) for w in range(b.n)]
    n = a.n + b.n
    if isinstance(a, Graph) and isinstance(b, Graph):
        return build_graph(n, edges)
    return build_hypergraph(n, edges)


def disjoint_union(parts: Sequence[AnyGraph]) -> AnyGraph:
    edges, offset = [], 0
    for p in parts:
        edges += _shifted(p, offset)
        offset += p.n
    if all(isinstance(p, Graph) for p in parts):
        return build_graph(offset, edges)
    return build_hypergraph(offset, edges)


# ---------------------------------------------------------------------------
# induced patterns

def _pattern_spec(pattern: str) -> tuple[int, int, tuple[int, ...]]:
    """(vertex count, edge count, sorted degree sequence) of a named pattern.

    For the supported patterns the degree sequence of a k-vertex induced
    subgraph determines it up to isomorphism.
    """
    if pattern == "co-claw":
        return 4, 3, (0, 2, 2, 2)
    if pattern == "claw":
        return 4, 3, (1, 1, 1, 3)
    if pattern == "butterfly":
        return 5, 6, (2, 2, 2, 2, 4)
    if pattern.startswith("K"):
        t = int(pattern[1:])
        return t, t * (t - 1) // 2, (t - 1,) * t
    raise ValueError(f"unknown pattern {pattern!r}")


def find_induced(g: Graph, pattern: str) -> Optional[tuple[int, ...]]:
    """Lexicographically first vertex set inducing ``pattern`` in ``g``, or None.

    ``pattern`` is one of ``"co-claw"``, ``"butterfly"``, ``"claw"`` or ``"K<t>"``.
    """
    k, m, degs = _pattern_spec(pattern)
    if k > g.n:
        return None
    min_deg, max_deg = degs[0], degs[-1]
    # a vertex of the pattern with degree d needs host degree >= d
    candidates = [v for v in range(g.n) if g.degree(v) >= min_deg]
    masks = g.adj_masks
    for combo in combinations(candidates, k):
        sub = 0
        for v in combo:
            sub |= 1 << v
        local = [bin(masks[v] & sub).count("1") for v in combo]
        if sum(local) != 2 * m or max(local) != max_deg:
            continue
        if tuple(sorted(local)) == degs:
            return combo
    return None


def is_two_colorable(h: AnyGraph) -> Optional[dict[int, int]]:
    """A vertex 2-colouring with no monochromatic edge, or None.

    Graphs use breadth-first bipartiteness; hypergraphs a backtracking search.
    Singleton edges are always monochromatic.
    """
    if isinstance(h, Graph):
        return _bipartition(h)
    edges = [tuple(e) for e in h.edge_list]
    if any(len(e) == 1 for e in edges):
        return None
    # vertices that occur in some edge, most frequent first
    occ = {}
    for e in edges:
        for v in e:
            occ[v] = occ.get(v, 0) + 1
    order = sorted(occ, key=lambda v: (-occ[v], v))
    by_last = {v: [] for v in order}
    pos = {v: i for i, v in enumerate(order)}
    for e in edges:
        by_last[max(e, key=pos.__getitem__)].append(e)
    colour: dict[int, int] = {}

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c in (0, 1):
            colour[v] = c
            if all(len({colour[u] for u in e}) == 2 for e in by_last[v]) and extend(i + 1):
                return True
        del colour[v]
        return False

    if not extend(0):
        return None
    return {v: colour.get(v, 0) for v in range(h.n)}


def _bipartition(g: Graph) -> Optional[dict[int, int]]:
    colour = {}
    for s in range(g.n):
        if s in colour:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return None
    return colour


def greedy_maximal_matching(g: Graph) -> list[Edge]:
    """Scan edges in lexicographic order and keep each one disjoint from those kept."""
    used = set()
    matching = []
    for u, v in g.edge_list:
        if u not in used and v not in used:
            matching.append((u, v))
            used.update((u, v))
    return matching


# ---------------------------------------------------------------------------
# brute-force isomorphism, for small graphs only

def canonical_form(g: Graph) -> tuple[int, tuple[Edge, ...]]:
    """Lexicographically least relabelled edge list over all vertex permutations."""
    if g.n > 8:
        raise GraphError("brute-force canonical form is limited to 8 vertices")
    best = None
    for perm in permutations(range(g.n)):
        relabelled = tuple(sorted(_norm_edge(perm[u], perm[v]) for u, v in g.edges))
        if best is None or relabelled < best:
            best = relabelled
    return g.n, best or ()


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    if sorted(map(len, a.adj)) != sorted(map(len, b.adj)):
        return False
    return canonical_form(a) == canonical_form(b)
