"""Chromatic and local chromatic numbers of Kneser graphs of (hyper)graphs.

``chi_kg_exact`` is a branch and bound over ST-partitions (colour classes of
the Kneser graph) seeded with the matching clique and the greedy
2-approximation.  ``chi_generic`` is a separate colourability search used only
as an independent cross-check.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterator, Optional, Sequence

from .bounds import max_clique
from .graph import AnyGraph, Graph, GraphError, greedy_maximal_matching, kneser_graph_of
from .partition import Part, PartitionError, STPartition, from_coloring, to_coloring

DEFAULT_GUARD_EDGES = 9


class _Deadline(Exception):
    pass


class SolverTimeout(RuntimeError):
    """Raised by callers that need an exact value when a solve ran out of time."""

    def __init__(self, result: "SolverResult"):
        super().__init__(f"solver timed out with interval [{result.lower}, {result.upper}]")
        self.result = result


@dataclass
class SolverResult:
    value: Optional[int]
    lower: int
    upper: Optional[int]
    optimal: bool
    witness: object = None
    nodes: int = 0
    seconds: float = 0.0

    def to_dict(self) -> dict:
        if isinstance(self.witness, STPartition):
            witness = [str(p) for p in self.witness.parts]
        else:
            witness = self.witness
        return {"value": self.value, "lower": self.lower, "upper": self.upper,
                "optimal": self.optimal, "witness": witness, "nodes": self.nodes,
                "seconds": round(self.seconds, 6)}


@dataclass
class ZigzagReport:
    lo: int
    hi: int
    witness_coloring: list
    witness_zigzag: Optional[tuple] = None

    def to_dict(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "witness_coloring": list(self.witness_coloring),
                "witness_zigzag": None if self.witness_zigzag is None
                else [list(side) for side in self.witness_zigzag]}


def _popcount(x: int) -> int:
    return bin(x).count("1")


# ---------------------------------------------------------------------------
# branch and bound

class _ColoringSearch:
    """Minimum colouring by depth-first search with an incumbent.

    The next vertex is the uncoloured one with the most distinct colours among
    its neighbours, ties broken by a fixed static rank.  Colour classes are
    opened in creation order, so each partition is visited once.
    """

    def __init__(self, adj: Sequence[int], rank: Sequence[int], lower: int,
                 incumbent: Optional[list], deadline: Optional[float]):
        self.adj = list(adj)
        self.n = len(adj)
        self.rank = rank
        self.lower = lower
        self.deadline = deadline
        self.nodes = 0
        if incumbent is None:
            self.best_k, self.best = self.n + 1, None
        else:
            self.best_k, self.best = len(set(incumbent)), list(incumbent)
        self.colour = [-1] * self.n
        self.forbid = [0] * self.n
        self.classes: list[int] = []

    def run(self) -> bool:
        """True when the search finished; False on deadline."""
        if self.n == 0:
            self.best_k, self.best = 0, []
            return True
        try:
            self._search(0)
        except _Deadline:
            return False
        return True

    def _pick(self) -> int:
        best_v, best_key = -1, None
        for v in range(self.n):
            if self.colour[v] < 0:
                key = (_popcount(self.forbid[v]), self.rank[v])
                if best_key is None or key > best_key:
                    best_v, best_key = v, key
        return best_v

    def _assign(self, v: int, c: int) -> list[int]:
        self.colour[v] = c
        self.classes[c] |= 1 << v
        bit = 1 << c
        touched = []
        nb = self.adj[v]
        while nb:
            low = nb & -nb
            u = low.bit_length() - 1
            nb ^= low
            if self.colour[u] < 0 and not self.forbid[u] & bit:
                self.forbid[u] |= bit
                touched.append(u)
        return touched

    def _unassign(self, v: int, c: int, touched: list[int]):
        self.colour[v] = -1
        self.classes[c] &= ~(1 << v)
        bit = ~(1 << c)
        for u in touched:
            self.forbid[u] &= bit

    def _search(self, depth: int):
        self.nodes += 1
        if self.deadline is not None and self.nodes & 1023 == 0 \
                and time.monotonic() > self.deadline:
            raise _Deadline
        if depth == self.n:
            self.best_k, self.best = len(self.classes), list(self.colour)
            return
        v = self._pick()
        used = len(self.classes)
        for c in range(used):
            if self.forbid[v] >> c & 1:
                continue
            touched = self._assign(v, c)
            self._search(depth + 1)
            self._unassign(v, c, touched)
            if self.best_k <= self.lower or self.best_k <= len(self.classes):
                return
        if used + 1 < self.best_k:
            self.classes.append(0)
            touched = self._assign(v, used)
            self._search(depth + 1)
            self._unassign(v, used, touched)
            self.classes.pop()


def _deadline(timeout: Optional[float]) -> Optional[float]:
    return None if timeout is None else time.monotonic() + timeout


def chi_kg_exact(h: AnyGraph, timeout: Optional[float] = None) -> SolverResult:
    """Chromatic number of the Kneser graph of ``h``.

    For a graph the witness is an optimal STPartition; for a hypergraph it is
    a colouring indexed like ``h.edge_list``.  An edgeless input gives 0.  On
    timeout the result carries the certified interval and ``optimal=False``.
    """
    start = time.monotonic()
    if h.m == 0:
        witness = STPartition(h, ()) if isinstance(h, Graph) else []
        return SolverResult(0, 0, 0, True, witness)
    kg, labels = kneser_graph_of(h)
    adj = kg.adj_masks
    if isinstance(h, Graph):
        lower = len(greedy_maximal_matching(h))
        greedy = greedy_two_approx(h)
        incumbent = to_coloring(greedy)
        # static rank: larger endpoint degree sum first, then edge order
        deg = [h.degree(v) for v in range(h.n)]
        keys = [(deg[u] + deg[v], -i) for i, (u, v) in enumerate(labels)]
    else:
        lower = max_clique(kg)[0]
        incumbent = None
        keys = [(_popcount(adj[i]), -i) for i in range(kg.n)]
    order = sorted(range(kg.n), key=keys.__getitem__)
    rank = [0] * kg.n
    for r, i in enumerate(order):
        rank[i] = r
    search = _ColoringSearch(adj, rank, lower, incumbent, _deadline(timeout))
    finished = search.run()
    elapsed = time.monotonic() - start
    colouring = _relabel(search.best)
    if isinstance(h, Graph):
        witness = from_coloring(h, colouring)
        assert lower <= search.best_k <= len(greedy), (lower, search.best_k, len(greedy))
    else:
        witness = colouring
    if not finished:
        return SolverResult(None, lower, search.best_k, False, witness, search.nodes, elapsed)
    return SolverResult(search.best_k, search.best_k, search.best_k, True, witness,
                        search.nodes, elapsed)


def _relabel(colouring: Sequence[int]) -> list[int]:
    """Renumber colours 0, 1, ... in order of first appearance."""
    seen: dict[int, int] = {}
    return [seen.setdefault(c, len(seen)) for c in colouring]


def chi_generic(g: Graph, timeout: Optional[float] = None) -> SolverResult:
    """Chromatic number of an arbitrary graph.

    Tries ``k = omega, omega + 1, ...`` and decides k-colourability by plain
    backtracking over a degree-sorted static order.
    """
    start = time.monotonic()
    deadline = _deadline(timeout)
    if g.n == 0:
        return SolverResult(0, 0, 0, True, [])
    omega = max_clique(g)[0]
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    earlier = {v: [u for u in g.adj[v] if order.index(u) < order.index(v)] for v in order}
    nodes = 0

    def colourable(k: int) -> Optional[dict]:
        nonlocal nodes
        colour: dict[int, int] = {}

        def place(i: int, top: int) -> bool:
            nonlocal nodes
            nodes += 1
            if deadline is not None and nodes % 1024 == 0 and time.monotonic() > deadline:
                raise _Deadline
            if i == len(order):
                return True
            v = order[i]
            taken = {colour[u] for u in earlier[v]}
            for c in range(min(k, top + 2)):
                if c not in taken:
                    colour[v] = c
                    if place(i + 1, max(top, c)):
                        return True
                    del colour[v]
            return False

        return dict(colour) if place(0, -1) else None

    k = max(omega, 1)
    while True:
        try:
            found = colourable(k)
        except _Deadline:
            return SolverResult(None, k, g.n, False, None, nodes, time.monotonic() - start)
        if found is not None:
            witness = [found[v] for v in range(g.n)]
            return SolverResult(k, k, k, True, witness, nodes, time.monotonic() - start)
        k += 1


def greedy_two_approx(h: Graph) -> STPartition:
    """Stars centred at the endpoints of a greedy maximal matching.

    Each edge goes to the smallest matched endpoint it contains; stars left
    empty are dropped.  At most twice the optimum number of parts.
    """
    if h.m == 0:
        raise GraphError("greedy_two_approx needs at least one edge")
    matched = sorted(v for e in greedy_maximal_matching(h) for v in e)
    stars: dict[int, set] = {c: set() for c in matched}
    for u, v in h.edge_list:
        centre = next(c for c in matched if c in (u, v))
        stars[centre].add((u, v))
    return STPartition(h, tuple(Part.star(c, stars[c]) for c in matched if stars[c]))


# ---------------------------------------------------------------------------
# enumeration and the local chromatic number

def _guard(h: Graph, guard_edges: int):
    if h.m > guard_edges:
        raise GraphError(f"{h.m} edges exceeds the enumeration guard of {guard_edges}; "
                         "use the sampling verifier instead")


def _iter_colorings(adj: Sequence[int]) -> Iterator[list[int]]:
    """Every proper colouring up to renaming colours (restricted growth form)."""
    n = len(adj)
    colour = [-1] * n
    classes: list[int] = []

    def rec(i: int):
        if i == n:
            yield list(colour)
            return
        for c in range(len(classes)):
            if not classes[c] & adj[i]:
                colour[i] = c
                classes[c] |= 1 << i
                yield from rec(i + 1)
                classes[c] &= ~(1 << i)
        colour[i] = len(classes)
        classes.append(1 << i)
        yield from rec(i + 1)
        classes.pop()
        colour[i] = -1

    yield from rec(0)


def enumerate_st_partitions(h: Graph, guard_edges: int = DEFAULT_GUARD_EDGES
                            ) -> Iterator[STPartition]:
    """Every ST-partition of ``h`` exactly once (single-edge stars centred on
    their smaller endpoint)."""
    _guard(h, guard_edges)
    if h.m == 0:
        yield STPartition(h, ())
        return
    kg, labels = kneser_graph_of(h)
    for colouring in _iter_colorings(kg.adj_masks):
        yield from_coloring(h, colouring)


def local_chromatic_exact(h: Graph, guard_edges: int = DEFAULT_GUARD_EDGES) -> int:
    """Local chromatic number of KG(h): the least, over all proper colourings,
    of the largest number of colours on a closed neighbourhood."""
    _guard(h, guard_edges)
    if h.m == 0:
        return 0
    kg, _ = kneser_graph_of(h)
    n = kg.n
    closed = [kg.adj_masks[v] | 1 << v for v in range(n)]
    adj = kg.adj_masks
    colour = [-1] * n
    classes: list[int] = []
    best = [n + 1]

    def seen(v: int) -> int:
        # colours already present on N[v]
        return sum(1 for cls in classes if cls & closed[v])

    def rec(i: int):
        if i == n:
            worst = max(seen(v) for v in range(n))
            best[0] = min(best[0], worst)
            return
        options = [c for c in range(len(classes)) if not classes[c] & adj[i]]
        options.append(len(classes))
        for c in options:
            if c == len(classes):
                classes.append(0)
            classes[c] |= 1 << i
            colour[i] = c
            # counts only grow as more vertices are coloured
            if all(seen(v) < best[0] for v in range(n) if closed[v] >> i & 1):
                rec(i + 1)
            classes[c] &= ~(1 << i)
            colour[i] = -1
            if c == len(classes) - 1 and not classes[c]:
                classes.pop()

    rec(0)
    return best[0]


# ---------------------------------------------------------------------------
# zig-zag bipartite subgraphs

def _check_proper(g: Graph, c: Sequence[int]):
    if len(c) != g.n:
        raise PartitionError(f"colouring has {len(c)} entries for {g.n} vertices")
    if any(x < 1 for x in c):
        raise PartitionError("zig-zag colours are numbered from 1")
    for u, v in g.edge_list:
        if c[u] == c[v]:
            raise PartitionError(f"improper colouring: edge {(u, v)} has colour {c[u]} twice")


def max_zigzag(g: Graph, c: Sequence[int], t: int) -> Optional[tuple[tuple, tuple]]:
    """Complete bipartite ``K_{floor(t/2), ceil(t/2)}`` with distinct odd colours
    on one side and distinct even colours on the other, or None.

    Either side may hold the odd colours.  Returned as ``(odd_side, even_side)``.
    """
    _check_proper(g, c)
    if t <= 0:
        return (), ()
    small, large = t // 2, (t + 1) // 2
    odd = [v for v in range(g.n) if c[v] % 2 == 1]
    even = [v for v in range(g.n) if c[v] % 2 == 0]
    adj = g.adj_masks
    for n_odd, n_even in {(large, small), (small, large)}:
        found = _zigzag_side(odd, even, n_odd, n_even, adj, c)
        if found is not None:
            return found
    return None


def _zigzag_side(odd, even, n_odd, n_even, adj, c):
    even_mask = sum(1 << v for v in even)

    def colours_in(mask: int) -> dict[int, int]:
        out = {}
        for v in even:
            if mask >> v & 1:
                out.setdefault(c[v], v)
        return out

    def rec(start: int, chosen: list, common: int, used: set):
        avail = colours_in(common)
        if len(avail) < n_even:
            return None
        if len(chosen) == n_odd:
            picks = sorted(avail.items())[:n_even]
            return tuple(chosen), tuple(sorted(v for _, v in picks))
        for i in range(start, len(odd)):
            v = odd[i]
            if c[v] in used:
                continue
            res = rec(i + 1, chosen + [v], common & adj[v], used | {c[v]})
            if res is not None:
                return res
        return None

    return rec(0, [], even_mask, set())


def largest_zigzag(g: Graph, c: Sequence[int]) -> tuple[int, Optional[tuple]]:
    """Largest ``t`` for which a zig-zag witness exists, with that witness."""
    best_t, best_w = 0, ((), ())
    for t in range(1, len(set(c)) + 1):
        w = max_zigzag(g, c, t)
        if w is None:
            break
        best_t, best_w = t, w
    return best_t, best_w


def xind_sandwich(g: Graph, colorings: Sequence[Sequence[int]]) -> ZigzagReport:
    """Clique lower bound and zig-zag upper bound on the cross-index bound + 2.

    ``hi`` is the smallest, over the supplied colourings, of the largest ``t``
    admitting a zig-zag witness; the colouring attaining it is returned.
    """
    if not colorings:
        raise ValueError("need at least one colouring")
    lo = max_clique(g)[0]
    best = None
    for col in colorings:
        t, w = largest_zigzag(g, col)
        if best is None or t < best[0]:
            best = (t, list(col), w)
    return ZigzagReport(lo, best[0], best[1], best[2])


def min_element_coloring(h: AnyGraph) -> list[int]:
    """Colour each edge of ``h`` by its smallest vertex, counting from 1."""
    return [min(e) + 1 for e in h.edge_list]


def search_zigzag_coloring(g: Graph, max_colors: int) -> Optional[ZigzagReport]:
    """Over all proper colourings with values in ``1..max_colors``, one whose
    largest zig-zag is smallest.  Exhaustive, so only for tiny graphs."""
    best = None
    for col in _iter_colorings(g.adj_masks):
        k = max(col) + 1
        if k > max_colors:
            continue
        # every injective assignment of values to classes matters for parity
        for values in _injections(k, max_colors):
            c = [values[x] for x in col]
            t, w = largest_zigzag(g, c)
            if best is None or t < best.hi:
                best = ZigzagReport(max_clique(g)[0], t, c, w)
    return best


def _injections(k: int, top: int) -> Iterator[tuple]:
    yield from permutations(range(1, top + 1), k)

