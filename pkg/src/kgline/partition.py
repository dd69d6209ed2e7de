"""ST-partitions: edge partitions of a graph into stars and triangles.

An ST-partition of ``H`` is the same thing as a proper colouring of the
Kneser graph of ``H``: every colour class is a family of pairwise
intersecting edges, i.e. a star or a triangle.  The rewrites here remove
triangles, merge stars sharing a center, and rewire pairs of two-edge stars,
each without making any edge see more colours.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .graph import Edge, Graph, kneser_graph_of

STAR = "star"
TRIANGLE = "triangle"


class PartitionError(ValueError):
    """Invalid partition, improper colouring or unmet rewrite precondition."""


def _e(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _is_triangle(edges) -> bool:
    if len(edges) != 3:
        return False
    verts = set()
    for e in edges:
        verts.update(e)
    return len(verts) == 3


@dataclass(frozen=True)
class Part:
    kind: str
    edges: frozenset
    center: Optional[int] = None

    @classmethod
    def star(cls, center: int, edges: Iterable) -> "Part":
        return cls(STAR, frozenset(_e(*e) for e in edges), center)

    @classmethod
    def triangle(cls, edges: Iterable) -> "Part":
        return cls(TRIANGLE, frozenset(_e(*e) for e in edges))

    @property
    def is_star(self) -> bool:
        return self.kind == STAR

    @property
    def is_triangle(self) -> bool:
        return self.kind == TRIANGLE

    def vertices(self) -> frozenset:
        return frozenset(v for e in self.edges for v in e)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def problem(self) -> Optional[str]:
        if not self.edges:
            return "empty part"
        if self.is_star:
            if self.center is None:
                return "star without a center"
            stray = [e for e in self.sorted_edges() if self.center not in e]
            if stray:
                return f"star {self.center} has edge {stray[0]} not containing its center"
            return None
        if self.is_triangle:
            if not _is_triangle(self.edges):
                return f"part {self.sorted_edges()} is not a triangle"
            return None
        return f"unknown part kind {self.kind!r}"

    def __str__(self):
        body = " ".join(f"{u}-{v}" for u, v in self.sorted_edges())
        if self.is_star:
            return f"star {self.center} : {body}"
        return f"triangle : {body}"


def classify_block(edges: Iterable[Edge]) -> Part:
    """Turn a family of pairwise intersecting edges into a Part.

    Three edges on three vertices form a triangle; anything else must share a
    vertex, which becomes the center (the smaller endpoint for a single edge).
    """
    edges = frozenset(_e(*e) for e in edges)
    if not edges:
        raise PartitionError("empty colour class")
    ordered = sorted(edges)
    for i, f in enumerate(ordered):
        for g in ordered[i + 1:]:
            if not set(f) & set(g):
                raise PartitionError(f"improper colouring: disjoint edges {f} and {g} share a colour")
    if _is_triangle(edges):
        return Part.triangle(edges)
    common = set(ordered[0])
    for e in ordered[1:]:
        common &= set(e)
    return Part.star(min(common), edges)


@dataclass(frozen=True)
class STPartition:
    host: Graph
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    @property
    def triangle_count(self) -> int:
        return sum(p.is_triangle for p in self.parts)

    @property
    def star_count(self) -> int:
        return sum(p.is_star for p in self.parts)

    def part_index(self) -> dict[Edge, int]:
        return {e: i for i, p in enumerate(self.parts) for e in p.edges}

    def family(self) -> frozenset:
        """Unordered family of edge sets, ignoring kinds and centers."""
        return frozenset(p.edges for p in self.parts)

    def with_parts(self, parts: Iterable[Part]) -> "STPartition":
        return STPartition(self.host, tuple(parts))

    def __str__(self):
        return "\n".join(str(p) for p in self.parts)


def validate(p: STPartition) -> Optional[str]:
    """Return None when ``p`` is a valid ST-partition, else the first violation."""
    seen: dict[Edge, int] = {}
    for i, part in enumerate(p.parts):
        msg = part.problem()
        if msg:
            return f"part {i}: {msg}"
        for e in part.sorted_edges():
            if e not in p.host.edges:
                return f"part {i}: edge {e} is not an edge of the host graph"
            if e in seen:
                return f"edge {e} lies in parts {seen[e]} and {i}"
            seen[e] = i
    missing = sorted(p.host.edges - seen.keys())
    if missing:
        return f"edge {missing[0]} is not covered"
    return None


def require_valid(p: STPartition) -> STPartition:
    msg = validate(p)
    if msg:
        raise PartitionError(msg)
    return p


def to_coloring(p: STPartition) -> list[int]:
    """Colour of each Kneser-graph vertex (host edge in ``edge_list`` order)."""
    require_valid(p)
    index = p.part_index()
    return [index[e] for e in p.host.edge_list]


def from_coloring(h: Graph, coloring) -> STPartition:
    """Group host edges by colour and classify each class as a star or triangle.

    ``coloring`` is a sequence indexed like ``h.edge_list`` or a mapping from
    that index.  Parts are ordered by colour value.
    """
    classes: dict[int, list[Edge]] = {}
    for i, e in enumerate(h.edge_list):
        classes.setdefault(coloring[i], []).append(e)
    return STPartition(h, tuple(classify_block(classes[c]) for c in sorted(classes)))


# ---------------------------------------------------------------------------
# triangle minimisation

def _center_rewrite(parts: list[Part]) -> Optional[list[Part]]:
    """Fold a triangle into a star centred on one of its vertices."""
    for ti, t in enumerate(parts):
        if not t.is_triangle:
            continue
        for si, s in enumerate(parts):
            if s.is_star and s.center in t.vertices():
                x = s.center
                at_x = [e for e in t.edges if x in e]
                (rest,) = [e for e in t.edges if x not in e]
                new = list(parts)
                new[si] = Part.star(x, s.edges | set(at_x))
                new[ti] = Part.star(min(rest), [rest])
                return new
    return None


def _triangle_edge_circuit(parts: list[Part]) -> Optional[list[int]]:
    """Shortest circuit made of triangle-part edges that is not itself a part.

    Returned as a vertex cycle ``[c0, c1, ..., c_{m-1}]``.
    """
    owner = {e: i for i, p in enumerate(parts) if p.is_triangle for e in p.edges}
    nbrs: dict[int, set] = {}
    for u, v in owner:
        nbrs.setdefault(u, set()).add(v)
        nbrs.setdefault(v, set()).add(u)
    best = None
    for (u, v), ti in sorted(owner.items()):
        # shortest u-v path avoiding every edge of the triangle owning uv
        banned = parts[ti].edges
        prev = {u: None}
        queue = deque([u])
        while queue and v not in prev:
            x = queue.popleft()
            for y in sorted(nbrs[x]):
                if y not in prev and _e(x, y) not in banned:
                    prev[y] = x
                    queue.append(y)
        if v in prev:
            cyc = [v]
            while prev[cyc[-1]] is not None:
                cyc.append(prev[cyc[-1]])
            if best is None or len(cyc) < len(best):
                best = cyc
    return best


def _circuit_rewrite(parts: list[Part]) -> Optional[list[Part]]:
    cyc = _triangle_edge_circuit(parts)
    if cyc is None:
        return None
    owner = {e: i for i, p in enumerate(parts) if p.is_triangle for e in p.edges}
    # shortcut two consecutive edges of one triangle by its third edge until
    # every triangle meets the circuit in at most one edge
    changed = True
    while changed:
        changed = False
        m = len(cyc)
        for i in range(m):
            a, b, c = cyc[i - 1], cyc[i], cyc[(i + 1) % m]
            if m > 3 and owner[_e(a, b)] == owner[_e(b, c)]:
                del cyc[i]
                changed = True
                break
    m = len(cyc)
    ring = [_e(cyc[i], cyc[(i + 1) % m]) for i in range(m)]
    touched = [owner[e] for e in ring]
    if len(set(touched)) != m:
        raise PartitionError(f"circuit {cyc} still meets a triangle in two edges")
    gained: dict[int, set] = {c: set() for c in cyc}
    for i, e in enumerate(ring):
        ci, cj = cyc[i], cyc[(i + 1) % m]
        tri = parts[touched[i]]
        (w,) = tri.vertices() - {ci, cj}
        gained[ci].update({e, _e(ci, w)})
        gained[cj].add(_e(cj, w))
    new = list(parts)
    for slot, c in zip(sorted(touched), cyc):
        new[slot] = Part.star(c, gained[c])
    return new


def iter_triangle_rewrites(p: STPartition) -> Iterator[STPartition]:
    """Yield the successive partitions produced while removing triangles.

    Center rewrites (a triangle touching a star center) are applied until none
    is left, then one circuit rewrite, and so on.  Every yielded partition is
    re-validated.
    """
    require_valid(p)
    parts = list(p.parts)
    while True:
        new = _center_rewrite(parts)
        if new is None:
            new = _circuit_rewrite(parts)
        if new is None:
            return
        result = p.with_parts(new)
        msg = validate(result)
        if msg:
            raise PartitionError(f"triangle rewrite produced an invalid partition: {msg}")
        parts = new
        yield result


def minimize_triangles(p: STPartition) -> STPartition:
    """Rewrite ``p`` until no triangle touches a star center and every circuit
    avoiding star edges is a triangle part.  The part count never grows."""
    last = p
    for last in iter_triangle_rewrites(p):
        pass
    return last


# ---------------------------------------------------------------------------
# star merging and two-star rewiring

def merge_same_center_stars(p: STPartition) -> STPartition:
    """Merge all stars that share a center into the first of them."""
    require_valid(p)
    first: dict[int, int] = {}
    merged: list[Optional[Part]] = []
    for part in p.parts:
        if part.is_star and part.center in first:
            i = first[part.center]
            merged[i] = Part.star(part.center, merged[i].edges | part.edges)
            continue
        if part.is_star:
            first[part.center] = len(merged)
        merged.append(part)
    return p.with_parts(merged)


def two_star_rewire(p: STPartition, e: Edge) -> STPartition:
    """Absorb every two-edge star with leaves ``{x, y}`` into stars at ``x`` and ``y``.

    ``e = xy`` must lie in a star ``S`` centred at ``x``.  ``S`` gains the
    ``x``-sides of those two-edge stars and a new star at ``y`` collects their
    ``y``-sides; the part count drops by one less than the number absorbed.
    """
    require_valid(p)
    e = _e(*e)
    idx = p.part_index()
    if e not in idx:
        raise PartitionError(f"edge {e} is not an edge of the host graph")
    s_i = idx[e]
    s = p.parts[s_i]
    if not s.is_star:
        raise PartitionError(f"edge {e} does not lie in a star")
    x = s.center
    (y,) = set(e) - {x}
    absorbed = [i for i, q in enumerate(p.parts)
                if q.is_star and len(q.edges) == 2 and q.center not in (x, y)
                and q.vertices() - {q.center} == {x, y}]
    if not absorbed:
        raise PartitionError(f"no two-edge star has leaves {{{x}, {y}}}")
    x_side = {_e(x, p.parts[i].center) for i in absorbed}
    y_side = {_e(y, p.parts[i].center) for i in absorbed}
    new = list(p.parts)
    new[s_i] = Part.star(x, s.edges | x_side)
    new[absorbed[0]] = Part.star(y, y_side)
    drop = set(absorbed[1:])
    return p.with_parts(q for i, q in enumerate(new) if i not in drop)


def closed_neighborhood_colors(p: STPartition, e: Edge) -> int:
    """Colours seen around the Kneser vertex of ``e``: its own part plus every
    other part holding an edge disjoint from ``e``."""
    e = _e(*e)
    if e not in p.host.edges:
        raise PartitionError(f"edge {e} is not an edge of the host graph")
    ends = set(e)
    count = 1
    for part in p.parts:
        if e in part.edges:
            continue
        if any(not ends & set(f) for f in part.edges):
            count += 1
    return count


def kg_closed_neighborhood_counts(h: Graph, coloring) -> list[int]:
    """Number of distinct colours on each closed neighbourhood of KG(h)."""
    kg, _ = kneser_graph_of(h)
    return [len({coloring[u] for u in kg.closed_neighborhood(v)}) for v in range(kg.n)]
