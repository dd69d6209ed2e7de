"""Instance catalogs for sweeps: small graphs up to isomorphism, random
graphs, random hypergraphs and random ST-partitions."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

import networkx as nx

from .graph import Graph, Hypergraph, build_graph, build_hypergraph, canonical_form
from .partition import Part, STPartition, classify_block

ATLAS_MAX_VERTICES = 7


def _from_nx(g: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(g.nodes))}
    return build_graph(len(index), [(index[u], index[v]) for u, v in g.edges])


def small_graphs(max_vertices: int, min_vertices: int = 1) -> Iterator[Graph]:
    """One graph per isomorphism class with ``min_vertices..max_vertices`` vertices."""
    if max_vertices > ATLAS_MAX_VERTICES:
        raise ValueError(f"isomorphism-class catalog stops at {ATLAS_MAX_VERTICES} vertices")
    for g in nx.graph_atlas_g():
        if min_vertices <= g.number_of_nodes() <= max_vertices:
            yield _from_nx(g)


def connected_graphs_by_edges(max_edges: int) -> Iterator[Graph]:
    """Connected graphs with between 1 and ``max_edges`` edges, up to isomorphism."""
    for g in small_graphs(min(max_edges + 1, ATLAS_MAX_VERTICES), 2):
        if 1 <= g.m <= max_edges and g.is_connected():
            yield g


def labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield build_graph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def iso_classes(n: int) -> list[Graph]:
    """Isomorphism classes on ``n`` vertices by brute-force canonical forms."""
    seen = {}
    for g in labeled_graphs(n):
        seen.setdefault(canonical_form(g), g)
    return list(seen.values())


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return build_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_hypergraph(rng: random.Random, n: int, max_size: int = 3, p: float = 0.3) -> Hypergraph:
    edges = [c for k in range(2, max_size + 1) for c in combinations(range(n), k)
             if rng.random() < p]
    return build_hypergraph(n, edges)


def random_st_partition(rng: random.Random, h: Graph, p_triangle: float = 0.6) -> STPartition:
    """A random valid ST-partition; triangles are grabbed first to make them common."""
    remaining = set(h.edges)
    parts = []
    triangles = [t for t in combinations(range(h.n), 3)
                 if all(h.has_edge(a, b) for a, b in combinations(t, 2))]
    rng.shuffle(triangles)
    for a, b, c in triangles:
        tri = {(a, b), (a, c), (b, c)}
        if tri <= remaining and rng.random() < p_triangle:
            parts.append(Part.triangle(tri))
            remaining -= tri
    blocks: list[list] = []
    edges = sorted(remaining)
    rng.shuffle(edges)
    for e in edges:
        fits = [b for b in blocks if all(set(e) & set(f) for f in b)]
        if fits and rng.random() < 0.7:
            rng.choice(fits).append(e)
        else:
            blocks.append([e])
    for b in blocks:
        part = classify_block(b)
        if part.is_star and len(b) == 1 and rng.random() < 0.5:
            part = Part.star(max(b[0]), b)
        parts.append(part)
    rng.shuffle(parts)
    return STPartition(h, tuple(parts))
