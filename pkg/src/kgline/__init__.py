"""Colouring invariants of Kneser graphs of graphs and hypergraphs via ST-partitions."""

from .graph import Graph, GraphError, Hypergraph, build_graph, build_hypergraph, complement, \
    disjoint_union, find_induced, greedy_maximal_matching, is_two_colorable, join, kneser_graph_of
from .partition import Part, PartitionError, STPartition, validate

__all__ = [
    "Graph", "GraphError", "Hypergraph", "Part", "PartitionError", "STPartition",
    "build_graph", "build_hypergraph", "complement", "disjoint_union", "find_induced",
    "greedy_maximal_matching", "is_two_colorable", "join", "kneser_graph_of", "validate",
]
