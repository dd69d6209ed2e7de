import random

import pytest

from kgline.catalog import connected_graphs_by_edges, random_st_partition, small_graphs
from kgline.graph import find_induced
from kgline.partition import validate
from kgline.sweeps import SWEEPS, gadget_catalog, join_pairs, minimization_instances, \
    struct_qualifying, sweep_join


# graphs per vertex count and connected graphs per edge count, up to isomorphism
GRAPHS_BY_ORDER = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONNECTED_BY_SIZE = {1: 1, 2: 1, 3: 3, 4: 5, 5: 12, 6: 30}


@pytest.mark.parametrize("n,count", sorted(GRAPHS_BY_ORDER.items()))
def test_catalog_sizes(n, count):
    assert sum(1 for _ in small_graphs(n, n)) == count


def test_connected_catalog_sizes():
    graphs = list(connected_graphs_by_edges(6))
    for m, count in CONNECTED_BY_SIZE.items():
        assert sum(g.m == m for g in graphs) == count


def test_catalog_limit():
    with pytest.raises(ValueError):
        list(small_graphs(8))


def test_struct_catalog_hypothesis():
    graphs = struct_qualifying(7)
    assert graphs
    for g in graphs[:100]:
        assert not g.is_complete() and g.m > 0
        assert find_induced(g, "co-claw") is None and find_induced(g, "butterfly") is None


def test_gadget_catalog_is_connected_triangle_free():
    graphs = gadget_catalog(5)
    assert len(graphs) == 12
    assert all(g.is_connected() and find_induced(g, "K3") is None for g in graphs)


def test_seeded_instances_are_reproducible():
    a = [str(p) for p in minimization_instances(20, seed=5)]
    b = [str(p) for p in minimization_instances(20, seed=5)]
    assert a == b
    assert join_pairs(10, seed=1) == join_pairs(10, seed=1)


def test_random_partitions_valid():
    rng = random.Random(0)
    for g in list(small_graphs(5, 3))[:40]:
        if g.m:
            assert validate(random_st_partition(rng, g)) is None


def test_parallel_sweep_matches_serial():
    serial = sweep_join(24, seed=2, jobs=1)
    parallel = sweep_join(24, seed=2, jobs=2)
    assert serial.instances == parallel.instances and serial.ok and parallel.ok


def test_sweep_registry():
    assert set(SWEEPS) == {"sandwich", "coloring", "minimize", "struct", "characterization",
                           "gadget", "approx", "join"}
