import random

import pytest
from hypothesis import given, settings, strategies as st

from kgline import generators as gen
from kgline.catalog import random_st_partition
from kgline.formats import FormatError, read_any, read_graph, read_partition, write_graph, \
    write_partition
from kgline.partition import STPartition

from conftest import graphs, hypergraphs


@given(graphs())
def test_graph_round_trip(g):
    text = write_graph(g, "note")
    assert read_graph(text) == g
    assert write_graph(read_graph(text), "note") == text


@given(hypergraphs())
def test_hypergraph_round_trip(h):
    text = write_graph(h)
    assert read_graph(text) == h
    assert write_graph(read_graph(text)) == text


@settings(max_examples=50)
@given(graphs(min_vertices=2, max_vertices=6, min_edges=1), st.integers(0, 2**32))
def test_partition_round_trip(g, seed):
    p = random_st_partition(random.Random(seed), g)
    text = write_partition(p)
    q = read_partition(text)
    assert q.family() == p.family()
    assert write_partition(q) == text
    assert isinstance(read_any(text), STPartition)


def test_comments_and_blank_lines():
    text = "# hello\n\np 3 2  # header\ne 0 1\n\ne 1 2\n"
    assert read_graph(text) == gen.path(3)


@pytest.mark.parametrize("text,msg", [
    ("", "empty"),
    ("q 3 1\ne 0 1\n", "expected"),
    ("p 3 2\ne 0 1\n", "expected 2"),
    ("p 3 1\ne 0 x\n", "integers"),
    ("p 3 1\ne 0 0\n", "loop"),
    ("p 3 1\ne 0 5\n", "outside"),
    ("p 3 2\ne 0 1\ne 1 0\n", "repeated"),
    ("hp 3 1\ns 3 0 1\n", "size"),
    ("p 2 1\ne 0 1\nextra\n", "trailing"),
])
def test_graph_errors(text, msg):
    with pytest.raises(FormatError, match=msg):
        read_graph(text)


@pytest.mark.parametrize("body,msg", [
    ("parts 1\nstar 0 : 0-1\n", "invalid"),
    ("parts 2\nstar 1 : 0-1 1-2\n", "announces"),
    ("parts 1\nstar 1 0-1 1-2\n", "':'"),
    ("parts 1\nblob 1 : 0-1 1-2\n", "expected 'star"),
    ("parts 1\nstar 1 : 0:1 1-2\n", "u-v"),
    ("star 1 : 0-1 1-2\n", "parts"),
])
def test_partition_errors(body, msg):
    with pytest.raises(FormatError, match=msg):
        read_partition("p 3 2\ne 0 1\ne 1 2\n" + body)


def test_partition_text_layout():
    text = "p 3 2\ne 0 1\ne 1 2\nparts 1\nstar 1 : 0-1 1-2\n"
    assert write_partition(read_partition(text)) == text
