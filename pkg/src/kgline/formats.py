"""Plain-text formats for graphs, hypergraphs and ST-partitions.

Graph::

    # optional comments
    p <n> <m>
    e <u> <v>          (m lines, 0-based)

Hypergraph::

    hp <n> <m>
    s <k> <v1> ... <vk>

ST-partition: a graph block followed by ``parts <count>`` and one line per
part, ``star <center> : u-v ...`` or ``triangle : u-v u-v u-v``.
Writers sort everything, so ``write(read(text))`` is stable.
"""

from __future__ import annotations

from typing import Optional, Union

from .graph import AnyGraph, Graph, GraphError, Hypergraph, build_graph, build_hypergraph
from .partition import Part, PartitionError, STPartition, require_valid


class FormatError(ValueError):
    pass


def _header(comment: Optional[str]) -> str:
    if not comment:
        return ""
    return "".join(f"# {line}\n" for line in comment.splitlines())


def write_graph(g: AnyGraph, comment: Optional[str] = None) -> str:
    out = [_header(comment)]
    if isinstance(g, Graph):
        out.append(f"p {g.n} {g.m}\n")
        out += [f"e {u} {v}\n" for u, v in g.edge_list]
    else:
        out.append(f"hp {g.n} {g.m}\n")
        out += [f"s {len(e)} {' '.join(map(str, e))}\n" for e in g.edge_list]
    return "".join(out)


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def _read_graph_lines(lines) -> tuple[AnyGraph, list]:
    """Consume a graph block from a token-line iterator; return the rest."""
    lines = list(lines)
    if not lines:
        raise FormatError("empty input")
    lineno, head = lines[0]
    if head[0] not in ("p", "hp") or len(head) != 3:
        raise FormatError(f"line {lineno}: expected 'p <n> <m>' or 'hp <n> <m>'")
    n, m = _ints(head[1:], lineno)
    body = lines[1:1 + m]
    if len(body) < m:
        raise FormatError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for ln, toks in body:
        if head[0] == "p":
            if toks[0] != "e" or len(toks) != 3:
                raise FormatError(f"line {ln}: expected 'e <u> <v>'")
            edges.append(tuple(_ints(toks[1:], ln)))
        else:
            if toks[0] != "s" or len(toks) < 2:
                raise FormatError(f"line {ln}: expected 's <k> <v1> ... <vk>'")
            k, *verts = _ints(toks[1:], ln)
            if k != len(verts):
                raise FormatError(f"line {ln}: size {k} but {len(verts)} vertices")
            edges.append(verts)
    if len(set(map(lambda e: frozenset(e), edges))) != m:
        raise FormatError(f"header announces {m} edges but some are repeated")
    try:
        g = build_graph(n, edges) if head[0] == "p" else build_hypergraph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None
    return g, lines[1 + m:]


def read_graph(text: str) -> AnyGraph:
    g, rest = _read_graph_lines(_lines(text))
    if rest:
        raise FormatError(f"line {rest[0][0]}: unexpected trailing content")
    return g


def write_partition(p: STPartition, comment: Optional[str] = None) -> str:
    body = "".join(f"{part}\n" for part in sorted(p.parts, key=_part_key))
    return write_graph(p.host, comment) + f"parts {len(p.parts)}\n" + body


def _part_key(part: Part):
    return (part.sorted_edges(), part.kind, -1 if part.center is None else part.center)


def _parse_edge(tok: str, lineno: int):
    u, sep, v = tok.partition("-")
    if not sep:
        raise FormatError(f"line {lineno}: edge {tok!r} is not of the form u-v")
    return tuple(_ints([u, v], lineno))


def read_partition(text: str) -> STPartition:
    """Parse and validate an ST-partition document."""
    host, rest = _read_graph_lines(_lines(text))
    if not isinstance(host, Graph):
        raise FormatError("an ST-partition needs a graph host")
    if not rest or rest[0][1][0] != "parts" or len(rest[0][1]) != 2:
        raise FormatError("expected 'parts <count>' after the graph")
    (count,) = _ints(rest[0][1][1:], rest[0][0])
    parts = []
    for ln, toks in rest[1:]:
        if ":" not in toks:
            raise FormatError(f"line {ln}: missing ':'")
        colon = toks.index(":")
        edges = [_parse_edge(t, ln) for t in toks[colon + 1:]]
        if toks[0] == "star" and colon == 2:
            parts.append(Part.star(_ints(toks[1:2], ln)[0], edges))
        elif toks[0] == "triangle" and colon == 1:
            parts.append(Part.triangle(edges))
        else:
            raise FormatError(f"line {ln}: expected 'star <c> : ...' or 'triangle : ...'")
    if len(parts) != count:
        raise FormatError(f"header announces {count} parts, found {len(parts)}")
    p = STPartition(host, tuple(parts))
    try:
        return require_valid(p)
    except PartitionError as exc:
        raise FormatError(f"invalid partition: {exc}") from None


def read_any(text: str) -> Union[AnyGraph, STPartition]:
    """A graph, hypergraph or partition document, whichever ``text`` holds."""
    toks = [t for _, t in _lines(text)]
    if any(t[0] == "parts" for t in toks):
        return read_partition(text)
    return read_graph(text)
