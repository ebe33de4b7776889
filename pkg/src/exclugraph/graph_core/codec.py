"""
Text formats for exclusivity graphs.

graph6 follows McKay's encoding: a size prefix (one byte ``n + 63`` for
n <= 62, ``~`` plus three bytes otherwise) followed by the upper triangle
read column by column, six bits per byte, each byte offset by 63.

The edge list is ``"n; u-v u-v ..."`` with 0-based indices.
"""
from enum import Enum
from typing import List, Union

from exclugraph.config import tolerances
from exclugraph.errors import CapacityError, ParameterError, ParseError
from exclugraph.graph_core.graph import Graph

GRAPH6_HEADER = ">>graph6<<"


class GraphFormat(Enum):
    graph6 = "graph6"
    edge_list = "edge-list"

    @staticmethod
    def detect(text: str) -> "GraphFormat":
        return GraphFormat.edge_list if ";" in text else GraphFormat.graph6


def _triangle(n: int):
    for j in range(1, n):
        for i in range(j):
            yield i, j


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~"] + [chr(((n >> shift) & 0x3F) + 63) for shift in (12, 6, 0)]
    chunk, filled = 0, 0
    for i, j in _triangle(n):
        chunk = (chunk << 1) | g.adjacent(i, j)
        filled += 1
        if filled == 6:
            out.append(chr(chunk + 63))
            chunk, filled = 0, 0
    if filled:
        out.append(chr((chunk << (6 - filled)) + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    data = text.strip()
    base = 0
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not data:
        raise ParseError("Empty graph6 string", base)
    for offset, char in enumerate(data):
        if not 63 <= ord(char) <= 126:
            raise ParseError(f"Byte {char!r} outside the graph6 range 63..126", base + offset)

    if data[0] != "~":
        n, pos = ord(data[0]) - 63, 1
    else:
        if len(data) < 4 or data[1] == "~":
            raise ParseError("Truncated or unsupported graph6 size prefix", base + 1)
        n = 0
        for char in data[1:4]:
            n = (n << 6) | (ord(char) - 63)
        pos = 4
    if n > tolerances.max_vertices:
        raise CapacityError(f"graph6 declares {n} vertices, above the cap of {tolerances.max_vertices}")
    if n < 1:
        raise ParseError("graph6 declares an empty vertex set", base)

    needed = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != needed:
        raise ParseError(f"Expected {needed} adjacency bytes for n={n}, got {len(body)}", base + pos + min(len(body), needed))

    bit_values: List[int] = []
    for char in body:
        value = ord(char) - 63
        bit_values.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    edges = [(i, j) for (i, j), bit in zip(_triangle(n), bit_values) if bit]
    padding = bit_values[n * (n - 1) // 2:]
    if any(padding):
        raise ParseError("Non-zero padding bits in the last graph6 byte", base + len(data) - 1)
    return Graph.from_edges(n, edges)


def encode_edge_list(g: Graph) -> str:
    pairs = " ".join(f"{u}-{v}" for u, v in g.edges())
    return f"{g.n}; {pairs}" if pairs else f"{g.n};"


def decode_edge_list(text: str) -> Graph:
    head, sep, tail = text.partition(";")
    if not sep:
        raise ParseError("Edge list must start with 'n;'", len(text))
    if not head.strip().isdigit():
        raise ParseError(f"Vertex count {head.strip()!r} is not a non-negative integer", 0)
    n = int(head)
    if n > tolerances.max_vertices:
        raise CapacityError(f"Edge list declares {n} vertices, above the cap of {tolerances.max_vertices}")
    if n < 1:
        raise ParseError("Edge list declares an empty vertex set", 0)

    edges = []
    offset = len(head) + 1
    for token in tail.split(" "):
        for piece in token.split():
            start = offset + token.index(piece)
            u_text, dash, v_text = piece.partition("-")
            if not dash or not u_text.isdigit() or not v_text.isdigit():
                raise ParseError(f"Malformed edge {piece!r}; expected u-v", start)
            u, v = int(u_text), int(v_text)
            if u >= n or v >= n:
                raise ParseError(f"Edge {piece} references a vertex beyond {n - 1}", start)
            if u == v:
                raise ParseError(f"Self-loop {piece} is not allowed", start)
            edges.append((u, v))
        offset += len(token) + 1
    return Graph.from_edges(n, edges)


def parse_graph(text: str, fmt: Union[GraphFormat, str, None] = None) -> Graph:
    fmt = GraphFormat.detect(text) if fmt is None else GraphFormat(fmt)
    if fmt is GraphFormat.edge_list:
        return decode_edge_list(text)
    return decode_graph6(text)


def serialize_graph(g: Graph, fmt: Union[GraphFormat, str] = GraphFormat.graph6) -> str:
    fmt = GraphFormat(fmt)
    if fmt is GraphFormat.edge_list:
        return encode_edge_list(g)
    return encode_graph6(g)


def codec(value: Union[str, Graph], fmt: Union[GraphFormat, str] = GraphFormat.graph6) -> Union[Graph, str]:
    """Parse text into a Graph or serialize a Graph into text, in the given format."""
    if isinstance(value, Graph):
        return serialize_graph(value, fmt)
    if isinstance(value, str):
        return parse_graph(value, fmt)
    raise ParameterError(f"codec expects text or a Graph, got {type(value).__name__}")
