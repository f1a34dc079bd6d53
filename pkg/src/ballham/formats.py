"""Graph interchange: graph6, edge-list JSON, and DOT output.

graph6 follows the standard ASCII encoding (McKay): a size header using
bytes 63..126, then the upper triangle packed column by column, six bits per
byte.  Edge JSON is ``{"n": ..., "edges": [[u, v], ...]}``.  DOT is emitted
for rendering only and is never parsed back.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .graph import Graph

_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n < 0:
        raise ParseError(f"cannot encode negative size {n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        bits = [(n >> s) & 63 for s in (12, 6, 0)]
        return "~" + "".join(chr(b + 63) for b in bits)
    if n <= 68719476735:
        bits = [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
        return "~~" + "".join(chr(b + 63) for b in bits)
    raise ParseError(f"size {n} exceeds the graph6 limit")


def emit_graph6(g: Graph) -> str:
    n = g.n
    bits = []
    for col in range(1, n):
        for row in range(col):
            bits.append(1 if g.has_edge(row, col) else 0)
    while len(bits) % 6:
        bits.append(0)
    chunks = []
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i:i + 6]:
            value = (value << 1) | b
        chunks.append(chr(value + 63))
    return _encode_size(n) + "".join(chunks)


def parse_graph6(text) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    data = text.strip()
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    if not data:
        raise ParseError("empty graph6 input", offset=0)

    def byte_at(i: int) -> int:
        if i >= len(data):
            raise ParseError("truncated graph6 input", offset=len(data))
        value = ord(data[i]) - 63
        if not (0 <= value <= 63):
            raise ParseError(f"invalid graph6 byte {data[i]!r}", offset=i)
        return value

    pos = 0
    if data[0] != "~":
        n = byte_at(0)
        pos = 1
    elif len(data) > 1 and data[1] != "~":
        n = 0
        for i in range(1, 4):
            n = (n << 6) | byte_at(i)
        pos = 4
    else:
        n = 0
        for i in range(2, 8):
            n = (n << 6) | byte_at(i)
        pos = 8

    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - pos != need:
        raise ParseError(
            f"graph6 payload for n={n} needs {need} bytes, found {len(data) - pos}",
            offset=pos,
        )
    bits = []
    for i in range(pos, len(data)):
        value = byte_at(i)
        bits.extend((value >> s) & 1 for s in (5, 4, 3, 2, 1, 0))
    edges = []
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if bits[idx]:
                edges.append((row, col))
            idx += 1
    return Graph.from_edges(n, edges)


def emit_edge_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]},
                      sort_keys=True)


def parse_edge_json(text) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", offset=exc.pos) from exc
    if not isinstance(payload, dict) or "n" not in payload or "edges" not in payload:
        raise ParseError('edge JSON must be an object with "n" and "edges"')
    n = payload["n"]
    edges = payload["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise ParseError('"n" must be an integer and "edges" a list')
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2
                and all(isinstance(x, int) for x in e)):
            raise ParseError(f"bad edge entry {e!r}")
    return Graph.from_edges(n, [tuple(e) for e in edges])


def emit_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {u};" for u in range(g.n) if not g.adj[u])
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_auto(text) -> Graph:
    """Parse edge JSON when the input looks like JSON, otherwise graph6."""
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    if text.lstrip().startswith("{"):
        return parse_edge_json(text)
    return parse_graph6(text)
