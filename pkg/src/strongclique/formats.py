"""Edge-list and graph6 readers/writers.

Edge-list text::

    # comment
    n 4
    a b
    b c        # endpoints are integers 0..n-1, or arbitrary names
    d          # a lone token declares a vertex

Names are numbered by first appearance.  A document is symbolic as soon as one
endpoint is not a plain non-negative integer.

graph6 follows the nauty format: N(n) then the upper triangle of the
adjacency matrix, column by column, packed six bits per byte with 63 added.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional

from .errors import GraphError, IndexOutOfRange, ParseError, SelfLoop
from .graph import Graph, build_graph

__all__ = [
    "GraphDocument",
    "parse_edge_list",
    "emit_edge_list",
    "parse_graph6",
    "parse_graph6_lines",
    "encode_graph6",
    "decode_graph6",
    "emit_graph6",
    "read_graph",
]

G6_HEADER = ">>graph6<<"


@dataclass(frozen=True)
class GraphDocument:
    graph: Graph
    names: Optional[tuple[str, ...]] = None
    source_format: str = "edge-list"

    def label(self, v: int) -> str:
        return self.names[v] if self.names else str(v)

    def index_of(self, token: str) -> int:
        if self.names:
            try:
                return self.names.index(token)
            except ValueError:
                raise IndexOutOfRange(f"unknown vertex name {token!r}") from None
        try:
            v = int(token)
        except ValueError:
            raise IndexOutOfRange(f"vertex {token!r} is not an integer") from None
        if not 0 <= v < self.graph.n:
            raise IndexOutOfRange(f"vertex {v} outside 0..{self.graph.n - 1}")
        return v


# -- edge lists -----------------------------------------------------------------


def _is_index(token: str) -> bool:
    return token.isdigit() and token.isascii()


def parse_edge_list(text: str) -> GraphDocument:
    rows: list[tuple[int, list[str]]] = []
    n: Optional[int] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n" or not _is_index(tokens[1]):
                raise ParseError(f"expected 'n <count>', got {line!r}", lineno)
            n = int(tokens[1])
            continue
        if len(tokens) > 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        rows.append((lineno, tokens))
    if n is None:
        raise ParseError("missing 'n <count>' header")

    symbolic = any(not _is_index(t) for _, tokens in rows for t in tokens)
    names: list[str] = []
    index: dict[str, int] = {}

    def vertex(token: str, lineno: int) -> int:
        if not symbolic:
            v = int(token)
            if v >= n:
                raise IndexOutOfRange(f"line {lineno}: vertex {v} outside 0..{n - 1}")
            return v
        if token not in index:
            if len(names) == n:
                raise IndexOutOfRange(f"line {lineno}: more than {n} distinct vertex names")
            index[token] = len(names)
            names.append(token)
        return index[token]

    edges = []
    for lineno, tokens in rows:
        ends = [vertex(t, lineno) for t in tokens]
        if len(ends) == 2:
            if ends[0] == ends[1]:
                raise SelfLoop(f"line {lineno}: self-loop at {tokens[0]}")
            edges.append((ends[0], ends[1]))
    graph = build_graph(n, edges)
    if not symbolic:
        return GraphDocument(graph, None, "edge-list")
    taken = set(names)
    k = 0
    while len(names) < n:
        filler = f"_v{k}"
        k += 1
        if filler not in taken:
            names.append(filler)
    return GraphDocument(graph, tuple(names), "edge-list")


def emit_edge_list(doc: GraphDocument | Graph) -> str:
    if isinstance(doc, Graph):
        doc = GraphDocument(doc)
    g = doc.graph
    lines = [f"n {g.n}"]
    if doc.names:
        # declare every name first so numbering survives a re-read
        lines.extend(doc.names)
        lines.extend(f"{doc.names[u]} {doc.names[v]}" for u, v in g.edges())
    else:
        lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- graph6 ---------------------------------------------------------------------


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    if n < 1 << 36:
        return bytes([126, 126] + [63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def encode_graph6(g: Graph) -> str:
    """graph6 text for ``g`` without header or newline."""
    sets = g.neighbor_sets
    bits = []
    for j in range(1, g.n):
        sj = sets[j]
        bits.extend(1 if i in sj else 0 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3 | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5])
        for k in range(0, len(bits), 6)
    )
    return (_encode_n(g.n) + body).decode("ascii")


def decode_graph6(text: str, lineno: Optional[int] = None) -> Graph:
    s = text.strip()
    if s.startswith(G6_HEADER):
        s = s[len(G6_HEADER):]
    if not s:
        raise ParseError("empty graph6 string", lineno)
    data = s.encode("ascii", errors="replace")
    for b in data:
        if not 63 <= b <= 126:
            raise ParseError(f"byte {b!r} outside the graph6 range 63..126", lineno)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated size header", lineno)
        n = 0
        for b in data[2:8]:
            n = n << 6 | (b - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise ParseError("truncated size header", lineno)
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        what = "truncated" if len(body) < need else "overlong"
        raise ParseError(f"{what} bit vector: {len(body)} bytes for {n} vertices, expected {need}", lineno)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if need and (body[-1] - 63) & ((1 << (need * 6 - nbits)) - 1):
        raise ParseError("non-zero padding bits", lineno)
    return build_graph(n, edges)


def parse_graph6_lines(text: str) -> Iterator[GraphDocument]:
    """One document per non-blank line."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            yield GraphDocument(decode_graph6(line, lineno), None, "graph6")


def parse_graph6(text: str) -> GraphDocument:
    """The first graph of a graph6 text."""
    first = text.splitlines()[0] if text.strip() else ""
    return GraphDocument(decode_graph6(first, 1), None, "graph6")


def emit_graph6(doc: GraphDocument | Graph) -> str:
    g = doc.graph if isinstance(doc, GraphDocument) else doc
    return encode_graph6(g) + "\n"


def read_graph(path: str | Path, fmt: Optional[str] = None) -> GraphDocument:
    """Read a file; the format is taken from ``fmt`` or the suffix (.g6 = graph6)."""
    p = Path(path)
    text = p.read_text(encoding="ascii", errors="replace") if str(p) != "-" else _stdin()
    if fmt is None:
        fmt = "graph6" if p.suffix in (".g6", ".graph6") else "edge-list"
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt in ("edge-list", "edgelist"):
        return parse_edge_list(text)
    raise GraphError(f"unknown format {fmt!r}")


def _stdin() -> str:
    import sys

    return sys.stdin.read()
