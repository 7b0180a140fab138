"""Graph exporters: graph6 (with a decoder for round trips) and Graphviz DOT."""

from __future__ import annotations

from .graphs import Graph


def _size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def export_graph6(g: Graph) -> bytes:
    """Standard graph6 encoding (no header, no trailing newline).

    Bits ``x(i, j)`` of the upper triangle are taken column by column
    (``j = 1 .. n-1``, ``i < j``), packed big-endian into 6-bit groups and
    offset by 63. Vertex order is the graph's own order.
    """
    n = g.order
    out = bytearray(_size_bytes(n))
    acc, nbits = 0, 0
    for j in range(1, n):
        adj = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (i in adj)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc, nbits = 0, 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def decode_graph6(data: bytes | str) -> Graph:
    """Inverse of :func:`export_graph6`; vertices are labelled ``0 .. n-1``."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    vals = [b - 63 for b in data]
    if any(not 0 <= v <= 63 for v in vals):
        raise ValueError("byte outside the graph6 range")
    if vals[0] != 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) > 1 and vals[1] == 63:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        rest = vals[8:]
    else:
        n = 0
        for v in vals[1:4]:
            n = (n << 6) | v
        rest = vals[4:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise ValueError(f"expected {need} data bytes for {n} vertices, got {len(rest)}")
    bits = (((v >> (5 - k)) & 1) for v in rest for k in range(6))
    edges = []
    for j in range(1, n):
        for i in range(j):
            if next(bits):
                edges.append((i, j))
    return Graph.from_edges(range(n), edges)


def vertex_name(label) -> str:
    """Canonical text for a vertex label, e.g. ``(4,5)`` for a clean-graph vertex."""
    if isinstance(label, tuple) and type(label) is tuple:
        return "(" + ",".join(vertex_name(x) for x in label) + ")"
    return str(label)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: Graph, name: str = "G") -> str:
    """Undirected DOT text; nodes in vertex order, each edge once in index order."""
    names = [_quote(vertex_name(v)) for v in g.vertices]
    lines = [f"graph {name} {{"]
    lines.extend(f"  {s};" for s in names)
    lines.extend(f"  {names[i]} -- {names[j]};" for i, j in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
