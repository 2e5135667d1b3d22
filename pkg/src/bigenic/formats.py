"""graph6 encoding/decoding and DIMACS .col export."""

from __future__ import annotations

from .errors import ValidationError
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


def _size_prefix(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Header-less graph6 string (upper triangle, column by column)."""
    bits = [1 if g.adjacent(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chunks = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        chunks.append(chr(value + 63))
    return _size_prefix(g.n) + "".join(chunks)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise ValidationError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise ValidationError(f"invalid graph6 character in {text!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise ValidationError("graph6 sizes beyond 258047 are not supported")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    needed = n * (n - 1) // 2
    if len(body) != (needed + 5) // 6:
        raise ValidationError(f"graph6 body length {len(body)} does not match n={n}")
    bits = [(d >> (5 - k)) & 1 for d in body for k in range(6)]
    if any(bits[needed:]):
        raise ValidationError("graph6 padding bits must be zero")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)


def to_dimacs(g: Graph, comment: str | None = None) -> str:
    """DIMACS .col text with 1-based vertices."""
    lines = []
    if comment:
        lines.extend(f"c {line}" for line in comment.splitlines())
    lines.append(f"p edge {g.n} {g.edge_count}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
