"""graph6 text format, plus a small edge-list format.

graph6: one graph per line. Vertex count as N(n) (one char for n <= 62,
'~' escape above that), then the upper triangle of the adjacency matrix in
column-major order, packed big-endian six bits per printable char (+63).
The optional ">>graph6<<" header is tolerated and never written.

Edge list: first non-blank line is n, each following non-blank line is
"u v". Lines starting with '#' are comments.
"""

from __future__ import annotations

from .errors import Graph6Error
from .graphs import Graph

HEADER = ">>graph6<<"


def _parse_n(text: str, pos: int) -> tuple:
    """Decode the N(n) length field, returning (n, next position)."""
    if pos >= len(text):
        raise Graph6Error("empty graph6 string", offset=pos)
    c = ord(text[pos])
    if c == 126:
        if pos + 4 > len(text):
            raise Graph6Error("truncated length field", offset=pos)
        if ord(text[pos + 1]) == 126:
            raise Graph6Error(
                "graphs beyond 258047 vertices not supported", offset=pos
            )
        n = 0
        for i in range(1, 4):
            d = ord(text[pos + i])
            if not 63 <= d <= 126:
                raise Graph6Error(
                    f"length byte {text[pos + i]!r} outside printable range",
                    offset=pos + i,
                )
            n = (n << 6) | (d - 63)
        return n, pos + 4
    if not 63 <= c <= 126:
        raise Graph6Error(
            f"length byte {text[pos]!r} outside printable range", offset=pos
        )
    return c - 63, pos + 1


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 line (optional header tolerated)."""
    line = text.strip()
    pos = 0
    if line.startswith(HEADER):
        pos = len(HEADER)
    n, pos = _parse_n(line, pos)
    nbits = n * (n - 1) // 2
    want = (nbits + 5) // 6
    have = len(line) - pos
    if have != want:
        raise Graph6Error(
            f"payload is {have} chars, expected {want} for n={n}", offset=pos
        )
    adj = [0] * n
    bit = 0
    for i in range(want):
        c = ord(line[pos + i])
        if not 63 <= c <= 126:
            raise Graph6Error(
                f"payload byte {line[pos + i]!r} outside printable range",
                offset=pos + i,
            )
        group = c - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                break
            if (group >> k) & 1:
                u, v = _bit_to_pair(bit)
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            bit += 1
    return Graph._raw(n, tuple(adj))


def _bit_to_pair(bit: int) -> tuple:
    """Invert the column-major upper-triangle bit order."""
    v = 1
    while v * (v - 1) // 2 + v <= bit:
        v += 1
    u = bit - v * (v - 1) // 2
    return u, v


def write_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = ["~", chr((n >> 12) + 63), chr(((n >> 6) & 63) + 63), chr((n & 63) + 63)]
    else:
        raise Graph6Error(f"graphs beyond 258047 vertices not supported (n={n})")
    group = 0
    filled = 0
    for v in range(1, n):
        col = g.adj[v]
        for u in range(v):
            group = (group << 1) | ((col >> u) & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group = 0
                filled = 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse the "n then one edge per line" format."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise ValueError(
                    f"line {lineno}: expected the vertex count, got {raw!r}"
                )
            n = int(fields[0])
            if n < 0:
                raise ValueError(f"line {lineno}: vertex count must be nonnegative")
            continue
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = int(fields[0]), int(fields[1])
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"line {lineno}: endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"line {lineno}: self loop {u}")
        edges.append((u, v))
    if n is None:
        raise ValueError("edge list is empty: no vertex count line")
    return Graph.from_edges(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
