"""graph6, DOT and plain edge-list formats."""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import MalformedEdgeList, MalformedGraph6
from .graph import MAX_ORDER, Graph

HEADER = ">>graph6<<"


def emit_graph6(g: Graph) -> str:
    """Encode ``g``: a size prefix, then the upper triangle column by column, six bits per byte."""
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~"] + [chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0)]
    bits = [g.adj[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; an optional ``>>graph6<<`` header is skipped."""
    line = text.strip()
    start = 0
    if line.startswith(HEADER):
        start = len(HEADER)
    data = line[start:]
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise MalformedGraph6(f"byte {ord(ch)} outside 63..126", start + i)
    if not data:
        raise MalformedGraph6("empty input", start)
    if data[0] != "~":
        n, pos = ord(data[0]) - 63, 1
    else:
        if len(data) < 4:
            raise MalformedGraph6("truncated size field", start + len(data))
        if data[1] == "~":
            raise MalformedGraph6("orders above 258047 are not supported", start + 1)
        n = 0
        for ch in data[1:4]:
            n = n << 6 | (ord(ch) - 63)
        pos = 4
    if n > MAX_ORDER:
        raise MalformedGraph6(f"order {n} exceeds {MAX_ORDER}", start)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        offset = start + pos + min(len(body), need)
        raise MalformedGraph6(f"expected {need} data bytes, found {len(body)}", offset)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj)


def emit_dot(g: Graph, labels: Optional[Sequence[str]] = None) -> str:
    names = list(labels) if labels is not None else [str(v) for v in range(g.n)]
    if len(names) != g.n:
        raise ValueError("one label per vertex required")
    lines = ["graph {"]
    isolated = [v for v in range(g.n) if g.adj[v] == 0]
    lines += [f"  {_dot_id(names[v])};" for v in isolated]
    lines += [f"  {_dot_id(names[u])} -- {_dot_id(names[v])};" for u, v in g.iter_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_id(name: str) -> str:
    if name.isidentifier() or name.isdigit():
        return name
    return '"' + name.replace('"', '\\"') + '"'


def emit_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"] + [f"{u} {v}" for u, v in g.iter_edges()]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    """Read an ``"n m"`` header followed by ``m`` lines ``"u v"`` with 0-based vertices.

    Blank lines and ``#`` comments are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise MalformedEdgeList("missing 'n m' header", 1)
    lineno, header = rows[0]
    n, m = _two_ints(header, lineno)
    if not 0 <= n <= MAX_ORDER:
        raise MalformedEdgeList(f"order {n} outside 0..{MAX_ORDER}", lineno)
    if len(rows) - 1 != m:
        raise MalformedEdgeList(f"header announces {m} edges, found {len(rows) - 1}", lineno)
    adj = [0] * n
    for lineno, line in rows[1:]:
        u, v = _two_ints(line, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedEdgeList(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise MalformedEdgeList("self-loop", lineno)
        if adj[u] >> v & 1:
            raise MalformedEdgeList(f"duplicate edge {u} {v}", lineno)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def _two_ints(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise MalformedEdgeList(f"expected two integers, got {line!r}", lineno)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise MalformedEdgeList(f"expected two integers, got {line!r}", lineno) from None
