"""graph6 and edge-list text formats."""

from __future__ import annotations

from .graphs import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def emit_graph6(G: Graph, header: bool = False) -> str:
    bits = []
    for j in range(1, G.n):
        for i in range(j):
            bits.append(G.adj[i] >> j & 1)
    bits += [0] * (-len(bits) % 6)
    body = "".join(chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6))
    return (HEADER if header else "") + _encode_n(G.n) + body


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 record; a leading ``>>graph6<<`` header is skipped."""
    s = text.strip("\r\n")
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    if not s:
        raise Graph6Error("empty graph6 record", base)
    data = []
    for k, ch in enumerate(s):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {ch!r} outside the graph6 range 63..126", base + k)
        data.append(c - 63)
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n, pos = (data[1] << 12) | (data[2] << 6) | data[3], 4
    elif len(data) >= 8 and data[1] == 63:
        n = 0
        for d in data[2:8]:
            n = n << 6 | d
        pos = 8
    else:
        raise Graph6Error("truncated vertex count", base + len(data))
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos != need:
        raise Graph6Error(f"expected {need} edge bytes for n={n}, found {len(data) - pos}", base + min(len(data), pos + need))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[pos + k // 6]
            if byte >> (5 - k % 6) & 1:
                edges.append((i + 1, j + 1))
            k += 1
    if nbits % 6 and data[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("non-zero padding bits", base + len(data) - 1)
    return Graph.from_edges(n, edges)


def emit_edge_list(G: Graph) -> str:
    return "\n".join([str(G.n)] + [f"{i} {j}" for i, j in G.edges()]) + "\n"


def parse_edge_list(text: str) -> Graph:
    """First non-comment line ``n``, then lines ``i j`` with ``1 <= i < j <= n``."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge list")
    n = int(lines[0])
    edges = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'i j', got {ln!r}")
        i, j = int(parts[0]), int(parts[1])
        if not 1 <= i < j <= n:
            raise ValueError(f"line {lineno}: need 1 <= i < j <= {n}, got {i} {j}")
        edges.append((i, j))
    return Graph.from_edges(n, edges)


def read_graph_arg(arg: str) -> Graph:
    """CLI graph argument: a graph6 string or ``@path`` to an edge-list file."""
    if arg.startswith("@"):
        with open(arg[1:]) as fh:
            return parse_edge_list(fh.read())
    return parse_graph6(arg)
