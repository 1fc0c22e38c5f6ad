"""graph6 encoding (McKay's format) for host subgraphs.

Part structure is not stored; decoding needs the host supplied out of band.
"""

from __future__ import annotations

from .errors import Graph6ParseError, MultipartiteViolationError
from .graph import Host, Subgraph

HEADER = ">>graph6<<"


def _size_bytes(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode_bits(n: int, bits: list[int]) -> str:
    """Pack an upper-triangle bit list (column-major: j ascending, then i < j)."""
    out = [_size_bytes(n)]
    bits = bits + [0] * (-len(bits) % 6)
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def encode_graph6(sub: Subgraph) -> str:
    adj = sub.adj
    n = len(adj)
    bits = [adj[i] >> j & 1 for j in range(1, n) for i in range(j)]
    return encode_bits(n, bits)


def _parse_size(data: str, base: int) -> tuple[int, int]:
    if not data:
        raise Graph6ParseError("empty graph6 string", base)
    for pos, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"byte {ch!r} outside the printable range 63..126", base + pos)
    if data[0] != "~":
        return ord(data[0]) - 63, 1
    if len(data) >= 2 and data[1] == "~":
        if len(data) < 8:
            raise Graph6ParseError("truncated 8-byte vertex-count header", base + len(data))
        width, start = 6, 2
    else:
        if len(data) < 4:
            raise Graph6ParseError("truncated 4-byte vertex-count header", base + len(data))
        width, start = 3, 1
    n = 0
    for ch in data[start:start + width]:
        n = (n << 6) | (ord(ch) - 63)
    return n, start + width


def decode_graph6(text: str, host: Host | None = None) -> tuple[int, list[tuple[int, int]]] | Subgraph:
    """Decode one graph6 line.

    Without ``host`` returns ``(vertex_count, edges)``.  With a host every
    edge is checked to be a host edge and a :class:`Subgraph` is returned.
    """
    data = text.strip()
    skip = 0
    if data.startswith(HEADER):
        data = data[len(HEADER):]
        skip = len(HEADER)
    n, pos = _parse_size(data, skip)
    nbits = n * (n - 1) // 2
    expected = pos + -(-nbits // 6)
    if len(data) != expected:
        raise Graph6ParseError(
            f"expected {expected} bytes for {n} vertices, got {len(data)}", skip + min(len(data), expected)
        )
    if host is not None and n > host.vertex_count:
        raise Graph6ParseError(f"{n} vertices exceed host size {host.vertex_count}", skip)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            ch = ord(data[pos + idx // 6]) - 63
            if ch >> (5 - idx % 6) & 1:
                if host is not None and not host.is_host_edge(i, j):
                    raise MultipartiteViolationError(
                        f"graph6 edge {i}-{j} joins {host.label(i)} and {host.label(j)} in one part"
                    )
                edges.append((i, j))
            idx += 1
    if nbits % 6 and (ord(data[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6ParseError("nonzero padding bits", skip + len(data) - 1)
    if host is None:
        return n, edges
    if n != host.vertex_count:
        raise Graph6ParseError(f"graph has {n} vertices, host K_{host.k}^{host.n} has {host.vertex_count}", skip)
    return Subgraph.from_edges(host, edges)
