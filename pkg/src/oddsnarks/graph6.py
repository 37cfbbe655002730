"""graph6 encoding (McKay) for simple undirected graphs.

Bytes 63..126 carry six bits each.  The vertex count N(n) is one byte for
n <= 62, ``~`` plus three bytes for n <= 258047 and ``~~`` plus six bytes
beyond that.  The upper triangle is read column by column
(x(0,1), x(0,2), x(1,2), x(0,3), ...) and zero-padded to a multiple of six.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph, GraphError, build_graph

HEADER = b">>graph6<<"


class Graph6Error(GraphError):
    pass


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise Graph6Error(f"negative order {n}")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return b"~" + bytes(((n >> s) & 63) + 63 for s in (12, 6, 0))
    if n <= 68719476735:
        return b"~~" + bytes(((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0))
    raise Graph6Error(f"order {n} too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return (n, number of bytes consumed)."""
    if not data:
        raise Graph6Error("empty graph6 record")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    chunk = data[start:start + width]
    if len(chunk) != width:
        raise Graph6Error("truncated length prefix")
    n = 0
    for b in chunk:
        n = (n << 6) | (b - 63)
    return n, start + width


def emit_graph6(G: Graph) -> bytes:
    """Encode ``G`` (no header, no newline)."""
    n = G.n
    bits = []
    for j in range(1, n):
        col = G.adj[j]
        for i in range(j):
            bits.append(1 if i in col else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)
    )
    return _encode_n(n) + body


def parse_graph6(text: bytes | str) -> Graph:
    """Decode a single graph6 record.

    A leading ``>>graph6<<`` header and one trailing newline are tolerated.
    """
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if data.endswith(b"\r\n"):
        data = data[:-2]
    elif data.endswith(b"\n"):
        data = data[:-1]
    if not data:
        raise Graph6Error("empty graph6 record")
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} at offset {pos} is outside 63..126")
    n, used = _decode_n(data)
    body = data[used:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} data bytes for n={n}, found {len(body)}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    for k in range(nbits, need * 6):
        if ((body[k // 6] - 63) >> (5 - k % 6)) & 1:
            raise Graph6Error("nonzero padding bits")
    return build_graph(n, edges)


def read_graph6_records(stream: Iterable[bytes | str]) -> Iterator[tuple[int, bytes]]:
    """Yield ``(line_number, record)`` for every non-blank line of a multi-graph file."""
    for lineno, line in enumerate(stream, 1):
        raw = line.encode("ascii", "replace") if isinstance(line, str) else line
        raw = raw.strip()
        if raw:
            yield lineno, raw


def dumps_many(graphs: Iterable[Graph]) -> bytes:
    return b"".join(emit_graph6(G) + b"\n" for G in graphs)
