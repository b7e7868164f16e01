"""graph6 text encoding (upper triangle, column-major, 6 bits per byte)."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import Graph6Error
from .graph import Graph


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise Graph6Error("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise Graph6Error(f"n={n} too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Vertex count and the offset where the edge bytes start."""
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte vertex count")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated 4-byte vertex count")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def encode(g: Graph) -> str:
    bits = []
    for v in range(1, g.n):
        row = g.adj[v]
        for u in range(v):
            bits.append(row >> u & 1)
    out = bytearray(_encode_n(g.n))
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        out.append(val + 63)
    return out.decode("ascii")


def decode(text: str | bytes) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if any(b < 63 or b > 126 for b in data):
        raise Graph6Error(f"invalid graph6 byte in {data!r}")
    n, off = _decode_n(data)
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[off:]
    if len(body) != need:
        raise Graph6Error(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    adj = [0] * n
    idx = 0
    total = n * (n - 1) // 2
    for v in range(1, n):
        for u in range(v):
            byte = body[idx // 6] - 63
            if byte >> (5 - idx % 6) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            idx += 1
    # padding bits must be zero for a canonical string
    if total % 6:
        last = body[-1] - 63
        if last & ((1 << (6 - total % 6)) - 1):
            raise Graph6Error("nonzero padding bits")
    return Graph(n, tuple(adj))


def read_stream(stream: TextIO | Iterable[str]) -> Iterator[Graph]:
    for line in stream:
        line = line.strip()
        if line:
            yield decode(line)


def write_stream(graphs: Iterable[Graph], stream: TextIO) -> int:
    count = 0
    for g in graphs:
        stream.write(encode(g) + "\n")
        count += 1
    return count
