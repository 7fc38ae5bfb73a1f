"""Plain graph6 encoding and decoding on ``(n, edges)`` pairs.

Only the undirected, loop-free graph6 variant is supported. The optional
``>>graph6<<`` header is accepted on input and never written.
"""
from __future__ import annotations

from .errors import ParseError

HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode(n: int, edges) -> str:
    """Encode a simple graph on vertices ``0..n-1``."""
    present = {(min(u, v), max(u, v)) for u, v in edges}
    bits = [1 if (i, j) in present else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_size(n) + body


def decode(text: str) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Decode one graph6 string into ``(n, sorted edge tuple)``."""
    s = text.strip()
    offset = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        offset = len(HEADER)
    if not s:
        raise ParseError("empty graph6 string", 1, offset + 1)
    for k, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ch!r} outside the graph6 range", 1, offset + k + 1)
    values = [ord(ch) - 63 for ch in s]
    if values[0] != 63:
        n, pos = values[0], 1
    elif len(values) > 1 and values[1] != 63:
        if len(values) < 4:
            raise ParseError("truncated vertex count", 1, offset + 1)
        n = (values[1] << 12) | (values[2] << 6) | values[3]
        pos = 4
    else:
        if len(values) < 8:
            raise ParseError("truncated vertex count", 1, offset + 1)
        n = 0
        for v in values[2:8]:
            n = (n << 6) | v
        pos = 8
    need = (n * (n - 1) // 2 + 5) // 6
    body = values[pos:]
    if len(body) != need:
        # point at the first surplus byte, or just past the end when bytes are missing
        column = offset + pos + min(len(body), need) + 1
        raise ParseError(f"expected {need} adjacency bytes for n={n}, found {len(body)}", 1, column)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return n, tuple(sorted(edges))
