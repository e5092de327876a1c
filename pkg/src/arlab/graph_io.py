"""graph6 and adjacency-list JSON encodings of :class:`Graph`."""

from __future__ import annotations

import json
from typing import Any

from .errors import InvalidParameter
from .graph_core import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise InvalidParameter("graph too large for graph6")


def _decode_n(s: str) -> tuple[int, int]:
    vals = [ord(c) - 63 for c in s]
    if vals[0] != 63:
        return vals[0], 1
    if len(vals) > 1 and vals[1] == 63:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        return n, 8
    n = 0
    for v in vals[1:4]:
        n = (n << 6) | v
    return n, 4


def to_graph6(g: Graph) -> str:
    """Standard graph6 string (no header, no trailing newline)."""
    bits = [g.adj[j] >> i & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + sum(b << (5 - k) for k, b in enumerate(bits[i:i + 6])))
        for i in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s or any(not 63 <= ord(c) <= 126 for c in s):
        raise InvalidParameter(f"not a graph6 string: {s!r}")
    n, off = _decode_n(s)
    body = s[off:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise InvalidParameter(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = []
    for c in body:
        v = ord(c) - 63
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(adj))


def graph_to_dict(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def graph_from_dict(d: dict[str, Any]) -> Graph:
    try:
        n = int(d["n"])
        edges = [(int(u), int(v)) for u, v in d["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidParameter(f"malformed graph JSON: {exc}") from exc
    return Graph.from_edges(n, edges)


def to_json(g: Graph) -> str:
    return json.dumps(graph_to_dict(g), separators=(", ", ": "))


def from_json(text: str) -> Graph:
    return graph_from_dict(json.loads(text))
