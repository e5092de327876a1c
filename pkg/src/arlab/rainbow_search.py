"""Exact search for rainbow stars, matchings and friendship graphs."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Any, Iterable

from .colorings import EdgeColoring, color_classes
from .errors import InvalidParameter
from .graph_core import Edge

KINDS = ("star", "matching", "friendship")


@dataclass(frozen=True, order=True)
class Pattern:
    kind: str
    size: int

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise InvalidParameter(f"unknown pattern kind {self.kind!r}")
        if self.size < 1:
            raise InvalidParameter("pattern size must be >= 1")

    @property
    def rank(self) -> tuple[int, int]:
        return KINDS.index(self.kind), self.size

    def __str__(self) -> str:
        if self.kind == "star":
            return f"K1,{self.size}"
        if self.kind == "matching":
            return f"{self.size}K2"
        return f"F{self.size}"

    @property
    def num_edges(self) -> int:
        return 3 * self.size if self.kind == "friendship" else self.size

    @property
    def num_vertices(self) -> int:
        return {"star": self.size + 1, "matching": 2 * self.size, "friendship": 2 * self.size + 1}[self.kind]


_PATTERNS = [
    (re.compile(r"K_?\{?1,(\d+)\}?"), "star"),
    (re.compile(r"\(?(\d+)\)?K_?2"), "matching"),
    (re.compile(r"F_?\{?(\d+)\}?"), "friendship"),
]


def parse_pattern(text: str) -> Pattern:
    """``"K1,4"`` (star), ``"4K2"`` (matching), ``"F3"`` (friendship); ``"K3"`` is F1."""
    s = text.strip().replace(" ", "")
    if s in ("K3", "K_3", "triangle"):
        return Pattern("friendship", 1)
    for rx, kind in _PATTERNS:
        m = rx.fullmatch(s)
        if m:
            return Pattern(kind, int(m.group(1)))
    raise InvalidParameter(f"cannot parse pattern {text!r}")


def parse_targets(text: str) -> list[Pattern]:
    """Semicolon-separated list such as ``"K1,4;4K2"``."""
    parts = [p for p in text.split(";") if p.strip()]
    if not parts:
        raise InvalidParameter("empty target list")
    return [parse_pattern(p) for p in parts]


@dataclass(frozen=True)
class RainbowEmbedding:
    pattern: str
    size: int
    center: int | None
    edges: tuple[Edge, ...]
    colors: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "pattern": self.pattern,
            "size": self.size,
            "center": self.center,
            "edges": [list(e) for e in self.edges],
            "colors": list(self.colors),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def verify_embedding(c: EdgeColoring, emb: RainbowEmbedding) -> bool:
    """Check the embedding is a rainbow copy of its pattern in ``c``."""
    edges = [tuple(sorted(e)) for e in emb.edges]
    if len(set(edges)) != len(edges) or any(u == v or not 0 <= u < c.n or not 0 <= v < c.n for u, v in edges):
        return False
    if [c.color(u, v) for u, v in edges] != list(emb.colors) or len(set(emb.colors)) != len(emb.colors):
        return False
    s = emb.size
    if emb.pattern == "star":
        return len(edges) == s and emb.center is not None and all(emb.center in e for e in edges)
    if emb.pattern == "matching":
        verts = [v for e in edges for v in e]
        return len(edges) == s and len(set(verts)) == 2 * s
    if emb.pattern == "friendship":
        v = emb.center
        if v is None or len(edges) != 3 * s:
            return False
        spokes = [e for e in edges if v in e]
        rims = [e for e in edges if v not in e]
        rim_verts = [x for e in rims for x in e]
        return (
            len(rims) == s
            and len(set(rim_verts)) == 2 * s
            and sorted(x for e in spokes for x in e if x != v) == sorted(rim_verts)
        )
    return False


def _checked(c: EdgeColoring, emb: RainbowEmbedding) -> RainbowEmbedding:
    if not verify_embedding(c, emb):
        raise AssertionError(f"search produced an invalid embedding: {emb}")
    return emb


def _center_order(mat: list[list[int]]) -> list[int]:
    n = len(mat)
    distinct = [len({mat[v][u] for u in range(n) if u != v}) for v in range(n)]
    return sorted(range(n), key=lambda v: (-distinct[v], v))


def find_rainbow_star(c: EdgeColoring, s: int) -> RainbowEmbedding | None:
    """A center with ``s`` incident edges of distinct colors, if any."""
    if s < 1:
        raise InvalidParameter("s must be >= 1")
    mat = c.matrix()
    for v in _center_order(mat):
        first: dict[int, int] = {}
        for u in range(c.n):
            if u != v and mat[v][u] not in first:
                first[mat[v][u]] = u
        if len(first) < s:
            break  # centers are sorted by distinct-color count
        leaves = sorted(first.values())[:s]
        edges = tuple(tuple(sorted((v, u))) for u in leaves)
        return _checked(c, RainbowEmbedding("star", s, v, edges, tuple(mat[v][u] for u in leaves)))
    return None


def find_rainbow_matching(c: EdgeColoring, s: int) -> RainbowEmbedding | None:
    """``s`` disjoint edges of distinct colors, by backtracking over color
    classes in index order (take one edge of the class, or skip it)."""
    if s < 1:
        raise InvalidParameter("s must be >= 1")
    if 2 * s > c.n:
        return None
    classes = color_classes(c)
    r = len(classes)
    chosen: list[tuple[Edge, int]] = []

    def rec(i: int, used: int) -> bool:
        if len(chosen) == s:
            return True
        if len(chosen) + (r - i) < s or 2 * (s - len(chosen)) > c.n - used.bit_count():
            return False
        for u, v in classes[i]:
            if not (used >> u & 1 or used >> v & 1):
                chosen.append(((u, v), i + 1))
                if rec(i + 1, used | 1 << u | 1 << v):
                    return True
                chosen.pop()
        return rec(i + 1, used)

    if not rec(0, 0):
        return None
    return _checked(c, RainbowEmbedding(
        "matching", s, None, tuple(e for e, _ in chosen), tuple(col for _, col in chosen)
    ))


def find_rainbow_friendship(c: EdgeColoring, s: int) -> RainbowEmbedding | None:
    """A center plus ``s`` disjoint pairs whose 3s edges are all distinctly colored."""
    if s < 1:
        raise InvalidParameter("s must be >= 1")
    if c.n < 2 * s + 1:
        return None
    mat = c.matrix()
    for v in _center_order(mat):
        others = [u for u in range(c.n) if u != v]
        tris = []
        for i, a in enumerate(others):
            ca = mat[v][a]
            for b in others[i + 1:]:
                cb, cab = mat[v][b], mat[a][b]
                if ca != cb and ca != cab and cb != cab:
                    tris.append((a, b, 1 << a | 1 << b, 1 << ca | 1 << cb | 1 << cab))
        if len(tris) < s:
            continue
        picked: list[int] = []

        def rec(cands: list[int], vmask: int, cmask: int) -> bool:
            if len(picked) == s:
                return True
            need = s - len(picked)
            for pos, t in enumerate(cands):
                if len(cands) - pos < need:
                    return False
                _, _, tv, tc = tris[t]
                rest = [
                    x for x in cands[pos + 1:]
                    if not (tris[x][2] & (vmask | tv)) and not (tris[x][3] & (cmask | tc))
                ]
                if len(rest) < need - 1:
                    continue
                picked.append(t)
                if rec(rest, vmask | tv, cmask | tc):
                    return True
                picked.pop()
            return False

        if rec(list(range(len(tris))), 0, 0):
            edges: list[Edge] = []
            for t in picked:
                a, b = tris[t][:2]
                edges += [tuple(sorted((v, a))), tuple(sorted((v, b))), (a, b)]
            cols = tuple(mat[x][y] for x, y in edges)
            return _checked(c, RainbowEmbedding("friendship", s, v, tuple(edges), cols))
    return None


_FINDERS = {
    "star": find_rainbow_star,
    "matching": find_rainbow_matching,
    "friendship": find_rainbow_friendship,
}


def find_rainbow(c: EdgeColoring, pattern: Pattern | str) -> RainbowEmbedding | None:
    p = parse_pattern(pattern) if isinstance(pattern, str) else pattern
    return _FINDERS[p.kind](c, p.size)


def find_rainbow_in_family(c: EdgeColoring, family: Iterable[Pattern | str]) -> RainbowEmbedding | None:
    """First rainbow member found, trying stars, then matchings, then
    friendship graphs, each by ascending size."""
    pats = sorted(
        (parse_pattern(p) if isinstance(p, str) else p for p in family),
        key=lambda p: p.rank,
    )
    for p in pats:
        emb = find_rainbow(c, p)
        if emb is not None:
            return emb
    return None
