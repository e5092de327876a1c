"""Edge-colorings of K_n and the lower-bound constructions."""

from __future__ import annotations

import json
from collections.abc import Callable, Hashable, Mapping, Sequence
from dataclasses import dataclass
from itertools import combinations
from typing import Any

from .errors import InvalidParameter
from .extremal_catalog import build_D_k_member, build_EX_friendship
from .graph_core import Edge, Graph, complete, union


def edge_index(n: int, u: int, v: int) -> int:
    """Position of {u, v} in the lexicographic order of E(K_n)."""
    if u > v:
        u, v = v, u
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def all_pairs(n: int) -> list[Edge]:
    return list(combinations(range(n), 2))


@dataclass(frozen=True)
class EdgeColoring:
    """A surjective coloring of E(K_n) onto ``1..r``.

    ``colors[i]`` is the color of the i-th pair in lexicographic order.
    """

    n: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidParameter("n must be non-negative")
        if len(self.colors) != self.n * (self.n - 1) // 2:
            raise InvalidParameter(f"expected {self.n * (self.n - 1) // 2} colors, got {len(self.colors)}")
        used = set(self.colors)
        if used != set(range(1, len(used) + 1)):
            raise InvalidParameter("colors must be exactly 1..r; use normalize()")

    @property
    def r(self) -> int:
        return max(self.colors, default=0)

    def color(self, u: int, v: int) -> int:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise InvalidParameter(f"({u}, {v}) is not an edge of K_{self.n}")
        return self.colors[edge_index(self.n, u, v)]

    def matrix(self) -> list[list[int]]:
        """Dense color lookup; the diagonal holds 0."""
        m = [[0] * self.n for _ in range(self.n)]
        for (u, v), c in zip(all_pairs(self.n), self.colors):
            m[u][v] = m[v][u] = c
        return m

    def items(self) -> list[tuple[int, int, int]]:
        return [(u, v, c) for (u, v), c in zip(all_pairs(self.n), self.colors)]

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "r": self.r, "edges": [list(t) for t in self.items()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(", ", ": "))

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> EdgeColoring:
        try:
            n = int(d["n"])
            labels = {(int(u), int(v)): int(c) for u, v, c in d["edges"]}
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidParameter(f"malformed coloring JSON: {exc}") from exc
        c = normalize(labels, n)
        if "r" in d and int(d["r"]) != c.r:
            raise InvalidParameter(f"declared r={d['r']} but {c.r} colors are used")
        return c

    @classmethod
    def from_json(cls, text: str) -> EdgeColoring:
        return cls.from_dict(json.loads(text))


def normalize(c: EdgeColoring | Mapping[Edge, Hashable] | Sequence[Hashable], n: int | None = None) -> EdgeColoring:
    """Rename colors to ``1..r`` by rank of the original (sortable) labels.

    Accepts an EdgeColoring, a mapping from pairs to labels (total on
    E(K_n)), or a sequence of labels in lexicographic pair order.
    """
    if isinstance(c, EdgeColoring):
        return c
    if isinstance(c, Mapping):
        if n is None:
            n = 1 + max((max(e) for e in c), default=0)
        labels = []
        for u, v in all_pairs(n):
            key = (u, v) if (u, v) in c else (v, u)
            if key not in c:
                raise InvalidParameter(f"pair ({u}, {v}) is uncolored")
            labels.append(c[key])
        if len(c) != len(labels):
            raise InvalidParameter("coloring has entries outside E(K_n)")
    else:
        labels = list(c)
        if n is None:
            raise InvalidParameter("n is required for a label sequence")
    rank = {lab: i + 1 for i, lab in enumerate(sorted(set(labels)))}
    return EdgeColoring(n, tuple(rank[lab] for lab in labels))


def color_classes(c: EdgeColoring) -> list[list[Edge]]:
    """Edges of each color; entry ``i`` is color ``i + 1``."""
    classes: list[list[Edge]] = [[] for _ in range(c.r)]
    for e, col in zip(all_pairs(c.n), c.colors):
        classes[col - 1].append(e)
    return classes


def colors_used(c: EdgeColoring) -> int:
    return len(set(c.colors))


def all_rainbow(n: int) -> EdgeColoring:
    return EdgeColoring(n, tuple(range(1, n * (n - 1) // 2 + 1)))


def monochromatic(n: int) -> EdgeColoring:
    return EdgeColoring(n, (1,) * (n * (n - 1) // 2))


def rainbow_support_coloring(n: int, support: Graph) -> EdgeColoring:
    """``support`` (on the lowest vertices) rainbow with colors 1..m in edge
    order; every other pair gets the filler color m + 1."""
    if support.n > n:
        raise InvalidParameter(f"support on {support.n} vertices does not fit K_{n}")
    own = {e: i + 1 for i, e in enumerate(support.edges())}
    filler = len(own) + 1
    return EdgeColoring(n, tuple(own.get(e, filler) for e in all_pairs(n)))


def coloring_k2_star(n: int) -> EdgeColoring:
    """x1x2 -> 1, x1xj -> 2 (j >= 3), everything else -> 3 (x_i is vertex i-1)."""
    if n < 4:
        raise InvalidParameter("coloring_k2_star needs n >= 4")
    return EdgeColoring(n, tuple(1 if (u, v) == (0, 1) else 2 if u == 0 else 3 for u, v in all_pairs(n)))


def coloring_two_cliques(n: int, k: int) -> EdgeColoring:
    """Two disjoint rainbow K_k (odd k) on vertices 0..2k-1, one filler color."""
    if k < 3 or k % 2 == 0:
        raise InvalidParameter("coloring_two_cliques needs odd k >= 3")
    if n < 2 * k:
        raise InvalidParameter(f"need n >= 2k = {2 * k}")
    return rainbow_support_coloring(n, union(complete(k), complete(k)))


def coloring_clique_plus_C(n: int, k: int) -> EdgeColoring:
    """Rainbow K_{k-1} plus a nearly (k-1)-regular factor-critical C' of order k+1."""
    if k < 4 or k % 2:
        raise InvalidParameter("coloring_clique_plus_C needs even k >= 4")
    if n < 2 * k:
        raise InvalidParameter(f"need n >= 2k = {2 * k}")
    return rainbow_support_coloring(n, build_D_k_member(k))


def coloring_lower_friendship(n: int, k: int) -> EdgeColoring:
    """The graph from build_EX_friendship(n, k) rainbow, one filler color."""
    return rainbow_support_coloring(n, build_EX_friendship(n, k))


def representative_rainbow_subgraph(
    c: EdgeColoring, pick: Callable[[int, list[Edge]], Edge] | None = None
) -> Graph:
    """One edge per color class (default: the lexicographically smallest)."""
    chosen = []
    for i, cls in enumerate(color_classes(c)):
        e = min(cls) if pick is None else pick(i + 1, cls)
        if e not in cls:
            raise InvalidParameter(f"pick returned {e}, not an edge of color {i + 1}")
        chosen.append(e)
    return Graph.from_edges(c.n, chosen)
