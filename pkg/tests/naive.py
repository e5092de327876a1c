"""Slow reference implementations used only as test oracles."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from arlab.colorings import EdgeColoring
from arlab.graph_core import Graph


def brute_matching_number(g: Graph) -> int:
    adj = g.adj

    @lru_cache(maxsize=None)
    def best(alive: int) -> int:
        if not alive:
            return 0
        v = (alive & -alive).bit_length() - 1
        rest = alive & ~(1 << v)
        out = best(rest)
        nb = adj[v] & rest
        while nb:
            u = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            out = max(out, 1 + best(rest & ~(1 << u)))
        return out

    return best((1 << g.n) - 1)


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    he = set(h.edges())
    return any(
        all(tuple(sorted((p[u], p[v]))) in he for u, v in g.edges())
        for p in permutations(range(g.n))
    )


def brute_factor_critical(g: Graph) -> bool:
    if g.n % 2 == 0:
        return False
    for v in range(g.n):
        keep = [u for u in range(g.n) if u != v]
        sub = Graph.from_edges(len(keep), [(keep.index(a), keep.index(b)) for a, b in g.edges() if v not in (a, b)])
        if 2 * brute_matching_number(sub) != g.n - 1:
            return False
    return True


def restricted_growth_strings(m: int, r: int):
    """All set partitions of range(m) into exactly r blocks."""
    labels = [0] * m

    def rec(i: int, blocks: int):
        if i == m:
            if blocks == r:
                yield tuple(labels)
            return
        if blocks + (m - i) < r:
            return
        for b in range(min(blocks + 1, r)):
            labels[i] = b
            yield from rec(i + 1, max(blocks, b + 1))

    if m:
        yield from rec(0, 0)


def naive_rainbow(c: EdgeColoring, kind: str, s: int) -> bool:
    """Does ``c`` contain a rainbow copy? Enumerates vertex tuples directly."""
    col = c.color
    n = c.n
    if kind == "star":
        for v in range(n):
            for leaves in combinations([u for u in range(n) if u != v], s):
                if len({col(v, u) for u in leaves}) == s:
                    return True
        return False
    if kind == "matching":
        for verts in combinations(range(n), 2 * s):
            first = verts[0]
            rest = verts[1:]
            # pair the lowest vertex with each partner, recursively
            if _matching_pairs_rainbow(col, first, rest, set()):
                return True
        return False
    for v in range(n):
        others = [u for u in range(n) if u != v]
        for verts in combinations(others, 2 * s):
            if _fan_rainbow(col, v, verts[0], verts[1:], set()):
                return True
    return False


def _matching_pairs_rainbow(col, first, rest, used) -> bool:
    for i, u in enumerate(rest):
        c = col(first, u)
        if c in used:
            continue
        remaining = rest[:i] + rest[i + 1:]
        if not remaining:
            return True
        if _matching_pairs_rainbow(col, remaining[0], remaining[1:], used | {c}):
            return True
    return False


def _fan_rainbow(col, v, first, rest, used) -> bool:
    for i, u in enumerate(rest):
        cs = {col(v, first), col(v, u), col(first, u)}
        if len(cs) < 3 or cs & used:
            continue
        remaining = rest[:i] + rest[i + 1:]
        if not remaining:
            return True
        if _fan_rainbow(col, v, remaining[0], remaining[1:], used | cs):
            return True
    return False
