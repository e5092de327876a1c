"""Maximum matchings, Tutte barriers and the Gallai-Edmonds decomposition."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph_core import Edge, Graph, components, induced, isolate, iter_bits, odd_components

Matching = list[Edge]


def maximum_matching(g: Graph) -> Matching:
    """Maximum matching by Edmonds' blossom algorithm, O(n^3).

    Returns sorted edges ``(u, v)`` with ``u < v``. Deterministic for a
    fixed labelled input.
    """
    n = g.n
    nbrs = [list(iter_bits(row)) for row in g.adj]
    match = [-1] * n

    # greedy start; any maximal matching works
    for v in range(n):
        if match[v] == -1:
            for u in nbrs[v]:
                if match[u] == -1:
                    match[v], match[u] = u, v
                    break

    def find_path(root: int) -> tuple[int, list[int]]:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] != -1 or not nbrs[root]:
            continue
        end, parent = find_path(root)
        v = end
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v], match[pv] = pv, v
            v = nxt
    return sorted((v, match[v]) for v in range(n) if match[v] > v)


def matching_number(g: Graph) -> int:
    """nu(G)."""
    return len(maximum_matching(g))


def is_matching(g: Graph, edges: list[Edge]) -> bool:
    seen = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and 2 * matching_number(g) == g.n


def maximum_matchings(g: Graph) -> Iterator[Matching]:
    """Every maximum matching of ``g``, each exactly once (small graphs only)."""
    nu = matching_number(g)
    slack = g.n - 2 * nu  # vertices a maximum matching leaves uncovered

    def rec(alive: int, skips: int, acc: list[Edge]) -> Iterator[Matching]:
        if not alive:
            yield sorted(acc)
            return
        v = (alive & -alive).bit_length() - 1
        rest = alive & ~(1 << v)
        if skips < slack:
            yield from rec(rest, skips + 1, acc)
        for u in iter_bits(g.adj[v] & rest):
            acc.append((v, u))
            yield from rec(rest & ~(1 << u), skips, acc)
            acc.pop()

    yield from rec((1 << g.n) - 1, 0, [])


def tutte_violator(g: Graph) -> list[int] | None:
    """A set T with o(G - T) > |T|, or None when no such set exists.

    Subsets are searched by increasing size. Since o(G - T) <= n - |T|, no
    set with ``|T| >= n/2`` can violate, which bounds the search.
    """
    n = g.n
    size = 0
    while 2 * size < n:
        for t in combinations(range(n), size):
            if odd_components(g, t) > size:
                return list(t)
        size += 1
    return None


def is_factor_critical(g: Graph) -> bool:
    """True iff |G| is odd and G - v has a perfect matching for every v."""
    if g.n % 2 == 0:
        return False
    half = (g.n - 1) // 2
    return all(matching_number(isolate(g, [v])) == half for v in range(g.n))


def near_perfect_matching(g: Graph, avoid: int | None = None) -> Matching | None:
    """Matching missing exactly one vertex (``avoid`` if given), or None."""
    if g.n % 2 == 0:
        return None
    half = (g.n - 1) // 2
    if avoid is None:
        m = maximum_matching(g)
    else:
        m = maximum_matching(isolate(g, [avoid]))
    return m if len(m) == half else None


@dataclass(frozen=True)
class GEDecomposition:
    d_components: tuple[tuple[int, ...], ...]
    a: tuple[int, ...]
    c: tuple[int, ...]

    @property
    def d(self) -> tuple[int, ...]:
        return tuple(sorted(v for comp in self.d_components for v in comp))

    def to_dict(self) -> dict:
        return {"D": [list(c) for c in self.d_components], "A": list(self.a), "C": list(self.c)}


def gallai_edmonds(g: Graph) -> GEDecomposition:
    """Canonical decomposition with D computed from its definition:
    ``v`` is in D iff nu(G - v) == nu(G).
    """
    nu = matching_number(g)
    d = [v for v in range(g.n) if matching_number(isolate(g, [v])) == nu]
    d_mask = sum(1 << v for v in d)
    nbr = 0
    for v in d:
        nbr |= g.adj[v]
    a = [v for v in range(g.n) if nbr >> v & 1 and not d_mask >> v & 1]
    a_mask = sum(1 << v for v in a)
    c = [v for v in range(g.n) if not (d_mask | a_mask) >> v & 1]
    sub = induced(g, d)
    comps = tuple(tuple(d[i] for i in comp) for comp in components(sub))
    return GEDecomposition(comps, tuple(a), tuple(c))


def verify_ge(g: Graph, dec: GEDecomposition) -> bool:
    """Check the Gallai-Edmonds structure claims for a proposed decomposition.

    Verifies that (D, A, C) partitions V, that A is exactly the outside
    neighborhood of D, that the D-components are the components of G[D],
    that each is factor-critical, that G[C] is perfectly matchable, that
    every maximum matching is near-perfect on each D-component, perfect on
    C and matches A into distinct D-components, and the count
    nu = |A| + |C|/2 + sum (|D_i| - 1)/2.
    """
    d = [v for comp in dec.d_components for v in comp]
    everything = d + list(dec.a) + list(dec.c)
    if sorted(everything) != list(range(g.n)):
        return False
    d_set, a_set, c_set = set(d), set(dec.a), set(dec.c)
    outside = {u for v in d for u in iter_bits(g.adj[v])} - d_set
    if outside != a_set:
        return False
    comp_sets = [set(comp) for comp in dec.d_components]
    d_sorted = sorted(d)
    actual = [sorted(d_sorted[i] for i in comp) for comp in components(induced(g, d_sorted))]
    if sorted(map(sorted, comp_sets)) != sorted(actual):
        return False
    for comp in dec.d_components:
        if not is_factor_critical(induced(g, comp)):
            return False
    if len(c_set) % 2 or not has_perfect_matching(induced(g, dec.c)):
        return False
    nu = matching_number(g)
    if 2 * nu != 2 * len(a_set) + len(c_set) + sum(len(c) - 1 for c in comp_sets):
        return False
    comp_of = {v: i for i, comp in enumerate(comp_sets) for v in comp}
    for m in maximum_matchings(g):
        inside = [0] * len(comp_sets)
        c_edges = 0
        a_targets = []
        for u, v in m:
            if u in comp_of and v in comp_of and comp_of[u] == comp_of[v]:
                inside[comp_of[u]] += 1
            elif u in c_set and v in c_set:
                c_edges += 1
            elif u in a_set or v in a_set:
                x, y = (u, v) if u in a_set else (v, u)
                if y not in comp_of:
                    return False
                a_targets.append(comp_of[y])
            else:
                return False
        if any(inside[i] != (len(c) - 1) // 2 for i, c in enumerate(comp_sets)):
            return False
        if 2 * c_edges != len(c_set):
            return False
        if len(a_targets) != len(a_set) or len(set(a_targets)) != len(a_targets):
            return False
    return True
