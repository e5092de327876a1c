"""Simple graphs over dense integer vertices, stored as adjacency bitsets.

Vertex ``v`` of a :class:`Graph` is an integer in ``range(g.n)`` and
``g.adj[v]`` is an ``int`` whose bit ``u`` is set iff ``uv`` is an edge.
Everything here treats graphs as immutable values.

Isomorphism handling (canonical forms, enumeration) ignores isolated
vertices: every extremal family we care about is defined up to them.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

from .errors import InvalidParameter

Edge = tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise InvalidParameter(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidParameter(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if row >> v & 1:
                raise InvalidParameter(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise InvalidParameter(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameter(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidParameter(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def __len__(self) -> int:
        return self.n

    def edges(self) -> list[Edge]:
        """All edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(_popcount(row) for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return _popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [_popcount(row) for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def non_isolated(self) -> list[int]:
        return [v for v in range(self.n) if self.adj[v]]


# ---------------------------------------------------------------------------
# constructors


def empty(n: int) -> Graph:
    if n < 0:
        raise InvalidParameter("n must be non-negative")
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    if n < 0:
        raise InvalidParameter("n must be non-negative")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def turan(n: int, p: int) -> Graph:
    """Complete balanced ``p``-partite graph T(n, p).

    Parts are consecutive vertex ranges; the larger parts come first.
    """
    if not 1 <= p <= n:
        raise InvalidParameter(f"turan needs 1 <= p <= n, got n={n}, p={p}")
    sizes = turan_part_sizes(n, p)
    part_of: list[int] = []
    for i, size in enumerate(sizes):
        part_of.extend([i] * size)
    return Graph.from_edges(n, ((u, v) for u, v in combinations(range(n), 2) if part_of[u] != part_of[v]))


def turan_part_sizes(n: int, p: int) -> list[int]:
    q, rem = divmod(n, p)
    return [q + 1] * rem + [q] * (p - rem)


def friendship(k: int) -> Graph:
    """F_k: ``k`` triangles sharing vertex 0; triangle ``i`` is ``0, 2i+1, 2i+2``."""
    if k < 1:
        raise InvalidParameter("friendship graph needs k >= 1")
    edges = []
    for i in range(k):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * k + 1, edges)


def star(k: int) -> Graph:
    """K_{1,k} with center 0."""
    return Graph.from_edges(k + 1, ((0, j) for j in range(1, k + 1)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty(a), empty(b))


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; the vertices of ``h`` are shifted by ``g.n``."""
    shift = g.n
    return Graph(g.n + h.n, g.adj + tuple(row << shift for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    adj = [row | h_mask for row in g.adj] + [(row << g.n) | g_mask for row in h.adj]
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# vertex and edge surgery


def _check_vertices(g: Graph, xs: Iterable[int]) -> set[int]:
    xs = set(xs)
    bad = [x for x in xs if not 0 <= x < g.n]
    if bad:
        raise InvalidParameter(f"vertices {sorted(bad)} out of range for n={g.n}")
    return xs


def induced(g: Graph, xs: Iterable[int]) -> Graph:
    """G[X]. Vertex ``i`` of the result is the ``i``-th smallest element of X."""
    keep = sorted(_check_vertices(g, xs))
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        adj.append(sum(1 << pos[u] for u in iter_bits(g.adj[v]) if u in pos))
    return Graph(len(keep), tuple(adj))


def remove_vertices(g: Graph, xs: Iterable[int]) -> Graph:
    """G - X, relabelled like :func:`induced` on the kept vertices."""
    drop = _check_vertices(g, xs)
    return induced(g, (v for v in range(g.n) if v not in drop))


def kept_vertices(g: Graph, removed: Iterable[int]) -> list[int]:
    """Original labels of the vertices of ``remove_vertices(g, removed)``."""
    drop = set(removed)
    return [v for v in range(g.n) if v not in drop]


def isolate(g: Graph, xs: Iterable[int]) -> Graph:
    """Delete every edge at X but keep the vertex labels."""
    mask = 0
    for x in _check_vertices(g, xs):
        mask |= 1 << x
    return Graph(g.n, tuple(0 if mask >> v & 1 else row & ~mask for v, row in enumerate(g.adj)))


def _check_edges(g: Graph, ys: Iterable[Sequence[int]]) -> list[Edge]:
    out = []
    for u, v in ys:
        if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
            raise InvalidParameter(f"invalid edge ({u}, {v}) for n={g.n}")
        out.append((u, v))
    return out


def remove_edges(g: Graph, ys: Iterable[Sequence[int]]) -> Graph:
    adj = list(g.adj)
    for u, v in _check_edges(g, ys):
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def add_edges(g: Graph, ys: Iterable[Sequence[int]]) -> Graph:
    adj = list(g.adj)
    for u, v in _check_edges(g, ys):
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph in which old vertex ``v`` becomes ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise InvalidParameter("perm must be a permutation of range(n)")
    adj = [0] * g.n
    for v, row in enumerate(g.adj):
        adj[perm[v]] = sum(1 << perm[u] for u in iter_bits(row))
    return Graph(g.n, tuple(adj))


def strip_isolated(g: Graph) -> Graph:
    return induced(g, g.non_isolated())


def pad(g: Graph, n: int) -> Graph:
    """Append isolated vertices up to ``n`` vertices."""
    if n < g.n:
        raise InvalidParameter(f"cannot pad a {g.n}-vertex graph down to {n}")
    return Graph(n, g.adj + (0,) * (n - g.n))


# ---------------------------------------------------------------------------
# connectivity


def _component_masks(adj: Sequence[int], alive: int) -> list[int]:
    comps = []
    while alive:
        seed = alive & -alive
        comp = frontier = seed
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & alive & ~comp
            comp |= frontier
        comps.append(comp)
        alive &= ~comp
    return comps


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    return [list(iter_bits(m)) for m in _component_masks(g.adj, (1 << g.n) - 1)]


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(_component_masks(g.adj, (1 << g.n) - 1)) == 1


def odd_components(g: Graph, t: Iterable[int] = ()) -> int:
    """o(G - T): number of odd-order components after deleting T."""
    alive = (1 << g.n) - 1
    for x in _check_vertices(g, t):
        alive &= ~(1 << x)
    return sum(1 for m in _component_masks(g.adj, alive) if _popcount(m) % 2)


def bipartition(g: Graph) -> list[int] | None:
    """A proper 2-coloring (side 0/1 per vertex) or None if not bipartite."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in iter_bits(g.adj[v]):
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return None
    return side


# ---------------------------------------------------------------------------
# canonical forms


_SMALL_BITS = [list(iter_bits(m)) for m in range(1 << 12)]


def _bit_list(mask: int) -> list[int]:
    return _SMALL_BITS[mask] if mask < 4096 else list(iter_bits(mask))


def _refine(nbrs: list[list[int]], colors: list[int], weights: list[int]) -> list[int]:
    # Ordered colour refinement: new colour = rank of (old colour, multiset of
    # neighbour colours). The multiset is encoded exactly as a sum of powers
    # of (n + 1), so cell order never depends on vertex labels.
    k = len(set(colors))
    shift = weights[-1] * len(nbrs) if weights else 1
    while True:
        sigs = [colors[v] * shift + sum([weights[colors[u]] for u in nb]) for v, nb in enumerate(nbrs)]
        uniq = sorted(set(sigs))
        if len(uniq) == k:
            rank = {s: i for i, s in enumerate(uniq)}
            return [rank[s] for s in sigs]
        rank = {s: i for i, s in enumerate(uniq)}
        colors, k = [rank[s] for s in sigs], len(uniq)


def _twin_representatives(members: list[int], adj: Sequence[int]) -> list[int]:
    # N(u)-v == N(v)-u is an equivalence; swapping twins is an automorphism
    # that fixes everything else, so one branch per class suffices.
    reps: list[int] = []
    for v in members:
        if not any(adj[r] & ~(1 << v) == adj[v] & ~(1 << r) for r in reps):
            reps.append(v)
    return reps


def _canonical_search(n: int, adj: Sequence[int]) -> tuple[list[int], tuple[int, ...]]:
    nbrs = [_bit_list(row) for row in adj]
    weights = [(n + 1) ** c for c in range(2 * n + 1)]
    best_key: tuple[int, ...] = ()
    best_order: list[int] = list(range(n))

    def search(colors: list[int]) -> None:
        nonlocal best_key, best_order
        counts = [0] * n
        for c in colors:
            counts[c] += 1
        target = next((c for c in range(n) if counts[c] > 1), None)
        if target is None:
            order = [0] * n
            for v, c in enumerate(colors):
                order[c] = v
            key = tuple([sum([1 << colors[u] for u in nbrs[v]]) for v in order])
            if key > best_key:
                best_key, best_order = key, order
            return
        members = [v for v in range(n) if colors[v] == target]
        for v in _twin_representatives(members, adj):
            split = [2 * c + 1 for c in colors]
            split[v] -= 1
            search(_refine(nbrs, split, weights))

    if n:
        search(_refine(nbrs, [n - len(nb) for nb in nbrs], weights))
    return best_order, best_key


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order ``order`` such that relabelling ``order[i] -> i`` is canonical.

    Individualization-refinement search; the leaf with the largest adjacency
    certificate wins. Isolated vertices are kept (they sort last).
    """
    return _canonical_search(g.n, g.adj)[0]


def canonical_graph(g: Graph) -> Graph:
    """Canonical representative of ``g`` with isolated vertices removed."""
    h = strip_isolated(g)
    order = canonical_labeling(h)
    perm = [0] * h.n
    for i, v in enumerate(order):
        perm[v] = i
    return relabel(h, perm)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism invariant of ``g`` after deleting isolated vertices.

    Two graphs get equal forms iff they are isomorphic up to isolated
    vertices. The bytes are the graph6 encoding of :func:`canonical_graph`.
    """
    from .graph_io import to_graph6

    return to_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism up to isolated vertices."""
    return canonical_form(g) == canonical_form(h)


def _level_key(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    # certificate over all n vertices (isolated ones included)
    return _canonical_search(n, adj)[1]


# ---------------------------------------------------------------------------
# enumeration


def _expand_chunk(
    level: int,
    parents: list[tuple[int, ...]],
    max_degree: int | None,
    connected: bool,
    degree_targets: tuple[int, ...] | None,
) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Children of ``parents`` on ``level`` vertices, deduplicated by certificate."""
    out: dict[tuple[int, ...], tuple[int, ...]] = {}
    new = level - 1
    bit = 1 << new
    remaining = None
    if degree_targets is not None:
        remaining = len(degree_targets) - level
    for adj in parents:
        degs = [_popcount(row) for row in adj]
        if max_degree is None:
            eligible = list(range(new))
            top = new
        else:
            eligible = [v for v in range(new) if degs[v] < max_degree]
            top = min(max_degree, len(eligible))
        lo = 1 if connected else 0
        for size in range(lo, top + 1):
            for subset in combinations(eligible, size):
                mask = 0
                for v in subset:
                    mask |= 1 << v
                child = tuple((row | bit) if mask >> v & 1 else row for v, row in enumerate(adj)) + (mask,)
                if remaining is not None and not _degrees_feasible(child, degree_targets, remaining):
                    continue
                key = _level_key(level, child)
                if key not in out:
                    out[key] = child
    return out


def _degrees_feasible(adj: tuple[int, ...], targets: tuple[int, ...], remaining: int) -> bool:
    # each current vertex needs a distinct target t with d <= t <= d + remaining;
    # greedy on sorted lists decides this interval matching exactly
    degs = sorted(_popcount(row) for row in adj)
    pool = sorted(targets)
    i = 0
    for d in degs:
        while i < len(pool) and pool[i] < d:
            i += 1
        if i == len(pool) or pool[i] > d + remaining:
            return False
        i += 1
    return True


def _grow(
    max_vertices: int,
    *,
    max_degree: int | None = None,
    max_matching: int | None = None,
    connected: bool = False,
    hereditary: Callable[[Graph], bool] | None = None,
    degree_targets: tuple[int, ...] | None = None,
    keep_levels: bool = False,
    workers: int = 1,
) -> list[list[Graph]]:
    """Level-by-level vertex augmentation with isomorph rejection.

    Level ``j`` holds one graph per isomorphism class on exactly ``j``
    vertices satisfying the constraints (connected ones only when
    ``connected``). Every such graph has a vertex whose deletion keeps it in
    the class (any vertex for hereditary classes, a non-cut vertex for
    connected ones), so growing from the previous level is complete.
    """
    from .matching import matching_number

    if connected:
        levels: list[list[tuple[tuple[int, ...], int]]] = [[], [((0,), 0)]] if max_vertices >= 1 else [[]]
    else:
        levels = [[((), 0)]]
    start = len(levels)
    for level in range(start, max_vertices + 1):
        parents = levels[-1]
        adjs = [adj for adj, _ in parents]
        if workers > 1 and len(adjs) > 1:
            chunks = [adjs[i::workers] for i in range(workers)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(
                    _expand_chunk,
                    [level] * workers,
                    chunks,
                    [max_degree] * workers,
                    [connected] * workers,
                    [degree_targets] * workers,
                ))
            merged: dict[tuple[int, ...], tuple[int, ...]] = {}
            for part in parts:
                for key, child in part.items():
                    merged.setdefault(key, child)
            children = merged
        else:
            children = _expand_chunk(level, adjs, max_degree, connected, degree_targets)
        nxt = []
        for key in sorted(children):
            child = children[key]
            g = Graph(level, child)
            if hereditary is not None and not hereditary(g):
                continue
            nu = 0
            if max_matching is not None or keep_levels:
                nu = matching_number(g)
                if max_matching is not None and nu > max_matching:
                    continue
            nxt.append((child, nu))
        if not keep_levels:
            levels = [levels[-1]]
        levels.append(nxt)
        if not nxt and connected:
            break
    return [[Graph(len(adj), adj) for adj, _ in lvl] for lvl in levels]


def enumerate_graphs(
    max_vertices: int,
    *,
    max_degree: int | None = None,
    max_matching: int | None = None,
    exact_edges: int | None = None,
    connected: bool = False,
    hereditary: Callable[[Graph], bool] | None = None,
    visit: Callable[[Graph], None] | None = None,
    workers: int = 1,
) -> list[Graph]:
    """One canonical graph per isomorphism class on at most ``max_vertices``
    non-isolated vertices.

    ``max_degree`` and ``max_matching`` are pruned during generation.
    ``hereditary`` is an extra predicate that must be closed under taking
    induced subgraphs (e.g. F_k-freeness); it is pruned the same way.
    With ``connected=True`` only connected graphs (including K_1) are
    produced. Results are sorted by canonical form and do not depend on
    ``workers``.

    Practical limits: about 8 vertices unconstrained, more with degree or
    matching caps.
    """
    if max_vertices < 0:
        raise InvalidParameter("max_vertices must be non-negative")
    levels = _grow(
        max_vertices,
        max_degree=max_degree,
        max_matching=max_matching,
        connected=connected,
        hereditary=hereditary,
        keep_levels=connected,
        workers=workers,
    )
    if connected:
        pool = [g for lvl in levels for g in lvl]
    else:
        pool = levels[-1]
    out: dict[bytes, Graph] = {}
    for g in pool:
        if exact_edges is not None and g.num_edges() != exact_edges:
            continue
        cf = canonical_form(g)
        if cf not in out:
            out[cf] = canonical_graph(g) if not connected or g.n > 1 else g
    result = [out[k] for k in sorted(out)]
    if visit is not None:
        for g in result:
            visit(g)
    return result


def enumerate_degree_sequence(degrees: Sequence[int], *, workers: int = 1) -> list[Graph]:
    """All isomorphism classes of graphs on ``len(degrees)`` vertices whose
    degree multiset equals ``degrees`` (isolated vertices kept).
    """
    targets = tuple(sorted(degrees, reverse=True))
    m = len(targets)
    if any(d < 0 or d >= max(m, 1) for d in targets) or sum(targets) % 2:
        return []
    levels = _grow(m, max_degree=targets[0] if targets else 0, degree_targets=targets, workers=workers)
    finals = [g for g in levels[-1] if sorted(g.degrees(), reverse=True) == list(targets)]
    finals.sort(key=lambda g: _level_key(g.n, g.adj))
    return finals


# ---------------------------------------------------------------------------
# friendship subgraphs


@dataclass(frozen=True)
class FriendshipEmbedding:
    center: int
    pairs: tuple[Edge, ...]

    def edges(self) -> list[Edge]:
        out = []
        for a, b in self.pairs:
            out += [tuple(sorted((self.center, a))), tuple(sorted((self.center, b))), (a, b)]
        return out


def contains_friendship(g: Graph, k: int) -> FriendshipEmbedding | None:
    """Find a copy of F_k: a center plus ``k`` disjoint edges in its neighborhood.

    Exact: F_k with center v exists iff the neighborhood of v has matching
    number at least ``k``.
    """
    from .matching import maximum_matching

    if k < 1:
        raise InvalidParameter("k must be >= 1")
    for v in range(g.n):
        if g.degree(v) < 2 * k:
            continue
        nb = g.neighbors(v)
        m = maximum_matching(induced(g, nb))
        if len(m) >= k:
            pairs = tuple(sorted((nb[a], nb[b]) for a, b in m[:k]))
            return FriendshipEmbedding(v, pairs)
    return None
