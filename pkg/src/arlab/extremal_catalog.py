"""Closed-form extremal values and the extremal graph families.

The families are built from a factor-critical "block" ``C`` that is
Delta-regular (Delta even) or nearly Delta-regular (Delta odd: one vertex
of degree Delta - 1), plus a bipartite part ``G(X, Y)`` in which every
X-vertex has degree Delta and ``|X|`` equals the matching number of the
part. All membership predicates work up to isolated vertices.

Layout of constructed members: C occupies vertices ``0 .. |C|-1``, then
the X-vertices, then the Y-vertices.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from itertools import combinations
from math import ceil
from typing import Any

from .errors import Infeasible, InvalidParameter, NotFound
from .graph_core import (
    Graph,
    add_edges,
    bipartition,
    canonical_form,
    canonical_graph,
    complete,
    components,
    empty,
    enumerate_degree_sequence,
    induced,
    pad,
    remove_edges,
    strip_isolated,
    turan,
    turan_part_sizes,
    union,
)
from .matching import is_factor_critical, matching_number


class RangedValue(int):
    """An ``int`` that also records whether the closed form is proven at
    the given parameters (``proven``)."""

    proven: bool

    def __new__(cls, value: int, proven: bool) -> RangedValue:
        obj = super().__new__(cls, value)
        obj.proven = proven
        return obj

    def __repr__(self) -> str:
        return f"RangedValue({int(self)}, proven={self.proven})"


# ---------------------------------------------------------------------------
# closed forms


def f_formula(nu: int, delta: int) -> int:
    """Largest edge count with matching number <= nu and max degree <= delta."""
    if nu < 1 or delta < 1:
        raise InvalidParameter("f(nu, delta) needs nu >= 1 and delta >= 1")
    return nu * delta + (delta // 2) * (nu // ceil(delta / 2))


def ex_mantel(n: int) -> int:
    if n < 3:
        raise InvalidParameter("ex(n, K_3) is stated for n >= 3")
    return n * n // 4


def ex_friendship(n: int, k: int) -> RangedValue:
    """Turan number of F_k for k >= 2 (proven for n >= 50k^2, or n >= 5 when k = 2)."""
    if k < 2:
        raise InvalidParameter("ex_friendship needs k >= 2; use ex_mantel for triangles")
    if n < 1:
        raise InvalidParameter("n must be positive")
    extra = k * k - k if k % 2 else k * k - 3 * k // 2
    proven = n >= 50 * k * k or (k == 2 and n >= 5)
    return RangedValue(n * n // 4 + extra, proven)


def ar_star_matching(n: int, k: int) -> RangedValue:
    """ar(n, {K_{1,k+1}, (k+1)K_2}); proven for n >= 3k^2."""
    if k < 2:
        raise InvalidParameter("ar_star_matching needs k >= 2")
    if k == 2:
        value = 4
    elif k % 2:
        value = k * k - k + 2
    else:
        value = k * k - 3 * k // 2 + 2
    return RangedValue(value, n >= 3 * k * k)


def ar_friendship(n: int, k: int) -> RangedValue:
    """ar(n, F_{k+1}); proven for n >= 5 (k = 1) or n >= 50(k+1)^2 (k >= 2)."""
    if k < 1:
        raise InvalidParameter("ar_friendship needs k >= 1")
    if k == 1:
        return RangedValue(n * n // 4 + 2, n >= 5)
    return RangedValue(int(ex_friendship(n, k)) + 2, n >= 50 * (k + 1) ** 2)


# ---------------------------------------------------------------------------
# factor-critical blocks


def is_nearly_regular(g: Graph, r: int) -> bool:
    degs = sorted(g.degrees())
    return bool(degs) and degs[0] == r - 1 and (len(degs) == 1 or degs[1] == r) and degs[-1] == r


def is_regular(g: Graph, r: int) -> bool:
    return all(d == r for d in g.degrees())


def is_block(g: Graph, delta: int) -> bool:
    """(Nearly) delta-regular factor-critical graph on at least 3 vertices."""
    if g.n < 3 or g.n % 2 == 0:
        return False
    shaped = is_regular(g, delta) if delta % 2 == 0 else is_nearly_regular(g, delta)
    return shaped and is_factor_critical(g)


def _block_degrees(delta: int, order: int) -> list[int]:
    if delta % 2 == 0:
        return [delta] * order
    return [delta] * (order - 1) + [delta - 1]


def _check_block_params(delta: int, order: int) -> None:
    if delta < 1 or order < 1:
        raise InvalidParameter("delta and order must be positive")
    if order % 2 == 0:
        raise Infeasible("factor-critical graphs have odd order")
    if delta == 1:
        # the only candidate is K_1, rejected as a block
        raise Infeasible("no nearly 1-regular factor-critical graph on >= 3 vertices")
    if order < delta + 1:
        raise Infeasible(f"a graph with max degree {delta} needs at least {delta + 1} vertices")


def _circulant_block(delta: int, order: int) -> Graph:
    # offsets 1..floor(delta/2) give a Hamiltonian odd cycle, hence factor-criticality;
    # for odd delta add a near-perfect matching along the offset-h cycle, h = (order-1)/2
    half = delta // 2
    edges = {tuple(sorted((i, (i + s) % order))) for i in range(order) for s in range(1, half + 1)}
    if delta % 2:
        h = (order - 1) // 2
        walk = [(i * h) % order for i in range(order)]
        for j in range(0, order - 1, 2):
            edges.add(tuple(sorted((walk[j], walk[j + 1]))))
    return Graph.from_edges(order, sorted(edges))


def enumerate_blocks(delta: int, order: int) -> list[Graph]:
    """Every (nearly) delta-regular factor-critical graph of the given order."""
    _check_block_params(delta, order)
    return [g for g in enumerate_degree_sequence(_block_degrees(delta, order)) if is_block(g, delta)]


def build_nearly_regular_factor_critical(delta: int, order: int) -> Graph:
    """A delta-regular (even delta) or nearly delta-regular (odd delta)
    factor-critical graph of odd ``order``.

    Tries a circulant construction first and falls back to exhaustive
    search; the result is always verified before it is returned.
    """
    _check_block_params(delta, order)
    g = _circulant_block(delta, order)
    if is_block(g, delta):
        return g
    found = enumerate_blocks(delta, order)
    if not found:
        raise NotFound(f"no block found for delta={delta}, order={order}")
    return found[0]


# ---------------------------------------------------------------------------
# descriptors and constructors


FAMILIES = ("H", "Gamma", "E", "D", "EXF")


@dataclass(frozen=True)
class FamilyDescriptor:
    family: str
    nu: int | None = None
    delta: int | None = None
    k: int | None = None
    c_order: int | None = None
    y_degrees: tuple[int, ...] | None = None
    moved_edge: tuple[int, int] | None = None
    n: int | None = None
    extra: dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InvalidParameter(f"unknown family {self.family!r}")

    @property
    def x_size(self) -> int:
        if self.nu is None or self.c_order is None:
            raise InvalidParameter("x_size needs nu and c_order")
        return self.nu - (self.c_order - 1) // 2

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        for key in ("y_degrees", "moved_edge"):
            if d[key] is not None:
                d[key] = list(d[key])
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> FamilyDescriptor:
        d = dict(d)
        for key in ("y_degrees", "moved_edge"):
            if d.get(key) is not None:
                d[key] = tuple(d[key])
        return cls(**d)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> FamilyDescriptor:
        return cls.from_dict(json.loads(text))


def _realize_bipartite(x: int, delta: int, y_degrees: list[int]) -> list[tuple[int, int]]:
    # each X-vertex takes the delta Y-vertices with the largest remaining demand
    remaining = list(y_degrees)
    edges = []
    for i in range(x):
        order = sorted(range(len(remaining)), key=lambda j: (-remaining[j], j))[:delta]
        if len(order) < delta or any(remaining[j] == 0 for j in order):
            raise Infeasible(f"Y-degrees {y_degrees} cannot absorb {x} X-vertices of degree {delta}")
        for j in order:
            remaining[j] -= 1
            edges.append((i, j))
    return edges


def build_H_member(d: FamilyDescriptor, c_graph: Graph | None = None) -> Graph:
    """C plus G(X, Y) for the given descriptor (``c_graph`` overrides the block).

    Without ``y_degrees`` the bipartite part is |X| disjoint stars K_{1,delta}.
    """
    nu, delta, c_order = d.nu, d.delta, d.c_order
    if nu is None or delta is None or c_order is None:
        raise InvalidParameter("H descriptor needs nu, delta and c_order")
    if c_order < 3:
        raise Infeasible("the block must have at least 3 vertices")
    x = d.x_size
    if x < 0:
        raise Infeasible(f"block of order {c_order} already exceeds nu={nu}")
    block = c_graph if c_graph is not None else build_nearly_regular_factor_critical(delta, c_order)
    if block.n != c_order or not is_block(block, delta):
        raise Infeasible("c_graph is not a (nearly) regular factor-critical block of the stated order")
    y_degrees = list(d.y_degrees) if d.y_degrees is not None else [1] * (x * delta)
    if any(not 1 <= y <= min(delta, x) for y in y_degrees) or sum(y_degrees) != x * delta:
        raise Infeasible(f"invalid Y-degrees {y_degrees} for |X|={x}, delta={delta}")
    bip_edges = _realize_bipartite(x, delta, y_degrees)
    bip = Graph.from_edges(x + len(y_degrees), [(i, x + j) for i, j in bip_edges])
    if matching_number(bip) != x:
        raise Infeasible("the bipartite part does not have matching number |X|")
    g = union(block, bip)
    if not is_member_H(g, nu, delta):
        raise Infeasible("constructed graph fails the H membership check")
    return g


def deficient_vertex(g: Graph, block_vertices: range | list[int], delta: int) -> int:
    cands = [v for v in block_vertices if g.degree(v) == delta - 1]
    if len(cands) != 1:
        raise InvalidParameter("block has no unique vertex of degree delta - 1")
    return cands[0]


def build_Gamma_variant(h: Graph, d: FamilyDescriptor, u: int, v: int) -> Graph:
    """(H - uv) + uv' where v' is the degree-(delta-1) vertex of the block."""
    delta, c_order = d.delta, d.c_order
    if delta is None or c_order is None:
        raise InvalidParameter("Gamma needs delta and c_order")
    if delta % 2 == 0:
        raise InvalidParameter("Gamma variants exist only for odd delta")
    x = d.x_size
    if not c_order <= u < c_order + x:
        raise InvalidParameter(f"u={u} is not an X-vertex")
    if not h.has_edge(u, v):
        raise InvalidParameter(f"({u}, {v}) is not an edge")
    vp = deficient_vertex(h, range(c_order), delta)
    return add_edges(remove_edges(h, [(u, v)]), [(u, vp)])


def build_D_k_member(k: int, c_graph: Graph | None = None) -> Graph:
    """K_{k-1} plus a nearly (k-1)-regular factor-critical graph of order k+1."""
    if k < 4 or k % 2:
        raise InvalidParameter("D_k is defined for even k >= 4")
    block = c_graph if c_graph is not None else build_nearly_regular_factor_critical(k - 1, k + 1)
    if block.n != k + 1 or not is_block(block, k - 1):
        raise InvalidParameter("c_graph is not a nearly (k-1)-regular factor-critical graph of order k+1")
    return union(complete(k - 1), block)


def default_embedded_member(k: int) -> Graph:
    """Smallest default member of F_{k-1,k-1} (empty for k = 1)."""
    if k < 1:
        raise InvalidParameter("k must be >= 1")
    if k == 1:
        return empty(0)
    if k == 2:
        return complete(2)
    if k % 2:
        return union(complete(k), complete(k))
    return build_nearly_regular_factor_critical(k - 1, 2 * k - 1)


def build_EX_friendship(n: int, k: int, member: Graph | None = None) -> Graph:
    """T(n, 2) with a member of F_{k-1,k-1} placed inside the larger part.

    The larger part is vertices ``0 .. ceil(n/2)-1``; the member occupies
    its lowest indices.
    """
    if k < 1 or n < 2:
        raise InvalidParameter("need k >= 1 and n >= 2")
    inner = default_embedded_member(k) if member is None else strip_isolated(member)
    if member is not None and k >= 2 and not is_member_F(inner, k - 1, k - 1):
        raise InvalidParameter("member is not in F_{k-1,k-1}")
    part = turan_part_sizes(n, 2)[0]
    if inner.n > part:
        raise Infeasible(f"embedded graph on {inner.n} vertices does not fit a part of size {part}")
    return add_edges(turan(n, 2), inner.edges())


# ---------------------------------------------------------------------------
# membership


def _nontrivial_components(g: Graph) -> list[list[int]]:
    return [c for c in components(g) if len(c) > 1]


def _h_structure(g: Graph, nu: int, delta: int) -> tuple[list[int], list[tuple[list[int], list[set[int]]]]] | None:
    """Block vertices and, per bipartite component, its admissible X-sides."""
    if delta < 2:
        return None
    comps = _nontrivial_components(g)
    parts = []
    block = None
    x_total = 0
    for comp in comps:
        sub = induced(g, comp)
        side = bipartition(sub)
        if side is None:
            if block is not None:
                return None
            block = comp
            continue
        degs = sub.degrees()
        if max(degs) > delta:
            return None
        nu_c = matching_number(sub)
        choices = []
        for s in (0, 1):
            xs = [i for i in range(sub.n) if side[i] == s]
            if len(xs) == nu_c and all(degs[i] == delta for i in xs):
                choices.append({comp[i] for i in xs})
        if not choices:
            return None
        parts.append((comp, choices))
        x_total += nu_c
    if block is None or not is_block(induced(g, block), delta):
        return None
    if x_total + (len(block) - 1) // 2 != nu:
        return None
    return block, parts


def is_member_H(g: Graph, nu: int, delta: int) -> bool:
    return _h_structure(g, nu, delta) is not None


def is_member_Gamma(g: Graph, nu: int, delta: int) -> bool:
    """Is ``g`` (H - uv) + uv' for some H in the H family? Checked by undoing
    every candidate move, allowing v to have become isolated."""
    if delta % 2 == 0 or delta < 3:
        return False
    h0 = strip_isolated(g)
    h0 = pad(h0, h0.n + 1)
    degs = h0.degrees()
    for a, b in h0.edges():
        for u, vp in ((a, b), (b, a)):
            if degs[u] != delta or degs[vp] != delta:
                continue
            for w in range(h0.n):
                if w in (u, vp) or h0.has_edge(u, w):
                    continue
                h = add_edges(remove_edges(h0, [(u, vp)]), [(u, w)])
                st = _h_structure(h, nu, delta)
                if st is None:
                    continue
                block, parts = st
                if vp not in block:
                    continue
                if any(u in xs for comp, choices in parts if u in comp for xs in choices):
                    return True
    return False


def is_member_E(g: Graph, nu: int, delta: int) -> bool:
    if is_member_H(g, nu, delta):
        return True
    return delta % 2 == 1 and is_member_Gamma(g, nu, delta)


def is_member_D(g: Graph, k: int) -> bool:
    if k < 4 or k % 2:
        return False
    comps = sorted(_nontrivial_components(g), key=len)
    if len(comps) != 2 or len(comps[0]) != k - 1 or len(comps[1]) != k + 1:
        return False
    clique = induced(g, comps[0])
    if clique.num_edges() != (k - 1) * (k - 2) // 2:
        return False
    block = induced(g, comps[1])
    return is_nearly_regular(block, k - 1) and is_factor_critical(block)


def is_member_F(g: Graph, nu: int, delta: int) -> bool:
    return (
        g.max_degree() <= delta
        and g.num_edges() == f_formula(nu, delta)
        and matching_number(g) <= nu
    )


# ---------------------------------------------------------------------------
# exhaustive family listings (desk scale)


def _bipartite_parts(x: int, delta: int) -> list[tuple[Graph, list[int]]]:
    """All bipartite graphs (up to isomorphism) with |X| = x, every X-vertex of
    degree delta, every Y-vertex of degree <= delta, and matching number x.
    X is ``0..x-1``."""
    if x == 0:
        return [(empty(0), [])]
    found: dict[bytes, tuple[Graph, list[int]]] = {}

    def rec(i: int, used: int, acc: list[tuple[int, ...]]) -> None:
        if i == x:
            edges = [(a, x + y) for a, ys in enumerate(acc) for y in ys]
            g = Graph.from_edges(x + used, edges)
            if g.max_degree() <= delta and matching_number(g) == x:
                found.setdefault(canonical_form(g), (g, list(range(x))))
            return
        # new Y-vertices are introduced in index order
        for fresh in range(delta + 1):
            old_count = delta - fresh
            if old_count > used:
                continue
            for olds in combinations(range(used), old_count):
                ys = olds + tuple(range(used, used + fresh))
                rec(i + 1, used + fresh, acc + [ys])

    rec(0, 0, [])
    return [found[k] for k in sorted(found)]


def enumerate_H_members(nu: int, delta: int, vertex_cap: int | None = None) -> list[tuple[Graph, FamilyDescriptor]]:
    """Every member of the H family (up to isomorphism), with its layout."""
    out: dict[bytes, tuple[Graph, FamilyDescriptor]] = {}
    if delta < 2:
        return []
    c_order = delta + 1 if (delta + 1) % 2 else delta + 2
    while (c_order - 1) // 2 <= nu:
        x = nu - (c_order - 1) // 2
        parts = _bipartite_parts(x, delta)
        for block in enumerate_blocks(delta, c_order):
            for bip, _ in parts:
                if vertex_cap is not None and c_order + bip.n > vertex_cap:
                    continue
                g = union(block, bip)
                ydeg = tuple(bip.degree(v) for v in range(x, bip.n))
                d = FamilyDescriptor("H", nu=nu, delta=delta, c_order=c_order, y_degrees=ydeg)
                out.setdefault(canonical_form(g), (g, d))
        c_order += 2
    return [out[k] for k in sorted(out)]


def enumerate_E_members(nu: int, delta: int, vertex_cap: int | None = None) -> list[Graph]:
    """Every member of the E family within the vertex cap (canonical graphs)."""
    members: dict[bytes, Graph] = {}
    for g, d in enumerate_H_members(nu, delta, None):
        if vertex_cap is None or strip_isolated(g).n <= vertex_cap:
            members.setdefault(canonical_form(g), g)
        if delta % 2 == 0:
            continue
        x = d.x_size
        for u in range(d.c_order, d.c_order + x):
            for v in g.neighbors(u):
                gv = build_Gamma_variant(g, d, u, v)
                if vertex_cap is None or strip_isolated(gv).n <= vertex_cap:
                    members.setdefault(canonical_form(gv), gv)
    return [canonical_graph(members[k]) for k in sorted(members)]


def enumerate_D_members(k: int) -> list[Graph]:
    if k < 4 or k % 2:
        raise InvalidParameter("D_k is defined for even k >= 4")
    out = {}
    for block in enumerate_blocks(k - 1, k + 1):
        g = build_D_k_member(k, block)
        out.setdefault(canonical_form(g), g)
    return [canonical_graph(out[key]) for key in sorted(out)]
