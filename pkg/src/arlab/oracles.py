"""Brute-force ground truth at desk scale.

Every oracle returns an :class:`OracleReport`. Caps are explicit; when one
is hit the report says so (``capped``) instead of guessing.
"""

from __future__ import annotations

import csv
import io
import json
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations
from typing import Any, Iterable

from .colorings import EdgeColoring, all_pairs, edge_index
from .errors import InvalidParameter
from .extremal_catalog import f_formula
from .graph_core import Graph, canonical_form, canonical_graph, contains_friendship, enumerate_graphs, pad, union
from .graph_io import to_graph6
from .matching import matching_number
from .rainbow_search import Pattern, find_rainbow_in_family, parse_pattern

SCHEMA = "v1"


@dataclass
class OracleReport:
    kind: str
    params: dict[str, Any]
    value: int | None
    witnesses: list[Any] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)
    capped: bool = False
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        d = {
            "schema": SCHEMA,
            "kind": self.kind,
            "params": self.params,
            "value": self.value,
            "capped": self.capped,
            "counts": self.counts,
            "witnesses": self.witnesses,
            "notes": self.notes,
        }
        if timing:
            d["seconds"] = round(self.seconds, 3)
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2)

    CSV_FIELDS = ("kind", "params", "value", "capped", "witnesses")

    def csv_row(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "params": ";".join(f"{k}={v}" for k, v in self.params.items()),
            "value": "" if self.value is None else self.value,
            "capped": int(self.capped),
            "witnesses": len(self.witnesses),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=self.CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        w.writerow(self.csv_row())
        return buf.getvalue()


def _pattern_of(pattern: Pattern | str) -> Pattern:
    return parse_pattern(pattern) if isinstance(pattern, str) else pattern


def _family_of(family: Iterable[Pattern | str] | Pattern | str) -> list[Pattern]:
    if isinstance(family, (str, Pattern)):
        family = [family]
    return sorted((_pattern_of(p) for p in family), key=lambda p: p.rank)


def _friendship_free(g: Graph, k: int) -> bool:
    return contains_friendship(g, k) is None


# ---------------------------------------------------------------------------
# Turan numbers


def oracle_ex(n: int, pattern: Pattern | str, *, vertex_cap: int = 9, workers: int = 1) -> OracleReport:
    """ex(n, F_k) (triangle = F_1) with every extremal class."""
    start = time.perf_counter()
    p = _pattern_of(pattern)
    if p.kind != "friendship":
        raise InvalidParameter("oracle_ex supports friendship patterns (and the triangle F1)")
    if n < 1:
        raise InvalidParameter("n must be positive")
    params = {"n": n, "pattern": str(p), "vertex_cap": vertex_cap}
    if n > vertex_cap:
        return OracleReport("ex", params, None, capped=True,
                            notes=[f"n={n} exceeds the vertex cap {vertex_cap}"])
    classes = enumerate_graphs(n, hereditary=partial(_friendship_free, k=p.size), workers=workers)
    best = max(g.num_edges() for g in classes)
    extremal = [g for g in classes if g.num_edges() == best]
    for g in extremal:
        assert contains_friendship(g, p.size) is None
    return OracleReport(
        "ex", params, best,
        witnesses=[to_graph6(pad(g, n)) for g in extremal],
        counts={"classes": len(classes), "extremal": len(extremal)},
        seconds=time.perf_counter() - start,
    )


# ---------------------------------------------------------------------------
# f(nu, Delta)


def default_f_cap(nu: int, delta: int) -> int:
    # every edge meets V(M) for a maximum matching M: at most 2*nu matched
    # vertices, each with at most delta - 1 further neighbours, so an
    # extremal graph (no isolated vertices) has at most 2*nu*delta <= 2*nu*(delta+1) vertices
    return 2 * nu * (delta + 1)


def _component_pool(nu: int, delta: int, cap: int, workers: int) -> list[tuple[Graph, int, int]]:
    comps = enumerate_graphs(cap, max_degree=delta, max_matching=nu, connected=True, workers=workers)
    return [(g, g.n, matching_number(g)) for g in comps if g.n > 1]


def _best_unions(pool: list[tuple[Graph, int, int]], nu: int, cap: int, target: int | None):
    """Component multisets within (nu, cap) with max edges (or exactly ``target``)."""
    best = -1 if target is None else target
    found: list[list[int]] = []
    # suffix upper bound: edges per unit of matching number
    ratio = max((g.num_edges() / m for g, _, m in pool), default=0)

    def rec(i: int, nu_left: int, cap_left: int, edges: int, acc: list[int]) -> None:
        nonlocal best, found
        if target is None:
            if edges > best:
                best, found = edges, [list(acc)]
            elif edges == best and acc:
                found.append(list(acc))
            if edges + ratio * nu_left < best:
                return
        else:
            if edges == target:
                found.append(list(acc))
                return
            if edges + ratio * nu_left < target:
                return
        for j in range(i, len(pool)):
            g, order, m = pool[j]
            if m <= nu_left and order <= cap_left:
                acc.append(j)
                rec(j, nu_left - m, cap_left - order, edges + g.num_edges(), acc)
                acc.pop()

    rec(0, nu, cap, 0, [])
    return best, found


def _union_all(graphs: list[Graph]) -> Graph:
    out = Graph(0, ())
    for g in graphs:
        out = union(out, g)
    return out


def oracle_f(nu: int, delta: int, vertex_cap: int | None = None, *, workers: int = 1) -> OracleReport:
    """max e(G) over nu(G) <= nu, Delta(G) <= delta, at most ``vertex_cap``
    non-isolated vertices; the extremal classes are the witnesses.

    Works component-wise: connected classes are enumerated once and
    combined by a knapsack over matching number and vertex budget.
    """
    if nu < 1 or delta < 1:
        raise InvalidParameter("nu and delta must be >= 1")
    start = time.perf_counter()
    cap = default_f_cap(nu, delta) if vertex_cap is None else vertex_cap
    pool = _component_pool(nu, delta, cap, workers)
    best, found = _best_unions(pool, nu, cap, None)
    graphs = _canonical_unions(pool, found)
    report = OracleReport(
        "f", {"nu": nu, "delta": delta, "vertex_cap": cap}, best,
        witnesses=[canonical_form(g).decode() for g in graphs],
        counts={"connected_classes": len(pool), "extremal": len(graphs)},
        seconds=time.perf_counter() - start,
    )
    if cap < default_f_cap(nu, delta):
        report.capped = True
        report.notes.append(f"vertex cap {cap} is below 2*nu*(delta+1) = {default_f_cap(nu, delta)}")
    return report


def _canonical_unions(pool, found) -> list[Graph]:
    out: dict[bytes, Graph] = {}
    for combo in found:
        g = _union_all([pool[j][0] for j in combo])
        out.setdefault(canonical_form(g), canonical_graph(g))
    return [out[k] for k in sorted(out)]


def enumerate_extremal_F(nu: int, delta: int, vertex_cap: int | None = None, *, workers: int = 1) -> list[Graph]:
    """All classes with nu(G) <= nu, Delta(G) <= delta and exactly f(nu, delta)
    edges on at most ``vertex_cap`` non-isolated vertices."""
    cap = default_f_cap(nu, delta) if vertex_cap is None else vertex_cap
    pool = _component_pool(nu, delta, cap, workers)
    _, found = _best_unions(pool, nu, cap, f_formula(nu, delta))
    return _canonical_unions(pool, found)


# ---------------------------------------------------------------------------
# anti-Ramsey numbers


def pattern_copies(n: int, pattern: Pattern | str) -> list[tuple[int, ...]]:
    """Every copy of the pattern in K_n, as sorted tuples of edge indices."""
    p = _pattern_of(pattern)
    idx = partial(edge_index, n)
    out: set[tuple[int, ...]] = set()
    verts = range(n)
    if p.kind == "star":
        for v in verts:
            for leaves in combinations([u for u in verts if u != v], p.size):
                out.add(tuple(sorted(idx(v, u) for u in leaves)))
    elif p.kind == "matching":
        pairs = all_pairs(n)
        for es in combinations(range(len(pairs)), p.size):
            vs = [x for i in es for x in pairs[i]]
            if len(set(vs)) == 2 * p.size:
                out.add(es)
    else:
        pairs = all_pairs(n)
        for v in verts:
            rim = [e for e in pairs if v not in e]
            for es in combinations(rim, p.size):
                vs = [x for e in es for x in e]
                if len(set(vs)) == 2 * p.size:
                    edges = [idx(v, x) for x in vs] + [idx(a, b) for a, b in es]
                    out.add(tuple(sorted(edges)))
    return sorted(out)


def is_rainbow_free_naive(c: EdgeColoring, family: Iterable[Pattern | str]) -> bool:
    """Reference check by listing every copy of every pattern."""
    for p in _family_of(family):
        for copy in pattern_copies(c.n, p):
            if len({c.colors[i] for i in copy}) == len(copy):
                return False
    return True


def _rainbow_free_partition(n: int, copies_by_last: list[list[tuple[int, ...]]], r: int,
                            budget: list[int]) -> list[int] | None:
    """Lex-least restricted-growth string with exactly r blocks and no rainbow copy."""
    m = n * (n - 1) // 2
    labels = [0] * m

    def rainbow(copy: tuple[int, ...]) -> bool:
        return len({labels[i] for i in copy}) == len(copy)

    def rec(i: int, blocks: int) -> bool:
        budget[0] -= 1
        if budget[0] < 0:
            raise _Capped
        if i == m:
            return blocks == r
        if blocks + (m - i) < r:
            return False
        for b in range(min(blocks + 1, r)):
            labels[i] = b
            if any(rainbow(cp) for cp in copies_by_last[i]):
                continue
            if rec(i + 1, max(blocks, b + 1)):
                return True
        return False

    if m == 0:
        return None
    return list(labels) if rec(0, 0) else None


class _Capped(Exception):
    pass


def oracle_ar(n: int, family: Iterable[Pattern | str] | Pattern | str, r_lo: int = 1, r_hi: int | None = None,
              *, partition_cap: int = 5_000_000) -> OracleReport:
    """Smallest r in [r_lo, r_hi] such that every partition of E(K_n) into
    exactly r classes has a rainbow member of ``family``.

    Colorings are treated as set partitions (colors unlabeled). Each level
    is searched for a rainbow-free partition with pruning on completed
    rainbow copies; a level forces only once that search is exhausted.
    The witness is the lex-least rainbow-free partition at r - 1.
    """
    start = time.perf_counter()
    pats = _family_of(family)
    m = n * (n - 1) // 2
    if n < 2:
        raise InvalidParameter("n must be >= 2")
    r_hi = m if r_hi is None else r_hi
    if not 1 <= r_lo <= r_hi:
        raise InvalidParameter("need 1 <= r_lo <= r_hi")
    copies_by_last: list[list[tuple[int, ...]]] = [[] for _ in range(m)]
    n_copies = 0
    for p in pats:
        for cp in pattern_copies(n, p):
            copies_by_last[cp[-1]].append(cp)
            n_copies += 1
    params = {"n": n, "family": [str(p) for p in pats], "r_lo": r_lo, "r_hi": r_hi, "partition_cap": partition_cap}
    budget = [partition_cap]
    witness: EdgeColoring | None = None
    report = OracleReport("ar", params, None, counts={"copies": n_copies})
    for r in range(r_lo, r_hi + 1):
        try:
            labels = _rainbow_free_partition(n, copies_by_last, r, budget) if r <= m else None
        except _Capped:
            report.capped = True
            report.notes.append(f"partition cap hit while searching r={r}")
            break
        if labels is None:
            report.value = r
            break
        witness = EdgeColoring(n, tuple(x + 1 for x in labels))
        assert find_rainbow_in_family(witness, pats) is None
    else:
        report.notes.append(f"ar > {r_hi}")
    if witness is not None and report.value is not None and witness.r == report.value - 1:
        report.witnesses = [witness.to_dict()]
    report.counts["nodes"] = partition_cap - budget[0]
    report.seconds = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# e(G) <= floor(n^2/4) + k*Delta(G) for F_{k+1}-free G


def check_lemma_aa(n_max: int, k: int, *, workers: int = 1) -> OracleReport:
    """Sweep every F_{k+1}-free class on at most ``n_max`` vertices; ``n`` is
    the number of non-isolated vertices (the strongest instance)."""
    if k < 1:
        raise InvalidParameter("k must be >= 1")
    start = time.perf_counter()
    classes = enumerate_graphs(n_max, hereditary=partial(_friendship_free, k=k + 1), workers=workers)
    bad = []
    for g in classes:
        if g.num_edges() > g.n * g.n // 4 + k * g.max_degree():
            bad.append(to_graph6(g))
    sizes = Counter(g.n for g in classes)
    return OracleReport(
        "lemma-aa", {"n_max": n_max, "k": k}, len(bad),
        witnesses=bad,
        counts={"classes": len(classes), **{f"order_{o}": sizes[o] for o in sorted(sizes)}},
        seconds=time.perf_counter() - start,
    )
