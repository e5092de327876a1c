"""Reproduction tables: acceptance rows, formula checks, family counts."""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Callable
from dataclasses import dataclass

from .colorings import (
    coloring_clique_plus_C,
    coloring_k2_star,
    coloring_lower_friendship,
    coloring_two_cliques,
    colors_used,
)
from .extremal_catalog import (
    ex_mantel,
    enumerate_blocks,
    enumerate_D_members,
    enumerate_E_members,
    f_formula,
    is_member_D,
    is_member_E,
)
from .graph_core import canonical_form, complete, enumerate_graphs, isolate, pad, remove_edges, union
from .matching import gallai_edmonds, matching_number, verify_ge
from .oracles import check_lemma_aa, enumerate_extremal_F, oracle_ar, oracle_ex, oracle_f
from .rainbow_search import find_rainbow_friendship, find_rainbow_in_family

SCHEMA = "v1"


@dataclass
class Row:
    key: str
    title: str
    passed: bool
    detail: str


def _forms(graphs) -> set[bytes]:
    return {canonical_form(g) for g in graphs}


def _c1(workers: int) -> tuple[bool, str]:
    rep = oracle_ar(5, ["F2"], 7, 10)
    ok = rep.value == 8 and bool(rep.witnesses) and rep.witnesses[0]["r"] == 7
    return ok, f"ar(5,F2)={rep.value}, rainbow-free witness at r=7: {bool(rep.witnesses)}"


F_PAIRS = ((1, 1), (1, 2), (2, 2), (1, 3), (2, 3), (3, 3))


def _c2(workers: int) -> tuple[bool, str]:
    got = {(nu, d): oracle_f(nu, d, workers=workers).value for nu, d in F_PAIRS}
    ok = all(got[p] == f_formula(*p) for p in F_PAIRS)
    return ok, ", ".join(f"f{p}={v}" for p, v in got.items())


def _c3(workers: int) -> tuple[bool, str]:
    found = enumerate_extremal_F(2, 2, 10, workers=workers)
    ok = _forms(found) == _forms([union(complete(3), complete(3))])
    return ok, f"{len(found)} class(es)"


def _c4(workers: int) -> tuple[bool, str]:
    found = enumerate_extremal_F(3, 3, 10, workers=workers)
    classified = all(is_member_E(g, 3, 3) or is_member_D(g, 4) for g in found)
    built = enumerate_E_members(3, 3, vertex_cap=10) + enumerate_D_members(4)
    covered = _forms(built) <= _forms(found)
    return classified and covered, f"{len(found)} classes (cap 10), {len(built)} constructed members, all matched: {covered}"


def _c5(workers: int) -> tuple[bool, str]:
    k3 = enumerate_extremal_F(1, 2, 6, workers=workers)
    f23 = enumerate_extremal_F(2, 3, 9, workers=workers)
    ok = _forms(k3) == _forms([complete(3)]) and bool(f23) and all(is_member_E(g, 2, 3) for g in f23)
    return ok, f"F(1,2): {len(k3)} class(es); F(2,3): {len(f23)} class(es) in E(2,3)"


def _c6(workers: int) -> tuple[bool, str]:
    cases = [(coloring_k2_star(12), 2, 3), (coloring_two_cliques(27, 3), 3, 7), (coloring_clique_plus_C(48, 4), 4, 11)]
    ok = True
    parts = []
    for c, k, r in cases:
        free = find_rainbow_in_family(c, [f"K1,{k + 1}", f"{k + 1}K2"]) is None
        ok &= free and colors_used(c) == r
        parts.append(f"k={k}: {colors_used(c)} colors, rainbow-free={free}")
    return ok, "; ".join(parts)


def _c7(workers: int) -> tuple[bool, str]:
    ok = True
    parts = []
    for n, k in ((10, 1), (20, 2), (30, 2)):
        c = coloring_lower_friendship(n, k)
        free = find_rainbow_friendship(c, k + 1) is None
        ok &= free
        parts.append(f"({n},{k}): {c.r} colors, free={free}")
    return ok, "; ".join(parts)


def _c8(workers: int) -> tuple[bool, str]:
    tri = {n: oracle_ex(n, "K3", workers=workers).value for n in range(3, 8)}
    f2 = {n: oracle_ex(n, "F2", workers=workers).value for n in range(5, 8)}
    ok = all(v == ex_mantel(n) for n, v in tri.items()) and all(v == n * n // 4 + 1 for n, v in f2.items())
    return ok, f"K3: {tri}; F2: {f2}"


def _c9(workers: int) -> tuple[bool, str]:
    classes = enumerate_graphs(8, workers=workers)
    bad = sum(
        1 for g in classes for h in {g.n: g, 8: pad(g, 8)}.values()
        if not verify_ge(h, gallai_edmonds(h))
    )
    return bad == 0, f"{len(classes)} classes, {bad} failures"


def lemma35_violations(g) -> int:
    bad = 0
    for v in range(g.n):
        gv = isolate(g, [v])
        for e in g.edges():
            h = remove_edges(gv, [e]) if v not in e else gv
            # v is isolated in h, so test the other n - 1 vertices
            if 2 * matching_number(h) != g.n - 1:
                bad += 1
    return bad


def _c10(workers: int) -> tuple[bool, str]:
    counts = {}
    bad = 0
    for order in (7, 9):
        blocks = enumerate_blocks(5, order)
        counts[order] = len(blocks)
        bad += sum(lemma35_violations(g) for g in blocks)
    return bad == 0 and all(counts.values()), f"blocks per order {counts}, {bad} violations"


def _c11(workers: int) -> tuple[bool, str]:
    reps = [check_lemma_aa(7, k, workers=workers) for k in (1, 2)]
    ok = all(r.value == 0 for r in reps)
    return ok, "; ".join(f"k={r.params['k']}: {r.counts['classes']} classes, {r.value} violations" for r in reps)


ACCEPTANCE: list[tuple[str, str, Callable[[int], tuple[bool, str]]]] = [
    ("1", "ar(5, F2) = 8 by partition enumeration", _c1),
    ("2", "f oracle equals closed form", _c2),
    ("3", "F(2,2) = {K3 + K3}", _c3),
    ("4", "F(3,3) = E(3,3) + D(4) within cap 10", _c4),
    ("5", "F(1,2) = {K3}; F(2,3) inside E(2,3)", _c5),
    ("6", "star/matching lower-bound colorings are rainbow-free", _c6),
    ("7", "friendship lower-bound colorings are rainbow-free", _c7),
    ("8", "Turan oracles (triangle, F2)", _c8),
    ("9", "Gallai-Edmonds structure on all graphs with <= 8 vertices", _c9),
    ("10", "G - v - e perfectly matchable for nearly 5-regular blocks", _c10),
    ("11", "e <= n^2/4 + k*Delta for F_{k+1}-free graphs, <= 7 vertices", _c11),
]


def acceptance_rows(workers: int = 1, only: list[str] | None = None) -> list[Row]:
    rows = []
    for key, title, fn in ACCEPTANCE:
        if only and key not in only:
            continue
        ok, detail = fn(workers)
        rows.append(Row(key, title, ok, detail))
    return rows


def formula_rows(workers: int = 1) -> list[Row]:
    rows = []
    for nu in range(1, 4):
        for d in range(1, 4):
            rep = oracle_f(nu, d, workers=workers)
            want = f_formula(nu, d)
            rows.append(Row(f"f({nu},{d})", f"cap {rep.params['vertex_cap']}", rep.value == want,
                            f"oracle {rep.value}, formula {want}"))
    return rows


def family_rows(workers: int = 1) -> list[Row]:
    rows = []
    for nu in range(1, 4):
        for d in range(1, 4):
            rep = oracle_f(nu, d, workers=workers)
            detail = f"{rep.counts['extremal']} extremal classes, {rep.counts['connected_classes']} connected classes"
            e_count = len(enumerate_E_members(nu, d)) if d >= 2 else 0
            rows.append(Row(f"F({nu},{d})", f"cap {rep.params['vertex_cap']}", True, f"{detail}, |E|={e_count}"))
    return rows


SUITES = {"acceptance": acceptance_rows, "formulas": formula_rows, "families": family_rows}


def render(rows: list[Row], fmt: str, suite: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "title", "status", "detail"])
        for r in rows:
            w.writerow([r.key, r.title, "PASS" if r.passed else "FAIL", r.detail])
        return buf.getvalue()
    if fmt == "json":
        return json.dumps({
            "schema": SCHEMA,
            "suite": suite,
            "rows": [{"key": r.key, "title": r.title, "passed": r.passed, "detail": r.detail} for r in rows],
        }, indent=2) + "\n"
    lines = [f"<!-- schema {SCHEMA}, suite {suite} -->", "| # | check | status | detail |", "|---|---|---|---|"]
    for r in rows:
        lines.append(f"| {r.key} | {r.title} | {'PASS' if r.passed else 'FAIL'} | {r.detail} |")
    return "\n".join(lines) + "\n"


__all__ = ["Row", "acceptance_rows", "formula_rows", "family_rows", "render", "SUITES", "lemma35_violations"]
