"""``arlab`` command line: construct, verify, oracle, report.

Exit codes: 0 pass, 1 check failed, 2 usage or parse error, 3 cap hit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from . import colorings as col
from . import extremal_catalog as cat
from .errors import ArlabError, CapExceeded
from .graph_core import Graph, friendship, isolate, turan
from .graph_io import from_graph6, graph_from_dict, graph_to_dict, to_graph6
from .matching import gallai_edmonds, is_factor_critical, matching_number, verify_ge
from .oracles import check_lemma_aa, enumerate_extremal_F, oracle_ar, oracle_ex, oracle_f
from .rainbow_search import find_rainbow_in_family, parse_targets
from .report import SUITES, render

SCHEMA = "v1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPPED = 0, 1, 2, 3

GRAPH_KINDS = ("turan", "friendship", "h-member", "d-member", "ex-friendship")
COLORING_KINDS = ("coloring-k2", "coloring-two-cliques", "coloring-clique-c", "coloring-lower-f")


class UsageError(Exception):
    pass


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} {getattr(args, 'kind', '') or ''} needs {', '.join(missing)}".strip())


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(payload: dict[str, Any]) -> str:
    return json.dumps(payload, indent=2)


def _caps(args: argparse.Namespace) -> dict[str, Any]:
    return {"cap_vertices": args.cap_vertices, "cap_partitions": args.cap_partitions, "workers": args.workers}


# ---------------------------------------------------------------------------
# construct


def _build(args: argparse.Namespace) -> Graph | col.EdgeColoring:
    kind = args.kind
    if kind == "turan":
        _need(args, "n")
        return turan(args.n, args.k or 2)
    if kind == "friendship":
        _need(args, "k")
        return friendship(args.k)
    if kind == "h-member":
        _need(args, "nu", "delta")
        c_order = args.c_order
        if c_order is None:
            c_order = args.delta + 1 if args.delta % 2 == 0 else args.delta + 2
        d = cat.FamilyDescriptor("H", nu=args.nu, delta=args.delta, c_order=c_order)
        return cat.build_H_member(d)
    if kind == "d-member":
        _need(args, "k")
        return cat.build_D_k_member(args.k)
    if kind == "ex-friendship":
        _need(args, "n", "k")
        return cat.build_EX_friendship(args.n, args.k)
    if kind == "coloring-k2":
        _need(args, "n")
        return col.coloring_k2_star(args.n)
    if kind == "coloring-two-cliques":
        _need(args, "n", "k")
        return col.coloring_two_cliques(args.n, args.k)
    if kind == "coloring-clique-c":
        _need(args, "n", "k")
        return col.coloring_clique_plus_C(args.n, args.k)
    _need(args, "n", "k")
    return col.coloring_lower_friendship(args.n, args.k)


def cmd_construct(args: argparse.Namespace) -> int:
    obj = _build(args)
    if isinstance(obj, Graph):
        fmt = args.format or "graph6"
        if fmt == "graph6":
            _emit(to_graph6(obj), args.out)
        elif fmt == "json":
            _emit(_dump({"schema": SCHEMA, **graph_to_dict(obj)}), args.out)
        else:
            raise UsageError(f"graphs are written as graph6 or json, not {fmt}")
    else:
        if (args.format or "json") != "json":
            raise UsageError("colorings are written as json")
        _emit(_dump({"schema": SCHEMA, **obj.to_dict()}), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _load(path: str) -> Graph | col.EdgeColoring:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"cannot parse {path}: {exc}") from exc
        edges = data.get("edges", [])
        if "r" in data or (edges and len(edges[0]) == 3):
            return col.EdgeColoring.from_dict(data)
        return graph_from_dict(data)
    return from_graph6(text)


def _membership(g: Graph, args: argparse.Namespace) -> bool:
    fam = args.family
    if fam == "D":
        _need(args, "k")
        return cat.is_member_D(g, args.k)
    if fam in ("H", "E", "Gamma", "F"):
        _need(args, "nu", "delta")
        fn = {"H": cat.is_member_H, "E": cat.is_member_E, "Gamma": cat.is_member_Gamma, "F": cat.is_member_F}[fam]
        return fn(g, args.nu, args.delta)
    raise UsageError("membership needs --family H, E, Gamma, D or F")


def cmd_verify(args: argparse.Namespace) -> int:
    obj = _load(args.file)
    report: dict[str, Any] = {"schema": SCHEMA, "check": args.check}
    if args.check == "rainbow-free":
        if not isinstance(obj, col.EdgeColoring):
            raise UsageError("rainbow-free needs a coloring")
        _need(args, "targets")
        pats = parse_targets(args.targets)
        emb = find_rainbow_in_family(obj, pats)
        report.update(targets=[str(p) for p in pats], n=obj.n, r=obj.r, passed=emb is None,
                      embedding=None if emb is None else emb.to_dict())
    else:
        if not isinstance(obj, Graph):
            raise UsageError(f"{args.check} needs a graph")
        if args.check == "membership":
            report.update(family=args.family, nu=args.nu, delta=args.delta, k=args.k, passed=_membership(obj, args))
        elif args.check == "ge-structure":
            dec = gallai_edmonds(obj)
            report.update(decomposition=dec.to_dict(), nu=matching_number(obj), passed=verify_ge(obj, dec))
        else:
            ok = is_factor_critical(obj)
            bad = None
            if not ok and obj.n % 2:
                bad = next(v for v in range(obj.n) if 2 * matching_number(isolate(obj, [v])) != obj.n - 1)
            report.update(passed=ok, odd_order=obj.n % 2 == 1, unmatchable_after_deleting=bad)
    _emit(_dump(report), args.out)
    return EXIT_OK if report["passed"] else EXIT_FAIL


# ---------------------------------------------------------------------------
# oracle


def cmd_oracle(args: argparse.Namespace) -> int:
    kind = args.kind
    w = args.workers
    if kind == "ex":
        _need(args, "n")
        rep = oracle_ex(args.n, args.pattern or "K3", vertex_cap=args.cap_vertices or 9, workers=w)
    elif kind == "f":
        _need(args, "nu", "delta")
        rep = oracle_f(args.nu, args.delta, args.cap_vertices, workers=w)
    elif kind == "extremal-set":
        _need(args, "nu", "delta")
        rep = oracle_f(args.nu, args.delta, args.cap_vertices, workers=w)
        graphs = enumerate_extremal_F(args.nu, args.delta, rep.params["vertex_cap"], workers=w)
        rep.kind = "extremal-set"
        rep.value = len(graphs)
        rep.witnesses = [to_graph6(g) for g in graphs]
    elif kind == "ar":
        _need(args, "n", "family")
        rep = oracle_ar(args.n, parse_targets(args.family), args.r_lo, args.r_hi,
                        partition_cap=args.cap_partitions or 5_000_000)
    else:
        _need(args, "n", "k")
        if args.n > 8:
            raise CapExceeded("lemma-aa sweeps at most 8 vertices")
        rep = check_lemma_aa(args.n, args.k, workers=w)
    payload = rep.to_dict()
    payload["caps"] = _caps(args)
    fmt = args.format or "json"
    if fmt == "json":
        _emit(_dump(payload), args.out)
    elif fmt == "csv":
        _emit(rep.to_csv(), args.out)
    else:
        raise UsageError("oracle output is json or csv")
    if rep.capped:
        return EXIT_CAPPED
    if kind == "lemma-aa" and rep.value:
        return EXIT_FAIL
    return EXIT_OK


# ---------------------------------------------------------------------------
# report


def cmd_report(args: argparse.Namespace) -> int:
    rows = SUITES[args.suite](args.workers)
    fmt = args.format or "md"
    if fmt not in ("md", "csv", "json"):
        raise UsageError("report output is md, csv or json")
    _emit(render(rows, fmt, args.suite), args.out)
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FAIL


# ---------------------------------------------------------------------------


def _default_workers() -> int:
    raw = os.environ.get("ARLAB_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--nu", type=int)
    common.add_argument("--delta", type=int)
    common.add_argument("--family")
    common.add_argument("--targets")
    common.add_argument("--cap-vertices", type=int)
    common.add_argument("--cap-partitions", type=int)
    common.add_argument("--format", choices=("json", "csv", "graph6", "md"))
    common.add_argument("--out")
    common.add_argument("--workers", type=int, default=_default_workers())

    p = argparse.ArgumentParser(prog="arlab", description="Anti-Ramsey and extremal-graph lab.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="build a graph or coloring")
    c.add_argument("kind", choices=GRAPH_KINDS + COLORING_KINDS)
    c.add_argument("--c-order", type=int, help="order of the factor-critical block (h-member)")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", parents=[common], help="check a graph6/JSON object")
    v.add_argument("file", help="path, or - for stdin")
    v.add_argument("--check", required=True, choices=("rainbow-free", "membership", "ge-structure", "factor-critical"))
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", parents=[common], help="brute-force ground truth")
    o.add_argument("kind", choices=("ex", "f", "ar", "extremal-set", "lemma-aa"))
    o.add_argument("--pattern", help="F<k> or K3 (ex)")
    o.add_argument("--r-lo", type=int, default=1)
    o.add_argument("--r-hi", type=int)
    o.set_defaults(func=cmd_oracle)

    r = sub.add_parser("report", parents=[common], help="reproduction tables")
    r.add_argument("suite", choices=tuple(SUITES))
    r.set_defaults(func=cmd_report)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.workers < 1:
        print("arlab: --workers must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"arlab: capped: {exc}", file=sys.stderr)
        return EXIT_CAPPED
    except (UsageError, ArlabError) as exc:
        print(f"arlab: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
