"""Command-line driver: construct families, check predicates, run the census.

Exit codes: 0 success, 1 usage error, 2 input error, 3 internal check
failure (an unmatched 2-distance-transitive census row).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import families
from .census import CensusConfig, run_census, write_csv
from .families import FamilyParameterError
from .graphs import Graph, GraphFormatError, INF, decode_graph6, encode_graph6
from .groups import cyclic_group, quaternion_group
from .symmetry import (automorphism_group, aut_certificate_json, is_isomorphic,
                       is_2_arc_transitive, is_arc_transitive,
                       is_s_distance_transitive, is_vertex_transitive)
from .voltage import (VoltageAssignment, VoltageError, derive_cover,
                      semiregular_cyclic_quotient)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_CHECK_FAILED = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D102 - argparse hook
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


class InputError(ValueError):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _load_graph(path: str) -> Graph:
    text = _read_text(path).strip()
    if not text:
        raise InputError(f"{path}: empty graph input")
    try:
        if text.lstrip().startswith("{"):
            return Graph.from_json(text)
        return decode_graph6(text.splitlines()[0])
    except (GraphFormatError, ValueError, KeyError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _emit_graph(g: Graph, fmt: str, out: str | None) -> None:
    text = encode_graph6(g) if fmt == "graph6" else g.to_json()
    _write_out(text + "\n", out)


def _write_out(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


# family name -> (constructor taking int params, arity)
def _construct_graph(family: str, params: list[int], flags) -> Graph:
    def need(k: int) -> list[int]:
        if len(params) != k:
            raise InputError(f"family '{family}' expects {k} integer parameters")
        return params

    if family == "kxy":
        x, y = need(2)
        return families.complete_multipartite(x, y)
    if family == "kmm":
        (m,) = need(1)
        return families.complete_bipartite(m)
    if family == "kmm-matching":
        (m,) = need(1)
        return families.complete_bipartite_minus_matching(m)
    if family == "pg":
        d, q = need(2)
        return families.incidence_pg(d, q, flags.complement)
    if family == "h11":
        need(0)
        return families.incidence_h11(flags.complement)
    if family == "gp":
        n, r = need(2)
        return families.generalized_petersen(n, r)
    if family == "x1":
        (q,) = need(1)
        return families.x1_4q(q)
    if family == "kq1":
        q, d = need(2)
        return families.kq1_2d(q, d)
    if family == "g2pr":
        p, r = need(2)
        return families.g2pr(p, r, flags.doubled)
    if family == "x23":
        need(0)
        return families.x2_3()
    if family == "x22":
        need(0)
        return families.x_22()
    if family == "xp32":
        need(0)
        return families.x_prime_32()
    if family == "gamma":
        d, q, r = need(3)
        return families.gamma_dqr(d, q, r)
    if family == "hamming":
        d, r = need(2)
        return families.hamming(d, r)
    if family == "cayley":
        if len(params) < 2:
            raise InputError("cayley expects n followed by connection-set indices")
        n, s = params[0], params[1:]
        return families.cayley_graph(quaternion_group(n), s)
    raise InputError(f"unknown family '{family}'")


def _cmd_construct(args) -> int:
    g = _construct_graph(args.family, args.params, args)
    _emit_graph(g, args.format, args.out)
    return EXIT_OK


def _cmd_check(args) -> int:
    g = _load_graph(args.graph)
    report: dict[str, object] = {"n": g.n, "edges": g.edge_count()}
    report["girth"] = None if g.girth() == INF else g.girth()
    report["diameter"] = None if g.diameter() == INF else g.diameter()
    aut = automorphism_group(g)
    report["aut_order"] = aut.order()
    report["vertex_transitive"] = is_vertex_transitive(g, aut)
    if g.is_connected():
        report["arc_transitive"] = is_arc_transitive(g, aut)
        report["two_arc_transitive"] = is_2_arc_transitive(g, aut)
        if g.is_complete():
            report[f"{args.s}_distance_transitive"] = None
        else:
            report[f"{args.s}_distance_transitive"] = \
                is_s_distance_transitive(g, args.s, aut)
    else:
        report["arc_transitive"] = False
        report["two_arc_transitive"] = False
        report[f"{args.s}_distance_transitive"] = False
    if args.iso is not None:
        other = _load_graph(args.iso)
        ok, witness = is_isomorphic(g, other)
        report["iso_to"] = ok
        report["iso_witness"] = list(witness) if witness is not None else None
    _write_out(json.dumps(report, indent=2) + "\n", args.out)
    return EXIT_OK


def _cmd_census(args) -> int:
    if not args.n:
        raise InputError("census needs at least one --n value")
    config = CensusConfig(
        n_values=tuple(sorted(set(args.n))),
        min_set_size=args.min_set_size,
        max_set_size=args.max_set_size,
        dedup=args.dedup,
        workers=args.workers,
    )
    rows, summary = run_census(config)
    if args.out is None or args.out == "-":
        write_csv(rows, sys.stdout)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_csv(rows, fh)
        if not args.no_figures:
            from .report import render_census_figures
            out_dir = os.path.dirname(os.path.abspath(args.out))
            prefix = os.path.splitext(os.path.basename(args.out))[0]
            render_census_figures(rows, out_dir, prefix)
    print(f"# candidates={summary.candidates} connected={summary.connected} "
          f"two_dt={summary.two_dt} unmatched={summary.unmatched} "
          f"errors={summary.errors}", file=sys.stderr)
    if summary.unmatched:
        for n, s, match in summary.hits:
            if match == "UNMATCHED":
                print(f"# RED FLAG: n={n} S={s} is 2-distance-transitive "
                      f"but matches no catalog entry", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _cmd_quotient(args) -> int:
    g = _load_graph(args.graph)
    try:
        perm = json.loads(_read_text(args.perm))
    except json.JSONDecodeError as exc:
        raise InputError(f"{args.perm}: {exc}") from exc
    try:
        quotient, _cells = semiregular_cyclic_quotient(g, perm)
    except VoltageError as exc:
        raise InputError(str(exc)) from exc
    _emit_graph(quotient, args.format, args.out)
    return EXIT_OK


def _cmd_cover(args) -> int:
    base = _load_graph(args.base)
    text = _read_text(args.voltages)
    try:
        psi = VoltageAssignment.from_json(base, cyclic_group(args.group_order), text)
    except (VoltageError, json.JSONDecodeError, KeyError) as exc:
        raise InputError(str(exc)) from exc
    cover = derive_cover(psi)
    _emit_graph(cover.graph, args.format, args.out)
    return EXIT_OK


def _cmd_aut(args) -> int:
    g = _load_graph(args.graph)
    aut = automorphism_group(g)
    _write_out(json.dumps(aut_certificate_json(g, aut), indent=2) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gqcensus",
                     description="Construct, test and census the graph families "
                                 "classified over generalized quaternion groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("graph6", "json"), default="graph6")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("construct", help="build a named family member")
    p.add_argument("family")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--complement", action="store_true")
    p.add_argument("--doubled", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("check", help="predicate report for a graph")
    p.add_argument("graph", help="graph6/JSON file, or - for stdin")
    p.add_argument("--iso", default=None, help="second graph to test isomorphism")
    p.add_argument("--s", type=int, default=2,
                   help="s for s-distance-transitivity (default 2)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("census", help="exhaustive Cayley census over Q_4n")
    p.add_argument("--n", type=int, action="append",
                   help="group parameter n (repeatable)")
    p.add_argument("--min-set-size", type=int, default=4)
    p.add_argument("--max-set-size", type=int, default=None)
    p.add_argument("--dedup", choices=("none", "aut", "iso"), default="none")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default=None, help="CSV path; figures land alongside")
    p.add_argument("--no-figures", action="store_true")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("quotient", help="quotient by a semiregular automorphism")
    p.add_argument("graph")
    p.add_argument("perm", help="JSON list giving the permutation")
    common(p)
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("cover", help="derive a cyclic voltage cover")
    p.add_argument("base", help="base graph file")
    p.add_argument("voltages", help="JSON arc-voltage file")
    p.add_argument("--group-order", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("aut", help="automorphism group certificate")
    p.add_argument("graph")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_aut)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, FamilyParameterError, VoltageError,
            GraphFormatError) as exc:
        print(f"gqcensus: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"gqcensus: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
