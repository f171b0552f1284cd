"""Command-line interface: ``domgame <command> ...``.

Exit status is 0 when the command completed and every ``--check`` passed,
1 when a check failed, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .canon import are_isomorphic, canonical_form
from .catalog import named_graph
from .enumeration import (
    BUILTIN_MAX_N,
    TABLE1,
    Builtin,
    Graph6File,
    SourceError,
    find_min_imperfect,
    iter_source,
    table1,
)
from .graph import (
    Graph,
    GraphError,
    bits,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    to_mask,
    write_graph6,
)
from .perfection import (
    BuildScript,
    build,
    catalog_name,
    classify,
    mhc_contraction,
    oracle_disagreements,
    psc_violation,
)
from .solver import GameSolver, Mover, Variant, domination_number, total_domination_number


class UsageError(Exception):
    pass


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph6", metavar="LINE", help="graph as a graph6 line")
    src.add_argument("--edges", metavar="SPEC", help='edge list "n; u v; u v; ..."')
    src.add_argument("--name", help="named graph, e.g. P5, co-domino, F3, KC2,1")


def _read_graph(args) -> Graph:
    try:
        if args.graph6:
            return parse_graph6(args.graph6)
        if args.edges:
            return parse_edge_list(args.edges)
        if args.name:
            return named_graph(args.name)
        text = sys.stdin.read().strip()
    except (GraphError, KeyError) as exc:
        raise UsageError(str(exc)) from None
    if not text:
        raise UsageError("no graph given (use --graph6, --edges, --name or stdin)")
    try:
        return parse_graph(text.splitlines()[0] if ";" not in text else text)
    except GraphError as exc:
        raise UsageError(str(exc)) from None


def _parse_any(text: str) -> Graph:
    """graph6 line, edge list, or catalog name."""
    try:
        return named_graph(text)
    except KeyError:
        pass
    try:
        return parse_graph(text)
    except GraphError as exc:
        raise UsageError(f"cannot read graph {text!r}: {exc}") from None


def _guard(g: Graph, args) -> None:
    if g.n > args.max_n:
        raise UsageError(f"graph has {g.n} vertices; solver limit is --max-n {args.max_n}")


def _source(args):
    if args.graph6_file:
        return Graph6File(args.graph6_file)
    if args.n is None:
        raise UsageError("give --n or --graph6-file")
    if args.n > BUILTIN_MAX_N:
        raise UsageError(f"n={args.n} needs --graph6-file (builtin generator stops at "
                         f"{BUILTIN_MAX_N})")
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    return Builtin(args.n)


def _emit(args, data: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def cmd_solve(args) -> int:
    g = _read_graph(args)
    _guard(g, args)
    variant = Variant(args.variant)
    mover = Mover(args.mover)
    if variant is Variant.TOTAL and (g.n < 2 or g.isolated_vertices()):
        iso = g.isolated_vertices()
        where = f"vertex {iso[0]} is isolated" if iso else f"n={g.n}"
        raise UsageError(f"total domination game needs an isolate-free graph; {where}")
    solver = GameSolver(g, variant)
    value = solver.value(0, mover)
    moves = list(bits(solver.optimal_moves(0, mover))) if g.n else []
    data = {
        "n": g.n,
        "variant": variant.value,
        "mover": mover.value,
        "gamma": domination_number(g),
        "gamma_t": (total_domination_number(g)
                    if g.n >= 2 and not g.isolated_vertices() else None),
        "value": value,
        "optimal_first_moves": moves,
    }
    lines = [f"gamma = {data['gamma']}"]
    if data["gamma_t"] is not None:
        lines.append(f"gamma_t = {data['gamma_t']}")
    lines.append(f"value = {value}")
    lines.append("optimal first moves: " + " ".join(map(str, moves)))
    _emit(args, data, "\n".join(lines))
    return 0


def _fmt(v) -> str:
    return "n/a" if v is None else str(v).lower()


def cmd_classify(args) -> int:
    g = _read_graph(args)
    _guard(g, args)
    if args.oracle and g.n > 7:
        raise UsageError("--oracle is limited to n <= 7")
    report = classify(g, oracle=args.oracle, shrink=args.shrink)
    lines = [
        f"gg-perfect: {_fmt(report.gg_perfect)}",
        f"2-gg-perfect: {_fmt(report.two_gg_perfect)}",
        f"gg'-perfect: {_fmt(report.gg_prime_perfect)}",
        f"tg-perfect: {_fmt(report.tg_perfect)}",
        f"tg'-perfect: {_fmt(report.tg_prime_perfect)}",
        f"min-imperfect: {_fmt(report.minimally_imperfect)}",
    ]
    if report.failure:
        f = report.failure
        lines.append(f"failure: depth {f.depth}, {f.stage}: {f.detail}")
    if report.forbidden:
        lines.append(f"forbidden: {report.forbidden} on vertices "
                     + " ".join(map(str, report.forbidden_vertices)))
    if args.certificate and report.certificate:
        lines.append("certificate:")
        lines.append(report.certificate.to_text().rstrip())
        lines.append("order: " + " ".join(map(str, report.certificate.order)))
    status = 0
    if report.oracle is not None:
        bad = oracle_disagreements(report)
        lines.append("oracle: " + ("agrees" if not bad else "DISAGREES on " + ", ".join(bad)))
        status = 1 if bad else 0
    _emit(args, report.to_dict(), "\n".join(lines))
    return status


def cmd_contract(args) -> int:
    g = _read_graph(args)
    cm = mhc_contraction(g)
    classes = [list(bits(c)) for c in cm.classes()]
    data = {"contracted": write_graph6(cm.contracted), "class_of": list(cm.class_of),
            "classes": classes, "representatives": list(cm.representatives)}
    lines = [write_graph6(cm.contracted)]
    lines += [f"{i}: {' '.join(map(str, c))}" for i, c in enumerate(classes)]
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_build(args) -> int:
    if args.script:
        with open(args.script, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        script = BuildScript.from_text(text)
        g = build(script)
    except (GraphError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    print(write_graph6(g))
    return 0


def cmd_check_psc(args) -> int:
    g = _read_graph(args)
    try:
        family = [to_mask(int(x) for x in part.split(","))
                  for part in args.cliques.split(";") if part.strip()]
        bad = psc_violation(g, family)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    data = {"psc": bad is None, "clause": bad[0] if bad else None,
            "detail": bad[1] if bad else None}
    _emit(args, data, "psc: true" if bad is None else f"psc: false ({bad[0]}: {bad[1]})")
    return 0


def cmd_enumerate(args) -> int:
    for g in iter_source(_source(args)):
        print(write_graph6(g))
    return 0


def cmd_table1(args) -> int:
    row = table1(_source(args), jobs=args.jobs)
    print(row.to_tsv())
    if args.check:
        expected = TABLE1.get(row.n)
        if expected is None:
            print(f"check: no published row for n={row.n}", file=sys.stderr)
            return 1
        if row.as_tuple() != expected:
            print(f"check: FAIL, expected {expected}", file=sys.stderr)
            return 1
        print("check: pass", file=sys.stderr)
    return 0


def cmd_hunt(args) -> int:
    found = find_min_imperfect(_source(args), jobs=args.jobs)
    data = []
    for g in found:
        name = catalog_name(g)
        data.append({"graph6": write_graph6(g), "name": name})
    _emit(args, {"found": data},
          "\n".join(f"{d['graph6']}\t{d['name'] or 'UNLISTED'}" for d in data))
    return 0


def cmd_iso(args) -> int:
    g, h = _parse_any(args.first), _parse_any(args.second)
    same = are_isomorphic(g, h)
    _emit(args, {"isomorphic": same, "canonical": [write_graph6(canonical_form(g)),
                                                   write_graph6(canonical_form(h))]},
          "isomorphic: " + _fmt(same))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domgame", description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=24,
                        help="refuse solver calls on larger graphs (default 24)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="domination numbers and a game value")
    _add_graph_args(p)
    p.add_argument("--variant", choices=["dom", "total"], default="dom")
    p.add_argument("--mover", choices=["d", "s"], default="d",
                   help="who moves first: Dominator or Staller")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("classify", help="perfection verdicts with certificates")
    _add_graph_args(p)
    p.add_argument("--certificate", action="store_true", help="print the build script")
    p.add_argument("--oracle", action="store_true", help="brute-force cross-check (n <= 7)")
    p.add_argument("--shrink", action="store_true",
                   help="name a minimally imperfect induced subgraph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("contract", help="collapse maximal homogeneous cliques")
    _add_graph_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("build", help="replay a build script, print graph6")
    p.add_argument("--script", help="script file (default stdin)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check-psc", help="test a clique family for the PSC clauses")
    _add_graph_args(p)
    p.add_argument("--cliques", required=True, help='e.g. "0;3" or "0,1;4,5"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_psc)

    for name, func, helptext in [
        ("enumerate", cmd_enumerate, "list non-isomorphic graphs as graph6"),
        ("table1", cmd_table1, "perfect / connected perfect / min-imperfect counts"),
        ("hunt-imperfect", cmd_hunt, "find minimally imperfect graphs"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--n", type=int)
        p.add_argument("--graph6-file", metavar="PATH")
        if name != "enumerate":
            p.add_argument("--jobs", type=int, default=1)
        if name == "table1":
            p.add_argument("--check", action="store_true",
                           help="compare with the published counts")
        if name == "hunt-imperfect":
            p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("iso", help="isomorphism test of two graphs")
    p.add_argument("first", help="graph6 line, edge list or graph name")
    p.add_argument("second")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_iso)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, SourceError) as exc:
        print(f"domgame: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
