"""Command line interface.

Exit codes: 0 success or affirmative verdict, 1 negative verdict or law
failure, 2 usage or parse error.

``compose F1 F2`` reads its arguments in diagrammatic order: the graph in
F1 is applied first, so the output is ``F2 . F1``.
"""
from __future__ import annotations

import argparse
import sys

from . import lawcheck
from .census import BRUTE_FORCE_HARD_LIMIT, census, enumerate_state_graphs
from .errors import CPRelError
from .graphcat import (
    State,
    embed_graph,
    graph_compose,
    graph_dagger,
    graph_join,
    graph_tensor,
    is_pure,
    state_of_morphism,
)
from .relcore import UNIT, standard_set
from .serialize import (
    dumps,
    export_dot,
    graph_from_document,
    graph_to_document,
    loads,
    relation_from_document,
)


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _graph(path):
    return graph_from_document(loads(_read(path)))


def _emit_graph(g):
    print(dumps(graph_to_document(g)))


def cmd_census(args) -> int:
    if args.n_max < 0:
        raise UsageError("n_max must be non-negative")
    if args.brute_force and args.n_max > BRUTE_FORCE_HARD_LIMIT:
        raise UsageError(f"--brute-force supports n_max <= {BRUTE_FORCE_HARD_LIMIT}")
    ok = True
    for row in census(args.n_max, brute_force=args.brute_force):
        line = f"{row.n} {row.rel_states} {row.cp_rel_states}"
        if args.brute_force:
            line += f" {row.brute_force} {'ok' if row.matches else 'MISMATCH'}"
            ok = ok and row.matches
        print(line)
    return 0 if ok else 1


def cmd_enumerate(args) -> int:
    if args.n < 0:
        raise UsageError("n must be non-negative")
    x = standard_set(args.n)
    for g in enumerate_state_graphs(x):
        if args.format == "dot":
            sys.stdout.write(export_dot(g))
        else:
            _emit_graph(g)
    return 0


def cmd_compose(args) -> int:
    first, second = _graph(args.first), _graph(args.second)
    _emit_graph(graph_compose(second, first))
    return 0


def cmd_tensor(args) -> int:
    _emit_graph(graph_tensor(_graph(args.left), _graph(args.right)))
    return 0


def cmd_dagger(args) -> int:
    _emit_graph(graph_dagger(_graph(args.file)))
    return 0


def cmd_join(args) -> int:
    _emit_graph(graph_join([_graph(p) for p in args.files]))
    return 0


def cmd_pure(args) -> int:
    g = _graph(args.file)
    state = State.of(g) if g.dom == UNIT else state_of_morphism(g)
    pure = is_pure(state)
    print("pure" if pure else "mixed")
    return 0 if pure else 1


def cmd_embed(args) -> int:
    _emit_graph(embed_graph(relation_from_document(loads(_read(args.file)))))
    return 0


def cmd_export_dot(args) -> int:
    sys.stdout.write(export_dot(_graph(args.file)))
    return 0


def cmd_laws(args) -> int:
    if args.size_bound < 0 or args.snake_bound < 0 or args.samples < 0:
        raise UsageError("bounds and sample counts must be non-negative")
    reports = lawcheck.run_all(
        size_bound=args.size_bound,
        snake_bound=args.snake_bound,
        census_max=args.census_max,
        seed=args.seed,
        samples=args.samples,
    )
    for report in reports:
        for line in report.lines():
            print(line)
        if not report.passed:
            print(dumps(report.counterexample))
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cprel", description="Completely positive relations as graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="state counts of CP(Rel) for n = 0..n_max")
    p.add_argument("n_max", type=int)
    p.add_argument("--brute-force", action="store_true", help="also count positive relations by brute force")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("enumerate", help="every state graph of an n-element set")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("compose", help="compose two graphs, first file applied first")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("tensor", help="tensor product of two graphs")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("dagger", help="reverse the vertex pairs of a graph")
    p.add_argument("file")
    p.set_defaults(func=cmd_dagger)

    p = sub.add_parser("join", help="union of parallel graphs")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_join)

    p = sub.add_parser("pure", help="print pure or mixed; exit 0 or 1")
    p.add_argument("file")
    p.set_defaults(func=cmd_pure)

    p = sub.add_parser("embed", help="complete graph on a relation document")
    p.add_argument("file")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("export-dot", help="render a graph document as DOT")
    p.add_argument("file")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("laws", help="run the law-check suites")
    p.add_argument("--size-bound", type=int, default=2)
    p.add_argument("--snake-bound", type=int, default=3)
    p.add_argument("--census-max", type=int, default=5)
    p.add_argument("--seed", type=int, default=lawcheck.DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=lawcheck.DEFAULT_SAMPLES)
    p.set_defaults(func=cmd_laws)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CPRelError) as exc:
        print(f"cprel {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
