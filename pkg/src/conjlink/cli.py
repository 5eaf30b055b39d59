"""Command-line entry point: ``conjlink rank | restore | experiment | generate``.

Exit codes: 0 success, 2 usage error, 3 unreadable input, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import io
from .graph import BUILTIN_DATASETS, EdgeListError, GeneratorConfig, builtin_dataset, dump_edge_list, generate, load_edge_list
from .kernel import ConvergenceError, DivergentSeriesError
from .restoration import damage, restore, run_grid
from .scorers import DEFAULT_ALPHA, ScoreConfig, parse_methods, score_pairs

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_NUMERIC = 0, 2, 3, 4

_METHOD_CHOICES = ["h", "g", "j", "ad", "ra", "sigma"]


class CLIError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def read_graph(source: str):
    """Builtin name (optionally ``@``-prefixed) or path to an edge-list file."""
    name = source[1:] if source.startswith("@") else source
    if name in BUILTIN_DATASETS:
        return builtin_dataset(name)
    if source.startswith("@"):
        raise CLIError(f"unknown builtin dataset {name!r}", EXIT_INPUT)
    try:
        text = Path(source).read_text(encoding="utf-8")
        return load_edge_list(text)
    except (OSError, UnicodeDecodeError, EdgeListError) as exc:
        raise CLIError(f"cannot read graph from {source!r}: {exc}", EXIT_INPUT) from exc


def _score_config(method, args):
    try:
        return ScoreConfig(method, alpha=args.alpha, p=args.p, horizon=args.horizon)
    except ValueError as exc:
        raise CLIError(str(exc), EXIT_USAGE) from exc


def _generator_config(args):
    try:
        return GeneratorConfig(kind=args.gen, n=args.n, m0=args.m0, m_attach=args.attach,
                               p_edge=args.p, seed=args.seed)
    except ValueError as exc:
        raise CLIError(str(exc), EXIT_USAGE) from exc


def _command_echo(args) -> dict:
    skip = {"func", "out"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def cmd_rank(args):
    g = read_graph(args.input)
    cfg = _score_config(args.method, args)
    ranked = score_pairs(g, args.universe, cfg).top(args.top)
    return io.emit(io.ranked_record(ranked, _command_echo(args)), args.format)


def cmd_restore(args):
    g = read_graph(args.input)
    if args.m <= 0:
        raise CLIError("--m must be positive; restoration quality is undefined for m=0", EXIT_USAGE)
    if args.m >= g.edge_count:
        raise CLIError(f"--m {args.m} must be smaller than the edge count {g.edge_count}", EXIT_USAGE)
    rec = damage(g, _score_config(args.remove, args), args.m)
    rep = restore(rec, _score_config(args.create, args), scenario=args.scenario)
    return io.emit(io.restoration_record(rec, rep, _command_echo(args)), args.format)


def cmd_experiment(args):
    gen = _generator_config(args)
    try:
        methods = [ScoreConfig(m, alpha=args.alpha, p=args.walk_length, horizon=args.horizon)
                   for m in parse_methods(args.methods.split(","))]
    except ValueError as exc:
        raise CLIError(str(exc), EXIT_USAGE) from exc
    if args.realizations < 1:
        raise CLIError("--realizations must be >= 1", EXIT_USAGE)
    if args.m < 1 or (gen.kind == "ba" and args.m >= gen.m0 + gen.m_attach * (gen.n - gen.m0)):
        raise CLIError(f"--m {args.m} is out of range for the generated graphs", EXIT_USAGE)
    grid = run_grid(gen, methods, args.m, args.realizations, args.seed, workers=args.workers)
    return io.emit(io.grid_record(grid, _command_echo(args)), args.format)


def cmd_generate(args):
    return dump_edge_list(generate(_generator_config(args)))


def _add_output(p):
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", help="write to PATH instead of stdout")


def _add_walk(p, flag="--p"):
    p.add_argument("--alpha", type=float, default=DEFAULT_ALPHA, help="walk weight per step (default e^-2)")
    dest = "walk_length" if flag != "--p" else "p"
    p.add_argument(flag, dest=dest, type=int, default=10, help="longest walk counted by H (default 10)")
    p.add_argument("--horizon", choices=["finite", "infinite"], default="finite")


def _add_generator(p):
    p.add_argument("--gen", choices=["ba", "er"], default="ba")
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--m0", type=int, default=5)
    p.add_argument("--attach", type=int, default=3)
    p.add_argument("--p", type=float, default=0.06, help="ER edge probability")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="conjlink", description="Rank conjectural links and test network restoration.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="rank node pairs by one scoring method")
    p.add_argument("--input", required=True, help="builtin dataset (karate, lesmis, @name) or edge-list path")
    p.add_argument("--method", choices=_METHOD_CHOICES, default="g")
    p.add_argument("--universe", choices=["nonadjacent", "adjacent", "all"], default="nonadjacent")
    p.add_argument("--top", type=int, default=0, help="number of rows, 0 for all")
    _add_walk(p)
    _add_output(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("restore", help="remove top-ranked links and rank them back")
    p.add_argument("--input", required=True)
    p.add_argument("--remove", choices=_METHOD_CHOICES, required=True)
    p.add_argument("--create", choices=_METHOD_CHOICES, required=True)
    p.add_argument("--m", type=int, required=True, help="number of links removed")
    p.add_argument("--scenario", type=int, choices=[1, 2], default=1)
    _add_walk(p)
    _add_output(p)
    p.set_defaults(func=cmd_restore)

    p = sub.add_parser("experiment", help="removal x creation grid over random graphs")
    _add_generator(p)
    p.add_argument("--m", type=int, default=10)
    p.add_argument("--realizations", type=int, default=30)
    p.add_argument("--methods", default="g,h,j,ad,ra", help="comma-separated method list")
    p.add_argument("--workers", type=int, default=1)
    _add_walk(p, flag="--walk-length")
    _add_output(p)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("generate", help="write a random graph as an edge list")
    _add_generator(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on bad flags
    try:
        text = args.func(args)
    except CLIError as exc:
        print(f"conjlink: error: {exc}", file=sys.stderr)
        return exc.code
    except (DivergentSeriesError, ConvergenceError, np.linalg.LinAlgError) as exc:
        print(f"conjlink: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"conjlink: error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_INPUT
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
