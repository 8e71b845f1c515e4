"""Command line front end.

Exit codes: 0 success; 1 the Hanna Neumann inequality failed (hnc-check);
2 bad input or configuration; 3 a proved bound failed (an implementation bug).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .decomposition import (
    find_sources_sinks,
    is_positively_generated,
    positive_basis,
    trail_decomposition,
)
from .errors import NoDecomposition, NotStronglyConnected, ParseError, StallingsError
from .experiment import ExperimentConfig, format_report, report_json, run_experiment
from .folding import (
    degree_counts,
    degree_profile,
    folding_of,
    is_3_balanced,
    neumann_majority_type,
    parse_subgroup_file,
    rank,
)
from .graph import is_strongly_connected
from .intersection import embed_to_rank2, hnc_check, pullback

EXIT_OK = 0
EXIT_HNC_FAILED = 1
EXIT_USAGE = 2
EXIT_BUG = 3


class _InputError(Exception):
    pass


def _load(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise _InputError(f"{path}: {exc.strerror}") from None
    try:
        return parse_subgroup_file(text)
    except ParseError as exc:
        loc = f"{exc.line}:{exc.column}:" if exc.line else ""
        raise _InputError(f"{path}:{loc} {str(exc).split(': ', 1)[-1]}") from None


def _emit_dot(args, folding):
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(folding.to_dot())


def _print_json(obj):
    print(json.dumps(obj, sort_keys=True, indent=2))


def cmd_fold(args) -> int:
    f = folding_of(_load(args.file))
    _emit_dot(args, f)
    if args.json:
        _print_json({"canonical": f.to_text(), "rank": rank(f)})
    else:
        sys.stdout.write(f.to_text())
    return EXIT_OK


def analyze(f) -> dict:
    report = find_sources_sinks(f)
    out = {
        "rank": rank(f),
        "degree_counts": {str(k): v for k, v in sorted(degree_counts(f).items())},
        "sources": list(report.sources),
        "sinks": list(report.sinks),
        "strongly_connected": is_strongly_connected(f.graph),
        "positively_generated": is_positively_generated(f),
    }
    if f.alphabet.rank == 2:
        out["degree_profile"] = degree_profile(f).as_dict()
        out["three_balanced"] = is_3_balanced(f)
        out["majority_type"] = neumann_majority_type(f)
    else:
        out["degree_profile"] = None
        out["three_balanced"] = None
        out["majority_type"] = None
    return out


def cmd_analyze(args) -> int:
    f = folding_of(_load(args.file))
    _emit_dot(args, f)
    _print_json(analyze(f))
    return EXIT_OK


def cmd_positive_basis(args) -> int:
    f = folding_of(_load(args.file))
    _emit_dot(args, f)
    try:
        basis = positive_basis(f)
    except NotStronglyConnected:
        if args.json:
            _print_json({"strongly_connected": False, "basis": None})
        else:
            print("no positive basis: folding is not strongly connected")
        return EXIT_OK
    if args.json:
        _print_json({"strongly_connected": True, "basis": [str(w) for w in basis]})
    else:
        for w in basis:
            print(w)
    return EXIT_OK


def cmd_trail_decomp(args) -> int:
    f = folding_of(_load(args.file))
    _emit_dot(args, f)
    try:
        d = trail_decomposition(f)
    except NoDecomposition as exc:
        if args.json:
            _print_json({"decomposition": None, "reason": exc.reason,
                         "sources": list(exc.sources), "sinks": list(exc.sinks)})
        else:
            print(f"no decomposition: {exc.reason}")
        return EXIT_OK
    if args.json:
        _print_json({"decomposition": json.loads(d.to_json())})
    else:
        print(f"base {d.base}")
        for i, p in enumerate(d.trails):
            labels = "".join(f.alphabet.name(f.graph.edge(e).label) for e in p)
            print(f"P{i}: {' '.join(map(str, p))}  ({labels})")
    return EXIT_OK


def cmd_intersect(args) -> int:
    ph, pk = _load(args.file_h), _load(args.file_k)
    if ph.alphabet != pk.alphabet:
        raise _InputError("the two files declare different alphabets")
    meet = pullback(folding_of(ph), folding_of(pk))
    _emit_dot(args, meet)
    if args.json:
        _print_json({"canonical": meet.to_text(), "rank": rank(meet)})
    else:
        sys.stdout.write(meet.to_text())
    return EXIT_OK


def cmd_hnc_check(args) -> int:
    ph, pk = _load(args.file_h), _load(args.file_k)
    if ph.alphabet != pk.alphabet:
        raise _InputError("the two files declare different alphabets")
    report = hnc_check(ph, pk)
    print(report.to_json())
    if not report.proved_bounds_hold:
        return EXIT_BUG
    if not report.verdict_hn_conjecture:
        return EXIT_HNC_FAILED
    return EXIT_OK


def cmd_embed(args) -> int:
    p = embed_to_rank2(_load(args.file))
    if args.json:
        _print_json({"alphabet": 2, "generators": [str(w) for w in p.generators]})
    else:
        sys.stdout.write(p.to_text())
    return EXIT_OK


def _range(text: str) -> tuple[int, int]:
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            return int(lo), int(hi)
        n = int(text)
        return n, n
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or MIN:MAX, got {text!r}") from None


def cmd_experiment(args) -> int:
    try:
        config = ExperimentConfig(
            seed=args.seed if args.seed is not None else 1,
            samples=args.samples,
            generator_count_range=args.generators,
            word_length_range=args.lengths,
            distribution=args.distribution,
            ambient_rank=args.ambient_rank,
        )
    except (ValueError, StallingsError) as exc:
        raise _InputError(f"invalid experiment configuration: {exc}") from None
    report = run_experiment(config, reproducer_dir=args.reproducers)
    sys.stdout.write(report_json(report) if args.json else format_report(report))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dot", metavar="PATH", help="write the relevant folding as Graphviz DOT")
    common.add_argument("--json", action="store_true", help="machine readable output")
    common.add_argument("--seed", type=int, help="random seed (experiment)")

    parser = argparse.ArgumentParser(prog="stallings", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def one(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("file", help="subgroup file")
        p.set_defaults(func=func)
        return p

    def two(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("file_h", help="subgroup file for H")
        p.add_argument("file_k", help="subgroup file for K")
        p.set_defaults(func=func)
        return p

    one("fold", cmd_fold, "print the canonical folding")
    one("analyze", cmd_analyze, "degree profile, sources/sinks, strong connectivity")
    one("positive-basis", cmd_positive_basis, "positive free basis of a strongly connected folding")
    one("trail-decomp", cmd_trail_decomp, "directed trail decomposition or the obstruction")
    two("intersect", cmd_intersect, "canonical folding of the intersection")
    two("hnc-check", cmd_hnc_check, "evaluate the Hanna Neumann family of bounds")
    one("embed", cmd_embed, "rewrite into F(a, b) via x_i -> a^i b a^i")

    p = sub.add_parser("experiment", parents=[common], help="randomized property checks")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--generators", type=_range, default=(1, 3), metavar="MIN:MAX")
    p.add_argument("--lengths", type=_range, default=(1, 4), metavar="MIN:MAX")
    p.add_argument("--distribution", choices=["positive-words", "reduced-words"], default="positive-words")
    p.add_argument("--ambient-rank", type=int, default=2)
    p.add_argument("--reproducers", metavar="DIR", default="reproducers",
                   help="directory for reproducer files of failing samples (default: %(default)s)")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
