"""Command-line front end.

Exit status is 0 for success or a true answer, 1 for a false answer, a
missing morphism or a failed verification, and 2 for parse and type errors.
Payload goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    AlphabetMismatch,
    DomainError,
    LDCError,
    LengthMismatch,
    ModeError,
    NotSpiderTyped,
    ParseError,
    TypeMismatch,
    UnknownVertex,
    VerificationFailure,
)
from .frobenius import f_normalize, f_synthesize, spider_check, spider_emit
from .normalizer import Mode, cf_to_json, normalize, reify, synthesize
from .oracle import verify_frontier, verify_suite
from .polytope import build_graph, export_graph, parse_frontier
from .syntax import check_ranks, parse_morphism, parse_object, rank, render, typecheck
from .unitscx import run_counterexample

DEFAULT_SEED = 20240101

USAGE_ERRORS = (
    ParseError,
    ModeError,
    TypeMismatch,
    LengthMismatch,
    AlphabetMismatch,
    DomainError,
    NotSpiderTyped,
    UnknownVertex,
)


class UsageError(Exception):
    pass


def _modes(text):
    try:
        return Mode(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown mode {text!r}; choose from {', '.join(m.value for m in Mode)}"
        ) from None


def _load_ranks(path):
    if path is None:
        return None
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read rank file {path}: {e}") from None
    if not isinstance(data, dict):
        raise UsageError("rank file must hold a JSON object")
    try:
        return check_ranks(data)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _term(text, functor):
    term = parse_morphism(text, "functor" if functor else "plain")
    typecheck(term)
    return term


def _emit(payload):
    sys.stdout.write(payload if payload.endswith("\n") else payload + "\n")


def cmd_parse(args):
    functor = args.functor
    try:
        x = parse_object(args.text, functor)
        kind = "object"
    except ParseError as as_object:
        try:
            x = parse_morphism(args.text, "functor" if functor else "plain")
        except ParseError as as_term:
            raise max(as_object, as_term, key=lambda e: e.position) from None
        kind = "morphism"
    _emit(f"{kind} {render(x)}")
    return 0


def cmd_typecheck(args):
    term = parse_morphism(args.term, "functor" if args.functor else "plain")
    src, tgt = typecheck(term, terminal=args.terminal)
    _emit(f"{render(src)} -> {render(tgt)}")
    return 0


def cmd_rank(args):
    x = parse_object(args.object, args.functor)
    _emit(str(rank(x, _load_ranks(args.rank_file))))
    return 0


def cmd_normalize(args):
    term = _term(args.term, args.functor)
    cf = f_normalize(term) if args.functor else normalize(term)
    _emit(json.dumps(cf_to_json(cf)) if args.json else render(reify(cf)))
    return 0


def _synth(args):
    src = parse_object(args.src, args.functor)
    tgt = parse_object(args.tgt, args.functor)
    ranks = _load_ranks(args.rank_file)
    synth = f_synthesize if args.functor else synthesize
    return synth(src, tgt, args.mode, ranks)


def cmd_synth(args):
    cf = _synth(args)
    if not cf:
        print(f"no morphism: {cf.reason}", file=sys.stderr)
        return 1
    _emit(json.dumps(cf_to_json(cf)) if args.json else render(reify(cf)))
    return 0


def cmd_exists(args):
    cf = _synth(args)
    _emit("true" if cf else "false")
    return 0 if cf else 1


def cmd_eq(args):
    f, g = _term(args.f, args.functor), _term(args.g, args.functor)
    if typecheck(f) != typecheck(g):
        _emit("false")
        return 1
    norm = f_normalize if args.functor else normalize
    if norm(f) != norm(g):
        raise VerificationFailure("parallel terms with different canonical forms")
    _emit("true")
    return 0


def cmd_graph(args):
    g = build_graph(parse_frontier(args.frontier), args.mode, args.functor)
    _emit(export_graph(g, args.format))
    return 0


def _summary(report):
    line = (
        f"{report.frontier} [{report.mode}]: {report.vertex_count} vertices, "
        f"{report.reachable_pairs} reachable pairs, {report.path_groups_checked} path groups, "
        f"{len(report.failures)} failures"
    )
    return "\n".join([line] + [f"  {f}" for f in report.failures])


def cmd_verify(args):
    fr = parse_frontier(args.frontier)
    report = verify_frontier(fr, args.mode, args.max_path_len, args.functor)
    _emit(json.dumps(report.to_json(), indent=2) if args.json else _summary(report))
    return 0 if report.ok else 1


def cmd_verify_suite(args):
    if args.max_letters < 2:
        raise UsageError("--max-letters must be at least 2")
    modes = (args.mode,) if args.mode else tuple(Mode)
    reports = verify_suite(args.max_letters, args.seed, modes, args.functor)
    reports.sort(key=lambda r: (len(r.frontier), r.frontier, r.mode))
    failed = sum(not r.ok for r in reports)
    if args.json:
        _emit(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        _emit("\n".join([_summary(r) for r in reports] + [f"{len(reports)} frontiers checked, {failed} failed"]))
    return 0 if failed == 0 else 1


def cmd_spider(args):
    if args.emit is not None:
        m, n = args.emit
        _emit(render(spider_emit(m, n)))
        return 0
    term = parse_morphism(args.check, "functor")
    m, n = spider_check(term)
    _emit(f"{m} {n}")
    return 0


def cmd_units_cx(args):
    report = run_counterexample()
    if args.json:
        _emit(json.dumps(report.to_json(), indent=2))
    else:
        data = report.to_json()
        _emit(
            "\n".join(
                [
                    f"element: {data['element']}",
                    f"epsilon at LR(S): {data['epsilon_LR_value']}",
                    f"LR(epsilon at S): {data['LR_epsilon_value']}",
                    f"differ: {data['differ']}",
                    f"snake identity: {data['snake_identity']}",
                ]
            )
        )
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="ldc", description="Coherence tools for unitless linearly distributive categories.")
    sub = p.add_subparsers(dest="command", required=True)

    def functor(q):
        q.add_argument("--functor", action="store_true", help="terms and objects of the free Frobenius functor")

    def mode(q, default=Mode.FULL):
        q.add_argument("--mode", type=_modes, default=default, help="full, lax-ld or lax-monoidal")

    q = sub.add_parser("parse", help="parse an object or a term and print it back")
    q.add_argument("text")
    functor(q)
    q.set_defaults(run=cmd_parse)

    q = sub.add_parser("typecheck", help="print the endpoints of a term")
    q.add_argument("term")
    functor(q)
    q.add_argument("--terminal", action="store_true", help="type over the one-object category")
    q.set_defaults(run=cmd_typecheck)

    q = sub.add_parser("rank", help="rank of an object")
    q.add_argument("object")
    q.add_argument("--rank-file", help='JSON map like {"A": 1, "B": 2}')
    functor(q)
    q.set_defaults(run=cmd_rank)

    q = sub.add_parser("normalize", help="canonical form of a term")
    q.add_argument("term")
    q.add_argument("--json", action="store_true")
    functor(q)
    q.set_defaults(run=cmd_normalize)

    for name, run, doc in (
        ("synth", cmd_synth, "canonical morphism between two objects"),
        ("exists", cmd_exists, "whether a structural morphism exists"),
    ):
        q = sub.add_parser(name, help=doc)
        q.add_argument("src")
        q.add_argument("tgt")
        mode(q)
        functor(q)
        q.add_argument("--rank-file", help='JSON map like {"A": 1, "B": 2}')
        if name == "synth":
            q.add_argument("--json", action="store_true")
        q.set_defaults(run=run)

    q = sub.add_parser("eq", help="whether two terms denote the same morphism")
    q.add_argument("f")
    q.add_argument("g")
    functor(q)
    q.set_defaults(run=cmd_eq)

    q = sub.add_parser("graph", help="graph of bracketings of a frontier")
    q.add_argument("--frontier", required=True)
    q.add_argument("--format", choices=("dot", "json"), default="dot")
    mode(q)
    functor(q)
    q.set_defaults(run=cmd_graph)

    q = sub.add_parser("verify", help="check one frontier against the search oracle")
    q.add_argument("--frontier", required=True)
    q.add_argument("--max-path-len", type=int, default=None)
    q.add_argument("--json", action="store_true")
    mode(q)
    functor(q)
    q.set_defaults(run=cmd_verify)

    q = sub.add_parser("verify-suite", help="check every frontier pattern up to a size")
    q.add_argument("--max-letters", type=int, required=True)
    q.add_argument("--seed", type=int, default=DEFAULT_SEED)
    q.add_argument("--json", action="store_true")
    mode(q, default=None)
    functor(q)
    q.set_defaults(run=cmd_verify_suite)

    q = sub.add_parser("spider", help="spider normal forms")
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--emit", nargs=2, type=int, metavar=("M", "N"))
    g.add_argument("--check", metavar="EXPR")
    q.set_defaults(run=cmd_spider)

    q = sub.add_parser("units-cx", help="two different maps (LR)^2 -> LR on bimodules")
    q.add_argument("--json", action="store_true")
    q.set_defaults(run=cmd_units_cx)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return args.run(args)
    except USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except VerificationFailure as e:
        print(f"verification failure: {e}", file=sys.stderr)
        return 1
    except LDCError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
