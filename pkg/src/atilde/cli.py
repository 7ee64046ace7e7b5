"""Command-line front end.

Exit codes: 0 success, 1 a semantic "false" or failed verification,
2 usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable

from .artin_maps import verify_cll, verify_k_iso, verify_phi, verify_shi
from .garside import format_normal_form, from_group_word, verify_monoid_relations, word_problem
from .geodesic import length, reduced_expression
from .interval import (
    IntervalCtx,
    atom_graph_dot,
    in_interval,
    in_right_interval,
    join_left,
    join_right,
    meet_left,
    meet_right,
)
from .monomial import (
    MonomialMatrix,
    WordParseError,
    eval_word,
    format_word,
    matrix_from_json,
    matrix_to_json,
    parse_word,
)

SUITES = ("cll", "shi", "phi", "k-iso", "monoid")


class UsageError(Exception):
    pass


def parse_element(text: str, n: int | None) -> MonomialMatrix:
    """A JSON matrix, or a word evaluated in G(oo,oo,n)."""
    text = text.strip()
    if text.startswith("{"):
        try:
            m = matrix_from_json(text)
        except (json.JSONDecodeError, ValueError, TypeError) as err:
            raise UsageError(f"bad matrix JSON: {err}") from None
        if n is not None and m.n != n:
            raise UsageError(f"matrix has n={m.n} but --n {n} was given")
        return m
    if n is None:
        raise UsageError("--n is required when the element is given as a word")
    return eval_word(parse_word(text, n), n)


def _inputs(args_items: list[str]) -> Iterable[str]:
    if args_items and args_items != ["-"]:
        yield from args_items
        return
    for line in sys.stdin:
        if line.strip():
            yield line.rstrip("\n")


def _need_ctx(args) -> IntervalCtx:
    if args.n is None:
        raise UsageError("--n is required")
    if args.k == 0:
        raise UsageError("--k must be nonzero")
    return IntervalCtx(args.n, args.k)


def _emit(args, ok: bool, result, text: str):
    if args.json:
        print(json.dumps({"ok": ok, "result": result}))
    else:
        print(text)


def cmd_eval(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    for item in _inputs(args.items):
        m = eval_word(parse_word(item, args.n), args.n)
        _emit(args, True, matrix_to_json(m), json.dumps(matrix_to_json(m)))
    return 0


def cmd_length(args) -> int:
    for item in _inputs(args.items):
        ell = length(parse_element(item, args.n))
        _emit(args, True, ell, str(ell))
    return 0


def cmd_reduce(args) -> int:
    for item in _inputs(args.items):
        w = format_word(reduced_expression(parse_element(item, args.n)))
        _emit(args, True, w, w)
    return 0


def cmd_member(args) -> int:
    ctx = _need_ctx(args)
    test = in_interval if args.side == "left" else in_right_interval
    status = 0
    for item in _inputs(args.items):
        ok = test(parse_element(item, args.n), ctx)
        status = status or (0 if ok else 1)
        _emit(args, ok, ok, "true" if ok else "false")
    return status


def _lattice(args, left_op, right_op) -> int:
    ctx = _need_ctx(args)
    a = parse_element(args.a, args.n)
    b = parse_element(args.b, args.n)
    for m in (a, b):
        if not in_interval(m, ctx):
            raise UsageError(f"{format_word(reduced_expression(m)) or '1'} is not in [1, lambda^{ctx.k}]")
    out = (left_op if args.side == "left" else right_op)(a, b, ctx)
    w = format_word(reduced_expression(out))
    _emit(args, True, {"matrix": matrix_to_json(out), "word": w}, w)
    return 0


def cmd_meet(args) -> int:
    return _lattice(args, meet_left, meet_right)


def cmd_join(args) -> int:
    return _lattice(args, join_left, join_right)


def cmd_nf(args) -> int:
    ctx = _need_ctx(args)
    for item in _inputs(args.items):
        g = from_group_word(parse_word(item, ctx.n), ctx)
        result = {
            "delta_exp": g.delta_exp,
            "factors": [format_word(reduced_expression(f)) for f in g.factors],
        }
        _emit(args, True, result, format_normal_form(g))
    return 0


def _split_pair(tokens: list[str]) -> tuple[str, str]:
    if "==" in tokens:
        i = tokens.index("==")
        return " ".join(tokens[:i]), " ".join(tokens[i + 1:])
    joined = " ".join(tokens)
    if "==" not in joined:
        raise UsageError("expected '<word1> == <word2>'")
    left, right = joined.split("==", 1)
    return left, right


def cmd_wp(args) -> int:
    ctx = _need_ctx(args)
    pairs = [_split_pair(args.items)] if args.items else [_split_pair([ln]) for ln in _inputs([])]
    status = 0
    for left, right in pairs:
        ok = word_problem(parse_word(left, ctx.n), parse_word(right, ctx.n), ctx)
        status = status or (0 if ok else 1)
        _emit(args, ok, ok, "equal" if ok else "not equal")
    return status


def cmd_verify(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    if args.suite == "cll":
        report = verify_cll(args.n, args.bound)
    elif args.suite == "shi":
        report = verify_shi(args.n, args.bound)
    elif args.suite == "phi":
        report = verify_phi(_need_ctx(args))
    elif args.suite == "k-iso":
        report = verify_k_iso(args.n, args.bound)
    else:
        report = verify_monoid_relations(_need_ctx(args), args.bound)
    _emit(args, report.passed, report.to_dict(), report.summary())
    return 0 if report.passed else 1


def cmd_dot(args) -> int:
    ctx = _need_ctx(args)
    a = parse_element(args.a, args.n)
    if not in_interval(a, ctx):
        raise UsageError(f"element is not in [1, lambda^{ctx.k}]")
    dot = atom_graph_dot(a, ctx)
    _emit(args, True, dot, dot)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="atilde",
        description="Interval Garside structures for the affine Artin group of type A~.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="matrix dimension (>= 2)")
    common.add_argument("--k", type=int, default=1, help="interval parameter, Delta = lambda^k")
    common.add_argument("--json", action="store_true", help='emit {"ok": ..., "result": ...}')
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, items=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if items:
            p.add_argument("items", nargs="*", help="inputs (read from stdin, one per line, if absent)")
        p.set_defaults(func=func)
        return p

    add("eval", cmd_eval, "evaluate words to matrices")
    add("length", cmd_length, "geodesic length of a matrix or word")
    add("reduce", cmd_reduce, "reduced expression of a matrix or word")
    p = add("member", cmd_member, "membership in [1, lambda^k]")
    p.add_argument("--side", choices=("left", "right"), default="left")
    for name, func in (("meet", cmd_meet), ("join", cmd_join)):
        p = add(name, func, f"lattice {name} of two simples", items=False)
        p.add_argument("a")
        p.add_argument("b")
        p.add_argument("--side", choices=("left", "right"), default="left")
    add("nf", cmd_nf, "Garside normal form of a group word")
    add("wp", cmd_wp, "decide '<word1> == <word2>'")
    p = add("verify", cmd_verify, "run a relation verification suite", items=False)
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--bound", type=int, default=3, help="t-index bound for relation instances")
    p = add("dot", cmd_dot, "DOT graph of the divisors of a simple", items=False)
    p.add_argument("a")
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except WordParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 2
    except (UsageError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
