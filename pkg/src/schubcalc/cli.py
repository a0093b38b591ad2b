"""Command-line interface.

Exit codes: 0 success, 1 validation error, 2 budget exceeded,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Callable

from . import bounds, oracle
from .errors import BudgetExceededError, ValidationError
from .ring import CohomologyClass, basis_product, cup, cup_nonzero
from .young import (
    JumpingNumbers,
    RectangleContext,
    YoungDiagram,
    complement,
    diagram_from_jumps,
    jumps_from_diagram,
    overlap_rows,
    overlap_test,
    rank_table_from_jumps,
    render_overlap,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_BUDGET = 2
EXIT_VERIFY = 3


class VerificationFailure(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_VALIDATION, f"{self.prog}: error: {message}\n")


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


def _diagram(text: str) -> YoungDiagram:
    return YoungDiagram.parse(text)


def _ctx(args) -> RectangleContext:
    return RectangleContext(args.k, args.n)


# -- cup / overlap / diagram -------------------------------------------------


def cmd_cup(args) -> int:
    ctx = _ctx(args)
    result = basis_product(_diagram(args.lam), _diagram(args.mu), ctx)
    _emit(args, result.to_text(), result.to_json())
    return EXIT_OK


def cmd_overlap(args) -> int:
    ctx = _ctx(args)
    lam, mu = _diagram(args.lam), _diagram(args.mu)
    rows = overlap_rows(lam, mu, ctx)
    k = ctx.k
    if not rows:
        text = "no-overlap (product nonzero)"
    else:
        text = "; ".join(f"overlap at row i={i} ({lam.part(i)}+{mu.part(k + 1 - i)}>{ctx.width})" for i in rows)
    if args.draw:
        text += "\n" + render_overlap(lam, mu, ctx)
    payload = {
        "k": ctx.k,
        "n": ctx.n,
        "lambda": list(lam.parts),
        "mu": list(mu.parts),
        "overlap": bool(rows),
        "product_nonzero": not rows,
        "rows": rows,
    }
    _emit(args, text, payload)
    return EXIT_OK


def cmd_diagram(args) -> int:
    ctx = _ctx(args)
    if args.action == "from-jumps":
        jumps = JumpingNumbers(tuple(int(t) for t in args.value.split(",")))
        lam = diagram_from_jumps(jumps, ctx)
        table = rank_table_from_jumps(jumps, ctx)
        _emit(args, f"{lam}\nrank table: {table}", {"diagram": list(lam.parts), "rank_table": list(table.values)})
    elif args.action == "to-jumps":
        lam = _diagram(args.value)
        jumps = jumps_from_diagram(lam, ctx)
        table = rank_table_from_jumps(jumps, ctx)
        _emit(args, f"{jumps}\nrank table: {table}", {"jumps": list(jumps.indices), "rank_table": list(table.values)})
    else:
        mu = complement(_diagram(args.value), ctx)
        _emit(args, str(mu), {"diagram": list(mu.parts)})
    return EXIT_OK


# -- bounds ------------------------------------------------------------------


def cmd_bound(args) -> int:
    kind = args.kind
    if kind == "schubert":
        rep = bounds.schubert_bound(args.e, _ctx(args))
        _emit(args, str(rep), rep.to_json())
    elif kind == "main":
        rep = bounds.main_bound(bounds.MatrixSpaceShape(args.n, args.m), args.e)
        _emit(args, str(rep), rep.to_json())
    elif kind == "rank":
        shape = bounds.MatrixSpaceShape(args.n, args.m)
        value = bounds.rank_variety_codim(shape, args.k)
        _emit(args, f"(m-k)(n-k) = {value}", {"formula": "rank", "n": args.n, "m": args.m, "k": args.k, "value": value})
    else:
        shape = bounds.MatrixSpaceShape(args.n, args.m)
        if args.sweep:
            rows = bounds.reduction_sweep(shape, args.e)
            main = bounds.main_bound(shape, args.e)
            lines = ["k  f(k)"] + [f"{k:<2} {v}" for k, v in rows] + [f"min f = {min(v for _, v in rows)}; {main}"]
            payload = {"sweep": [{"k": k, "f": v} for k, v in rows], "main": main.to_json()}
            _emit(args, "\n".join(lines), payload)
        else:
            if args.k is None:
                raise ValidationError("bound f needs -k or --sweep")
            value = bounds.reduction_f(args.k, shape, args.e)
            _emit(args, f"(m-k)(n-k)+k+1-e = {value}", {"formula": "f", "k": args.k, "value": value})
    return EXIT_OK


# -- verification sweeps -----------------------------------------------------


def _rectangles(max_area: int):
    for k in range(1, max_area + 1):
        for n in range(k + 1, k + max_area // k + 1):
            yield RectangleContext(k, n)


def verify_lemma(args) -> str:
    pairs = 0
    for ctx in _rectangles(args.max_area):
        diagrams = list(ctx.diagrams())
        for lam in diagrams:
            for mu in diagrams:
                pairs += 1
                if cup_nonzero(lam, mu, ctx) != overlap_test(lam, mu, ctx):
                    raise VerificationFailure(f"counterexample in {ctx}: lambda={lam}, mu={mu}")
    return f"PASS: cup_nonzero == overlap_test on all pairs ({pairs} pairs, k(n-k) <= {args.max_area})"


def verify_ring(args) -> str:
    rng = random.Random(args.seed)
    checked = 0
    for ctx in _rectangles(args.max_area):
        basis = list(ctx.diagrams())
        for lam in basis:
            for mu in basis:
                if basis_product(lam, mu, ctx) != basis_product(mu, lam, ctx):
                    raise VerificationFailure(f"not commutative in {ctx}: {lam} * {mu}")
        for _ in range(args.samples):
            a, b, c = (CohomologyClass.sigma(rng.choice(basis), ctx) for _ in range(3))
            if cup(cup(a, b), c) != cup(a, cup(b, c)):
                raise VerificationFailure(f"not associative in {ctx}: {a}, {b}, {c}")
            checked += 1
    return f"PASS: commutative on all basis pairs, associative on {checked} sampled triples (seed {args.seed})"


def verify_cells(args) -> str:
    census = oracle.schubert_cell_census(args.q, args.n, args.k)
    ctx = RectangleContext(args.k, args.n)
    for lam, count in census.cells:
        expected = args.q ** (ctx.area - lam.area)
        if count != expected:
            raise VerificationFailure(f"cell {lam}: {count} points, expected q^{ctx.area - lam.area} = {expected}")
    if len(census.cells) != sum(1 for _ in ctx.diagrams()):
        raise VerificationFailure("some Schubert cell is empty")
    total = oracle.gaussian_binomial(args.n, args.k, args.q)
    if census.total != total:
        raise VerificationFailure(f"census total {census.total} != Gaussian binomial {total}")
    counts = ",".join(str(c) for _, c in census.cells)
    return f"PASS: {len(census.cells)} cells, counts {counts}, total {total}"


def _rank_count(q: int, n: int, m: int, r: int) -> int:
    num = 1
    for i in range(r):
        num *= (q**n - q**i) * (q**m - q**i)
    den = 1
    for i in range(r):
        den *= q**r - q**i
    return num // den


def verify_ranks(args) -> str:
    census = oracle.rank_census(args.q, args.n, args.m).as_dict()
    for r in range(min(args.n, args.m) + 1):
        if census.get(r, 0) != _rank_count(args.q, args.n, args.m, r):
            raise VerificationFailure(f"rank {r}: {census.get(r, 0)} matrices, closed form gives {_rank_count(args.q, args.n, args.m, r)}")
    if sum(census.values()) != args.q ** (args.n * args.m):
        raise VerificationFailure("rank census does not sum to q^(nm)")
    body = ", ".join(f"{r}:{c}" for r, c in sorted(census.items()))
    return f"PASS: {{{body}}}"


def verify_fibers(args) -> str:
    q, n, m = args.q, args.n, args.m
    spaces = oracle.column_space_census(q, n, m)
    ranks = oracle.rank_census(q, n, m).as_dict()
    lines = []
    for k in range(min(n, m) + 1):
        fibers = {spaces.get(V, 0) for V in oracle.enumerate_subspaces(q, n, k)}
        if len(fibers) != 1:
            raise VerificationFailure(f"rank {k}: fiber sizes differ across subspaces: {sorted(fibers)}")
        (fiber,) = fibers
        points = oracle.gaussian_binomial(n, k, q)
        if points * fiber != ranks.get(k, 0):
            raise VerificationFailure(f"rank {k}: {points} x {fiber} != {ranks.get(k, 0)}")
        lines.append(f"k={k}: {points} x {fiber} = {ranks.get(k, 0)}")
    return "PASS: fibers constant; " + "; ".join(lines)


def verify_richardson(args) -> str:
    ctx = RectangleContext(args.k, args.n)
    table = oracle.richardson_census(args.q, args.n, args.k)
    for (lam, mu), points in table.items():
        if bool(points) != overlap_test(lam, mu, ctx):
            raise VerificationFailure(f"lambda={lam}, mu={mu}: oracle finds {points} points")
    nonempty = sum(1 for v in table.values() if v)
    return f"PASS: richardson_nonempty == overlap_test on {len(table)} pairs ({nonempty} nonempty)"


_SUITES: dict[str, Callable] = {
    "lemma": verify_lemma,
    "ring": verify_ring,
    "cells": verify_cells,
    "ranks": verify_ranks,
    "fibers": verify_fibers,
    "richardson": verify_richardson,
}


def cmd_verify(args) -> int:
    try:
        summary = _SUITES[args.suite](args)
    except VerificationFailure as exc:
        _emit(args, f"FAIL: {exc}", {"suite": args.suite, "passed": False, "message": str(exc)})
        return EXIT_VERIFY
    _emit(args, summary, {"suite": args.suite, "passed": True, "message": summary})
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    parser = _Parser(prog="schubcalc", description="Schubert calculus on Grassmannians.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def rect(p):
        p.add_argument("-k", type=int, required=True)
        p.add_argument("-n", type=int, required=True)

    p = sub.add_parser("cup", parents=[common], help="cup product of two Schubert classes")
    rect(p)
    p.add_argument("lam")
    p.add_argument("mu")
    p.set_defaults(func=cmd_cup)

    p = sub.add_parser("overlap", parents=[common], help="non-overlap test for a pair of diagrams")
    rect(p)
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("--draw", action="store_true", help="print the rectangle picture")
    p.set_defaults(func=cmd_overlap)

    p = sub.add_parser("diagram", parents=[common], help="convert between encodings")
    p.add_argument("action", choices=["from-jumps", "to-jumps", "complement"])
    rect(p)
    p.add_argument("value")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("bound", parents=[common], help="codimension bounds")
    bsub = p.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    b = bsub.add_parser("main", parents=[common])
    b.add_argument("-n", type=int, required=True)
    b.add_argument("-m", type=int, required=True)
    b.add_argument("-e", type=int, required=True)
    b = bsub.add_parser("schubert", parents=[common])
    b.add_argument("-e", type=int, required=True)
    rect(b)
    b = bsub.add_parser("rank", parents=[common])
    b.add_argument("-n", type=int, required=True)
    b.add_argument("-m", type=int, required=True)
    b.add_argument("-k", type=int, required=True)
    b = bsub.add_parser("f", parents=[common])
    b.add_argument("-n", type=int, required=True)
    b.add_argument("-m", type=int, required=True)
    b.add_argument("-e", type=int, required=True)
    b.add_argument("-k", type=int)
    b.add_argument("--sweep", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    vsub = p.add_subparsers(dest="suite", required=True, parser_class=_Parser)
    v = vsub.add_parser("lemma", parents=[common])
    v.add_argument("--max-area", type=int, default=12)
    v = vsub.add_parser("ring", parents=[common])
    v.add_argument("--max-area", type=int, default=9)
    v.add_argument("--samples", type=int, default=50)
    for name in ("cells", "richardson"):
        v = vsub.add_parser(name, parents=[common])
        v.add_argument("-q", type=int, default=2)
        rect(v)
    for name in ("ranks", "fibers"):
        v = vsub.add_parser(name, parents=[common])
        v.add_argument("-q", type=int, default=2)
        v.add_argument("-n", type=int, required=True)
        v.add_argument("-m", type=int, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.format = getattr(args, "format", "text")
    args.seed = getattr(args, "seed", 0)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
