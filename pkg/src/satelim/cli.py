"""Command line interface: ``satelim <command> [options] FILE``.

Exit codes: 0 success, 1 parse or usage error, 2 arithmetic or budget error,
3 the two elimination routes disagree (``eliminate --method both``).
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .bench import METHODS, run_corpus, write_csv
from .errors import BudgetError, ExponentOverflowError, FieldArithmeticError, ParseError, SatelimError
from .groebner import STRATEGIES, Budget, groebner_basis, ideal_equal, syzygies
from .idealops import (
    as_basis,
    eliminate_block,
    eliminate_saturation,
    homogenize_ideal,
    quotient,
    saturate,
)
from .orders import parse_order
from .parser import parse_polynomial, read_problem

EXIT_OK, EXIT_USAGE, EXIT_MATH, EXIT_DISAGREE = 0, 1, 2, 3


def _budget(args):
    return Budget(max_pairs=args.max_pairs, max_degree=args.max_degree, timeout=args.timeout,
                  strategy=args.strategy)


def _load(args):
    prob = read_problem(args.file)
    ring = prob.ring()
    if getattr(args, "order", None):
        ring = ring.with_order(parse_order(args.order))
    return prob, ring, prob.elements(ring)


def _emit(basis, out):
    for g in basis.gens:
        print(g, file=out)


def cmd_gb(args, out):
    _, ring, gens = _load(args)
    _emit(groebner_basis(gens, budget=_budget(args), ring=ring), out)


def cmd_syz(args, out):
    _, ring, gens = _load(args)
    for s in syzygies(gens, _budget(args), ring=ring):
        print(s, file=out)


def _by(args, ring):
    return parse_polynomial(args.by, ring)


def cmd_quotient(args, out):
    _, ring, gens = _load(args)
    _emit(quotient(as_basis(gens, ring), _by(args, ring), _budget(args)), out)


def cmd_saturate(args, out):
    _, ring, gens = _load(args)
    basis, steps = saturate(as_basis(gens, ring), _by(args, ring), _budget(args))
    print(f"saturation steps: {steps}", file=sys.stderr)
    _emit(basis, out)


def cmd_homogenize(args, out):
    _, ring, gens = _load(args)
    res = homogenize_ideal(as_basis(gens, ring), args.var, budget=_budget(args))
    print(f"saturation steps: {res.saturation_steps}", file=sys.stderr)
    if args.show_j:
        print("# J", file=out)
        _emit(res.J, out)
        print("# Ih", file=out)
    _emit(res.Ih, out)


def cmd_eliminate(args, out):
    prob = read_problem(args.file)
    p = prob.problem()
    budget = _budget(args)
    if args.method == "saturation":
        _emit(eliminate_saturation(p, budget=budget), out)
        return EXIT_OK
    if args.method == "block":
        _emit(eliminate_block(p, budget=budget), out)
        return EXIT_OK
    a = eliminate_saturation(p, budget=budget)
    b = eliminate_block(p, budget=budget)
    if ideal_equal(a, b, budget=budget):
        _emit(a, out)
        print("AGREE", file=out)
        return EXIT_OK
    print("# saturation", file=out)
    _emit(a, out)
    print("# block", file=out)
    _emit(b, out)
    print("DISAGREE", file=out)
    return EXIT_DISAGREE


def _int_range(text):
    """``5`` means 1..5, ``2-4`` means 2..4, ``1,3`` is a list."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def cmd_bench(args, out):
    methods = tuple(m.strip() for m in args.methods.split(",") if m.strip())
    bad = [m for m in methods if m not in METHODS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown method {bad[0]!r}")
    curves = _int_range(args.curves) if args.curves else ()
    if len(curves) == 1 and "-" not in args.curves and "," not in args.curves:
        curves = range(1, curves[0] + 1)
    random_kwargs = {"max_terms": args.max_terms or None}
    records = run_corpus(args.corpus, methods, _budget(args), args.seed, tuple(curves),
                         args.random, args.repeat, args.jobs, random_kwargs)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_csv(records, fh)
    else:
        write_csv(records, out)
    if any(r.outcome == "disagree" for r in records):
        return EXIT_DISAGREE
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="satelim", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-pairs", type=int, default=10**6, help="critical pair budget")
    common.add_argument("--max-degree", type=int, default=2**12, help="degree budget")
    common.add_argument("--timeout", type=float, default=None,
                        help="wall-clock budget per Groebner basis, seconds")
    common.add_argument("--strategy", choices=STRATEGIES, default="auto",
                        help="critical pair selection (default: auto, sugar for graded orders)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", parents=[common], help="reduced Groebner basis")
    p.add_argument("--order", help="lex, deglex, degrevlex or block(<n>:<o1>,<o2>)")
    p.add_argument("file")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("syz", parents=[common], help="syzygies of the generators")
    p.add_argument("--order")
    p.add_argument("file")
    p.set_defaults(func=cmd_syz)

    for name, func, helptext in (("quotient", cmd_quotient, "ideal quotient I : f"),
                                 ("saturate", cmd_saturate, "saturation I : f^infinity")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--by", required=True, help="polynomial f")
        p.add_argument("--order")
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("homogenize", parents=[common], help="homogenization of the ideal")
    p.add_argument("--var", default="x0", help="name of the homogenizing variable")
    p.add_argument("--show-j", action="store_true", help="also print the homogenized generators")
    p.add_argument("--order")
    p.add_argument("file")
    p.set_defaults(func=cmd_homogenize)

    p = sub.add_parser("eliminate", parents=[common], help="eliminate the 'elim' variables")
    p.add_argument("--method", choices=("saturation", "block", "both"), default="saturation")
    p.add_argument("file")
    p.set_defaults(func=cmd_eliminate)

    p = sub.add_parser("bench", parents=[common], help="time both elimination routes, CSV output")
    p.add_argument("corpus", nargs="?", help="directory of *.ideal files")
    p.add_argument("--methods", default="saturation,block")
    p.add_argument("--curves", default="", help="curve family sizes, e.g. 5 (=1-5), 2-4 or 1,3")
    p.add_argument("--random", type=int, default=0, help="number of random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-terms", type=int, default=3,
                   help="terms per random generator; 0 draws dense generators")
    p.add_argument("--repeat", type=int, default=3, help="timed runs per method (median)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        code = args.func(args, out)
    except ParseError as exc:
        where = f"{args.file}: " if getattr(args, "file", None) else ""
        print(f"satelim: parse error: {where}{exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetError, FieldArithmeticError, ExponentOverflowError) as exc:
        print(f"satelim: {exc}", file=sys.stderr)
        return EXIT_MATH
    except (SatelimError, argparse.ArgumentTypeError) as exc:
        print(f"satelim: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
