"""Command-line interface.

Exit codes: 0 success, 2 wild ramification (5 | n), 3 factoring budget
exhausted, 4 verification failure.
"""

import argparse
import json
import sys

from .errors import CertificationFailed, FactorizationIncomplete, WildRamification
from .fixtures import load_fixtures, verify_table
from .invariants import compute_invariants
from .nib import build_nib_generator, certify_nib
from .nib_enum import iter_generators
from .quintic_field import build_field
from .report import analyze, coords_str, wild_record

EXIT_OK, EXIT_WILD, EXIT_FACTOR, EXIT_VERIFY = 0, 2, 3, 4


def parse_hints(text):
    if not text:
        return []
    return [int(p) for p in text.replace(" ", "").split(",") if p]


def parse_k_range(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        lo = hi = text
    return int(lo), int(hi)


def _print_record(rec, as_json, out):
    if as_json:
        print(rec.to_json(), file=out)
        return
    d = rec.to_json_dict()
    width = max(len(k) for k in d)
    for k, v in d.items():
        if isinstance(v, (list, dict)):
            v = json.dumps(v)
        print(f"{k:<{width}}  {v}", file=out)


def cmd_analyze(args, out):
    hints = parse_hints(args.factor_hint)
    if args.n % 5 == 0:
        _print_record(wild_record(args.n, hints), args.json, out)
        return EXIT_WILD
    rec = analyze(args.n, hints, args.orbit_bound)
    _print_record(rec, args.json, out)
    return EXIT_OK if rec.certified else EXIT_VERIFY


def cmd_enumerate(args, out):
    hints = parse_hints(args.factor_hint)
    if args.n % 5 == 0:
        _print_record(wild_record(args.n, hints), args.json, out)
        return EXIT_WILD
    k_min, k_max = parse_k_range(args.k)
    if k_min > k_max:
        return EXIT_OK
    inv = compute_invariants(args.n, hints)
    ctx = build_field(args.n)
    gen = build_nib_generator(args.n, inv=inv, ctx=ctx)
    if not args.json:
        print(f"{'sign':>4} {'ell':>3} {'k':>4}  generator (coordinates on 1, rho, .., rho^4)", file=out)
    for unit, el in iter_generators(ctx, gen, k_min, k_max):
        ok = certify_nib(ctx, el, inv)
        if args.json:
            print(json.dumps({
                "n": str(args.n), "sign": str(unit.sign), "ell": str(unit.ell), "k": str(unit.k),
                "generator": coords_str(el), "certified": ok,
            }), file=out)
        else:
            sign = "+" if unit.sign > 0 else "-"
            print(f"{sign:>4} {unit.ell:>3} {unit.k:>4}  {' '.join(coords_str(el))}"
                  + ("" if ok else "  NOT CERTIFIED"), file=out)
        if not ok:
            return EXIT_VERIFY
    return EXIT_OK


def cmd_verify_table(args, out):
    rows = load_fixtures(args.fixtures)
    failures = 0
    for res in verify_table(rows, args.only, args.orbit_bound):
        failures += not res.ok
        if args.json:
            print(json.dumps({
                "source": res.source, "n": str(res.n),
                "k": None if res.k is None else str(res.k),
                "status": "PASS" if res.ok else "FAIL",
                "witness": None if res.witness is None else [str(x) for x in res.witness.as_tuple()],
                "failed_checks": [name for name, good in res.checks if not good],
            }), file=out)
        else:
            print(res.line(), file=out)
    if not args.json:
        print(f"{'FAIL' if failures else 'OK'}: {failures} failing row(s)", file=out)
    return EXIT_VERIFY if failures else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lehmer-nib",
        description="Integral bases and normal integral bases of Emma Lehmer's cyclic quintic fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="line-delimited JSON output")
        p.add_argument("--orbit-bound", type=int, default=10, metavar="K",
                       help="search |k| <= K when matching against printed generators")

    p = sub.add_parser("analyze", help="invariants, integral basis and NIB generator of K_n")
    p.add_argument("n", type=int)
    p.add_argument("--factor-hint", metavar="P1,P2,...", help="known prime factors of Delta_n")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="all NIB generators +-sigma^l xi_k for k in a range")
    p.add_argument("n", type=int)
    p.add_argument("--k", default="0..0", metavar="A..B", help="inclusive k range (default 0..0)")
    p.add_argument("--factor-hint", metavar="P1,P2,...")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify-table", help="re-verify every printed value in the fixtures")
    p.add_argument("--only", metavar="n=N|source=S", help="restrict to matching rows")
    p.add_argument("--fixtures", metavar="PATH", help="alternative fixtures JSON file")
    common(p)
    p.set_defaults(func=cmd_verify_table)
    return parser


def _join_negative_values(argv):
    """Let ``--k -5..5`` through argparse, which would read -5..5 as an option."""
    out, it = [], iter(argv)
    for tok in it:
        if tok in ("--k", "--factor-hint"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None, out=None):
    out = out or sys.stdout
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_join_negative_values(argv))
    try:
        return args.func(args, out)
    except WildRamification as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WILD
    except FactorizationIncomplete as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FACTOR
    except CertificationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
