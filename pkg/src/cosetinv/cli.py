"""Command-line interface.

    cosetinv data   --theory su:N=2,k=1 --output table.txt
    cosetinv tau    --theory parafermion:k=3 --manifold chain:2,3
    cosetinv verify all

Exit codes: 0 success, 2 parse or parameter error, 3 capacity or
unsupported combination, 4 verification failure.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io, verify
from .errors import CapacityExceeded, CosetInvError, ParseError, UnsupportedCombination
from .invariants import color_model, evaluate

EXIT_OK, EXIT_PARSE, EXIT_CAPACITY, EXIT_VERIFY = 0, 2, 3, 4


def cmd_data(args) -> int:
    theory = io.parse_theory(args.theory)
    text, hit = io.cached_table(theory)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)
        print(f"wrote {args.output} ({'cache hit' if hit else 'computed'})", file=sys.stderr)
    return EXIT_OK


def cmd_tau(args) -> int:
    theory = io.parse_theory(args.theory)
    pres = io.parse_manifold(args.manifold)
    result = evaluate(color_model(theory), pres)
    sys.stdout.write(io.format_result(io.format_theory(theory), args.manifold, result))
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify.run(args.suite)
    failed = 0
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'} {name} {detail}")
        failed += not ok
    print(f"summary suite={args.suite} passed={len(results) - failed} failed={failed}")
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cosetinv", description="Quantum invariants of 3-manifolds "
                                "from SU(N), U(1) and coset modular data.")
    sub = p.add_subparsers(dest="command", required=True)
    d = sub.add_parser("data", help="write the category table of a theory")
    d.add_argument("--theory", required=True)
    d.add_argument("--output", required=True, help="output path, or - for stdout")
    d.set_defaults(func=cmd_data)
    t = sub.add_parser("tau", help="evaluate the invariant of a surgery presentation")
    t.add_argument("--theory", required=True)
    t.add_argument("--manifold", required=True, help="lens:p,q | chain:a1,... | link:<path>")
    t.set_defaults(func=cmd_tau)
    v = sub.add_parser("verify", help="run a self-check suite")
    v.add_argument("suite", choices=["modular", "skein", "coset", "crossfamily", "all"])
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (CapacityExceeded, UnsupportedCombination) as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except CosetInvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
