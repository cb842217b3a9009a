"""Command-line front end: ``blattice {enumerate,count,series,verify,identities}``.

Exit codes: 0 success, 1 verification failure (or an unresolved series),
2 usage error, 3 size bound or work budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import analytic, exact
from .config import BoundExceeded, load_settings, set_settings
from .enumeration import enumerate_universe
from .partitions import PartitionShape, serialize
from .verify import GRIDS, identity_rows, run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3

UNIVERSE_FLAGS = {"B": "B", "no-zero": "no_zero", "A": "A"}


def _sizes(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _shape(a) -> PartitionShape:
    return PartitionShape(a.i0 + sum(a.sizes), a.i0, a.sizes)


def _need(a, *names):
    missing = [nm for nm in names if getattr(a, nm) is None]
    if missing:
        raise _Usage(f"{a.kind} needs " + ", ".join(("-" if len(m) == 1 else "--") + m
                                                   for m in missing))


class _Usage(Exception):
    pass


COUNTS = {
    "dowling": (("n",), lambda a: exact.dowling_number(a.n)),
    "no-zero": (("n",), lambda a: exact.n_no_zero(a.n) if a.k is None
                else exact.n_no_zero_by_pairs(a.n, a.k)),
    "bell": (("n",), lambda a: exact.bell_number(a.n)),
    "stirling2": (("n", "k"), lambda a: exact.stirling2(a.n, a.k)),
    "stirling1": (("n", "k"), lambda a: exact.stirling1_signed(a.n, a.k)),
    "shape": (("sizes",), lambda a: exact.count_of_shape(_shape(a))),
    "nb-pi": (("sizes",), lambda a: exact.nb_pi(_shape(a))),
    "nb-pi-l": (("sizes", "l"), lambda a: exact.nb_pi_l(_shape(a), a.l)),
    "nd-pi": (("sizes",), lambda a: exact.nd_pi(_shape(a))),
    "nd-pi-l": (("sizes", "l"), lambda a: exact.nd_pi_l(_shape(a), a.l)),
    "na-pi": (("sizes",), lambda a: exact.na_pi(a.sizes)),
    "nbr-pairs": (("n",), lambda a: exact.n2b_exact(a.n)),
    "nbr-pairs-by": (("n", "k"), lambda a: exact.n2b_exact_by(a.i0, a.k, a.n)),
    "nd-pairs": (("n",), lambda a: exact.n2d_exact(a.n)),
    "nd-pairs-by": (("n", "k"), lambda a: exact.n2d_exact_by(a.k, a.n)),
    "ndr": (("n", "r"), lambda a: exact.nd_r_exact(a.n, a.r)),
    "nar": (("n", "r"), lambda a: exact.na_r_exact(a.n, a.r)),
}

SERIES = {
    "dobinski": (("n",), lambda a, kw: analytic.dobinski(a.n, **kw)),
    "benoumhani": (("n",), lambda a, kw: analytic.benoumhani_dowling(a.n, **kw)),
    "nn": (("n",), lambda a, kw: analytic.nn_series(a.n, **kw)),
    "nb-pi": (("sizes",), lambda a, kw: analytic.nb_pi_series(_shape(a), **kw)),
    "n2b": (("n",), lambda a, kw: analytic.n2b_series(a.n, **kw)),
    "n2b-by": (("n", "k"), lambda a, kw: analytic.n2b_series_by(a.i0, a.k, a.n, **kw)),
    "n2d": (("n",), lambda a, kw: analytic.n2d_series(a.n, **kw)),
    "n2d-by": (("n", "k"), lambda a, kw: analytic.n2d_series_by(a.k, a.n, **kw)),
    "nbr": (("n", "r"), lambda a, kw: analytic.nbr_series(a.n, a.r, **kw)),
    "ndr": (("n", "r"), lambda a, kw: analytic.ndr_series(a.n, a.r, **kw)),
    "pittel": (("n", "r"), lambda a, kw: analytic.pittel_nar_series(a.n, a.r, **kw)),
}


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("-n", type=int)
    p.add_argument("-r", type=int)
    p.add_argument("-k", type=int, help="number of block pairs")
    p.add_argument("-l", type=int, help="number of block pairs of the partner")
    p.add_argument("--i0", type=int, default=0, help="zero-block size (default 0)")
    p.add_argument("--sizes", type=_sizes, help="pair-block sizes, e.g. 1,2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blattice",
                                     description="Exact counting on the lattice of B_n-partitions.")
    parser.add_argument("--config", help="key=value settings file")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list partitions of a universe")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-u", "--universe", choices=sorted(UNIVERSE_FLAGS), default="B")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--format", choices=("table", "json"), default=None)
    p.add_argument("--max-n", type=int, help="override the enumeration bound")

    p = sub.add_parser("count", help="exact integer counts")
    p.add_argument("kind", choices=sorted(COUNTS))
    _add_params(p)

    p = sub.add_parser("series", help="rigorous series enclosures")
    p.add_argument("kind", choices=sorted(SERIES))
    _add_params(p)
    p.add_argument("--max-terms", type=int)
    p.add_argument("--width", type=Fraction, help="target interval width, e.g. 1/1000")

    p = sub.add_parser("verify", help="formula-versus-oracle grid")
    p.add_argument("--grid", choices=sorted(GRIDS), default="default")
    p.add_argument("--budget", type=int, help="oracle work budget (meets)")
    p.add_argument("--mutate", type=int, metavar="SEED",
                   help="perturb one formula value (smoke test for the grid)")

    sub.add_parser("identities", help="EGF and analytic identity checks")
    return parser


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload, sort_keys=True) if args.json else text)


def cmd_enumerate(args) -> int:
    universe = UNIVERSE_FLAGS[args.universe]
    parts = enumerate_universe(args.n, universe, max_n=args.max_n)
    fmt = args.format or ("json" if args.json else "table")
    if args.count_only:
        count = sum(1 for _ in parts)
        _emit(args, {"n": args.n, "universe": args.universe, "count": count}, str(count))
        return EXIT_OK
    parts = list(parts)
    if fmt == "json":
        for p in parts:
            print(serialize(p))
        return EXIT_OK
    rows = [(str(i), " ".join(map(str, p.zero)) or "-",
             " | ".join(" ".join(map(str, b)) for b in p.pairs) or "-")
            for i, p in enumerate(parts)]
    head = ("#", "zero", "pair reps")
    w = [max(len(r[c]) for r in rows + [head]) for c in range(3)]
    for r in [head] + rows:
        print(f"{r[0]:>{w[0]}}  {r[1]:<{w[1]}}  {r[2]}".rstrip())
    return EXIT_OK


def cmd_count(args) -> int:
    needs, fn = COUNTS[args.kind]
    _need(args, *needs)
    value = fn(args)
    params = {k: v for k, v in vars(args).items()
              if k in ("n", "r", "k", "l", "i0", "sizes") and v is not None}
    _emit(args, {"kind": args.kind, "params": params, "value": value}, str(value))
    return EXIT_OK


def cmd_series(args) -> int:
    needs, fn = SERIES[args.kind]
    _need(args, *needs)
    kw = {"max_terms": args.max_terms, "target_width": args.width}
    res = fn(args, {k: v for k, v in kw.items() if v is not None})
    rec = res.recovered_integer
    text = (f"[{float(res.value.lo):.12g}, {float(res.value.hi):.12g}]  "
            f"terms={res.terms_used}  {rec if res.resolved else 'UNRESOLVED'}")
    _emit(args, {"kind": args.kind, "lo": str(res.value.lo), "hi": str(res.value.hi),
                 "terms_used": res.terms_used, "recovered": rec}, text)
    return EXIT_OK if res.resolved else EXIT_FAIL


def _report(args, rows) -> int:
    failed = sum(not r.passed for r in rows)
    if args.json:
        print(json.dumps({"rows": [r.as_dict() for r in rows], "failed": failed},
                         sort_keys=True, default=str))
    else:
        w = max(len(r.name) for r in rows)
        for r in rows:
            status = "PASS" if r.passed else "FAIL"
            extra = "" if r.passed else f"  expected {r.expected}, got {r.got}"
            print(f"{status}  {r.name:<{w}}{extra}".rstrip())
        print(f"{len(rows) - failed}/{len(rows)} passed")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_verify(args) -> int:
    return _report(args, run_verification(args.grid, budget=args.budget, mutate=args.mutate))


def cmd_identities(args) -> int:
    return _report(args, identity_rows())


COMMANDS = {"enumerate": cmd_enumerate, "count": cmd_count, "series": cmd_series,
            "verify": cmd_verify, "identities": cmd_identities}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        set_settings(load_settings(args.config))
        return COMMANDS[args.command](args)
    except BoundExceeded as exc:
        print(f"blattice: bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except analytic.SeriesError as exc:
        print(f"blattice: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (_Usage, ValueError, OSError) as exc:
        print(f"blattice: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        set_settings(None)


if __name__ == "__main__":
    sys.exit(main())
