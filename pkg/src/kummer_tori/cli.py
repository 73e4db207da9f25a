"""Command-line entry point: ``kummer-tori --suite theta --n 2 --format json``."""
import argparse
import sys

from .report import emit_report
from .suites import DEFAULT_SEED, SUITES, run_suite


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _e_range(text):
    """'1..10', '3' or '1,4,7'."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            vals = list(range(int(lo), int(hi) + 1))
        else:
            vals = _int_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad e-range {text!r}")
    if not vals or min(vals) < 1:
        raise argparse.ArgumentTypeError("e values must be positive")
    return vals


def build_parser():
    p = argparse.ArgumentParser(prog="kummer-tori",
                                description="Exact verification suites for generalized Kummer "
                                            "varieties and their intermediate Jacobians.")
    p.add_argument("--suite", default="all", choices=list(SUITES) + ["all"])
    p.add_argument("--n", type=_int_list, help="comma-separated dimensions, e.g. 2,3")
    p.add_argument("--e-range", type=_e_range, default=None, help="e values, e.g. 1..10")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--count", type=int, help="sample size for randomized suites")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--cases", help="glob on case ids, e.g. 'n2-*'")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--timing", action="store_true",
                   help="include wall time (makes output non-reproducible)")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    options = {"n": args.n, "seed": args.seed, "count": args.count, "cases": args.cases}
    if args.e_range is not None:
        options["e_range"] = args.e_range
    try:
        rep = run_suite(args.suite, options)
    except ValueError as exc:
        print(f"kummer-tori: {exc}", file=sys.stderr)
        return 2
    text = emit_report(rep, args.format, args.timing)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"kummer-tori: cannot write report to {args.out}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
