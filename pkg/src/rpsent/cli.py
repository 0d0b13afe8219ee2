"""Command-line interface: ``rpsent entropy|maxent|tables|validate|bench``."""

from __future__ import annotations

import argparse
import json
import sys

from . import belief, reporting
from .belief import ENUMERATION_CAP, BPA, validate_bpa, validate_pmf
from .entropies import (deng_entropy, max_deng_bpa, max_rps_pmf,
                        max_rps_per_length, rps_entropy, shannon_entropy)
from .errors import DocumentError


def cmd_entropy(args) -> int:
    try:
        dist = belief.load(args.file)
    except (OSError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = validate_bpa(dist) if isinstance(dist, BPA) else validate_pmf(dist)
    if not report.ok:
        print(f"invalid {dist.kind} in {args.file}:\n{report}", file=sys.stderr)
        return 1
    kind = "deng" if isinstance(dist, BPA) else "rps"
    value = deng_entropy(dist) if kind == "deng" else rps_entropy(dist)
    print(f"{kind} entropy: {value:.5f} bits")
    record = {"kind": kind, "n": dist.frame.n, "entropy_bits": value}
    if dist.is_singleton_only():
        shannon = shannon_entropy(m for e, m in dist.masses.items() if e)
        print(f"shannon entropy: {shannon:.5f} bits")
        record["shannon_bits"] = shannon
    print(json.dumps(record))
    return 0


def _symbolic_rps(n: int) -> dict:
    return {"frame_size": n, "kind": "pmf", "symbolic": True,
            "per_length": [{"length": i, "events": str(count),
                            "mass": f"{m.numerator}/{m.denominator}"}
                           for i, count, m in max_rps_per_length(n)]}


def _symbolic_deng(n: int) -> dict:
    from math import comb
    denom = 3 ** n - 2 ** n
    return {"frame_size": n, "kind": "bpa", "symbolic": True,
            "per_size": [{"size": i, "events": str(comb(n, i)),
                          "mass": f"{2 ** i - 1}/{denom}"} for i in range(1, n + 1)]}


def cmd_maxent(args) -> int:
    if args.n < 1:
        print("error: n must be at least 1", file=sys.stderr)
        return 2
    if args.n <= args.cap:
        dist = max_deng_bpa(args.n, args.cap) if args.kind == "deng" else max_rps_pmf(args.n, args.cap)
        text = belief.dumps(dist)
    else:
        doc = _symbolic_deng(args.n) if args.kind == "deng" else _symbolic_rps(args.n)
        text = json.dumps(doc, indent=2)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_tables(args) -> int:
    start, stop, step = reporting.DEFAULT_RANGES[args.which]
    start = args.start if args.start is not None else start
    stop = args.stop if args.stop is not None else stop
    step = args.step if args.step is not None else step
    sys.stdout.write(reporting.table_csv(args.which, range(start, stop + 1, step)))
    return 0


def cmd_validate(args) -> int:
    report = reporting.run_validation(args.n_max, oracle_cap=args.oracle_cap,
                                      trials=args.trials, seed=args.seed)
    print(json.dumps(report, indent=2))
    return 0 if report["ok"] else 1


def cmd_bench(args) -> int:
    ns = range(args.start, args.stop + 1, args.step)
    sys.stdout.write(reporting.bench_csv(ns, timing=not args.no_timing))
    if args.start >= 1:
        env_ratio, lim_ratio = reporting.scaling_ratios(args.start)
        print(f"doubling N from {args.start}: envelope x{env_ratio:.2f}, "
              f"limit x{lim_ratio:.2f}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rpsent", description="Entropy envelopes of random permutation sets")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy", help="entropy of a BPA (Deng) or PMF (RPS) file")
    p.add_argument("file")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("maxent", help="emit the maximum-entropy distribution")
    p.add_argument("kind", choices=["deng", "rps"])
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output")
    p.add_argument("--cap", type=int, default=ENUMERATION_CAP,
                   help="largest frame emitted event by event (default %(default)s)")
    p.set_defaults(func=cmd_maxent)

    p = sub.add_parser("tables", help="reproduce table 1, 2 or 3 as CSV")
    p.add_argument("which", type=int, choices=[1, 2, 3])
    p.add_argument("--from", dest="start", type=int)
    p.add_argument("--to", dest="stop", type=int)
    p.add_argument("--step", type=int)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("validate", help="run the lemma and oracle checks")
    p.add_argument("--n-max", type=int, default=50)
    p.add_argument("--oracle-cap", type=int, default=6)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("bench", help="multiplication counts, exact vs limit envelope")
    p.add_argument("--from", dest="start", type=int, default=10)
    p.add_argument("--to", dest="stop", type=int, default=100)
    p.add_argument("--step", type=int, default=10)
    p.add_argument("--no-timing", action="store_true",
                   help="omit wall-clock columns for byte-stable output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
