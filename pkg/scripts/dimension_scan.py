#!/usr/bin/env python3
"""Scan partial-dimension trends across tree families.

Prints one CSV block per family: constant-valency trees (dimension of the
embedded subgroup tends to zero) and synthesized trees for a list of
targets (the quotients settle on the target).

Usage:
    python3 scripts/dimension_scan.py [--levels 20] [--targets 0.5,0.25]
            [--constants 5,7,9] [--precision 128]
"""

import argparse
import sys
from fractions import Fraction

import mpmath

from spinaldim import TreeSequence, dimension_report, synthesize


def emit_block(tag, seq, levels, precision, digits=12):
    report = dimension_report(seq, levels, precision)
    print(f"# family={tag} sequence_prefix={','.join(map(str, seq.valencies[:4]))}...")
    print("n,alpha_n,d_n,lower_n,upper_n")
    for row in report.rows:
        alpha = mpmath.mpf(row.alpha.numerator) / row.alpha.denominator
        print(
            f"{row.n},{mpmath.nstr(alpha, digits)},{mpmath.nstr(row.d, digits)},"
            f"{mpmath.nstr(row.envelope.lower, digits)},{mpmath.nstr(row.envelope.upper, digits)}"
        )
    print(f"# liminf_estimate={mpmath.nstr(report.liminf_estimate, digits)} "
          f"diverged={report.diverged}")
    print()


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--levels", type=int, default=20)
    parser.add_argument("--targets", default="0.5,0.25")
    parser.add_argument("--constants", default="5,7,9")
    parser.add_argument("--precision", type=int, default=128)
    args = parser.parse_args()

    sys.set_int_max_str_digits(2_000_000)
    for l in (int(x) for x in args.constants.split(",") if x):
        seq = TreeSequence((l,) * args.levels)
        emit_block(f"constant-{l}", seq, args.levels, args.precision)
    for text in (x for x in args.targets.split(",") if x):
        alpha = Fraction(text)
        levels = min(args.levels, 14)  # minimal-strategy entries double in size
        trace = synthesize(alpha, levels)
        emit_block(f"target-{text}", trace.sequence(), levels, args.precision)
    return 0


if __name__ == "__main__":
    sys.exit(main())
