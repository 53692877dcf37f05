#!/usr/bin/env python3
"""Sweep the family parameter and report where subnormality of the dual fails.

For each x the dual moment prefix is tested to increasing depth until a
Hausdorff violation appears (or the horizon is exhausted), printing the
first witness.  The witness order climbs as x leaves the D_5 negativity
window: m = 5 below roughly 0.0034, then 6, 7, 9, ...
"""

import argparse
from fractions import Fraction

from circuitdual.family import FamilyParam, omega_eval
from circuitdual.moments import MomentSeq, hausdorff_test
from circuitdual.rational import decimal_str, format_rat, parse_rat


def first_witness(x: Fraction, horizon: int):
    values = MomentSeq.exact(
        [omega_eval(n, FamilyParam(x)) for n in range(horizon + 1)]
    )
    verdict = hausdorff_test(values, horizon)
    return verdict.witness if not verdict.passed else None


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--xs",
        default="1/2000,1/1000,1/500,1/300,1/100,1/50,1/20,1/10,1/5,1/2",
        help="comma-separated list of rational parameters",
    )
    parser.add_argument("--horizon", type=int, default=24)
    args = parser.parse_args()

    print(f"{'x':>10}  {'~x':>10}  first Hausdorff witness (horizon {args.horizon})")
    for token in args.xs.split(","):
        x = parse_rat(token)
        witness = first_witness(x, args.horizon)
        found = f"m={witness[0]} j={witness[1]}" if witness else "none found"
        print(f"{format_rat(x):>10}  {decimal_str(x, 4):>10}  {found}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
