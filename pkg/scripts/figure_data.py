#!/usr/bin/env python3
"""Emit the sign-landscape CSV for D_4, D_5, D_6 and print a summary.

The default grid ((0, 3/5], 120 steps) is too coarse to catch the D_5 dip,
whose window ends near x = 0.003418; pass --xmax 1/25 to resolve both
negativity windows.
"""

import argparse

from circuitdual.family import FIGURE_MS, figure_rows, sign_scan
from circuitdual.rational import decimal_str, format_rat, parse_rat


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--xmax", default="3/5")
    parser.add_argument("--steps", type=int, default=120)
    parser.add_argument("--out", default="figure_data.csv")
    parser.add_argument("--exact", action="store_true")
    args = parser.parse_args()

    xmax = parse_rat(args.xmax)
    rows = figure_rows(xmax, args.steps)
    render = format_rat if args.exact else decimal_str
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("x," + ",".join(f"D{m}" for m in FIGURE_MS) + "\n")
        for x, values in rows:
            fh.write(",".join([render(x)] + [render(v) for v in values]) + "\n")
    print(f"wrote {len(rows)} rows to {args.out}")

    for m in FIGURE_MS:
        report = sign_scan(m, xmax, args.steps)
        negatives = sum(1 for s in report.signs if s < 0)
        line = f"D_{m}: {negatives}/{args.steps} samples negative"
        if report.bracket is not None:
            lo, hi = report.bracket
            line += (f", first sign change inside "
                     f"[{format_rat(lo)}, {format_rat(hi)}]"
                     f" ~ [{decimal_str(lo, 6)}, {decimal_str(hi, 6)}]")
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
