"""Numeric evidence for the two limiting-behavior conjectures.

Reduces a large all-ones grid in 256-bit float mode and compares the last
few tails against (1/i) * 1/(2e), then compares edge ratios of the 10-grid
stage against the closed-form factors.  The default n=150 is the size the
acceptance fixtures pin to 10 digits and takes around 15 seconds; pass a
smaller n for a quick look.

Usage: python 02_limit_tables.py [n]
"""

import sys

from trigrid import conformance, e_const, uniform_grid
from trigrid.reduction import iter_tails


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 150
    c = 10
    print(f"reducing the all-ones {n}-grid at 256-bit precision ...")
    g = uniform_grid(n, 1, mode="float", precision_bits=256)
    tails, snapshots = iter_tails(g, snapshot_sizes=(c,))
    by_size = {t.source_rows: t.top for t in tails}

    half_inv_e = 1 / (2 * e_const(256))
    print(f"\ntail t(n,i) against (1/i) * 1/(2e) = (1/i) * {half_inv_e.value:.9f}")
    print(f"{'i':>3} {'actual':>14} {'conjectured':>14} {'|ratio-1|':>10}")
    for i in range(1, 11):
        actual = by_size[i]
        conjectured = half_inv_e / i
        err = abs(actual / conjectured - 1)
        print(f"{i:>3} {actual.value:>14.9f} {conjectured.value:>14.9f} {float(err):>10.1e}")

    print(f"\nedge ratios of the {c}-grid stage against the predicted factors")
    report = conformance(snapshots[c], c)
    rows = [("r21", 4, 1), ("r31", 1, 1), ("x", 2, 1), ("y", 4, 2)]
    for kind, r, d in rows:
        rec = report.lookup(kind, r, d)
        print(f"  {kind} at r={r}, d={d}: observed {rec.observed.value:.10f}  "
              f"predicted {rec.predicted}  error {float(rec.error):.1e}")
    print(f"\nworst conformance error across all {len(report.records)} ratios: "
          f"{float(report.worst_error):.1e}")


if __name__ == "__main__":
    main()
