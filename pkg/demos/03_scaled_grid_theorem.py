"""Factor grids are fixed points of row reduction, up to a known constant.

Builds the 3-grid from the edge factors, reduces it, and shows the result
is exactly (15/14) times the 2-grid built the same way; then runs the full
exact theorem checker over a range of sizes.
"""

from trigrid import factor_grid, proportionality, reduce_fully, verify_main_theorem
from trigrid.factors import factor_f, factor_g


def main():
    g3 = factor_grid(3)
    print("factor-built 3-grid:")
    for r, d, (L, R, B) in g3.triangles():
        print(f"  ({r},{d}):  L={L}  R={R}  B={B}")

    trace = reduce_fully(g3)
    k = proportionality(trace.grids[1], factor_grid(2))
    print(f"\nreduce once: proportional to the factor-built 2-grid with k = {k}")
    print(f"theory says k = g(3) = f(3,1) = {factor_g(3)} = {factor_f(3, 1)}")

    print(f"\ntails: {[str(t.top) for t in trace.tails]}")
    print("note t(3,2)/t(3,1) = 1/2 and t(3,3)/t(3,1) = 1/3, and t(3,1) = 3/7 = c/(2c+1)")

    print("\nexact theorem verification:")
    for c in range(2, 13):
        report = verify_main_theorem(c)
        status = "pass" if report.passed else "FAIL"
        print(f"  c={c:>2}: {status}  ({', '.join(cl.name for cl in report.clauses)})")


if __name__ == "__main__":
    main()
