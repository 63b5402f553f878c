"""Two independent routes to the same resistance.

The reduction pipeline computes corner-to-corner resistance as twice the
sum of discarded tails; the Laplacian solver never reduces anything and
solves the weighted graph system exactly.  They must agree to the last
digit of the rational number.
"""

from fractions import Fraction

from trigrid import (
    build_graph,
    corner_resistance,
    corner_vertices,
    effective_resistance,
    factor_grid,
    uniform_grid,
)


def main():
    print(f"{'grid':<12} {'reduction route':>24} {'laplacian route':>24}")
    for n in range(1, 8):
        for name, g in ((f"ones {n}", uniform_grid(n, 1)),
                        (f"factors {n}", factor_grid(n))):
            _apex, bl, br = corner_vertices(n)
            via_tails = corner_resistance(g)
            via_system = effective_resistance(build_graph(g), bl, br)
            assert via_tails == via_system
            print(f"{name:<12} {str(via_tails):>24} {str(via_system):>24}")

    print("\nresistance grows like the harmonic sum; the ratio drifts slowly:")
    for n in (2, 4, 8, 16):
        r = corner_resistance(uniform_grid(n, 1))
        h = sum(Fraction(1, i) for i in range(1, n + 1))
        print(f"  n={n:>2}: r={float(r):.6f}  H_n={float(h):.6f}  r/H={float(r / h):.4f}")


if __name__ == "__main__":
    main()
