"""Walk through two row reductions of the all-ones 3-grid, step by step.

Reproduces the textbook sequence: star legs of 1/3 everywhere, tails
discarded, boundary edges 2/3 with interior edges 1, and finally the
single triangle with all edges 4/7.
"""

from trigrid import corner_resistance, delta_y_layer, reduce_fully, uniform_grid


def show_grid(g, title):
    print(f"\n{title}")
    for r, d, (L, R, B) in g.triangles():
        print(f"  triangle ({r},{d}):  L={L}  R={R}  B={B}")


def main():
    g = uniform_grid(3, 1)
    show_grid(g, "3-grid, every edge 1 ohm")

    layer = delta_y_layer(g)
    print("\nstar legs of the top triangle (all triangles look the same here):")
    top = layer.legs[(1, 1)]
    print(f"  y12={top.y12}  y4={top.y4}  y8={top.y8}")

    trace = reduce_fully(g)
    show_grid(trace.grids[1], "after one reduction (boundary 2/3, interior 1)")
    show_grid(trace.grids[2], "after two reductions")

    print("\ntails discarded along the way (one per reduction, three equal copies each):")
    for rec in trace.tails:
        print(f"  from the {rec.source_rows}-grid: {rec.top}")

    r = corner_resistance(g)
    print(f"\ncorner-to-corner resistance = 2 * (sum of tails) = {r}")


if __name__ == "__main__":
    main()
