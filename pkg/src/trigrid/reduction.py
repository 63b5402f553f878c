"""Row reduction of labeled n-grids.

One reduction maps a labeled n-grid to an equivalent-resistance (n-1)-grid
in five steps: collect triangle labels, transform every upright triangle to
a star, discard the three corner legs (the tails), combine consecutive
boundary legs in series, and turn each interior three-leg star back into a
triangle.  The new grid's vertices are the old triangles' star centers.

Index bookkeeping for the produced (n-1)-grid, with legs written y12/y4/y8
by clock position of the source triangle's star:

    L'(r,d) = y8(r,d) + y12(r+1,d)                     if d == 1
            = wye(y4(r,d-1), y8(r,d), y12(r+1,d))      otherwise
    R'(r,d) = y4(r,d) + y12(r+1,d+1)                   if d == r
            = wye(y8(r,d+1), y12(r+1,d+1), y4(r,d))    otherwise
    B'(r,d) = y4(n,d) + y8(n,d+1)                      if r == n-1
            = wye(y12(r+2,d+1), y8(r+1,d+1), y4(r+1,d)) otherwise

The first wye argument is always the leg opposite the produced edge.  The
bottom-row series rule pairs the 4 and 8 o'clock legs of neighboring
bottom-row triangles.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .grid import TriGrid, check_symmetry, grid_to_doc, uniform_grid
from .scalars import DEFAULT_PRECISION_BITS, scalar_to_str
from .transforms import YTriple, delta_y, wye


@dataclass(frozen=True)
class YLayer:
    """Star legs of every upright triangle of one source grid."""

    n: int
    legs: dict  # (r, d) -> YTriple


@dataclass(frozen=True)
class TailRecord:
    """The three discarded corner legs from reducing an m-grid."""

    source_rows: int
    top: object
    bottom_left: object
    bottom_right: object

    def all(self):
        return (self.top, self.bottom_left, self.bottom_right)


@dataclass(frozen=True)
class ReductionTrace:
    """Grids and tails from reducing an n-grid all the way down.

    grids[i] is the (n-i)-grid; tails[i] was produced while reducing it.
    The final record comes from the 1-grid's star, whose three legs are all
    tails.
    """

    grids: tuple
    tails: tuple

    def top_tails(self):
        return [rec.top for rec in self.tails]

    def grid_of_size(self, m):
        g = self.grids[self.grids[0].n - m]
        assert g.n == m
        return g


def delta_y_layer(g):
    """Step B: transform every triangle of g to a star."""
    return YLayer(n=g.n, legs={(r, d): delta_y(L, R, B) for r, d, (L, R, B) in g.triangles()})


def tails_of(layer):
    """Step C: the three legs with a degree-1 endpoint, one per grid corner."""
    n = layer.n
    return TailRecord(
        source_rows=n,
        top=layer.legs[(1, 1)].y12,
        bottom_left=layer.legs[(n, 1)].y8,
        bottom_right=layer.legs[(n, n)].y4,
    )


def assemble_reduced(layer):
    """Steps D and E: build the (n-1)-grid from the remaining legs."""
    n = layer.n
    if n < 2:
        raise ValueError("a 1-grid has no reduced grid, only tails")
    legs = layer.legs
    labels = {}
    for r in range(1, n):
        for d in range(1, r + 1):
            if d == 1:
                L = legs[(r, d)].y8 + legs[(r + 1, d)].y12
            else:
                L = wye(legs[(r, d - 1)].y4, legs[(r, d)].y8, legs[(r + 1, d)].y12)
            if d == r:
                R = legs[(r, d)].y4 + legs[(r + 1, d + 1)].y12
            else:
                R = wye(legs[(r, d + 1)].y8, legs[(r + 1, d + 1)].y12, legs[(r, d)].y4)
            if r == n - 1:
                B = legs[(n, d)].y4 + legs[(n, d + 1)].y8
            else:
                B = wye(legs[(r + 2, d + 1)].y12, legs[(r + 1, d + 1)].y8, legs[(r + 1, d)].y4)
            labels[(r, d)] = (L, R, B)
    # mode and precision carry over from the source grid's scalars
    first = labels[(1, 1)][0]
    mode = "exact" if isinstance(first, Fraction) else "float"
    precision_bits = getattr(first, "precision_bits", None)
    return TriGrid(n=n - 1, mode=mode, precision_bits=precision_bits, labels=labels)


def row_reduce(g):
    """One full reduction: returns the (n-1)-grid and the discarded tails."""
    if g.n < 2:
        raise ValueError("row_reduce needs n >= 2; a 1-grid only yields tails")
    layer = delta_y_layer(g)
    return assemble_reduced(layer), tails_of(layer)


def reduce_steps(g, k):
    """Apply k reductions and return the resulting (n-k)-grid."""
    if not 0 <= k <= g.n - 1:
        raise ValueError(f"cannot apply {k} reductions to a {g.n}-grid")
    for _ in range(k):
        g, _tail = row_reduce(g)
    return g


def reduce_fully(g):
    """Reduce down to the 1-grid, recording every grid and every tail."""
    grids = [g]
    tails = []
    while g.n >= 2:
        g, tail = row_reduce(g)
        grids.append(g)
        tails.append(tail)
    tails.append(tails_of(delta_y_layer(g)))
    return ReductionTrace(grids=tuple(grids), tails=tuple(tails))


def iter_tails(g, snapshot_sizes=()):
    """Stream (tails list, requested grid snapshots) without keeping the trace.

    Returns (tails, snapshots) where snapshots maps m -> the m-grid.  Useful
    at sizes where holding all intermediate grids is wasteful.
    """
    snapshots = {}
    tails = []
    if g.n in snapshot_sizes:
        snapshots[g.n] = g
    while g.n >= 2:
        g, tail = row_reduce(g)
        tails.append(tail)
        if g.n in snapshot_sizes:
            snapshots[g.n] = g
    tails.append(tails_of(delta_y_layer(g)))
    return tails, snapshots


def tail_sequence(n, mode="exact", precision_bits=None):
    """Top tails [t(n,n), ..., t(n,1)] of the all-ones n-grid.

    The all-ones grid is symmetric, so the three tails of every record must
    agree; a spread beyond the mode's tolerance means the reduction itself is
    broken, and raises.
    """
    if precision_bits is None and mode == "float":
        precision_bits = DEFAULT_PRECISION_BITS
    g = uniform_grid(n, 1, mode=mode, precision_bits=precision_bits)
    tol = g.tolerance()
    tails, _ = iter_tails(g)
    for rec in tails:
        for other in (rec.bottom_left, rec.bottom_right):
            if abs(other / rec.top - 1) > tol:
                raise AssertionError(
                    f"tails of the symmetric {rec.source_rows}-grid disagree: {rec.all()}")
    return [rec.top for rec in tails]


def corner_resistance(g):
    """Effective resistance between two corner vertices of a symmetric grid.

    Equals twice the sum of top tails along a full reduction trace.  Refuses
    asymmetric grids, whose corner pairs differ; use the Laplacian solver in
    that case.
    """
    if not check_symmetry(g).isotropic:
        raise ValueError(
            "corner_resistance needs a symmetric grid; "
            "use laplacian.effective_resistance for arbitrary labels")
    tails, _ = iter_tails(g)
    total = tails[0].top
    for rec in tails[1:]:
        total = total + rec.top
    return 2 * total


def tails_to_csv(tails):
    """CSV of tail records, columns m, top, bottom_left, bottom_right."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["m", "top", "bottom_left", "bottom_right"])
    for rec in tails:
        writer.writerow([rec.source_rows, scalar_to_str(rec.top),
                         scalar_to_str(rec.bottom_left), scalar_to_str(rec.bottom_right)])
    return buf.getvalue()


def trace_to_docs(trace):
    """The trace's grids as a list of JSON-ready grid documents."""
    return [grid_to_doc(g) for g in trace.grids]
