"""Closed-form edge-factor functions and conformance checking.

The four primary factors describe ratios between neighboring edge labels of
a c-grid: r21 and r31 relate the right and base edge of a triangle to its
left edge, x walks down the left boundary, y walks right within a row.  The
derived bookkeeping functions are z (ratio of y-products between adjacent
rows), f (cumulative scaling constant across repeated reductions), and g
(the single-step scaling constant).

All functions evaluate exactly, as Fractions.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .scalars import scalar_to_str, to_float


def factor_r21(c, r, d):
    """Right/left edge ratio: (2(r-d)+1)/(2d-1).  Ignores c; the argument is
    kept so all factor signatures line up."""
    if not 1 <= d <= r <= c:
        raise ValueError(f"need 1 <= d <= r <= c, got (c,r,d)=({c},{r},{d})")
    return Fraction(2 * (r - d) + 1, 2 * d - 1)


def factor_r31(c, r, d):
    """Base/left edge ratio: (2(c-r)+1)/(2d-1)."""
    if not 1 <= d <= r <= c:
        raise ValueError(f"need 1 <= d <= r <= c, got (c,r,d)=({c},{r},{d})")
    return Fraction(2 * (c - r) + 1, 2 * d - 1)


def factor_x(c, r):
    """Left-boundary step ⟨r,1,1⟩/⟨r-1,1,1⟩."""
    if not 2 <= r <= c:
        raise ValueError(f"need 2 <= r <= c, got (c,r)=({c},{r})")
    return Fraction(r - 1, 2 * r - 1) * Fraction(2 * (c - r) + 3, (c - r) + 1)


def factor_y(r, d):
    """Within-row step ⟨r,d,1⟩/⟨r,d-1,1⟩."""
    if not 2 <= d <= r:
        raise ValueError(f"need 2 <= d <= r, got (r,d)=({r},{d})")
    return Fraction(d - 1, 2 * d - 3) * Fraction(2 * (r - d) + 3, (r - d) + 1)


def factor_z(r, d):
    """Row-to-row ratio of y-products; closed form 1 - ((d-1)/r)/(2(r-d)+3)."""
    if not 1 <= d <= r:
        raise ValueError(f"need 1 <= d <= r, got (r,d)=({r},{d})")
    return 1 - Fraction(d - 1, r) * Fraction(1, 2 * (r - d) + 3)


def factor_f(c, i):
    """Cumulative scaling after i reductions of a c-grid: 1 + (i/(c-i))/(2c+1)."""
    if not 1 <= i <= c - 1:
        raise ValueError(f"need 1 <= i <= c-1, got (c,i)=({c},{i})")
    return 1 + Fraction(i, c - i) * Fraction(1, 2 * c + 1)


def factor_g(c):
    """Single-reduction scaling constant: (c/(c-1)) * ((2c-1)/(2c+1))."""
    if c < 2:
        raise ValueError(f"need c >= 2, got {c}")
    return Fraction(c, c - 1) * Fraction(2 * c - 1, 2 * c + 1)


@dataclass(frozen=True)
class ConformanceRecord:
    r: int
    d: int
    kind: str  # "r21" | "r31" | "x" | "y"
    observed: object
    predicted: Fraction
    error: object  # observed/predicted - 1


@dataclass(frozen=True)
class ConformanceReport:
    c: int
    records: tuple
    worst_error: object
    exact: bool

    def by_kind(self, kind):
        return [rec for rec in self.records if rec.kind == kind]

    def lookup(self, kind, r, d):
        for rec in self.records:
            if (rec.kind, rec.r, rec.d) == (kind, r, d):
                return rec
        raise KeyError(f"no {kind} record at ({r},{d})")


def conformance(g, c_label):
    """Compare every legal edge ratio of g against the predicted factors.

    c_label is the grid size the factors are evaluated at (g.n); errors are
    reported as observed/predicted - 1.
    """
    if g.n != c_label:
        raise ValueError(f"grid has {g.n} rows but c_label={c_label}")
    if g.mode == "exact":
        conv = lambda f: f
    else:
        conv = lambda f: to_float(f, g.precision_bits)

    records = []

    def add(r, d, kind, observed, predicted):
        error = observed / conv(predicted) - 1
        records.append(ConformanceRecord(r, d, kind, observed, predicted, error))

    for r in range(1, g.n + 1):
        for d in range(1, r + 1):
            L, R, B = g.triangle(r, d)
            add(r, d, "r21", R / L, factor_r21(c_label, r, d))
            add(r, d, "r31", B / L, factor_r31(c_label, r, d))
            if d == 1 and r >= 2:
                add(r, d, "x", L / g.get(r - 1, 1, 1), factor_x(c_label, r))
            if d >= 2:
                add(r, d, "y", L / g.get(r, d - 1, 1), factor_y(r, d))

    worst = max((abs(rec.error) for rec in records), default=conv(Fraction(0)))
    exact = all(rec.error == 0 for rec in records)
    return ConformanceReport(c=c_label, records=tuple(records), worst_error=worst, exact=exact)


def conformance_to_csv(report):
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["r", "d", "kind", "observed", "predicted", "error"])
    for rec in report.records:
        writer.writerow([
            rec.r, rec.d, rec.kind,
            scalar_to_str(rec.observed),
            scalar_to_str(rec.predicted),
            scalar_to_str(rec.error),
        ])
    return buf.getvalue()


@dataclass(frozen=True)
class TheoremClause:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class TheoremReport:
    c: int
    clauses: tuple

    @property
    def passed(self):
        return all(cl.passed for cl in self.clauses)

    def failing(self):
        return [cl for cl in self.clauses if not cl.passed]


def verify_main_theorem(c):
    """Exactly check every clause of the reduction theorem on a concrete c-grid.

    Runs in exact mode only: a float run would turn a theorem check into a
    tolerance check.  Clauses, each verified independently:

      tail-value:     t(c,1) = c/(2c+1)
      tail-harmonic:  t(c,i) = t(c,1)/i for 1 <= i <= c
      scaled-grid:    reduce^i(factor_grid(c)) = f(c,i) * factor_grid(c-i)
      conformance:    every reduced grid satisfies the factors exactly
      tail-formula:   t(c,c-i) = f(c,i) * delta(1, 1, r31(c-i,1,1))
    """
    # local imports: grid and reduction already depend on the closed forms above
    from .grid import factor_grid, proportionality
    from .reduction import reduce_fully
    from .transforms import delta

    if c < 2:
        raise ValueError(f"need c >= 2, got {c}")

    trace = reduce_fully(factor_grid(c))
    tails = {rec.source_rows: rec.top for rec in trace.tails}
    clauses = []

    t1 = tails[1]
    clauses.append(TheoremClause(
        "tail-value", t1 == Fraction(c, 2 * c + 1),
        f"t({c},1) = {t1}, expected {Fraction(c, 2 * c + 1)}"))

    bad = [i for i in range(1, c + 1) if tails[i] != t1 / i]
    clauses.append(TheoremClause(
        "tail-harmonic", not bad,
        "all tails harmonic" if not bad else f"t({c},i) != t({c},1)/i for i in {bad}"))

    bad = []
    for i in range(1, c):
        k = proportionality(trace.grids[i], factor_grid(c - i))
        if k != factor_f(c, i):
            bad.append((i, k))
    clauses.append(TheoremClause(
        "scaled-grid", not bad,
        "all reduced grids are f(c,i)-scaled factor grids" if not bad
        else f"proportionality mismatches at i={bad}"))

    bad = []
    for i, g in enumerate(trace.grids):
        report = conformance(g, c - i)
        if not report.exact:
            bad.append(c - i)
    clauses.append(TheoremClause(
        "conformance", not bad,
        "all reduced grids conform exactly" if not bad
        else f"conformance not exact for sizes {bad}"))

    bad = []
    for i in range(0, c):
        expected = (factor_f(c, i) if i >= 1 else Fraction(1)) * delta(
            Fraction(1), Fraction(1), factor_r31(c - i, 1, 1))
        if tails[c - i] != expected:
            bad.append(c - i)
    clauses.append(TheoremClause(
        "tail-formula", not bad,
        "all tails match the closed form" if not bad
        else f"tail formula fails at sizes {bad}"))

    return TheoremReport(c=c, clauses=tuple(clauses))
