"""Command-line interface.

Subcommands: reduce, tails, table1, table2, verify, resistance, isotropy,
oracle.  Exact mode is the default for small grids; the two table commands
default to float mode because they target sizes where exact rationals grow
without bound.  Exit code 0 means every requested check passed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import factors, identities, laplacian, reduction
from .grid import check_symmetry, factor_grid, grid_from_json, grid_to_json, uniform_grid
from .scalars import DEFAULT_PRECISION_BITS, e_const, scalar_to_str, to_float

DEFAULT_EXACT_CEILING = 40

# the illustrative rows of the large-grid ratio table: (kind, r, d)
TABLE2_ROWS = [
    ("r21", 4, 1), ("r21", 4, 2), ("r21", 6, 4),
    ("r31", 1, 1), ("r31", 5, 3), ("r31", 6, 4),
    ("x", 2, 1), ("x", 3, 1), ("x", 4, 1),
    ("y", 4, 2), ("y", 4, 3), ("y", 5, 4),
]


def _fmt(value, digits=10):
    if isinstance(value, Fraction):
        return scalar_to_str(value)
    return format(value.value, f".{digits}g")


def _build_grid(args):
    size = _grid_size(args)
    _check_exact_ceiling(args, size)
    if args.labels == "factors":
        return factor_grid(size, mode=args.mode, precision_bits=args.prec)
    return uniform_grid(size, 1, mode=args.mode, precision_bits=args.prec)


def _grid_size(args):
    size = args.c if args.labels == "factors" else args.n
    if size is None:
        which = "--c" if args.labels == "factors" else "--n"
        raise SystemExit(f"error: {which} is required for --labels {args.labels}")
    if size < 1:
        raise SystemExit(f"error: grid size must be >= 1, got {size}")
    return size


def _write(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def cmd_reduce(args):
    g = _build_grid(args)
    if not 0 <= args.steps <= g.n - 1:
        raise SystemExit(f"error: cannot apply {args.steps} reductions to a {g.n}-grid")
    g = reduction.reduce_steps(g, args.steps)
    _write(args, grid_to_json(g, indent=2))
    return 0


def cmd_tails(args):
    g = _build_grid(args)
    tails, _ = reduction.iter_tails(g)
    if args.format == "json":
        doc = [{"m": t.source_rows, "top": scalar_to_str(t.top),
                "bottom_left": scalar_to_str(t.bottom_left),
                "bottom_right": scalar_to_str(t.bottom_right)} for t in tails]
        _write(args, json.dumps(doc, indent=2))
    else:
        _write(args, reduction.tails_to_csv(tails))
    return 0


def _table1_rows(n, rows, mode, prec):
    g = uniform_grid(n, 1, mode=mode, precision_bits=prec)
    tails, _ = reduction.iter_tails(g)
    by_size = {t.source_rows: t.top for t in tails}
    display_prec = prec if mode == "float" else DEFAULT_PRECISION_BITS
    half_inv_e = 1 / (2 * e_const(display_prec))
    out = []
    for i in range(1, rows + 1):
        actual = by_size[i]
        conjectured = half_inv_e / i
        as_float = actual if mode == "float" else to_float(actual, display_prec)
        # the error column reports the magnitude of the relative gap
        error = abs(as_float / conjectured - 1)
        out.append((i, actual, conjectured, error))
    return out


def _check_exact_ceiling(args, size):
    if args.mode == "exact" and size > args.exact_ceiling:
        raise SystemExit(
            f"error: exact mode is limited to n <= {args.exact_ceiling} "
            f"(rationals grow without bound); pass --mode float or raise --exact-ceiling")


def cmd_table1(args):
    if args.rows > args.n:
        raise SystemExit("error: --rows cannot exceed --n")
    _check_exact_ceiling(args, args.n)
    rows = _table1_rows(args.n, args.rows, args.mode, args.prec)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["i", "actual", "conjectured", "error"])
    for i, actual, conjectured, error in rows:
        writer.writerow([i, _fmt(actual), _fmt(conjectured), _fmt(error, 3)])
    _write(args, buf.getvalue())
    return 0


def _table2_rows(grid, c):
    report = factors.conformance(grid, c)
    rows = []
    for kind, r, d in TABLE2_ROWS:
        rec = report.lookup(kind, r, d)
        if kind == "r21":
            label = f"<{r},{d},2>/<{r},{d},1>"
        elif kind == "r31":
            label = f"<{r},{d},3>/<{r},{d},1>"
        elif kind == "x":
            label = f"<{r},1,1>/<{r-1},1,1>"
        else:
            label = f"<{r},{d},1>/<{r},{d-1},1>"
        predicted = rec.predicted
        # error column signed as predicted/observed - 1
        error = predicted / rec.observed - 1 if isinstance(rec.observed, Fraction) \
            else to_float(predicted, grid.precision_bits) / rec.observed - 1
        rows.append((label, rec.observed, kind, (r, d), predicted, error))
    return rows, report


def cmd_table2(args):
    if args.c >= args.n:
        raise SystemExit("error: --c must be smaller than --n")
    _check_exact_ceiling(args, args.n)
    g = uniform_grid(args.n, 1, mode=args.mode, precision_bits=args.prec)
    _tails, snapshots = reduction.iter_tails(g, snapshot_sizes=(args.c,))
    target = snapshots[args.c]
    rows, report = _table2_rows(target, args.c)
    if args.format == "json":
        doc = {
            "rows": [{"ratio": label, "actual": _fmt(obs), "kind": kind,
                      "r": rd[0], "d": rd[1],
                      "predicted": scalar_to_str(pred), "error": _fmt(err, 3)}
                     for label, obs, kind, rd, pred, err in rows],
            "conformance": [
                {"r": rec.r, "d": rec.d, "kind": rec.kind,
                 "observed": _fmt(rec.observed), "predicted": scalar_to_str(rec.predicted),
                 "error": _fmt(rec.error, 3)}
                for rec in report.records
            ],
        }
        _write(args, json.dumps(doc, indent=2))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["ratio", "actual", "kind", "r", "d", "predicted", "error"])
        for label, obs, kind, (r, d), pred, err in rows:
            writer.writerow([label, _fmt(obs), kind, r, d, scalar_to_str(pred), _fmt(err, 3)])
        buf.write(factors.conformance_to_csv(report))
        _write(args, buf.getvalue())
    return 0


def cmd_verify(args):
    if not (args.theorem or args.identities or args.oracle):
        raise SystemExit("error: nothing to verify; pass --theorem, --identities, or --oracle")
    checks = []

    if args.theorem:
        for c in range(args.cmin, args.cmax + 1):
            report = factors.verify_main_theorem(c)
            detail = "all clauses hold" if report.passed else "; ".join(
                f"{cl.name}: {cl.detail}" for cl in report.failing())
            checks.append((f"theorem c={c}", report.passed, detail))

    if args.identities:
        names = args.names.split(",") if args.names else None
        for result in identities.verify_identities(names):
            detail = (f"{result.description} | vars={len(result.variables)} "
                      f"degree={result.total_degree} exact={result.exact_pass} "
                      f"sampled={result.sampled_pass} ({result.points_checked} pts) "
                      f"{result.seconds:.2f}s")
            if result.error:
                detail += f" | {result.error}"
            checks.append((f"identity {result.name}", result.passed, detail))

    if args.oracle:
        for n in range(1, args.nmax + 1):
            for label, grid in (("ones", uniform_grid(n, 1)), ("factors", factor_grid(n))):
                via_tails = reduction.corner_resistance(grid)
                via_laplacian = laplacian.corner_resistance_oracle(grid)
                ok = via_tails == via_laplacian
                checks.append((
                    f"oracle {label} n={n}", ok,
                    f"reduction {via_tails} vs laplacian {via_laplacian}"))

    passed = all(ok for _, ok, _ in checks)
    if args.format == "json":
        doc = {"passed": passed,
               "checks": [{"name": n, "passed": ok, "detail": d} for n, ok, d in checks]}
        _write(args, json.dumps(doc, indent=2))
    else:
        lines = [f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}"
                 for name, ok, detail in checks]
        lines.append(f"{'all checks passed' if passed else 'FAILURES PRESENT'}")
        _write(args, "\n".join(lines) + "\n")
    return 0 if passed else 1


def cmd_resistance(args):
    g = _build_grid(args)
    if args.oracle:
        if g.mode != "exact":
            raise SystemExit("error: the Laplacian route needs --mode exact")
        value = laplacian.corner_resistance_oracle(g)
    else:
        if not check_symmetry(g).isotropic:
            raise SystemExit(
                "error: grid is not symmetric; rerun with --oracle for the Laplacian route")
        value = reduction.corner_resistance(g)
    lines = [f"corner resistance: {_fmt(value)}"]
    if args.harmonic:
        n = g.n
        harmonic = sum(Fraction(1, i) for i in range(1, n + 1))
        if isinstance(value, Fraction):
            ratio = float(value / harmonic)
        else:
            ratio = float(value / to_float(harmonic, g.precision_bits))
        lines.append(f"EXPLORATORY harmonic-sum ratio r_n / H_n = {ratio:.6f}")
    _write(args, "\n".join(lines) + "\n")
    return 0


def cmd_isotropy(args):
    if args.input:
        with open(args.input) as fh:
            g = grid_from_json(fh.read())
    else:
        g = _build_grid(args)
    report = check_symmetry(g)
    doc = {"n": g.n, "vertical": report.vertical, "rotational": report.rotational,
           "slide": report.slide, "isotropic": report.isotropic,
           "max_violation": scalar_to_str(report.max_violation)}
    if args.format == "json":
        _write(args, json.dumps(doc, indent=2))
    else:
        _write(args, "\n".join(f"{k}: {v}" for k, v in doc.items()) + "\n")
    return 0 if report.isotropic else 1


def cmd_oracle(args):
    g = _build_grid(args)
    if g.mode != "exact":
        raise SystemExit("error: the Laplacian oracle runs in exact mode only")
    graph = laplacian.build_graph(g)
    apex, bl, br = laplacian.corner_vertices(g.n)
    pairs = {"bl-br": (bl, br), "apex-bl": (apex, bl), "apex-br": (apex, br)}
    u, v = pairs[args.pair]
    value = laplacian.effective_resistance(graph, u, v)
    _write(args, f"effective resistance {args.pair}: {scalar_to_str(value)}\n")
    return 0


def _add_common(parser, default_mode="exact"):
    parser.add_argument("--mode", choices=["exact", "float"], default=default_mode)
    parser.add_argument("--prec", type=int, default=DEFAULT_PRECISION_BITS,
                        help="precision in bits for float mode")
    parser.add_argument("--out", help="write output to this path instead of stdout")
    parser.add_argument("--format", choices=["csv", "json"], default="csv")
    parser.add_argument("--exact-ceiling", type=int, default=DEFAULT_EXACT_CEILING,
                        help="largest grid size allowed in exact mode")


def _add_grid_selection(parser):
    parser.add_argument("--labels", choices=["uniform1", "factors"], default="uniform1",
                        help="all-ones grid or the edge-factor grid")
    parser.add_argument("--n", type=int, help="grid size for --labels uniform1")
    parser.add_argument("--c", type=int, help="grid size for --labels factors")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="trigrid",
        description="Exact row reduction of triangular resistor grids, "
                    "edge-factor verification, and effective-resistance cross-checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="row-reduce a grid and write it as JSON")
    _add_common(p)
    _add_grid_selection(p)
    p.add_argument("--steps", type=int, default=1)
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("tails", help="tail labels from a full reduction")
    _add_common(p)
    _add_grid_selection(p)
    p.set_defaults(fn=cmd_tails)

    p = sub.add_parser("table1", help="tail values of a large grid vs 1/(2e i)")
    _add_common(p, default_mode="float")
    p.add_argument("--n", type=int, default=150)
    p.add_argument("--rows", type=int, default=10)
    p.set_defaults(fn=cmd_table1)

    p = sub.add_parser("table2", help="edge ratios of a reduced large grid vs the factors")
    _add_common(p, default_mode="float")
    p.add_argument("--n", type=int, default=150)
    p.add_argument("--c", type=int, default=10)
    p.set_defaults(fn=cmd_table2)

    p = sub.add_parser("verify", help="run exact theorem, identity, and oracle checks")
    _add_common(p)
    p.add_argument("--theorem", action="store_true")
    p.add_argument("--cmin", type=int, default=2)
    p.add_argument("--cmax", type=int, default=12)
    p.add_argument("--identities", action="store_true")
    p.add_argument("--names", help="comma-separated identity names (default: all)")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--nmax", type=int, default=8)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("resistance", help="corner-to-corner resistance")
    _add_common(p)
    _add_grid_selection(p)
    p.add_argument("--harmonic", action="store_true",
                   help="also print the exploratory harmonic-sum ratio")
    p.add_argument("--oracle", action="store_true",
                   help="use the Laplacian solver (works for asymmetric grids)")
    p.set_defaults(fn=cmd_resistance)

    p = sub.add_parser("isotropy", help="check vertical, rotational, and slide symmetry")
    _add_common(p)
    _add_grid_selection(p)
    p.add_argument("--input", help="check a serialized grid JSON file instead")
    p.set_defaults(fn=cmd_isotropy)

    p = sub.add_parser("oracle", help="effective resistance from the exact Laplacian")
    _add_common(p)
    _add_grid_selection(p)
    p.add_argument("--pair", choices=["bl-br", "apex-bl", "apex-br"], default="bl-br")
    p.set_defaults(fn=cmd_oracle)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
