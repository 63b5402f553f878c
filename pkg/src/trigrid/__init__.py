"""Exact row reduction of triangular resistor grids.

The package computes equivalent-resistance reductions of labeled triangular
grids with exact rational or arbitrary-precision float arithmetic, evaluates
and checks the closed-form edge-factor laws those reductions obey, verifies
the supporting rational-function identities by exact polynomial arithmetic,
and cross-checks everything against an independent graph-Laplacian solver.
"""

from .factors import (
    ConformanceReport,
    conformance,
    factor_f,
    factor_g,
    factor_r21,
    factor_r31,
    factor_x,
    factor_y,
    factor_z,
    verify_main_theorem,
)
from .grid import (
    SymmetryReport,
    TriGrid,
    check_symmetry,
    complete_by_symmetry,
    d_rim_corners,
    factor_grid,
    get_edge,
    grid_from_json,
    grid_to_json,
    proportionality,
    scale_grid,
    uniform_grid,
    upper_half_coords,
)
from .identities import (
    identity_catalog,
    panel_corner,
    panel_interior,
    panel_left_boundary,
    symbolic_builtins,
    verify_identities,
    verify_identity,
)
from .laplacian import (
    ResistorGraph,
    build_graph,
    corner_resistance_oracle,
    corner_vertices,
    effective_resistance,
)
from .polynomials import MPoly, RatFn
from .reduction import (
    ReductionTrace,
    TailRecord,
    YLayer,
    assemble_reduced,
    corner_resistance,
    delta_y_layer,
    reduce_fully,
    reduce_steps,
    row_reduce,
    tail_sequence,
    tails_of,
)
from .scalars import BigFloat, Rational, e_const, scalar_arith, to_float
from .transforms import YTriple, delta, delta_y, parallel, series, wye, y_delta

__version__ = "0.1.0"
