"""Machine-checked catalog of the rational-function identities behind the
edge-factor theory.

Every identity is written once, as a builder over an arithmetic environment,
and checked twice:

  * exactly, by building it over :class:`RatFn` generators and reducing the
    statement to the zero rational function via polynomial cross
    multiplication (a proof over the polynomial ring);
  * numerically, by rebuilding it over Fractions at random integer points
    (an independent route that would catch a bug in the polynomial engine).

Identities whose inductions split on parity (the vertical and slide
symmetry arguments) are reparameterized with integer-valued
variables, e.g. r = 2m, so the statement stays inside the polynomial ring;
the opposite parity classes are included as derived entries.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .polynomials import RatFn

_SAMPLE_POINTS = 10
_SAMPLE_RANGE = (20, 200)
_SAMPLE_SEED = 0x5EED


class _FactorFormulas:
    """The closed-form factor functions over an arbitrary exact arithmetic."""

    def _c(self, v):
        return self.const(v) if isinstance(v, int) else v

    def x(self, c, r):
        c, r = self._c(c), self._c(r)
        return (r - 1) / (2 * r - 1) * (2 * (c - r) + 3) / ((c - r) + 1)

    def y(self, r, d):
        r, d = self._c(r), self._c(d)
        return (d - 1) / (2 * d - 3) * (2 * (r - d) + 3) / ((r - d) + 1)

    def z(self, r, d):
        r, d = self._c(r), self._c(d)
        return 1 - (d - 1) / r * (self.const(1) / (2 * (r - d) + 3))

    def r21(self, c, r, d):
        r, d = self._c(r), self._c(d)
        return (2 * (r - d) + 1) / (2 * d - 1)

    def r31(self, c, r, d):
        c, r, d = self._c(c), self._c(r), self._c(d)
        return (2 * (c - r) + 1) / (2 * d - 1)

    def f(self, c, d):
        c, d = self._c(c), self._c(d)
        return 1 + d / (c - d) * (self.const(1) / (2 * c + 1))

    def g(self, c):
        c = self._c(c)
        return c / (c - 1) * (2 * c - 1) / (2 * c + 1)


class SymbolicEnv(_FactorFormulas):
    """Builds rational functions.  D and Y are assembled at the num/den level
    so repeated sums do not square denominators; the generic RatFn '+' would
    make the panel identities blow up."""

    symbolic = True

    def const(self, v):
        return RatFn.const(v)

    def var(self, name):
        return RatFn.var(name)

    def D(self, a, b, c):
        a, b, c = self._c(a), self._c(b), self._c(c)
        na, da, nb, db, nc, dc = a.num, a.den, b.num, b.den, c.num, c.den
        return RatFn(na * nb * dc, na * db * dc + nb * da * dc + nc * da * db)

    def Y(self, a, b, c):
        a, b, c = self._c(a), self._c(b), self._c(c)
        na, da, nb, db, nc, dc = a.num, a.den, b.num, b.den, c.num, c.den
        return RatFn(na * nb * dc + nb * nc * da + nc * na * db, na * db * dc)


class NumericEnv(_FactorFormulas):
    """Builds plain Fractions; positivity is irrelevant for identity checking,
    so this bypasses the circuit-level transforms on purpose."""

    symbolic = False

    def const(self, v):
        return Fraction(v)

    def D(self, a, b, c):
        a, b, c = self._c(a), self._c(b), self._c(c)
        return a * b / (a + b + c)

    def Y(self, a, b, c):
        a, b, c = self._c(a), self._c(b), self._c(c)
        return (a * b + b * c + c * a) / a


def symbolic_builtins():
    """The factor functions and both star transforms as RatFn constructors."""
    return SymbolicEnv()


def _interior_left(env, c, r, d):
    """Left edge of interior triangle (r,d) after one reduction, normalized
    by the source left edge of (r,d-1)."""
    one = env.const(1)
    P1 = env.y(r, d)
    P2 = P1 * env.x(c, r + 1) * env.z(r, d)
    y4_left_nb = env.D(env.r21(c, r, d - 1), env.r31(c, r, d - 1), one)
    y8_self = P1 * env.D(env.r31(c, r, d), one, env.r21(c, r, d))
    y12_below = P2 * env.D(one, env.r21(c, r + 1, d), env.r31(c, r + 1, d))
    return env.Y(y4_left_nb, y8_self, y12_below)


def interior_panel(env, c, r, d):
    """All three edges of interior triangle (r,d) after one reduction.

    Five source triangles feed the construction: (r,d-1), (r,d), (r+1,d),
    (r+1,d+1), (r+2,d+1); the right edge additionally needs (r,d+1).  Edge
    values are normalized by the left edge of (r,d-1), which cancels in
    every ratio of interest.
    """
    one = env.const(1)
    P1 = env.y(r, d)
    P2 = P1 * env.x(c, r + 1) * env.z(r, d)
    P3 = P2 * env.y(r + 1, d + 1)
    P4 = P2 * env.z(r + 1, d) * env.x(c, r + 2) * env.y(r + 2, d + 1)
    P1b = P1 * env.y(r, d + 1)

    y4_left_nb = env.D(env.r21(c, r, d - 1), env.r31(c, r, d - 1), one)
    y8_self = P1 * env.D(env.r31(c, r, d), one, env.r21(c, r, d))
    y4_self = P1 * env.D(env.r21(c, r, d), env.r31(c, r, d), one)
    y8_right_nb = P1b * env.D(env.r31(c, r, d + 1), one, env.r21(c, r, d + 1))
    y12_below = P2 * env.D(one, env.r21(c, r + 1, d), env.r31(c, r + 1, d))
    y4_below = P2 * env.D(env.r21(c, r + 1, d), env.r31(c, r + 1, d), one)
    y8_below_r = P3 * env.D(env.r31(c, r + 1, d + 1), one, env.r21(c, r + 1, d + 1))
    y12_below_r = P3 * env.D(one, env.r21(c, r + 1, d + 1), env.r31(c, r + 1, d + 1))
    y12_deep = P4 * env.D(one, env.r21(c, r + 2, d + 1), env.r31(c, r + 2, d + 1))

    return {
        "LEFT": env.Y(y4_left_nb, y8_self, y12_below),
        "RIGHT": env.Y(y8_right_nb, y12_below_r, y4_self),
        "BASE": env.Y(y12_deep, y8_below_r, y4_below),
    }


def corner_panel(env, c):
    """The top corner triangle's edges after one reduction of a c-grid.

    Uses isotropy shortcuts: legs mirrored across the vertical axis are
    equal, so only four distinct leg values are needed.
    """
    one = env.const(1)
    y8_11 = env.D(env.r31(c, 1, 1), one, one)
    y4_11 = y8_11
    y12_21 = env.x(c, 2) * env.D(one, env.r21(c, 2, 1), env.r31(c, 2, 1))
    y4_21 = env.x(c, 2) * env.D(env.r21(c, 2, 1), env.r31(c, 2, 1), one)
    y12_22 = y12_21
    y8_22 = y4_21
    y12_32 = env.y(3, 2) * env.x(c, 3) * env.x(c, 2) * env.D(one, one, env.r31(c, 3, 2))
    return {
        "LEFT": y8_11 + y12_21,
        "RIGHT": y4_11 + y12_22,
        "BASE": env.Y(y12_32, y4_21, y8_22),
    }


def left_boundary_ratio(env, c, r):
    """⟨r+1,1,1⟩/⟨r,1,1⟩ after one reduction, built from four boundary legs."""
    one = env.const(1)
    P1 = env.x(c, r + 1)
    P2 = P1 * env.x(c, r + 2)
    y8_r = env.D(env.r31(c, r, 1), one, env.r21(c, r, 1))
    y12_r1 = P1 * env.D(one, env.r21(c, r + 1, 1), env.r31(c, r + 1, 1))
    y8_r1 = P1 * env.D(env.r31(c, r + 1, 1), one, env.r21(c, r + 1, 1))
    y12_r2 = P2 * env.D(one, env.r21(c, r + 2, 1), env.r31(c, r + 2, 1))
    return (y8_r1 + y12_r2) / (y8_r + y12_r1)


def panel_interior():
    """Symbolic interior panel: {LEFT, RIGHT, BASE} as RatFn in (c, r, d)."""
    env = SymbolicEnv()
    return interior_panel(env, env.var("c"), env.var("r"), env.var("d"))


def panel_corner():
    """Symbolic corner panel: {LEFT, RIGHT, BASE} as RatFn in c."""
    env = SymbolicEnv()
    return corner_panel(env, env.var("c"))


def panel_left_boundary():
    """The boundary-ratio identity as a RatFn in (c, r), identically zero."""
    env = SymbolicEnv()
    c, r = env.var("c"), env.var("r")
    return left_boundary_ratio(env, c, r) - env.x(c - 1, r + 1)


@dataclass(frozen=True)
class Identity:
    name: str
    description: str
    variables: tuple
    build: object  # build(env, vals) -> statement value(s), each expected == 0


def _catalog_entries():
    def A(env, v):
        return env.f(v["c"], 1) - env.g(v["c"])

    def B(env, v):
        c, s = v["c"], v["s"]
        return env.f(c, s + 1) / env.f(c, s) - env.g(c - s)

    def C(env, v):
        r = v["r"]
        return env.y(r + 1, 2) / env.y(r, 2) - (1 - (1 / r) * (env.const(1) / (2 * (r - 2) + 3)))

    def D_(env, v):
        r, s = v["r"], v["s"]
        return env.y(r + 1, s + 1) / env.y(r, s + 1) - env.z(r, s + 1) / env.z(r, s)

    def E(env, v):
        c, m = v["c"], v["m"]
        return env.y(2 * m, m + 1) * env.r21(c, 2 * m, m + 1) - 1

    def F(env, v):
        c, m, i = v["c"], v["m"], v["i"]
        return (env.y(2 * m, m - i) * env.y(2 * m, m + 2 + i)
                * env.r21(c, 2 * m, m + 2 + i) / env.r21(c, 2 * m, m + 1 + i) - 1)

    def G(env, v):
        h, d = v["h"], v["d"]
        return env.x(2 * h + 1 - d, h + 1) * env.z(h, d) - 1

    def H(env, v):
        h, d, i = v["h"], v["d"], v["i"]
        c = 2 * h + 1 - d
        return (env.z(h + i + 1, d) * env.z(h - i - 1, d)
                * env.x(c, h + i + 2) * env.x(c, h - i) - 1)

    def E2(env, v):
        c, m = v["c"], v["m"]
        return env.r21(c, 2 * m + 1, m + 1) - 1

    def F2(env, v):
        c, m, i = v["c"], v["m"], v["i"]
        return (env.y(2 * m + 1, m + 1 - i) * env.y(2 * m + 1, m + 2 + i)
                * env.r21(c, 2 * m + 1, m + 2 + i) / env.r21(c, 2 * m + 1, m + 1 + i) - 1)

    def G2(env, v):
        h, d = v["h"], v["d"]
        c = 2 * h - d
        return env.x(c, h) * env.x(c, h + 1) * env.z(h - 1, d) * env.z(h, d) - 1

    def H2(env, v):
        h, d, i = v["h"], v["d"], v["i"]
        c = 2 * h - d
        return (env.z(h + i, d) * env.z(h - i - 1, d)
                * env.x(c, h + i + 1) * env.x(c, h - i) - 1)

    def I(env, v):
        c, r, d = v["c"], v["r"], v["d"]
        panel = interior_panel(env, c, r, d)
        return panel["BASE"] / panel["LEFT"] - env.r31(c - 1, r, d)

    def I2(env, v):
        c, r, d = v["c"], v["r"], v["d"]
        panel = interior_panel(env, c, r, d)
        return panel["RIGHT"] / panel["LEFT"] - env.r21(c - 1, r, d)

    def J(env, v):
        c = v["c"]
        panel = corner_panel(env, c)
        return (panel["RIGHT"] / panel["LEFT"] - 1,
                panel["BASE"] / panel["LEFT"] - env.r31(c - 1, 1, 1))

    def K(env, v):
        c, r = v["c"], v["r"]
        return left_boundary_ratio(env, c, r) - env.x(c - 1, r + 1)

    def K2(env, v):
        c, r, d = v["c"], v["r"], v["d"]
        return (env.y(r, d - 1) * _interior_left(env, c, r, d)
                / _interior_left(env, c, r, d - 1) - env.y(r, d))

    def L(env, v):
        c = v["c"]
        return corner_panel(env, c)["LEFT"] - env.g(c)

    def M(env, v):
        c = v["c"]
        return env.f(c, c - 1) * env.D(1, 1, env.r31(1, 1, 1)) - c / (2 * c + 1)

    def N(env, v):
        c, i = v["c"], v["i"]
        return (env.f(c, i) * env.D(1, 1, env.r31(c - i, 1, 1))
                / (c / (2 * c + 1)) - 1 / (c - i))

    return [
        Identity("A", "base step: one-step scaling equals the cumulative factor at depth 1",
                 ("c",), A),
        Identity("B", "induction step: cumulative factor ratio telescopes to one-step scaling",
                 ("c", "s"), B),
        Identity("C", "row-ratio of horizontal factors at diagonal 2 has the stated closed form",
                 ("r",), C),
        Identity("D", "row-ratio of horizontal factors telescopes through z",
                 ("r", "s"), D_),
        Identity("E", "vertical symmetry base, even rows (r = 2m)", ("c", "m"), E),
        Identity("F", "vertical symmetry induction step, even rows (r = 2m)", ("c", "m", "i"), F),
        Identity("G", "slide symmetry base, odd row sums (c + d = 2h + 1)", ("h", "d"), G),
        Identity("H", "slide symmetry induction step, odd row sums (c + d = 2h + 1)",
                 ("h", "d", "i"), H),
        Identity("E2", "vertical symmetry base, odd rows (r = 2m + 1); derived parity class",
                 ("c", "m"), E2),
        Identity("F2", "vertical symmetry induction step, odd rows; derived parity class",
                 ("c", "m", "i"), F2),
        Identity("G2", "slide symmetry base, even row sums (c + d = 2h); derived parity class",
                 ("h", "d"), G2),
        Identity("H2", "slide symmetry induction step, even row sums; derived parity class",
                 ("h", "d", "i"), H2),
        Identity("I", "interior triangle: base/left ratio after one reduction is r31 at c-1",
                 ("c", "r", "d"), I),
        Identity("I2", "interior triangle: right/left ratio after one reduction is r21 at c-1; "
                       "derived analogue of I", ("c", "r", "d"), I2),
        Identity("J", "corner triangle: right/left is 1 and base/left is r31 at c-1",
                 ("c",), J),
        Identity("K", "left boundary: consecutive left edges after one reduction step by x at c-1",
                 ("c", "r"), K),
        Identity("K2", "within a row: consecutive left edges after one reduction step by y; "
                       "derived analogue of K", ("c", "r", "d"), K2),
        Identity("L", "the reduced corner left edge equals the one-step scaling constant",
                 ("c",), L),
        Identity("M", "the final tail of a c-grid reduction equals c/(2c+1)", ("c",), M),
        Identity("N", "tail of the (c-i)-grid stage is 1/(c-i) of the final tail",
                 ("c", "i"), N),
    ]


_CATALOG = None


def identity_catalog():
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _catalog_entries()
    return _CATALOG


def get_identity(name):
    for ident in identity_catalog():
        if ident.name == name:
            return ident
    raise KeyError(f"no identity named {name!r}")


@dataclass(frozen=True)
class ProofResult:
    name: str
    description: str
    variables: tuple
    exact_pass: bool
    sampled_pass: bool
    points_checked: int
    total_degree: int
    seconds: float
    error: str | None = None

    @property
    def passed(self):
        return self.exact_pass and self.sampled_pass and self.error is None


def _as_tuple(value):
    return value if isinstance(value, tuple) else (value,)


def _sampled_check(ident, points=_SAMPLE_POINTS):
    env = NumericEnv()
    rng = random.Random(f"{_SAMPLE_SEED}:{ident.name}")
    lo, hi = _SAMPLE_RANGE
    checked = 0
    attempts = 0
    while checked < points:
        attempts += 1
        if attempts > 200 * points:
            raise RuntimeError(f"could not sample valid points for identity {ident.name}")
        vals = {v: Fraction(rng.randint(lo, hi)) for v in ident.variables}
        try:
            statements = _as_tuple(ident.build(env, vals))
        except ZeroDivisionError:
            continue
        if any(s != 0 for s in statements):
            return False, checked + 1
        checked += 1
    return True, checked


def verify_identity(name):
    """Check one catalog identity both ways and report."""
    ident = get_identity(name) if isinstance(name, str) else name
    start = time.perf_counter()
    error = None
    exact_pass = False
    degree = 0
    try:
        env = SymbolicEnv()
        vals = {v: env.var(v) for v in ident.variables}
        statements = _as_tuple(ident.build(env, vals))
        exact_pass = all(s.is_zero() for s in statements)
        # num is the zero polynomial whenever the identity holds, so the
        # denominator degree is what reflects the size of the check
        degree = max(
            (max(s.num.total_degree(), s.den.total_degree()) for s in statements),
            default=0)
    except ZeroDivisionError as exc:
        error = f"denominator vanishes identically: {exc}"
    if error is None:
        sampled_pass, points = _sampled_check(ident)
    else:
        sampled_pass, points = False, 0
    return ProofResult(
        name=ident.name,
        description=ident.description,
        variables=ident.variables,
        exact_pass=exact_pass,
        sampled_pass=sampled_pass,
        points_checked=points,
        total_degree=degree,
        seconds=time.perf_counter() - start,
        error=error,
    )


def verify_identities(names=None):
    """Verify the whole catalog (or a subset); results in catalog order."""
    catalog = identity_catalog()
    if names is not None:
        wanted = set(names)
        unknown = wanted - {i.name for i in catalog}
        if unknown:
            raise KeyError(f"unknown identities: {sorted(unknown)}")
        catalog = [i for i in catalog if i.name in wanted]
    return [verify_identity(ident) for ident in catalog]
