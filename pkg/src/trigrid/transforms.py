"""The four circuit-equivalence operations on resistances.

Orientation conventions for a triangle with edge labels L (left), R (right),
B (base): the star produced by a triangle-to-Y transform is labeled by clock
position, with the 12 o'clock leg attached to the apex,

    y12 = delta(L, R, B),   y4 = delta(R, B, L),   y8 = delta(B, L, R),

i.e. the two edges named first meet at the leg's outer vertex.  Going back,
the first argument of :func:`wye` is always the leg opposite the edge being
produced:

    L = wye(y4, y8, y12),   R = wye(y8, y12, y4),   B = wye(y12, y4, y8).

All functions reject nonpositive resistances; the transforms are only
meaningful for positive labels and the denominators must not vanish.
"""

from __future__ import annotations

from dataclasses import dataclass


def _require_positive(*values):
    for v in values:
        if not v > 0:
            raise ValueError(f"resistance must be positive, got {v}")


@dataclass(frozen=True)
class YTriple:
    """Star legs by clock position, from one upright triangle."""

    y12: object
    y4: object
    y8: object


def delta(x, y, z):
    """Triangle-to-star leg: x*y/(x+y+z), attached where x and y meet."""
    _require_positive(x, y, z)
    return x * y / (x + y + z)


def wye(a, b, c):
    """Star-to-triangle edge opposite leg a: (ab+bc+ca)/a; symmetric in b, c."""
    _require_positive(a, b, c)
    return (a * b + b * c + c * a) / a


def series(a, b):
    _require_positive(a, b)
    return a + b


def parallel(a, b):
    _require_positive(a, b)
    return a * b / (a + b)


def delta_y(L, R, B):
    """Full triangle-to-star transform of one upright triangle."""
    _require_positive(L, R, B)
    s = L + R + B
    return YTriple(y12=L * R / s, y4=R * B / s, y8=B * L / s)


def y_delta(t: YTriple):
    """Inverse of :func:`delta_y`: recover (L, R, B) from the three legs."""
    return (wye(t.y4, t.y8, t.y12), wye(t.y8, t.y12, t.y4), wye(t.y12, t.y4, t.y8))
