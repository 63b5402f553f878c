"""Effective resistance on the grid graph by exact linear algebra.

This is the standard, reduction-free route: place the grid's labels on the
lattice graph, form the weighted Laplacian over Fractions, ground one
terminal, and solve.  It exists to cross-check the row-reduction pipeline,
so it is deliberately plain dense Gaussian elimination; grids at oracle
scale have at most a few hundred vertices.

Vertices are the lattice points (2a+s, s) with 0 <= a <= n, 0 <= s <= n-a.
Triangle ⟨r,d⟩ (row r from the top) has base height s = n-r and corners
bottom-left (n-r+2d-2, n-r), bottom-right (n-r+2d, n-r), apex
(n-r+2d-1, n-r+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ResistorGraph:
    vertices: tuple          # lattice points (x, y)
    edges: tuple             # (u, v, resistance) with u, v lattice points

    def degree(self, v):
        return sum(1 for (a, b, _) in self.edges if v in (a, b))


def triangle_corners(n, r, d):
    """Lattice corners (bottom_left, bottom_right, apex) of triangle ⟨r,d⟩."""
    s = n - r
    return (s + 2 * d - 2, s), (s + 2 * d, s), (s + 2 * d - 1, s + 1)


def corner_vertices(n):
    """The grid's three degree-2 vertices: apex, bottom-left, bottom-right."""
    if n < 1:
        raise ValueError(f"grid size must be >= 1, got {n}")
    return (n, n), (0, 0), (2 * n, 0)


def build_graph(g):
    """Attach each triangle label of an exact-mode grid to its lattice edge."""
    if g.mode != "exact":
        raise ValueError("the Laplacian oracle runs in exact mode only")
    n = g.n
    vertices = tuple(
        (2 * a + s, s) for s in range(0, n + 1) for a in range(0, n - s + 1)
    )
    edges = []
    for r, d, (L, R, B) in g.triangles():
        bl, br, apex = triangle_corners(n, r, d)
        edges.append((bl, apex, L))
        edges.append((apex, br, R))
        edges.append((bl, br, B))
    return ResistorGraph(vertices=vertices, edges=tuple(edges))


def _solve(matrix, rhs):
    """Gaussian elimination over Fractions; returns None if singular."""
    n = len(matrix)
    m = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((k for k in range(col, n) if m[k][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for k in range(n):
            if k != col and m[k][col] != 0:
                factor = m[k][col]
                m[k] = [a - factor * b for a, b in zip(m[k], m[col])]
    return [m[i][n] for i in range(n)]


def effective_resistance(graph, u, v):
    """Exact two-point resistance: ground v, inject unit current at u."""
    if u == v:
        raise ValueError("the two terminals must be distinct")
    index = {vertex: i for i, vertex in enumerate(graph.vertices)}
    for w in (u, v):
        if w not in index:
            raise ValueError(f"vertex {w} not in graph")

    size = len(graph.vertices)
    lap = [[Fraction(0)] * size for _ in range(size)]
    for a, b, resistance in graph.edges:
        cond = 1 / Fraction(resistance)
        i, j = index[a], index[b]
        lap[i][i] += cond
        lap[j][j] += cond
        lap[i][j] -= cond
        lap[j][i] -= cond

    # ground v: delete its row and column
    keep = [i for i in range(size) if i != index[v]]
    reduced = [[lap[i][j] for j in keep] for i in keep]
    rhs = [Fraction(0)] * len(keep)
    pos = {old: new for new, old in enumerate(keep)}
    rhs[pos[index[u]]] = Fraction(1)

    potentials = _solve(reduced, rhs)
    if potentials is None:
        raise ValueError("singular Laplacian system (graph is disconnected)")
    return potentials[pos[index[u]]]


def corner_resistance_oracle(g):
    """Resistance between the two bottom corners, straight from the Laplacian."""
    _apex, bl, br = corner_vertices(g.n)
    return effective_resistance(build_graph(g), bl, br)
