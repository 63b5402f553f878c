"""Grid model: construction, addressing, symmetry, serialization."""

import json
import random
from fractions import Fraction

import pytest

from trigrid.grid import (
    TriGrid,
    check_symmetry,
    complete_by_symmetry,
    d_rim_corners,
    factor_grid,
    get_edge,
    grid_from_json,
    grid_to_doc,
    grid_to_json,
    proportionality,
    scale_grid,
    uniform_grid,
    upper_half_coords,
)
from trigrid.reduction import reduce_steps, row_reduce

F = Fraction

# every label of the 3-row factor grid, straight off the worked construction
FACTOR_GRID_3 = {
    (1, 1): (F(1), F(1), F(5)),
    (2, 1): (F(5, 6), F(5, 2), F(5, 2)),
    (2, 2): (F(5, 2), F(5, 6), F(5, 2)),
    (3, 1): (F(1), F(5), F(1)),
    (3, 2): (F(5, 2), F(5, 2), F(5, 6)),
    (3, 3): (F(5), F(1), F(1)),
}


class TestUniformGrid:
    def test_all_ones(self):
        g = uniform_grid(3, 1)
        assert g.triangle_count == 6 and g.edge_count == 18
        assert all(v == 1 for _, _, t in g.triangles() for v in t)

    def test_single_triangle(self):
        g = uniform_grid(1, 1)
        assert g.labels == {(1, 1): (F(1), F(1), F(1))}

    def test_scaled_labels(self):
        g = uniform_grid(2, F(3, 2))
        assert g.edge_count == 9
        assert all(v == F(3, 2) for _, _, t in g.triangles() for v in t)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            uniform_grid(2, F(0))


class TestFactorGrid:
    def test_three_grid_complete(self):
        g = factor_grid(3)
        assert g.labels == FACTOR_GRID_3

    def test_one_grid_forced_to_ones(self):
        assert factor_grid(1).labels == {(1, 1): (F(1), F(1), F(1))}

    def test_two_grid(self):
        g = factor_grid(2)
        assert g.labels == {
            (1, 1): (F(1), F(1), F(3)),
            (2, 1): (F(1), F(3), F(1)),
            (2, 2): (F(3), F(1), F(1)),
        }

    def test_counts_match_grid_formulas(self):
        for c in range(1, 9):
            g = factor_grid(c)
            assert g.vertex_count == (c + 1) * (c + 2) // 2
            assert g.edge_count == 3 * c * (c + 1) // 2


class TestGetEdge:
    def test_top_left_edge_along_reductions(self):
        g = uniform_grid(3, 1)
        assert get_edge(g, 1, 1, 1) == 1
        g2, _ = row_reduce(g)
        assert get_edge(g2, 1, 1, 1) == F(2, 3)
        g1, _ = row_reduce(g2)
        assert get_edge(g1, 1, 1, 1) == F(4, 7)

    def test_out_of_range(self):
        g = uniform_grid(2, 1)
        with pytest.raises(ValueError):
            get_edge(g, 1, 2, 1)
        with pytest.raises(ValueError):
            get_edge(g, 3, 1, 1)
        with pytest.raises(ValueError):
            get_edge(g, 1, 1, 4)


class TestScaleAndProportionality:
    def test_scaled_factor_grid_matches_reduction(self):
        red = reduce_steps(factor_grid(3), 1)
        assert scale_grid(factor_grid(2), F(15, 14)).labels == red.labels

    def test_scale_identity_and_inverse(self):
        g = factor_grid(4)
        assert scale_grid(g, F(1)).labels == g.labels
        assert scale_grid(scale_grid(g, F(2)), F(1, 2)).labels == g.labels

    def test_proportionality_fixture(self):
        red = reduce_steps(factor_grid(3), 1)
        assert proportionality(red, factor_grid(2)) == F(15, 14)

    def test_self_proportionality(self):
        g = factor_grid(5)
        assert proportionality(g, g) == 1

    def test_not_proportional(self):
        reduced_ones = reduce_steps(uniform_grid(3, 1), 1)  # boundary 2/3, middle 1
        assert proportionality(reduced_ones, factor_grid(2)) is None

    def test_random_scalings_recovered(self):
        rng = random.Random(11)
        for _ in range(100):
            n = rng.randint(1, 5)
            g = factor_grid(n)
            k = F(rng.randint(1, 40), rng.randint(1, 40))
            assert proportionality(scale_grid(g, k), g) == k

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            proportionality(uniform_grid(2, 1), uniform_grid(3, 1))


class TestSymmetry:
    def test_factor_grids_isotropic(self):
        for c in range(1, 13):
            report = check_symmetry(factor_grid(c))
            assert report.isotropic and report.max_violation == 0

    def test_uniform_isotropic(self):
        for n in (1, 2, 5):
            assert check_symmetry(uniform_grid(n, 1)).isotropic

    def test_single_perturbed_edge_breaks_vertical(self):
        g = uniform_grid(3, 1)
        labels = dict(g.labels)
        labels[(1, 1)] = (F(2), F(1), F(1))
        report = check_symmetry(TriGrid(n=3, mode="exact", precision_bits=None, labels=labels))
        assert not report.vertical
        assert not report.rotational and not report.slide
        assert report.max_violation > 0

    def test_float_mode_factor_grid(self):
        report = check_symmetry(factor_grid(8, mode="float", precision_bits=128))
        assert report.isotropic


class TestUpperHalf:
    def test_c3(self):
        assert upper_half_coords(3) == {(1, 1), (2, 1)}

    def test_c7_contains_second_diagonal_run(self):
        coords = upper_half_coords(7)
        assert {(3, 2), (4, 2)} <= coords
        assert max(d for _, d in coords) == 3

    def test_first_rim_corners(self):
        for n in (3, 5, 9):
            assert d_rim_corners(n, 1) == ((1, 1), (n, 1), (n, n))

    def test_rim_bounds(self):
        with pytest.raises(ValueError):
            d_rim_corners(5, 3)

    def test_reconstruction_from_upper_half(self):
        for c in range(1, 10):
            g = factor_grid(c)
            partial = {coord: g.labels[coord] for coord in upper_half_coords(c)}
            rebuilt = complete_by_symmetry(c, partial)
            assert rebuilt.labels == g.labels

    def test_reconstruction_underdetermined(self):
        g = factor_grid(5)
        with pytest.raises(ValueError):
            complete_by_symmetry(5, {(1, 1): g.labels[(1, 1)]})


class TestGridIO:
    def test_unit_grid_document(self):
        doc = grid_to_doc(uniform_grid(1, 1))
        assert doc == {
            "n": 1,
            "mode": "exact",
            "triangles": [{"r": 1, "d": 1, "L": "1", "R": "1", "B": "1"}],
        }

    def test_round_trip_exact(self):
        g = factor_grid(3)
        assert grid_from_json(grid_to_json(g)).labels == g.labels

    def test_round_trip_float(self):
        g = factor_grid(4, mode="float", precision_bits=128)
        back = grid_from_json(grid_to_json(g))
        assert back.precision_bits == 128
        assert back.labels == g.labels

    def test_negative_label_rejected(self):
        doc = grid_to_doc(uniform_grid(1, 1))
        doc["triangles"][0]["B"] = "-1"
        with pytest.raises(ValueError):
            grid_from_json(json.dumps(doc))

    def test_malformed_document(self):
        with pytest.raises(ValueError):
            grid_from_json("{not json")
        with pytest.raises(ValueError):
            grid_from_json(json.dumps({"mode": "exact"}))
        with pytest.raises(ValueError):
            grid_from_json(json.dumps({"n": 1, "mode": "nope", "triangles": []}))
