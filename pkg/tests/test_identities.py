"""Identity catalog: builtins, panels, and both verification routes."""

from fractions import Fraction

import pytest

from trigrid.factors import factor_g, factor_r21, factor_r31, factor_x, factor_y, factor_z
from trigrid.grid import factor_grid
from trigrid.identities import (
    Identity,
    NumericEnv,
    SymbolicEnv,
    corner_panel,
    identity_catalog,
    interior_panel,
    left_boundary_ratio,
    panel_corner,
    panel_interior,
    panel_left_boundary,
    symbolic_builtins,
    verify_identities,
    verify_identity,
)
from trigrid.reduction import row_reduce

F = Fraction


class TestBuiltins:
    def test_delta_of_units(self):
        env = symbolic_builtins()
        assert env.D(1, 1, 1).evaluate({}) == F(1, 3)

    def test_r31_at_point(self):
        env = symbolic_builtins()
        c = env.var("c")
        assert env.r31(c, 1, 1).evaluate({"c": 10}) == 19

    def test_g_at_point(self):
        env = symbolic_builtins()
        c = env.var("c")
        assert env.g(c).evaluate({"c": 3}) == F(15, 14)

    def test_builtins_match_closed_forms(self):
        sym = symbolic_builtins()
        num = NumericEnv()
        c, r, d = sym.var("c"), sym.var("r"), sym.var("d")
        for cc in range(3, 8):
            for rr in range(2, cc + 1):
                assert sym.x(c, r).evaluate({"c": cc, "r": rr}) == factor_x(cc, rr)
                assert num.x(F(cc), F(rr)) == factor_x(cc, rr)
                for dd in range(2, rr + 1):
                    assert sym.y(r, d).evaluate({"r": rr, "d": dd}) == factor_y(rr, dd)
                    assert sym.z(r, d).evaluate({"r": rr, "d": dd}) == factor_z(rr, dd)
                    assert sym.r21(c, r, d).evaluate({"r": rr, "d": dd}) == factor_r21(cc, rr, dd)
                    assert sym.r31(c, r, d).evaluate(
                        {"c": cc, "r": rr, "d": dd}) == factor_r31(cc, rr, dd)
            assert num.g(F(cc)) == factor_g(cc)


class TestPanels:
    def test_interior_base_over_left(self):
        panels = panel_interior()
        env = SymbolicEnv()
        c, r, d = (env.var(v) for v in "crd")
        assert (panels["BASE"] / panels["LEFT"] - env.r31(c - 1, r, d)).is_zero()

    def test_interior_right_over_left(self):
        panels = panel_interior()
        env = SymbolicEnv()
        c, r, d = (env.var(v) for v in "crd")
        assert (panels["RIGHT"] / panels["LEFT"] - env.r21(c - 1, r, d)).is_zero()

    def test_corner_panel_statements(self):
        panels = panel_corner()
        env = SymbolicEnv()
        c = env.var("c")
        assert (panels["RIGHT"] / panels["LEFT"] - 1).is_zero()
        assert (panels["BASE"] / panels["LEFT"] - env.r31(c - 1, 1, 1)).is_zero()
        assert (panels["LEFT"] - env.g(c)).is_zero()

    def test_left_boundary_statement(self):
        assert panel_left_boundary().is_zero()

    def test_numeric_spot_check_7_3_2(self):
        env = NumericEnv()
        panel = interior_panel(env, F(7), F(3), F(2))
        g = factor_grid(7)
        red, _ = row_reduce(g)
        p0 = g.get(3, 1, 1)  # left edge of (r, d-1) normalizes the panel
        assert panel["LEFT"] == red.get(3, 2, 1) / p0
        assert panel["RIGHT"] == red.get(3, 2, 2) / p0
        assert panel["BASE"] == red.get(3, 2, 3) / p0

    def test_cross_module_sweep(self):
        # interior domain: 3 <= r <= c-2, 2 <= d <= r-1
        env = NumericEnv()
        for c in range(7, 11):
            g = factor_grid(c)
            red, _ = row_reduce(g)
            for r in range(3, c - 1):
                for d in range(2, r):
                    panel = interior_panel(env, F(c), F(r), F(d))
                    p0 = g.get(r, d - 1, 1)
                    assert panel["LEFT"] == red.get(r, d, 1) / p0
                    assert panel["RIGHT"] == red.get(r, d, 2) / p0
                    assert panel["BASE"] == red.get(r, d, 3) / p0

    def test_left_boundary_numeric(self):
        env = NumericEnv()
        for c, r in ((8, 3), (9, 5)):
            g = factor_grid(c)
            red, _ = row_reduce(g)
            got = left_boundary_ratio(env, F(c), F(r))
            assert got == red.get(r + 1, 1, 1) / red.get(r, 1, 1)

    def test_corner_panel_numeric(self):
        env = NumericEnv()
        for c in range(3, 9):
            g = factor_grid(c)
            red, _ = row_reduce(g)
            panel = corner_panel(env, F(c))
            assert panel["LEFT"] == red.get(1, 1, 1)
            assert panel["RIGHT"] == red.get(1, 1, 2)
            assert panel["BASE"] == red.get(1, 1, 3)


class TestCatalog:
    def test_names_and_order(self):
        names = [i.name for i in identity_catalog()]
        assert names == ["A", "B", "C", "D", "E", "F", "G", "H",
                         "E2", "F2", "G2", "H2",
                         "I", "I2", "J", "K", "K2", "L", "M", "N"]

    def test_quick_entries_pass_both_routes(self):
        for name in ("A", "B", "C", "D", "E", "F", "G", "H", "K", "L", "M", "N"):
            result = verify_identity(name)
            assert result.exact_pass, name
            assert result.sampled_pass, name
            assert result.points_checked == 10

    def test_parity_extensions_pass(self):
        for name in ("E2", "F2", "G2", "H2"):
            assert verify_identity(name).passed, name

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            verify_identity("Z")
        with pytest.raises(KeyError):
            verify_identities(["A", "Z"])

    def test_subset_selection(self):
        results = verify_identities(["M", "A"])
        assert [r.name for r in results] == ["A", "M"]

    def test_tail_formula_values(self):
        # the closed tail form at c=3: f(3,2) * delta(1,1,r31(1,1,1)) = 3/7,
        # and the stage ratio at (c,i)=(3,1) is 1/2
        env = NumericEnv()
        t31 = env.f(F(3), F(2)) * env.D(1, 1, env.r31(F(3) - 2, 1, 1))
        assert t31 == F(3, 7)
        assert env.f(F(3), F(1)) * env.D(1, 1, env.r31(F(2), 1, 1)) == F(3, 14)
        assert F(3, 14) / t31 == F(1, 2)

    def test_broken_identity_fails_both_routes(self):
        bogus = Identity(
            name="X", description="deliberately wrong",
            variables=("c",),
            build=lambda env, v: env.g(v["c"]) - env.f(v["c"], 2),
        )
        result = verify_identity(bogus)
        assert not result.exact_pass and not result.sampled_pass
        assert not result.passed

    def test_routes_never_disagree(self):
        for result in verify_identities(["A", "C", "E", "G", "J", "L", "M", "N"]):
            assert result.exact_pass == result.sampled_pass == True  # noqa: E712
