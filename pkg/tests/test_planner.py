import math

import numpy as np
import pytest

from conftest import restrict_tuples
from risplan.planner import (PlannerError, access_airtime,
                             build_baseline_model, build_ris_model,
                             extract_plan, load_plan, save_plan,
                             src_tuples)
from risplan.radio import RadioConfig, build_link_tables
from risplan.scenario import PlanningConfig, generate
from risplan.solver import solve


def rows_named(model, prefix):
    return model.constraints_named(prefix)


class TestRisModelStructure:
    def test_constraint_count_formulas(self, small_instance, default_cfg):
        scenario, tables = small_instance
        model = build_ris_model(scenario, tables, default_cfg)
        n_tuples = len(src_tuples(tables))
        assert len(rows_named(model, "src_act_")) == n_tuples
        fov_rows = sum(len(rows_named(model, p))
                       for p in ("fov_a_lo_", "fov_a_hi_", "fov_b_lo_", "fov_b_hi_"))
        assert fov_rows == 4 * n_tuples
        assert len(rows_named(model, "one_src_")) == scenario.n_test_points
        assert len(rows_named(model, "ang_sep_")) == n_tuples
        assert len(rows_named(model, "flow_bal_")) == scenario.n_sites
        assert len(rows_named(model, "colocation_")) == scenario.n_sites
        assert len(rows_named(model, "budget")) == 1

    def test_presolve_omits_dead_tuples(self, small_instance, default_cfg):
        scenario, tables = small_instance
        masked = restrict_tuples(tables, [(0, 1, 2), (1, 1, 2), (2, 1, 2)])
        model = build_ris_model(scenario, masked, default_cfg)
        xs = [k for k in model.keys() if k[0] == "x"]
        assert xs == [("x", 0, 1, 2), ("x", 1, 1, 2), ("x", 2, 1, 2)]

    def test_forced_single_assignment(self, small_instance, default_cfg):
        scenario, tables = small_instance
        masked = restrict_tuples(tables, [(0, 1, 2), (1, 1, 2), (2, 1, 2)])
        model = build_ris_model(scenario, masked, default_cfg)
        res = solve(model)
        assert res.status == "optimal"
        for t in range(scenario.n_test_points):
            assert res.variable_values[f"x_t{t}_c1_r2"] == pytest.approx(1.0, abs=1e-6)
        plan = extract_plan(model, res.variable_values, scenario, masked, default_cfg)
        assert plan.assignments == ((1, 2), (1, 2), (1, 2))
        assert plan.donor == 1

    def test_dimension_mismatch(self, small_instance, default_cfg):
        scenario, tables = small_instance
        other = generate(100.0, 100.0, 4, 2, seed=0)
        with pytest.raises(PlannerError, match="dimension mismatch"):
            build_ris_model(other, tables, default_cfg)

    def test_airtime_coefficient_is_worst_of_two(self):
        # demand 100, direct capacity 400, xi 0.5, reflected capacity 100:
        # max(0.25, 0.5) = 0.5
        cfg = PlanningConfig(demand_mbps=100.0, xi=0.5)
        t = type("T", (), {})()
        t.cap_dir = np.full((1, 2, 2), 400.0)
        t.cap_ref = np.full((1, 2, 2), 100.0)
        assert access_airtime(t, cfg, 0, 0, 1) == pytest.approx(0.5)

    def test_objective_coefficients(self, small_instance):
        scenario, tables = small_instance
        cfg = PlanningConfig(mu=0.25, budget=3.0, theta_norm_rad=2.0, len_norm_m=100.0)
        model = build_ris_model(scenario, tables, cfg)
        theta_id = model.var_id(("theta", 0))
        l_id = model.var_id(("l", 0))
        assert model.objective[theta_id] == pytest.approx(0.25 / 2.0)
        assert model.objective[l_id] == pytest.approx(-0.75 / 100.0)


class TestBaselineModelStructure:
    def test_infeasible_single_site(self):
        scenario = generate(100.0, 100.0, 1, 1, seed=0)
        tables = build_link_tables(scenario, RadioConfig())
        cfg = PlanningConfig(budget=5.0)
        model = build_baseline_model(scenario, tables, cfg)
        assert solve(model).status == "infeasible"

    def test_two_sites_both_used(self):
        scenario = generate(100.0, 100.0, 2, 1, seed=2)
        tables = build_link_tables(scenario, RadioConfig())
        cfg = PlanningConfig(budget=2.0)
        model = build_baseline_model(scenario, tables, cfg)
        res = solve(model)
        assert res.status == "optimal"
        plan = extract_plan(model, res.variable_values, scenario, tables, cfg)
        assert set(plan.iab_nodes) == {0, 1}
        primary, backup = plan.assignments[0]
        assert {primary, backup} == {0, 1}

    def test_installation_cost(self, small_instance):
        scenario, tables = small_instance
        cfg = PlanningConfig(mu=0.5, budget=3.0, price_iab=1.0)
        model = build_baseline_model(scenario, tables, cfg)
        res = solve(model)
        plan = extract_plan(model, res.variable_values, scenario, tables, cfg)
        assert plan.total_cost == pytest.approx(1.0 * len(plan.iab_nodes))
        assert len(plan.iab_nodes) == 3  # budget 3 at unit price; backup needs >= 2

    def test_distinct_primary_backup(self, small_instance):
        scenario, tables = small_instance
        cfg = PlanningConfig(mu=1.0, budget=4.0)
        model = build_baseline_model(scenario, tables, cfg)
        res = solve(model)
        plan = extract_plan(model, res.variable_values, scenario, tables, cfg)
        for (p, b) in plan.assignments:
            assert p != b

    def test_no_ris_price_in_budget(self, small_instance):
        scenario, tables = small_instance
        cfg = PlanningConfig(budget=2.0, price_ris=1e9)  # absurd surface price
        model = build_baseline_model(scenario, tables, cfg)
        assert solve(model).status == "optimal"  # surfaces don't exist here


class TestExtractPlan:
    def test_fractional_binary_rejected(self, small_instance, default_cfg):
        scenario, tables = small_instance
        model = build_ris_model(scenario, tables, default_cfg)
        res = solve(model)
        values = dict(res.variable_values)
        values["yIAB_c0"] = 0.4
        with pytest.raises(PlannerError, match="non-integral"):
            extract_plan(model, values, scenario, tables, default_cfg)

    def test_all_zero_solution_rejected(self, small_instance, default_cfg):
        scenario, tables = small_instance
        model = build_ris_model(scenario, tables, default_cfg)
        values = {v.name: 0.0 for v in model.variables}
        with pytest.raises(PlannerError, match="decode-time infeasibility"):
            extract_plan(model, values, scenario, tables, default_cfg)

    def test_objective_recomputation_matches(self, small_instance):
        scenario, tables = small_instance
        for mu in (0.0, 0.5, 1.0):
            cfg = PlanningConfig(mu=mu, budget=2.3)
            model = build_ris_model(scenario, tables, cfg)
            res = solve(model)
            plan = extract_plan(model, res.variable_values, scenario, tables, cfg)
            assert plan.objective_value == pytest.approx(res.objective_value, abs=1e-6)

    def test_decode_drift_detected(self, small_instance, default_cfg):
        scenario, tables = small_instance
        model = build_ris_model(scenario, tables, default_cfg)
        res = solve(model)
        values = dict(res.variable_values)
        # Claim a wildly different theta while keeping binaries intact.
        for t in range(scenario.n_test_points):
            values[f"theta_t{t}"] = 0.0 if values[f"theta_t{t}"] > 0.1 else math.pi
        with pytest.raises(PlannerError, match="decode drift"):
            extract_plan(model, values, scenario, tables, default_cfg)

    def test_normalizer_scaling_invariance(self, small_instance):
        scenario, tables = small_instance
        base = PlanningConfig(mu=0.5, budget=2.3, theta_norm_rad=math.pi, len_norm_m=500.0)
        scaled = PlanningConfig(mu=0.5, budget=2.3, theta_norm_rad=3 * math.pi,
                                len_norm_m=1500.0)
        m1 = build_ris_model(scenario, tables, base)
        m2 = build_ris_model(scenario, tables, scaled)
        r1, r2 = solve(m1), solve(m2)
        p1 = extract_plan(m1, r1.variable_values, scenario, tables, base)
        p2 = extract_plan(m2, r2.variable_values, scenario, tables, scaled)
        assert r2.objective_value == pytest.approx(r1.objective_value / 3.0, rel=1e-6)
        assert p1.assignments == p2.assignments

    def test_plan_round_trip(self, small_instance, default_cfg, tmp_path):
        scenario, tables = small_instance
        model = build_ris_model(scenario, tables, default_cfg)
        res = solve(model)
        plan = extract_plan(model, res.variable_values, scenario, tables, default_cfg)
        path = tmp_path / "plan.json"
        save_plan(plan, path)
        assert load_plan(path) == plan
