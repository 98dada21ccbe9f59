import pytest

from conftest import restrict_tuples
from risplan.planner import build_baseline_model, build_ris_model, extract_plan
from risplan.radio import RadioConfig, build_link_tables
from risplan.scenario import PlanningConfig, generate
from risplan.solver import (STATUS_INFEASIBLE, STATUS_OPTIMAL, SolverError,
                            available_backends, solve)
from risplan.validate import validate_plan


class TestSolve:
    def test_forced_fixture_optimal(self, small_instance, default_cfg):
        scenario, tables = small_instance
        masked = restrict_tuples(tables, [(0, 1, 2), (1, 1, 2), (2, 1, 2)])
        model = build_ris_model(scenario, masked, default_cfg)
        res = solve(model)
        assert res.status == STATUS_OPTIMAL
        assert res.gap == 0.0
        assert res.variable_values["x_t0_c1_r2"] == pytest.approx(1.0, abs=1e-6)

    def test_pigeonhole_infeasible(self):
        scenario = generate(100.0, 100.0, 1, 1, seed=0)
        tables = build_link_tables(scenario, RadioConfig())
        model = build_baseline_model(scenario, tables, PlanningConfig(budget=9.0))
        res = solve(model)
        assert res.status == STATUS_INFEASIBLE
        assert res.variable_values is None

    def test_unknown_backend(self, small_instance, default_cfg):
        scenario, tables = small_instance
        model = build_ris_model(scenario, tables, default_cfg)
        with pytest.raises(SolverError, match="unknown backend"):
            solve(model, backend="cplex")

    def test_backends_listed(self):
        assert "highs" in available_backends()

    def test_deterministic(self, small_instance, default_cfg):
        scenario, tables = small_instance
        model = build_ris_model(scenario, tables, default_cfg)
        r1 = solve(model)
        r2 = solve(model)
        assert r1.objective_value == r2.objective_value
        assert r1.variable_values == r2.variable_values

    def test_solved_plans_validate_clean(self, small_instance):
        scenario, tables = small_instance
        for mode in ("ris", "baseline"):
            for mu in (0.0, 1.0):
                cfg = PlanningConfig(mu=mu, budget=3.2)
                model = (build_ris_model(scenario, tables, cfg) if mode == "ris"
                         else build_baseline_model(scenario, tables, cfg))
                res = solve(model)
                assert res.status == STATUS_OPTIMAL
                plan = extract_plan(model, res.variable_values, scenario, tables, cfg)
                assert validate_plan(plan, scenario, tables, cfg) == []

    def test_time_limit_reported(self):
        # A full-scale model cannot be solved in a few milliseconds; the
        # backend must come back with the time_limit status, not crash.
        scenario = generate(300.0, 400.0, 20, 12, seed=3)
        tables = build_link_tables(scenario, RadioConfig())
        model = build_ris_model(scenario, tables, PlanningConfig(mu=0.5, budget=5.0))
        res = solve(model, time_limit_s=0.05)
        assert res.status in ("time_limit", "optimal")
        if res.status == "time_limit" and res.variable_values is None:
            assert res.objective_value is None
