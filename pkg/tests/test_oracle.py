import math

import pytest

from conftest import restrict_tuples
from risplan.oracle import OracleError, brute_force_plan
from risplan.planner import (MODE_BASELINE, MODE_RIS, build_baseline_model,
                             build_ris_model)
from risplan.radio import RadioConfig, build_link_tables
from risplan.scenario import PlanningConfig, generate
from risplan.solver import solve
from risplan.validate import validate_plan


class TestGuards:
    def test_size_guard(self):
        scenario = generate(300.0, 300.0, 8, 2, seed=0)
        tables = build_link_tables(scenario, RadioConfig())
        with pytest.raises(OracleError, match="too large"):
            brute_force_plan(scenario, tables, PlanningConfig(), MODE_RIS)

    def test_unknown_mode(self, small_instance):
        scenario, tables = small_instance
        with pytest.raises(OracleError, match="unknown mode"):
            brute_force_plan(scenario, tables, PlanningConfig(), "hybrid")


class TestOracleBasics:
    def test_zero_budget_infeasible(self, small_instance):
        scenario, tables = small_instance
        for mode in (MODE_RIS, MODE_BASELINE):
            res = brute_force_plan(scenario, tables, PlanningConfig(budget=0.0), mode)
            assert not res.feasible
            assert res.objective is None and res.plan is None

    def test_forced_installation_subset(self, small_instance):
        scenario, tables = small_instance
        masked = restrict_tuples(tables, [(0, 1, 2), (1, 1, 2), (2, 1, 2)])
        # Budget fits exactly one station and one surface.
        cfg = PlanningConfig(mu=0.5, budget=1.1)
        res = brute_force_plan(scenario, masked, cfg, MODE_RIS)
        assert res.feasible
        assert res.plan.iab_nodes == (1,)
        assert res.plan.ris_sites == (2,)
        assert res.plan.donor == 1

    def test_matches_milp_on_forced_fixture(self, small_instance, default_cfg):
        scenario, tables = small_instance
        masked = restrict_tuples(tables, [(0, 1, 2), (1, 1, 2), (2, 1, 2)])
        model = build_ris_model(scenario, masked, default_cfg)
        milp = solve(model)
        oracle = brute_force_plan(scenario, masked, default_cfg, MODE_RIS)
        assert milp.status == "optimal" and oracle.feasible
        assert milp.objective_value == pytest.approx(oracle.objective, rel=1e-6)

    def test_oracle_plans_validate_clean(self, small_instance):
        scenario, tables = small_instance
        for mode in (MODE_RIS, MODE_BASELINE):
            for mu in (0.0, 1.0):
                cfg = PlanningConfig(mu=mu, budget=2.4)
                res = brute_force_plan(scenario, tables, cfg, mode)
                assert res.feasible
                assert validate_plan(res.plan, scenario, tables, cfg) == []

    def test_deterministic(self, small_instance, default_cfg):
        scenario, tables = small_instance
        a = brute_force_plan(scenario, tables, default_cfg, MODE_RIS)
        b = brute_force_plan(scenario, tables, default_cfg, MODE_RIS)
        assert a.objective == b.objective
        assert a.plan == b.plan

    def test_budget_monotone(self, small_instance):
        scenario, tables = small_instance
        prev = -math.inf
        for budget in (1.1, 1.3, 2.2, 3.3):
            res = brute_force_plan(scenario, tables,
                                   PlanningConfig(mu=0.5, budget=budget), MODE_RIS)
            if res.feasible:
                assert res.objective >= prev - 1e-9
                prev = res.objective


class TestEquivalenceSample:
    """A fast slice of the full oracle-equivalence acceptance criterion."""

    @pytest.mark.parametrize("seed", [0, 1, 2, 3])
    def test_modes_and_weights(self, seed):
        scenario = generate(220.0, 220.0, 5, 2, seed=seed)
        tables = build_link_tables(scenario, RadioConfig())
        budget = [1.2, 2.1, 2.3, 3.2][seed % 4]
        for mode in (MODE_RIS, MODE_BASELINE):
            for mu in (0.0, 0.5, 1.0):
                cfg = PlanningConfig(mu=mu, budget=budget)
                model = (build_ris_model(scenario, tables, cfg) if mode == MODE_RIS
                         else build_baseline_model(scenario, tables, cfg))
                milp = solve(model)
                oracle = brute_force_plan(scenario, tables, cfg, mode)
                if oracle.fov_discrepancy:
                    continue
                assert (milp.status == "optimal") == oracle.feasible
                if oracle.feasible:
                    assert milp.objective_value == pytest.approx(
                        oracle.objective, rel=1e-6, abs=1e-9)
