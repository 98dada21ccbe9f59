import math
from dataclasses import replace

import numpy as np
import pytest

from risplan.planner import NetworkPlan, build_ris_model, extract_plan
from risplan.radio import LinkBudgetTable
from risplan.scenario import PlanningConfig, Scenario
from risplan.solver import solve
from risplan.validate import validate_plan
from risplan.geometry import Point2D


def names(violations):
    return [v.constraint_name for v in violations]


@pytest.fixture
def solved_plan(small_instance, default_cfg):
    scenario, tables = small_instance
    model = build_ris_model(scenario, tables, default_cfg)
    res = solve(model)
    plan = extract_plan(model, res.variable_values, scenario, tables, default_cfg)
    return plan, scenario, tables, default_cfg


class TestCleanPlans:
    def test_decoded_optimum_has_no_violations(self, solved_plan):
        plan, scenario, tables, cfg = solved_plan
        assert validate_plan(plan, scenario, tables, cfg) == []


class TestConstructedViolations:
    def test_budget_overrun(self, solved_plan):
        plan, scenario, tables, cfg = solved_plan
        tight = replace(cfg, budget=plan.total_cost - 0.1)
        violations = validate_plan(plan, scenario, tables, tight)
        assert names(violations) == ["budget"]
        assert violations[0].magnitude == pytest.approx(0.1, abs=1e-9)

    def test_theta_consistency(self, solved_plan):
        plan, scenario, tables, cfg = solved_plan
        bumped = replace(plan, theta_per_tp=tuple(v + 0.5 for v in plan.theta_per_tp))
        violations = validate_plan(bumped, scenario, tables, cfg)
        assert all(n.startswith("theta_consistency") for n in names(violations))
        assert len(violations) == scenario.n_test_points

    def test_len_consistency(self, solved_plan):
        plan, scenario, tables, cfg = solved_plan
        shrunk = replace(plan, len_per_tp=tuple(v - 1.0 for v in plan.len_per_tp))
        violations = validate_plan(shrunk, scenario, tables, cfg)
        assert all(n.startswith("len_consistency") for n in names(violations))

    def test_fov_violation(self, solved_plan):
        plan, scenario, tables, cfg = solved_plan
        spun = replace(plan, orientations_rad={
            r: (phi + math.pi) % (2 * math.pi)
            for r, phi in plan.orientations_rad.items()})
        violations = validate_plan(spun, scenario, tables, cfg)
        assert any(n.startswith("fov_c") for n in names(violations))

    def test_missing_orientation(self, solved_plan):
        plan, scenario, tables, cfg = solved_plan
        bare = replace(plan, orientations_rad={})
        violations = validate_plan(bare, scenario, tables, cfg)
        assert any(n.startswith("fov_orientation_missing") for n in names(violations))

    def test_colocation(self, solved_plan):
        plan, scenario, tables, cfg = solved_plan
        overlapping = replace(plan, ris_sites=tuple(set(plan.ris_sites) | {plan.donor}))
        violations = validate_plan(overlapping, scenario, tables, cfg)
        assert any(n.startswith("colocation") for n in names(violations))

    def test_unknown_donor(self, solved_plan):
        plan, scenario, tables, cfg = solved_plan
        orphan = replace(plan, iab_nodes=tuple(c for c in plan.iab_nodes
                                               if c != plan.donor))
        violations = validate_plan(orphan, scenario, tables, cfg)
        assert "donor_requires_iab" in names(violations)


class TestFlowCapacityIsolated:
    def test_exactly_one_violation_with_magnitude_one(self):
        """Synthetic two-station fixture: the only broken constraint is the
        backhaul capacity, exceeded by exactly 1 Mbps."""
        sites = (Point2D(0.0, 0.0), Point2D(100.0, 0.0))
        tps = (Point2D(100.0, 50.0),)
        scenario = Scenario(200.0, 200.0, sites, tps, (), 0)
        cap_bh = 1e9
        demand = cap_bh + 1.0  # flow donor -> serving station exceeds cap by 1
        n_c, n_t = 2, 1
        theta = np.zeros((n_t, n_c, n_c))
        len_tc = np.hypot([[sites[c].x - tps[0].x for c in range(n_c)]],
                          [[sites[c].y - tps[0].y for c in range(n_c)]])
        tables = LinkBudgetTable(
            delta_acc=np.ones((n_t, n_c), dtype=np.int8),
            delta_bh=(np.ones((n_c, n_c)) - np.eye(n_c)).astype(np.int8),
            delta_src=np.zeros((n_t, n_c, n_c), dtype=np.int8),
            cap_acc=np.full((n_t, n_c), 1e16),
            cap_bh=np.full((n_c, n_c), cap_bh) * (1 - np.eye(n_c)),
            cap_dir=np.zeros((n_t, n_c, n_c)),
            cap_ref=np.zeros((n_t, n_c, n_c)),
            theta=theta,
            len_tc=len_tc,
            phi_a=np.zeros((n_c, n_t)),
            phi_b=np.zeros((n_c, n_c)),
        )
        cfg = PlanningConfig(mu=0.0, budget=2.0, demand_mbps=demand, xi=0.0,
                             wired_capacity_mbps=1e18)
        plan = NetworkPlan(
            mode="baseline",
            donor=0,
            iab_nodes=(0, 1),
            ris_sites=(),
            assignments=((1, 0),),  # primary on station 1, backup on the donor
            backhaul_edges=((0, 1),),
            flows_mbps={(0, 1): demand},
            wired_inflow_mbps=demand,
            orientations_rad={},
            theta_per_tp=(0.0,),
            len_per_tp=(0.5 * float(len_tc[0, 0] + len_tc[0, 1]),),
            total_cost=2.0,
            objective_value=0.0,
        )
        violations = validate_plan(plan, scenario, tables, cfg)
        assert names(violations) == ["flow_capacity_c0_c1"]
        assert violations[0].magnitude == pytest.approx(1.0, rel=1e-9)
