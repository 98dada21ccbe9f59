"""Independent feasibility audit of a decoded plan.

Every planning constraint is re-evaluated directly from the plan, the
link tables and the planning knobs, without touching the model builders:
this is the second leg of the dual route that keeps the MILP encodings
honest. Aperture membership is checked with true circular angular
distance, which on the 0/2*pi seam is more permissive than the model's
linear big-M rows; a plan decoded from the solver therefore always
passes the circular check, while hand-built plans may pass here yet not
be representable in the model. Violations are data, not exceptions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import circular_distance
from .planner import MODE_BASELINE, MODE_RIS, NetworkPlan, access_airtime
from .radio import LinkBudgetTable
from .scenario import PlanningConfig, Scenario
from .solver import FEASIBILITY_TOL


@dataclass(frozen=True)
class Violation:
    constraint_name: str
    lhs_value: float
    sense: str
    rhs_value: float
    magnitude: float

    def __str__(self) -> str:
        return (f"{self.constraint_name}: {self.lhs_value:.9g} {self.sense} "
                f"{self.rhs_value:.9g} violated by {self.magnitude:.3g}")


class _Auditor:
    def __init__(self, tol: float):
        self.tol = tol
        self.violations: list[Violation] = []

    def require_le(self, name: str, lhs: float, rhs: float) -> None:
        if lhs > rhs + self.tol:
            self.violations.append(Violation(name, lhs, "<=", rhs, lhs - rhs))

    def require_ge(self, name: str, lhs: float, rhs: float) -> None:
        if lhs < rhs - self.tol:
            self.violations.append(Violation(name, lhs, ">=", rhs, rhs - lhs))

    def require_eq(self, name: str, lhs: float, rhs: float) -> None:
        if abs(lhs - rhs) > self.tol:
            self.violations.append(Violation(name, lhs, "=", rhs, abs(lhs - rhs)))

    def require_true(self, name: str, ok: bool, detail: float = 1.0) -> None:
        if not ok:
            self.violations.append(Violation(name, detail, "=", 0.0, detail))


def _tree_checks(aud: _Auditor, plan: NetworkPlan, tables: LinkBudgetTable) -> None:
    installed = set(plan.iab_nodes)
    parents: dict[int, int] = {}
    for (c, d) in plan.backhaul_edges:
        aud.require_true(f"backhaul_activation_c{c}_c{d}",
                         tables.delta_bh[c, d] == 1
                         and c in installed and d in installed)
        if d in parents:
            aud.require_le(f"tree_ingress_c{d}", 2.0, 1.0)
        parents[d] = c
    if plan.donor in parents:
        aud.require_le(f"tree_ingress_c{plan.donor}",
                       1.0 + 1.0, 1.0)  # donor must have no ingress


def _flow_checks(aud: _Auditor, plan: NetworkPlan, tables: LinkBudgetTable,
                 demand_at: dict[int, float], injection: dict[int, float]) -> None:
    for (c, d), f in plan.flows_mbps.items():
        aud.require_ge(f"flow_nonneg_c{c}_c{d}", f, 0.0)
        aud.require_le(f"flow_capacity_c{c}_c{d}", f, float(tables.cap_bh[c, d]))
    for c in plan.iab_nodes:
        inflow = sum(f for (a, b), f in plan.flows_mbps.items() if b == c)
        outflow = sum(f for (a, b), f in plan.flows_mbps.items() if a == c)
        aud.require_eq(f"flow_balance_c{c}",
                       injection.get(c, 0.0) + inflow - outflow,
                       demand_at.get(c, 0.0))


def _half_duplex_checks(aud: _Auditor, plan: NetworkPlan, tables: LinkBudgetTable,
                        access_air: dict[int, float]) -> None:
    for c in plan.iab_nodes:
        rx = sum(f / float(tables.cap_bh[a, b])
                 for (a, b), f in plan.flows_mbps.items() if b == c)
        tx = sum(f / float(tables.cap_bh[a, b])
                 for (a, b), f in plan.flows_mbps.items() if a == c)
        tx += access_air.get(c, 0.0)
        aud.require_le(f"half_duplex_c{c}", rx + tx, 1.0)


def validate_plan(plan: NetworkPlan, scenario: Scenario, tables: LinkBudgetTable,
                  cfg: PlanningConfig, tol: float = FEASIBILITY_TOL) -> list[Violation]:
    """Check a plan against every constraint of its mode; empty list means
    feasible within ``tol``."""
    aud = _Auditor(tol)
    n_t = scenario.n_test_points
    demand = cfg.demand_mbps
    installed = set(plan.iab_nodes)

    aud.require_true("assignment_partition", len(plan.assignments) == n_t,
                     detail=float(len(plan.assignments) - n_t))
    aud.require_true("donor_requires_iab", plan.donor in installed)

    if plan.mode == MODE_RIS:
        ris_sites = set(plan.ris_sites)
        aud.require_le("budget",
                       cfg.price_iab * len(installed) + cfg.price_ris * len(ris_sites),
                       cfg.budget)
        for c in installed & ris_sites:
            aud.require_le(f"colocation_c{c}", 2.0, 1.0)

        demand_at: dict[int, float] = {}
        access_air: dict[int, float] = {}
        ris_air: dict[int, float] = {}
        ris_rays: dict[int, list[float]] = {}
        for t, (c, r) in enumerate(plan.assignments):
            aud.require_true(f"src_activation_t{t}_c{c}_r{r}",
                             tables.delta_src[t, c, r] == 1
                             and c in installed and r in ris_sites)
            if tables.delta_src[t, c, r] != 1:
                continue
            demand_at[c] = demand_at.get(c, 0.0) + demand
            access_air[c] = access_air.get(c, 0.0) + access_airtime(tables, cfg, t, c, r)
            ris_air[r] = ris_air.get(r, 0.0) + cfg.xi * demand / float(tables.cap_ref[t, c, r])
            ris_rays.setdefault(r, []).extend(
                [float(tables.phi_a[r, t]), float(tables.phi_b[r, c])])
            aud.require_le(f"theta_consistency_t{t}", plan.theta_per_tp[t],
                           float(tables.theta[t, c, r]))
            aud.require_ge(f"len_consistency_t{t}", plan.len_per_tp[t],
                           0.5 * float(tables.len_tc[t, c] + tables.len_tc[t, r]))

        for r, air in sorted(ris_air.items()):
            aud.require_le(f"ris_airtime_c{r}", air, 1.0)
        for r, rays in sorted(ris_rays.items()):
            if r not in plan.orientations_rad:
                aud.require_true(f"fov_orientation_missing_c{r}", False)
                continue
            phi = plan.orientations_rad[r]
            for ray in rays:
                aud.require_le(f"fov_c{r}", circular_distance(phi, ray),
                               cfg.fov_rad / 2.0)

        injection = {plan.donor: plan.wired_inflow_mbps}
        aud.require_eq("core_injection", plan.wired_inflow_mbps, n_t * demand)
        _tree_checks(aud, plan, tables)
        _flow_checks(aud, plan, tables, demand_at, injection)
        _half_duplex_checks(aud, plan, tables, access_air)

    elif plan.mode == MODE_BASELINE:
        aud.require_true("no_ris_in_baseline", not plan.ris_sites,
                         detail=float(len(plan.ris_sites)))
        aud.require_le("budget", cfg.price_iab * len(installed), cfg.budget)

        demand_at = {}
        access_air = {}
        for t, (cp, cb) in enumerate(plan.assignments):
            aud.require_true(f"distinct_links_t{t}", cp != cb)
            aud.require_true(f"x_activation_t{t}_c{cp}",
                             tables.delta_acc[t, cp] == 1 and cp in installed)
            aud.require_true(f"s_activation_t{t}_c{cb}",
                             tables.delta_acc[t, cb] == 1 and cb in installed)
            if tables.delta_acc[t, cp] != 1 or tables.delta_acc[t, cb] != 1:
                continue
            demand_at[cp] = demand_at.get(cp, 0.0) + demand
            demand_at[cb] = demand_at.get(cb, 0.0) + cfg.xi * demand
            access_air[cp] = access_air.get(cp, 0.0) + demand / float(tables.cap_acc[t, cp])
            access_air[cb] = (access_air.get(cb, 0.0)
                              + cfg.xi * demand / float(tables.cap_acc[t, cb]))
            aud.require_le(f"theta_consistency_t{t}", plan.theta_per_tp[t],
                           float(tables.theta[t, cp, cb]))
            aud.require_ge(f"len_consistency_t{t}", plan.len_per_tp[t],
                           0.5 * float(tables.len_tc[t, cp] + tables.len_tc[t, cb]))

        aud.require_le("wired_capacity", plan.wired_inflow_mbps,
                       cfg.wired_capacity_mbps)
        injection = {plan.donor: plan.wired_inflow_mbps}
        _tree_checks(aud, plan, tables)
        _flow_checks(aud, plan, tables, demand_at, injection)
        _half_duplex_checks(aud, plan, tables, access_air)

    else:
        aud.require_true("known_mode", False)

    return sorted(aud.violations, key=lambda v: v.constraint_name)
