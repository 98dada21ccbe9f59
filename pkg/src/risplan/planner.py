"""Placement model builders and solution decoding.

Two mixed-integer programs share most of their structure:

* the surface-enabled model: every test point is served by one
  (station, surface) pair giving a direct link plus a reflected backup;
  stations relay traffic over a spanning tree rooted at a single wired
  donor; surface orientations must cover the azimuths of all endpoints
  they assist, encoded with big-M rows over an aperture of F radians;

* the station-only baseline: every test point gets a primary and a
  distinct backup station; both demands flow through the tree; no
  surfaces, no orientations.

The objective maximizes mu * sum(theta_t) / theta_norm
- (1 - mu) * sum(l_t) / len_norm, where theta_t is the angular
separation between a test point's two link directions and l_t the mean
of its two link lengths: spread the links apart, keep them short.

Big-M caution, by design: the orientation rows compare raw azimuths in
[0, 2*pi) without wraparound, so an aperture straddling the 0/2*pi seam
is not representable. Decoded plans are checked with true circular
geometry (see validate), which can only be more permissive.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .milp import BINARY, CONTINUOUS, MilpModel
from .radio import LinkBudgetTable
from .scenario import PlanningConfig, Scenario

TWO_PI = 2.0 * math.pi

MODE_RIS = "ris"
MODE_BASELINE = "baseline"

PLAN_FORMAT_VERSION = 1
DECODE_TOL = 1e-6


class PlannerError(ValueError):
    """Model construction or solution decoding failure."""


@dataclass(frozen=True)
class NetworkPlan:
    """Decoded deployment: who is installed where, who serves whom.

    assignments[t] is (serving station, assisting surface) in ris mode
    and (primary station, backup station) in baseline mode.
    backhaul_edges are (parent, child) pairs oriented away from the
    donor; flows_mbps carries the downlink traffic per edge.
    """

    mode: str
    donor: int
    iab_nodes: tuple[int, ...]
    ris_sites: tuple[int, ...]
    assignments: tuple[tuple[int, int], ...]
    backhaul_edges: tuple[tuple[int, int], ...]
    flows_mbps: dict[tuple[int, int], float]
    wired_inflow_mbps: float
    orientations_rad: dict[int, float]
    theta_per_tp: tuple[float, ...]
    len_per_tp: tuple[float, ...]
    total_cost: float
    objective_value: float

    @property
    def mean_theta(self) -> float:
        return sum(self.theta_per_tp) / len(self.theta_per_tp)

    @property
    def mean_len(self) -> float:
        return sum(self.len_per_tp) / len(self.len_per_tp)


def _check_dimensions(scenario: Scenario, tables: LinkBudgetTable) -> None:
    if (tables.n_sites != scenario.n_sites
            or tables.n_test_points != scenario.n_test_points):
        raise PlannerError(
            f"dimension mismatch: tables are {tables.n_test_points} TP x "
            f"{tables.n_sites} CS, scenario is {scenario.n_test_points} x "
            f"{scenario.n_sites}")


def src_tuples(tables: LinkBudgetTable) -> list[tuple[int, int, int]]:
    """All (t, c, r) triples whose activation flag is set, in index order."""
    t_idx, c_idx, r_idx = np.nonzero(tables.delta_src)
    return list(zip(t_idx.tolist(), c_idx.tolist(), r_idx.tolist()))


def bh_pairs(tables: LinkBudgetTable) -> list[tuple[int, int]]:
    """All directed station pairs with an active backhaul flag."""
    c_idx, d_idx = np.nonzero(tables.delta_bh)
    return list(zip(c_idx.tolist(), d_idx.tolist()))


def access_airtime(tables: LinkBudgetTable, cfg: PlanningConfig,
                   t: int, c: int, r: int) -> float:
    """Airtime a station spends on one served test point: the longer of
    the direct and the reflected transmission."""
    return max(cfg.demand_mbps / tables.cap_dir[t, c, r],
               cfg.xi * cfg.demand_mbps / tables.cap_ref[t, c, r])


def build_ris_model(scenario: Scenario, tables: LinkBudgetTable,
                    cfg: PlanningConfig) -> MilpModel:
    """Assemble the surface-enabled placement MILP."""
    _check_dimensions(scenario, tables)
    n_c = scenario.n_sites
    n_t = scenario.n_test_points
    demand = cfg.demand_mbps
    tuples = src_tuples(tables)
    pairs = bh_pairs(tables)

    model = MilpModel(name=MODE_RIS)

    y_iab = [model.add_variable(("yIAB", c), BINARY, name=f"yIAB_c{c}") for c in range(n_c)]
    y_ris = [model.add_variable(("yRIS", c), BINARY, name=f"yRIS_c{c}") for c in range(n_c)]
    y_don = [model.add_variable(("yDON", c), BINARY, name=f"yDON_c{c}") for c in range(n_c)]
    x_var = {(t, c, r): model.add_variable(("x", t, c, r), BINARY,
                                           name=f"x_t{t}_c{c}_r{r}")
             for (t, c, r) in tuples}
    z_var = {(c, d): model.add_variable(("z", c, d), BINARY, name=f"z_c{c}_c{d}")
             for (c, d) in pairs}
    f_var = {(c, d): model.add_variable(("f", c, d), CONTINUOUS, 0.0, math.inf,
                                        name=f"f_c{c}_c{d}")
             for (c, d) in pairs}
    t_tx = [model.add_variable(("tTX", c), CONTINUOUS, 0.0, 1.0, name=f"tTX_c{c}")
            for c in range(n_c)]
    ris_candidates = sorted({r for (_, _, r) in tuples})
    phi = {r: model.add_variable(("phi", r), CONTINUOUS, 0.0, TWO_PI, name=f"phi_c{r}")
           for r in ris_candidates}
    theta = [model.add_variable(("theta", t), CONTINUOUS, 0.0, math.pi, name=f"theta_t{t}")
             for t in range(n_t)]
    l_var = [model.add_variable(("l", t), CONTINUOUS, 0.0, math.inf, name=f"l_t{t}")
             for t in range(n_t)]

    for t in range(n_t):
        model.set_objective_coeff(theta[t], cfg.mu / cfg.theta_norm_rad)
        model.set_objective_coeff(l_var[t], -(1.0 - cfg.mu) / cfg.len_norm_m)

    # One technology per site; donors only where a station stands.
    for c in range(n_c):
        model.add_constraint(f"colocation_c{c}", {y_iab[c]: 1.0, y_ris[c]: 1.0}, "<=", 1.0)
        model.add_constraint(f"donor_iab_c{c}", {y_don[c]: 1.0, y_iab[c]: -1.0}, "<=", 0.0)

    model.add_constraint(
        "budget",
        {**{y_iab[c]: cfg.price_iab for c in range(n_c)},
         **{y_ris[c]: cfg.price_ris for c in range(n_c)}},
        "<=", cfg.budget)

    # Link activations require both endpoints installed.
    for (c, d) in pairs:
        model.add_constraint(f"bh_act_c{c}_c{d}",
                             {z_var[(c, d)]: 1.0, y_iab[c]: -0.5, y_iab[d]: -0.5},
                             "<=", 0.0)
    for (t, c, r) in tuples:
        model.add_constraint(f"src_act_t{t}_c{c}_r{r}",
                             {x_var[(t, c, r)]: 1.0, y_iab[c]: -0.5, y_ris[r]: -0.5},
                             "<=", 0.0)

    # Exactly one serving pair per test point. A test point with no
    # feasible pair yields an empty row "0 = 1": correctly infeasible.
    for t in range(n_t):
        model.add_constraint(
            f"one_src_t{t}",
            {x_var[(tt, c, r)]: 1.0 for (tt, c, r) in tuples if tt == t},
            "=", 1.0)

    # Spanning tree: at most one ingress link, none at the donor.
    for c in range(n_c):
        coeffs = {z_var[(d, cc)]: 1.0 for (d, cc) in pairs if cc == c}
        coeffs[y_don[c]] = 1.0
        model.add_constraint(f"tree_in_c{c}", coeffs, "<=", 1.0)

    # Flow balance: core injection |T| * D at the donor; every served test
    # point pulls D from its serving station.
    for c in range(n_c):
        coeffs = {y_don[c]: float(n_t) * demand}
        for (cc, d) in pairs:
            if cc == c:
                coeffs[f_var[(c, d)]] = coeffs.get(f_var[(c, d)], 0.0) - 1.0
            if d == c:
                coeffs[f_var[(cc, d)]] = coeffs.get(f_var[(cc, d)], 0.0) + 1.0
        for (t, cc, r) in tuples:
            if cc == c:
                vid = x_var[(t, cc, r)]
                coeffs[vid] = coeffs.get(vid, 0.0) - demand
        model.add_constraint(f"flow_bal_c{c}", coeffs, "=", 0.0)

    for (c, d) in pairs:
        model.add_constraint(f"flow_cap_c{c}_c{d}",
                             {f_var[(c, d)]: 1.0, z_var[(c, d)]: -tables.cap_bh[c, d]},
                             "<=", 0.0)

    # Transmission airtime per station: backhaul beams to children plus
    # the longer of direct/reflected access per served test point.
    for c in range(n_c):
        coeffs = {t_tx[c]: 1.0}
        for (cc, d) in pairs:
            if cc == c:
                coeffs[f_var[(c, d)]] = -1.0 / tables.cap_bh[c, d]
        for (t, cc, r) in tuples:
            if cc == c:
                coeffs[x_var[(t, cc, r)]] = -access_airtime(tables, cfg, t, cc, r)
        model.add_constraint(f"tx_time_c{c}", coeffs, "=", 0.0)

    # Half duplex: receive airtime plus transmit airtime fits in one.
    for c in range(n_c):
        coeffs = {t_tx[c]: 1.0}
        for (d, cc) in pairs:
            if cc == c:
                coeffs[f_var[(d, c)]] = 1.0 / tables.cap_bh[d, c]
        model.add_constraint(f"half_duplex_c{c}", coeffs, "<=", 1.0)

    # A surface serves its test points by time sharing.
    for r in ris_candidates:
        coeffs = {x_var[(t, c, rr)]: cfg.xi * demand / tables.cap_ref[t, c, rr]
                  for (t, c, rr) in tuples if rr == r}
        model.add_constraint(f"ris_airtime_c{r}", coeffs, "<=", 1.0)

    # Orientation big-M rows: if x is active the surface azimuth must sit
    # within F/2 of both endpoint directions; inactive rows are slack.
    half_fov = cfg.fov_rad / 2.0
    for (t, c, r) in tuples:
        xv = x_var[(t, c, r)]
        pv = phi[r]
        a_angle = tables.phi_a[r, t]
        b_angle = tables.phi_b[r, c]
        model.add_constraint(f"fov_a_lo_t{t}_c{c}_r{r}",
                             {pv: 1.0, xv: -TWO_PI}, ">=", a_angle - half_fov - TWO_PI)
        model.add_constraint(f"fov_a_hi_t{t}_c{c}_r{r}",
                             {pv: 1.0, xv: TWO_PI}, "<=", a_angle + half_fov + TWO_PI)
        model.add_constraint(f"fov_b_lo_t{t}_c{c}_r{r}",
                             {pv: 1.0, xv: -TWO_PI}, ">=", b_angle - half_fov - TWO_PI)
        model.add_constraint(f"fov_b_hi_t{t}_c{c}_r{r}",
                             {pv: 1.0, xv: TWO_PI}, "<=", b_angle + half_fov + TWO_PI)

    # Angular separation is capped by the active pair's table angle; link
    # length is at least the active pair's average length.
    for (t, c, r) in tuples:
        model.add_constraint(f"ang_sep_t{t}_c{c}_r{r}",
                             {theta[t]: 1.0, x_var[(t, c, r)]: TWO_PI},
                             "<=", tables.theta[t, c, r] + TWO_PI)
    for t in range(n_t):
        coeffs = {l_var[t]: 1.0}
        for (tt, c, r) in tuples:
            if tt == t:
                coeffs[x_var[(t, c, r)]] = -0.5 * (tables.len_tc[t, c] + tables.len_tc[t, r])
        model.add_constraint(f"link_len_t{t}", coeffs, ">=", 0.0)

    # Strengthening cut, redundant at integer points (exactly one x per
    # test point is active) but far tighter in relaxation than the big-M
    # rows above: without it the LP bound lets every theta_t float to pi.
    for t in range(n_t):
        coeffs = {theta[t]: 1.0}
        for (tt, c, r) in tuples:
            if tt == t:
                coeffs[x_var[(t, c, r)]] = -float(tables.theta[t, c, r])
        model.add_constraint(f"cut_theta_t{t}", coeffs, "<=", 0.0)

    return model


def build_baseline_model(scenario: Scenario, tables: LinkBudgetTable,
                         cfg: PlanningConfig) -> MilpModel:
    """Assemble the station-only placement MILP (primary + backup station
    per test point, both demands flowing through the tree)."""
    _check_dimensions(scenario, tables)
    n_c = scenario.n_sites
    n_t = scenario.n_test_points
    demand = cfg.demand_mbps
    pairs = bh_pairs(tables)
    acc = [(t, c) for t in range(n_t) for c in range(n_c)
           if tables.delta_acc[t, c] == 1]

    model = MilpModel(name=MODE_BASELINE)

    y_iab = [model.add_variable(("yIAB", c), BINARY, name=f"yIAB_c{c}") for c in range(n_c)]
    y_don = [model.add_variable(("yDON", c), BINARY, name=f"yDON_c{c}") for c in range(n_c)]
    x_var = {(t, c): model.add_variable(("x", t, c), BINARY, name=f"x_t{t}_c{c}")
             for (t, c) in acc}
    s_var = {(t, c): model.add_variable(("s", t, c), BINARY, name=f"s_t{t}_c{c}")
             for (t, c) in acc}
    z_var = {(c, d): model.add_variable(("z", c, d), BINARY, name=f"z_c{c}_c{d}")
             for (c, d) in pairs}
    f_var = {(c, d): model.add_variable(("f", c, d), CONTINUOUS, 0.0, math.inf,
                                        name=f"f_c{c}_c{d}")
             for (c, d) in pairs}
    w_var = [model.add_variable(("w", c), CONTINUOUS, 0.0, math.inf, name=f"w_c{c}")
             for c in range(n_c)]
    t_tx = [model.add_variable(("tTX", c), CONTINUOUS, 0.0, 1.0, name=f"tTX_c{c}")
            for c in range(n_c)]
    theta = [model.add_variable(("theta", t), CONTINUOUS, 0.0, math.pi, name=f"theta_t{t}")
             for t in range(n_t)]
    l_var = [model.add_variable(("l", t), CONTINUOUS, 0.0, math.inf, name=f"l_t{t}")
             for t in range(n_t)]

    for t in range(n_t):
        model.set_objective_coeff(theta[t], cfg.mu / cfg.theta_norm_rad)
        model.set_objective_coeff(l_var[t], -(1.0 - cfg.mu) / cfg.len_norm_m)

    for c in range(n_c):
        model.add_constraint(f"donor_iab_c{c}", {y_don[c]: 1.0, y_iab[c]: -1.0}, "<=", 0.0)
    model.add_constraint("single_donor", {y_don[c]: 1.0 for c in range(n_c)}, "<=", 1.0)
    model.add_constraint("budget", {y_iab[c]: cfg.price_iab for c in range(n_c)},
                         "<=", cfg.budget)

    for (c, d) in pairs:
        model.add_constraint(f"bh_act_c{c}_c{d}",
                             {z_var[(c, d)]: 1.0, y_iab[c]: -0.5, y_iab[d]: -0.5},
                             "<=", 0.0)
    for (t, c) in acc:
        model.add_constraint(f"x_act_t{t}_c{c}",
                             {x_var[(t, c)]: 1.0, y_iab[c]: -1.0}, "<=", 0.0)
        model.add_constraint(f"s_act_t{t}_c{c}",
                             {s_var[(t, c)]: 1.0, y_iab[c]: -1.0}, "<=", 0.0)
        # Primary and backup must differ: dual connectivity is the point.
        model.add_constraint(f"distinct_t{t}_c{c}",
                             {x_var[(t, c)]: 1.0, s_var[(t, c)]: 1.0}, "<=", 1.0)

    for t in range(n_t):
        model.add_constraint(f"one_primary_t{t}",
                             {x_var[(tt, c)]: 1.0 for (tt, c) in acc if tt == t},
                             "=", 1.0)
        model.add_constraint(f"one_backup_t{t}",
                             {s_var[(tt, c)]: 1.0 for (tt, c) in acc if tt == t},
                             "=", 1.0)

    for c in range(n_c):
        coeffs = {z_var[(d, cc)]: 1.0 for (d, cc) in pairs if cc == c}
        coeffs[y_don[c]] = 1.0
        model.add_constraint(f"tree_in_c{c}", coeffs, "<=", 1.0)

    # Flow balance with wired inflow w_c; primary pulls D, backup xi * D.
    for c in range(n_c):
        coeffs = {w_var[c]: 1.0}
        for (cc, d) in pairs:
            if cc == c:
                coeffs[f_var[(c, d)]] = coeffs.get(f_var[(c, d)], 0.0) - 1.0
            if d == c:
                coeffs[f_var[(cc, d)]] = coeffs.get(f_var[(cc, d)], 0.0) + 1.0
        for (t, cc) in acc:
            if cc == c:
                coeffs[x_var[(t, c)]] = -demand
                coeffs[s_var[(t, c)]] = -cfg.xi * demand
        model.add_constraint(f"flow_bal_c{c}", coeffs, "=", 0.0)

    for c in range(n_c):
        model.add_constraint(f"wired_cap_c{c}",
                             {w_var[c]: 1.0, y_don[c]: -cfg.wired_capacity_mbps},
                             "<=", 0.0)

    for (c, d) in pairs:
        model.add_constraint(f"flow_cap_c{c}_c{d}",
                             {f_var[(c, d)]: 1.0, z_var[(c, d)]: -tables.cap_bh[c, d]},
                             "<=", 0.0)

    for c in range(n_c):
        coeffs = {t_tx[c]: 1.0}
        for (cc, d) in pairs:
            if cc == c:
                coeffs[f_var[(c, d)]] = -1.0 / tables.cap_bh[c, d]
        for (t, cc) in acc:
            if cc == c:
                coeffs[x_var[(t, c)]] = -demand / tables.cap_acc[t, c]
                coeffs[s_var[(t, c)]] = -cfg.xi * demand / tables.cap_acc[t, c]
        model.add_constraint(f"tx_time_c{c}", coeffs, "=", 0.0)

    for c in range(n_c):
        coeffs = {t_tx[c]: 1.0}
        for (d, cc) in pairs:
            if cc == c:
                coeffs[f_var[(d, c)]] = 1.0 / tables.cap_bh[d, c]
        model.add_constraint(f"half_duplex_c{c}", coeffs, "<=", 1.0)

    # Angular separation rows bind only when x_t,c and s_t,r are both
    # active; c == r pairs are excluded by the distinctness row.
    for t in range(n_t):
        for (tt, c) in acc:
            if tt != t:
                continue
            for (tt2, r) in acc:
                if tt2 != t or r == c:
                    continue
                model.add_constraint(
                    f"ang_sep_t{t}_c{c}_r{r}",
                    {theta[t]: 1.0, x_var[(t, c)]: TWO_PI, s_var[(t, r)]: TWO_PI},
                    "<=", tables.theta[t, c, r] + 2.0 * TWO_PI)

    for t in range(n_t):
        coeffs = {l_var[t]: 1.0}
        for (tt, c) in acc:
            if tt == t:
                coeffs[x_var[(t, c)]] = -0.5 * tables.len_tc[t, c]
                coeffs[s_var[(t, c)]] = -0.5 * tables.len_tc[t, c]
        model.add_constraint(f"link_len_t{t}", coeffs, ">=", 0.0)

    # Strengthening cuts, redundant at integer points: with the primary
    # (or backup) station fixed, the separation can never exceed the best
    # partner's angle. Without these the LP bound floats theta_t to pi.
    for t in range(n_t):
        sites_t = [c for (tt, c) in acc if tt == t]
        best_for = {c: max((float(tables.theta[t, c, r]) for r in sites_t if r != c),
                           default=0.0)
                    for c in sites_t}
        if not sites_t:
            continue
        model.add_constraint(
            f"cut_theta_x_t{t}",
            {theta[t]: 1.0, **{x_var[(t, c)]: -best_for[c] for c in sites_t}},
            "<=", 0.0)
        model.add_constraint(
            f"cut_theta_s_t{t}",
            {theta[t]: 1.0, **{s_var[(t, c)]: -best_for[c] for c in sites_t}},
            "<=", 0.0)

    return model


def _round_binary(name: str, value: float) -> int:
    r = round(value)
    if abs(value - r) > DECODE_TOL:
        raise PlannerError(f"non-integral solution: {name} = {value!r}")
    return int(r)


def extract_plan(model: MilpModel, solution: dict[str, float],
                 scenario: Scenario, tables: LinkBudgetTable,
                 cfg: PlanningConfig) -> NetworkPlan:
    """Turn a feasible variable assignment into a NetworkPlan.

    Binaries are rounded (tolerance 1e-6), installation/assignment/tree
    structure is read through the index map, and cost and objective are
    recomputed from first principles; a recomputed objective that drifts
    from the solver's by more than 1e-6 is an error.
    """
    mode = model.name
    if mode not in (MODE_RIS, MODE_BASELINE):
        raise PlannerError(f"model {model.name!r} is not a planning model")
    missing = [v.name for v in model.variables if v.name not in solution]
    if missing:
        raise PlannerError(f"solution missing variables, e.g. {missing[:3]}")

    def val(key) -> float:
        return solution[model.name_of(model.var_id(key))]

    n_c = scenario.n_sites
    n_t = scenario.n_test_points

    iab = tuple(c for c in range(n_c)
                if _round_binary(f"yIAB_c{c}", val(("yIAB", c))) == 1)
    donors = [c for c in range(n_c)
              if _round_binary(f"yDON_c{c}", val(("yDON", c))) == 1]
    if len(donors) != 1:
        raise PlannerError(f"decode-time infeasibility: {len(donors)} donors active")
    donor = donors[0]

    if mode == MODE_RIS:
        ris = tuple(c for c in range(n_c)
                    if _round_binary(f"yRIS_c{c}", val(("yRIS", c))) == 1)
        chosen: dict[int, tuple[int, int]] = {}
        for (t, c, r) in src_tuples(tables):
            if model.has_var(("x", t, c, r)) and _round_binary(
                    f"x_t{t}_c{c}_r{r}", val(("x", t, c, r))) == 1:
                if t in chosen:
                    raise PlannerError(f"decode-time infeasibility: test point {t} "
                                       f"has multiple active pairs")
                chosen[t] = (c, r)
        wired = float(n_t) * cfg.demand_mbps
    else:
        ris = ()
        chosen = {}
        for t in range(n_t):
            primary = [c for c in range(n_c) if model.has_var(("x", t, c))
                       and _round_binary(f"x_t{t}_c{c}", val(("x", t, c))) == 1]
            backup = [c for c in range(n_c) if model.has_var(("s", t, c))
                      and _round_binary(f"s_t{t}_c{c}", val(("s", t, c))) == 1]
            if len(primary) != 1 or len(backup) != 1:
                raise PlannerError(f"decode-time infeasibility: test point {t} has "
                                   f"{len(primary)} primary / {len(backup)} backup links")
            chosen[t] = (primary[0], backup[0])
        wired = float(val(("w", donor)))

    if sorted(chosen) != list(range(n_t)):
        raise PlannerError("decode-time infeasibility: incomplete assignment")
    assignments = tuple(chosen[t] for t in range(n_t))

    edges = []
    flows: dict[tuple[int, int], float] = {}
    for (c, d) in bh_pairs(tables):
        if _round_binary(f"z_c{c}_c{d}", val(("z", c, d))) == 1:
            edges.append((c, d))
            flows[(c, d)] = float(val(("f", c, d)))

    orientations: dict[int, float] = {}
    for r in ris:
        if model.has_var(("phi", r)):
            orientations[r] = float(val(("phi", r)))

    theta_per_tp = tuple(float(tables.theta[t, a, b])
                         for t, (a, b) in enumerate(assignments))
    len_per_tp = tuple(0.5 * float(tables.len_tc[t, a] + tables.len_tc[t, b])
                       for t, (a, b) in enumerate(assignments))

    if mode == MODE_RIS:
        total_cost = cfg.price_iab * len(iab) + cfg.price_ris * len(ris)
    else:
        total_cost = cfg.price_iab * len(iab)

    objective = (cfg.mu / cfg.theta_norm_rad * sum(theta_per_tp)
                 - (1.0 - cfg.mu) / cfg.len_norm_m * sum(len_per_tp))
    solver_objective = model.evaluate_objective(solution)
    if abs(objective - solver_objective) > DECODE_TOL * max(1.0, abs(solver_objective)):
        raise PlannerError(
            f"decode drift: recomputed objective {objective!r} vs "
            f"solver objective {solver_objective!r}")

    return NetworkPlan(
        mode=mode,
        donor=donor,
        iab_nodes=iab,
        ris_sites=ris,
        assignments=assignments,
        backhaul_edges=tuple(edges),
        flows_mbps=flows,
        wired_inflow_mbps=wired,
        orientations_rad=orientations,
        theta_per_tp=theta_per_tp,
        len_per_tp=len_per_tp,
        total_cost=total_cost,
        objective_value=objective,
    )


# -- plan persistence ---------------------------------------------------


def plan_to_dict(plan: NetworkPlan) -> dict:
    return {
        "version": PLAN_FORMAT_VERSION,
        "mode": plan.mode,
        "donor": plan.donor,
        "iab_nodes": list(plan.iab_nodes),
        "ris_sites": list(plan.ris_sites),
        "assignments": [list(a) for a in plan.assignments],
        "backhaul": [list(e) for e in plan.backhaul_edges],
        "flows": [[c, d, plan.flows_mbps[(c, d)]] for (c, d) in plan.backhaul_edges],
        "orientations": [[r, plan.orientations_rad[r]]
                         for r in sorted(plan.orientations_rad)],
        "metrics": {
            "theta_per_tp": list(plan.theta_per_tp),
            "len_per_tp": list(plan.len_per_tp),
            "total_cost": plan.total_cost,
            "objective_value": plan.objective_value,
            "wired_inflow_mbps": plan.wired_inflow_mbps,
        },
    }


def plan_from_dict(doc: dict) -> NetworkPlan:
    try:
        if doc["version"] != PLAN_FORMAT_VERSION:
            raise PlannerError(f"unsupported plan file version {doc['version']!r}")
        metrics = doc["metrics"]
        return NetworkPlan(
            mode=doc["mode"],
            donor=doc["donor"],
            iab_nodes=tuple(doc["iab_nodes"]),
            ris_sites=tuple(doc["ris_sites"]),
            assignments=tuple((a, b) for a, b in doc["assignments"]),
            backhaul_edges=tuple((c, d) for c, d in doc["backhaul"]),
            flows_mbps={(c, d): f for c, d, f in doc["flows"]},
            wired_inflow_mbps=metrics["wired_inflow_mbps"],
            orientations_rad={r: phi for r, phi in doc["orientations"]},
            theta_per_tp=tuple(metrics["theta_per_tp"]),
            len_per_tp=tuple(metrics["len_per_tp"]),
            total_cost=metrics["total_cost"],
            objective_value=metrics["objective_value"],
        )
    except KeyError as exc:
        raise PlannerError(f"plan document missing field {exc.args[0]!r}") from None


def save_plan(plan: NetworkPlan, path: str | Path) -> None:
    Path(path).write_text(json.dumps(plan_to_dict(plan), indent=2) + "\n")


def load_plan(path: str | Path) -> NetworkPlan:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise PlannerError(f"cannot read plan {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PlannerError(f"plan file is not valid JSON: {exc}") from exc
    return plan_from_dict(doc)
