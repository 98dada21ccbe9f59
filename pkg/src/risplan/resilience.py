"""Monte Carlo blockage evaluation of a deployed plan.

Each trial drops short linear obstacles at uniform positions and
orientations and gives every test point a self-blockage sector (span
2*pi/3 or 8*pi/9 with equal probability, uniform center). A test point
is served while at least one of its two access links survives; station
to station and station to surface legs are exempt from nomadic blockage
(their fixed-obstacle exposure was already settled at planning time).

Within one trial the obstacle list is a fixed ordered sample and count k
activates its first k entries, so the served set shrinks monotonically
as k grows; trial seeds are spawned from (base_seed, trial_index) via
numpy's SeedSequence, making serial and parallel runs agree bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import Point2D, Sector, Segment2D, azimuth, circular_distance, segments_intersect
from .planner import MODE_BASELINE, MODE_RIS, NetworkPlan
from .scenario import Scenario

DEFAULT_OBSTACLE_LENGTH_M = 5.0
SECTOR_SPANS = (2.0 * math.pi / 3.0, 8.0 * math.pi / 9.0)

LINK_ACCESS_DIRECT = "access_direct"
LINK_ACCESS_REFLECTED_TP_LEG = "access_reflected_tp_leg"
LINK_BS_RIS_LEG = "bs_ris_leg"
LINK_BACKHAUL = "backhaul"

_TP_SIDE_KINDS = (LINK_ACCESS_DIRECT, LINK_ACCESS_REFLECTED_TP_LEG)
_EXEMPT_KINDS = (LINK_BS_RIS_LEG, LINK_BACKHAUL)


class ResilienceError(ValueError):
    """Bad evaluation inputs (mismatched grids, structurally broken plan)."""


@dataclass(frozen=True)
class BlockageTrial:
    trial_seed: int
    obstacles: tuple[Segment2D, ...]
    self_blockage: tuple[Sector, ...]


@dataclass(frozen=True)
class ResilienceReport:
    obstacle_counts: tuple[int, ...]
    served_mean: tuple[float, ...]
    served_std: tuple[float, ...]
    per_trial: tuple[tuple[float, ...], ...]  # [trial][count index]
    n_trials: int
    base_seed: int


def trial_seed_for(base_seed: int, trial_index: int) -> int:
    """Splittable per-trial seed: 64-bit word 0 of
    SeedSequence([base_seed, trial_index])."""
    ss = np.random.SeedSequence([base_seed, trial_index])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def sample_trial(area_width: float, area_height: float, max_obstacles: int,
                 tp_positions: tuple[Point2D, ...], seed: int,
                 obstacle_length_m: float = DEFAULT_OBSTACLE_LENGTH_M) -> BlockageTrial:
    """Draw one trial: ``max_obstacles`` ordered obstacles, then one sector
    per test point. Draw order is fixed (obstacle center x, y, angle for
    each obstacle; span choice then center for each sector), so a seed
    pins the whole trial."""
    if max_obstacles < 0:
        raise ResilienceError("max_obstacles must be non-negative")
    rng = np.random.default_rng(seed)
    half = obstacle_length_m / 2.0
    obstacles = []
    for _ in range(max_obstacles):
        cx = rng.uniform(0.0, area_width)
        cy = rng.uniform(0.0, area_height)
        ang = rng.uniform(0.0, math.pi)
        dx, dy = half * math.cos(ang), half * math.sin(ang)
        obstacles.append(Segment2D(Point2D(float(cx - dx), float(cy - dy)),
                                   Point2D(float(cx + dx), float(cy + dy))))
    sectors = []
    for tp in tp_positions:
        span = SECTOR_SPANS[0] if rng.random() < 0.5 else SECTOR_SPANS[1]
        center = rng.uniform(0.0, 2.0 * math.pi)
        sectors.append(Sector(origin=tp, center_azimuth=float(center), span=span))
    return BlockageTrial(trial_seed=int(seed), obstacles=tuple(obstacles),
                         self_blockage=tuple(sectors))


def is_link_blocked(link: Segment2D, trial: BlockageTrial, tp_index: int,
                    link_kind: str, active_obstacles: int | None = None) -> bool:
    """Blockage verdict for one link under one trial.

    Terminal-side links (``link.a`` must be the test point) are blocked by
    any active obstacle crossing them or by the test point's self-blockage
    sector containing their azimuth. Backhaul and station-surface legs are
    never blocked here. ``active_obstacles`` limits the obstacle prefix
    (default: all)."""
    if link_kind in _EXEMPT_KINDS:
        return False
    if link_kind not in _TP_SIDE_KINDS:
        raise ResilienceError(f"unknown link kind {link_kind!r}")
    sector = trial.self_blockage[tp_index]
    ray = azimuth(link.a, link.b)
    if circular_distance(ray, sector.center_azimuth) <= sector.span / 2.0:
        return True
    n_active = len(trial.obstacles) if active_obstacles is None else active_obstacles
    for obstacle in trial.obstacles[:n_active]:
        if segments_intersect(link, obstacle):
            return True
    return False


def _check_plan_structure(plan: NetworkPlan, scenario: Scenario) -> None:
    if plan.mode not in (MODE_RIS, MODE_BASELINE):
        raise ResilienceError(f"unknown plan mode {plan.mode!r}")
    if len(plan.assignments) != scenario.n_test_points:
        raise ResilienceError("plan does not assign every test point")
    n_c = scenario.n_sites
    for t, (a, b) in enumerate(plan.assignments):
        if not (0 <= a < n_c and 0 <= b < n_c):
            raise ResilienceError(f"assignment of test point {t} references unknown site")


def _first_blocking_index(link: Segment2D, obstacles: tuple[Segment2D, ...]) -> int:
    for i, obstacle in enumerate(obstacles):
        if segments_intersect(link, obstacle):
            return i
    return len(obstacles)


def evaluate(plan: NetworkPlan, scenario: Scenario, obstacle_counts: list[int],
             n_trials: int, base_seed: int, self_blockage: bool = True,
             obstacle_length_m: float = DEFAULT_OBSTACLE_LENGTH_M) -> ResilienceReport:
    """Served-test-point statistics across trials and obstacle counts.

    One trial samples max(obstacle_counts) obstacles; count k activates
    the first k of them (nested prefixes), so per-trial served counts are
    non-increasing in k. A test point is served if its primary or its
    secondary terminal-side link is unblocked. ``self_blockage=False``
    drops the sector rule, leaving only obstacle crossings.
    """
    counts = list(obstacle_counts)
    if not counts or any(k < 0 for k in counts) or counts != sorted(counts):
        raise ResilienceError("obstacle_counts must be non-negative and ascending")
    if n_trials < 1:
        raise ResilienceError("n_trials must be >= 1")
    _check_plan_structure(plan, scenario)

    tps = scenario.test_points
    sites = scenario.candidate_sites
    max_obstacles = counts[-1]
    n_t = scenario.n_test_points

    per_trial: list[tuple[float, ...]] = []
    for trial_index in range(n_trials):
        seed = trial_seed_for(base_seed, trial_index)
        trial = sample_trial(scenario.area_width, scenario.area_height,
                             max_obstacles, tps, seed, obstacle_length_m)
        # For each terminal-side link: sector verdict (count-independent)
        # and the first obstacle index that crosses it.
        sector_hits: list[tuple[bool, bool]] = []
        first_block: list[tuple[int, int]] = []
        for t, (a, b) in enumerate(plan.assignments):
            primary = Segment2D(tps[t], sites[a])
            secondary = Segment2D(tps[t], sites[b])
            if self_blockage:
                sector = trial.self_blockage[t]
                hit_p = circular_distance(azimuth(tps[t], sites[a]),
                                          sector.center_azimuth) <= sector.span / 2.0
                hit_s = circular_distance(azimuth(tps[t], sites[b]),
                                          sector.center_azimuth) <= sector.span / 2.0
            else:
                hit_p = hit_s = False
            sector_hits.append((hit_p, hit_s))
            first_block.append((_first_blocking_index(primary, trial.obstacles),
                                _first_blocking_index(secondary, trial.obstacles)))

        row = []
        for k in counts:
            served = 0
            for t in range(n_t):
                hit_p, hit_s = sector_hits[t]
                fb_p, fb_s = first_block[t]
                primary_ok = (not hit_p) and fb_p >= k
                secondary_ok = (not hit_s) and fb_s >= k
                if primary_ok or secondary_ok:
                    served += 1
            row.append(served / n_t)
        per_trial.append(tuple(row))

    matrix = np.array(per_trial)
    return ResilienceReport(
        obstacle_counts=tuple(counts),
        served_mean=tuple(float(v) for v in matrix.mean(axis=0)),
        served_std=tuple(float(v) for v in matrix.std(axis=0)),
        per_trial=tuple(per_trial),
        n_trials=n_trials,
        base_seed=int(base_seed),
    )


def resilience_gain(ris_report: ResilienceReport,
                    baseline_report: ResilienceReport) -> tuple[float, ...]:
    """Per-count relative gain of one report over another:
    mean_a / mean_b - 1, with 0 where both means are 0."""
    if (ris_report.obstacle_counts != baseline_report.obstacle_counts
            or ris_report.n_trials != baseline_report.n_trials):
        raise ResilienceError("mismatched report grids")
    gains = []
    for a, b in zip(ris_report.served_mean, baseline_report.served_mean):
        if a == 0.0 and b == 0.0:
            gains.append(0.0)
        elif b == 0.0:
            gains.append(math.inf)
        else:
            gains.append(a / b - 1.0)
    return tuple(gains)


# -- report serialization -------------------------------------------------


def report_trials_csv(report: ResilienceReport) -> str:
    lines = ["obstacle_count,trial,served_fraction"]
    for j, k in enumerate(report.obstacle_counts):
        for i in range(report.n_trials):
            lines.append(f"{k},{i},{report.per_trial[i][j]!r}")
    return "\n".join(lines) + "\n"


def report_summary_csv(report: ResilienceReport) -> str:
    lines = ["obstacle_count,mean,std"]
    for j, k in enumerate(report.obstacle_counts):
        lines.append(f"{k},{report.served_mean[j]!r},{report.served_std[j]!r}")
    return "\n".join(lines) + "\n"


def report_to_dict(report: ResilienceReport, plan_digest: str | None = None,
                   scenario_digest: str | None = None) -> dict:
    doc = {
        "obstacle_counts": list(report.obstacle_counts),
        "served_mean": list(report.served_mean),
        "served_std": list(report.served_std),
        "per_trial": [list(row) for row in report.per_trial],
        "n_trials": report.n_trials,
        "base_seed": report.base_seed,
        "trial_seeds": [trial_seed_for(report.base_seed, i)
                        for i in range(report.n_trials)],
    }
    if plan_digest is not None:
        doc["plan_digest"] = plan_digest
    if scenario_digest is not None:
        doc["scenario_digest"] = scenario_digest
    return doc
