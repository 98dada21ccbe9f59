"""Monte Carlo blockage study of one plan: drop random 5 m obstacles,
give every terminal a body-blockage sector, and track the served share.

Run:  python demos/03_blockage_simulation.py
"""

from risplan import (PlanningConfig, RadioConfig, build_link_tables,
                     build_ris_model, evaluate, extract_plan, generate,
                     resilience_gain, solve, validate_plan)
from risplan.planner import build_baseline_model

scenario = generate(200.0, 260.0, n_cs=8, n_tp=5, seed=3)
radio = RadioConfig()
tables = build_link_tables(scenario, radio)

plans = {}
for mode, builder, budget in (("ris", build_ris_model, 3.5),
                              ("baseline", build_baseline_model, 4.0)):
    cfg = PlanningConfig(mu=1.0, budget=budget)
    model = builder(scenario, tables, cfg)
    result = solve(model)
    plan = extract_plan(model, result.variable_values, scenario, tables, cfg)
    assert validate_plan(plan, scenario, tables, cfg) == []
    plans[mode] = plan
    print(f"{mode}: cost {plan.total_cost:g}, "
          f"mean separation {plan.mean_theta:.2f} rad")

counts = [0, 10, 25, 50, 100, 200, 400]
reports = {mode: evaluate(plan, scenario, counts, n_trials=20, base_seed=42)
           for mode, plan in plans.items()}

print(f"\n{'obstacles':>9} {'ris served':>11} {'baseline':>9} {'gain':>7}")
gain = resilience_gain(reports["ris"], reports["baseline"])
for j, k in enumerate(counts):
    print(f"{k:9d} {reports['ris'].served_mean[j]:11.3f} "
          f"{reports['baseline'].served_mean[j]:9.3f} {gain[j]:7.1%}")

print("\nPer-trial served shares are non-increasing in the obstacle count "
      "(nested prefixes); self-blockage sectors are resampled per trial.")
