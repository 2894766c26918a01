"""Steps per layer for the three incremental schedules."""
from lwssl.trainer import PretrainPlan, ScheduleShape, build_schedule

L, total = 6, 300
for kind in ("more-at-bottom", "uniform", "fewer-at-bottom"):
    print(f"{kind:16s}", build_schedule(ScheduleShape(kind), L, total))

# two layers per block: three blocks, steps split by the same profile
plan = PretrainPlan("ILW", "CPC", total, layers_per_step=2)
for first, last, steps in plan.blocks(L):
    print(f"layers {first}-{last}: {steps} steps")
