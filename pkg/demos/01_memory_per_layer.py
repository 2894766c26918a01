"""How much memory does one training step need, layer by layer?

Plans the full-size 17-layer encoder under incremental layer-wise CPC, then
checks the planner against a measured step on a small encoder.
"""
import numpy as np

from lwssl.data import make_batch
from lwssl.encoder import EncoderConfig, EncoderState
from lwssl.losses import default_config
from lwssl.membudget import QuantizationMode, plan_step
from lwssl.trainer import Adam, block_step, head_for_layer

MB = 2 ** 20
big = EncoderConfig.paper_scale()

# one layer at a time: bottom is cheap, top pays for the frozen weights below it
print("layer  train MB  frozen MB  peak MB  (686 frames, batch 1)")
for layer in (1, 5, 9, 13, 17):
    r = plan_step(big, layer, 686, 1)
    print(f"{layer:5d}  {r.training_bytes / MB:8.1f}  {r.frozen_weight_bytes / MB:9.1f}  {r.peak_bytes / MB:7.1f}")

e2e = plan_step(big, (1, 17), 686, 1)
print(f"  E2E  {e2e.training_bytes / MB:8.1f}  {0:9.1f}  {e2e.peak_bytes / MB:7.1f}")

# shorter inputs shrink activations linearly
print("\ninput  bottom peak MB  top peak MB")
for n in (686, 300, 200, 100):
    print(f"{n:5d}  {plan_step(big, 1, n, 1).peak_bytes / MB:14.1f}  {plan_step(big, 17, n, 1).peak_bytes / MB:11.1f}")

q = plan_step(big, 17, 686, 1, q=QuantizationMode("int8"))
print(f"\ntop layer with int8 frozen weights: {q.peak_bytes / MB:.1f} MB")

# now measure: the tape counts every float buffer kept for backward
cfg = EncoderConfig(num_layers=4)
rng = np.random.default_rng(0)
batch = make_batch([(rng.normal(size=(60, cfg.feature_dim)).astype(np.float32), None, 1) for _ in range(4)],
                   cfg.domain_onehot_dim)
state = EncoderState.init(cfg, 0)
lc = default_config("CPC")
res = block_step(state, 3, 3, head_for_layer(state, "CPC", lc, 0, 3), batch, "CPC", lc, Adam(), 0, 0)
plan = plan_step(cfg, 3, 60, 4, "CPC")
for c in ("activation_bytes", "grad_bytes", "optimizer_bytes", "transient_bytes", "peak_bytes"):
    print(f"{c:18s} measured {getattr(res.report, c):9d}  planned {getattr(plan, c):9d}")
