"""Pretrain with CPC end to end and layer by layer, fine-tune on source labels.

One seed, reduced step counts; takes a couple of minutes. The full matrix
lives in the bundled ``full`` config (``lwssl run full``).
"""
import time

from lwssl.encoder import EncoderConfig, EncoderState
from lwssl.experiment import DataConfig, build_data
from lwssl.probe import ProbeHead, evaluate, finetune
from lwssl.trainer import PretrainPlan, pretrain

cfg = EncoderConfig()
data = build_data(DataConfig(n_eval=100), seed=0)


def fine_tuned(state):
    head = ProbeHead.init(cfg.model_dim, 8, [0, 7])
    finetune(state, head, data.source_labeled, 200, seed=0)
    return evaluate(state, head, data.eval_sets).fer


t0 = time.time()
print("supervised only   ", fine_tuned(EncoderState.init(cfg, 0)))
for regime in ("E2E", "ILW"):
    state = EncoderState.init(cfg, 0)
    res = pretrain(state, PretrainPlan(regime, "CPC", 200), data.pretrain_pool, seed=0)
    peak = max(m["activation_bytes"] for m in res.metrics)
    print(f"{regime} CPC + tune  ", fine_tuned(state), f"max activations {peak} B")
print(f"{time.time() - t0:.0f}s")
