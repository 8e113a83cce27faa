"""Train a small policy end to end on a few dozen oracle episodes, then roll
it out closed-loop. Desk-scale: a few minutes of CPU.

Run:  python3 gallery/03_train_small_policy.py [--steps 1500]
"""

import argparse
import time

from coil.demos import collect_episode, hindsight_relabel, plan_transport, task_scene_config
from coil.evaluation import PRESETS, eval_suite, policy_actor
from coil.policy import PolicyConfig
from coil.training import TrainConfig, train
from coil.world import TASK_TRANSPORT, build_scene

parser = argparse.ArgumentParser()
parser.add_argument("--steps", type=int, default=1500)
parser.add_argument("--episodes", type=int, default=60)
parser.add_argument("--out", default="runs/gallery_small")
args = parser.parse_args()

print(f"collecting {args.episodes} oracle episodes...")
cfg_scene = task_scene_config(TASK_TRANSPORT)
records, relabels = [], []
seed = 0
while len(records) < args.episodes:
    s = build_scene(cfg_scene, seed)
    rec = collect_episode(s, plan_transport(s, seed), TASK_TRANSPORT, n_points=48)
    if rec.success:
        records.append(rec)
        relabels.append(hindsight_relabel(rec))
    seed += 1

policy = PolicyConfig(d_model=48, n_layers=2, n_heads=2, N=48,
                      d_proprio=32, unet_channels=48)
cfg = TrainConfig(batch_size=16, steps=args.steps, lr=5e-4, policy=policy,
                  bucket_size=8, log_every=max(1, args.steps // 10))
t0 = time.time()
w, metrics = train(records, relabels, cfg, args.out,
                   log_fn=lambda e: print(f"  step {e['step']:>5}  loss {e['loss']:.3f}"))
print(f"trained in {time.time()-t0:.0f}s; checkpoint in {args.out}/checkpoint")

print("\nclosed-loop evaluation (10 scenes, sparse preset):")
report = eval_suite(policy_actor(w), TASK_TRANSPORT, PRESETS["sparse"], n=10, seed=42)
print(f"  success rate {report['success_rate']:.2f}, "
      f"tracking error {report['mean_tracking_error']}")
print("(the full desk run uses configs/desk_transport.json: 2000 episodes, 30k steps)")
