"""Hindsight relabeling and granularity subsampling: one oracle episode
becomes task specifications at any spatial/temporal density.

Run:  python3 gallery/02_hindsight_specs.py
"""

import numpy as np

from coil.demos import (AugmentConfig, collect_episode, hindsight_relabel,
                        plan_transport, subsample_spec, subsample_spec_exact,
                        task_scene_config)
from coil.specdoc import serialize_spec_document, spec_document_from_task_spec
from coil.world import TASK_TRANSPORT, build_scene

scene = build_scene(task_scene_config(TASK_TRANSPORT), seed=3)
record = collect_episode(scene, plan_transport(scene, 3), TASK_TRANSPORT)
dense = hindsight_relabel(record)
T, M, D = dense.values.shape
print(f"episode: T={T} steps, M={M} keypoints -> dense correspondence {dense.values.shape}")

print("\nrandom training-time granularities (flow randomization):")
cfg = AugmentConfig()
for seed in range(5):
    spec = subsample_spec(dense, cfg, seed)
    print(f"  seed {seed}: H={spec.H:<2} K={spec.K:<2} "
          f"times {spec.time_indices[:6].tolist()}{'...' if spec.H > 6 else ''}")

print("\nevaluation presets:")
for name, (K, H) in {"sparse": (5, 5), "medium": (8, 12), "dense": (32, 32)}.items():
    spec = subsample_spec_exact(dense, H=H, K=K, seed=0)
    drift = np.linalg.norm(np.diff(spec.targets, axis=0), axis=2).sum(axis=0).max()
    print(f"  {name:<7} H={H:<3} K={K:<3} longest keypoint path {drift:.2f} m")

doc = spec_document_from_task_spec(
    subsample_spec_exact(dense, H=3, K=2, seed=1), scene_seed=3, task=TASK_TRANSPORT)
print("\ncanonical SpecDocument (H=3, K=2):")
print(serialize_spec_document(doc))
