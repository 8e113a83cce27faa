"""Tour of the planar world: randomized scenes, the scripted transport and
sweep planners, and the task success predicates.

Run:  python3 gallery/01_world_and_oracle_demos.py
"""

import numpy as np

from coil.demos import collect_episode, plan_sweep, plan_transport, task_scene_config
from coil.world import TASK_SWEEP, TASK_TRANSPORT, build_scene, observe

rng = np.random.default_rng(0)

print("== scene anatomy ==")
scene = build_scene(task_scene_config(TASK_TRANSPORT), seed=7)
for b in scene.bodies:
    print(f"  {b.id:<3} {b.kind:<12} {b.shape_name:<12} at "
          f"({b.pose.x:.2f}, {b.pose.y:.2f}, {b.pose.theta:+.2f})")
print(f"  gripper at ({scene.gripper.pose.x:.2f}, {scene.gripper.pose.y:.2f}), "
      f"{scene.keypoints.count} keypoints sampled on the movables")

obs = observe(scene, n_points=32, seed=0)
print(f"  observation: {obs.points.shape[0]} boundary points, proprio {obs.proprio.round(3)}")

print("\n== transport oracle ==")
for seed in range(3):
    s = build_scene(task_scene_config(TASK_TRANSPORT), seed)
    rec = collect_episode(s, plan_transport(s, seed), TASK_TRANSPORT)
    moved = np.linalg.norm(rec.tracks[-1] - rec.tracks[0], axis=1).max()
    print(f"  seed {seed}: T={rec.length:<3} success={rec.success} "
          f"max keypoint travel {moved:.2f} m")

print("\n== sweep oracle ==")
for seed in range(3):
    s = build_scene(task_scene_config(TASK_SWEEP), seed)
    rec = collect_episode(s, plan_sweep(s, seed), TASK_SWEEP)
    print(f"  seed {seed}: T={rec.length:<3} success={rec.success}")

print("\nBoth planners simulate while emitting actions, so every plan")
print("replays bit-exactly through world.step.")
