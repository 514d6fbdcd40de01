"""Plan the three scan trajectories over a phantom and compare their paths.

Saves a top-down plot to demos/output/trajectories.png when matplotlib is
available.
"""

import os

import numpy as np

from sonospine.phantom import SpineParams, generate_synthetic_spine
from sonospine.trajectories import plan_linear, plan_ushape, plan_zigzag
from sonospine.transforms import RigidTransform

DOWN = np.array([[1.0, 0, 0], [0, -1.0, 0], [0, 0, -1.0]])

model = generate_synthetic_spine(SpineParams(), seed=0)
lo, hi = model.bounds()
z0 = hi[2] + 20.0
y0, y1 = lo[1] - 10.0, hi[1] + 10.0

center_start = RigidTransform(DOWN, [0.0, y0, z0])
center_end = RigidTransform(DOWN, [0.0, y1, z0])
corner_start = RigidTransform(DOWN, [-15.0, y0, z0])
corner_end = RigidTransform(DOWN, [15.0, y1, z0])

plans = {
    "linear": plan_linear(center_start, center_end, 2.0),
    "ushape": plan_ushape(corner_start, corner_end, 2.0),
    "zigzag": plan_zigzag(corner_start, corner_end, 2.0),
}

print(f"{'kind':>8} {'poses':>6} {'segments':>9} {'length mm':>10}")
for kind, plan in plans.items():
    print(f"{kind:>8} {len(plan.poses):>6} {plan.n_segments:>9} {plan.path_length():>10.1f}")

step = np.diff([p.translation for p in plans["zigzag"].poses], axis=0)
print(f"\nzigzag max consecutive-pose spacing: {np.linalg.norm(step, axis=1).max():.3f} mm")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping the plot")
else:
    fig, axes = plt.subplots(1, 3, figsize=(12, 4), sharex=True, sharey=True)
    for ax, (kind, plan) in zip(axes, plans.items()):
        t = np.array([p.translation for p in plan.poses])
        ax.plot(t[:, 0], t[:, 1], ".-", ms=2, lw=0.8)
        ax.plot(t[0, 0], t[0, 1], "go", label="start")
        ax.plot(t[-1, 0], t[-1, 1], "rs", label="end")
        ax.set_title(kind)
        ax.set_xlabel("x (mm)")
        ax.set_aspect("equal")
    axes[0].set_ylabel("y (mm)")
    axes[0].legend(loc="lower right", fontsize=8)
    out = os.path.join(os.path.dirname(__file__), "output", "trajectories.png")
    os.makedirs(os.path.dirname(out), exist_ok=True)
    fig.tight_layout()
    fig.savefig(out, dpi=120)
    print(f"wrote {out}")
