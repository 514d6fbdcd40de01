"""Assign vertebra levels to surface points: geometric baseline vs toy network.

The trainable path takes a couple of minutes (it ray-casts a small phantom
population and runs 100 epochs); pass --quick to skip it.
"""

import sys
import time

import numpy as np

from sonospine.datasets import build_classifier_dataset, raycast_views
from sonospine.labeling import (
    TrainConfig,
    classify_points,
    label_accuracy,
    label_by_geometry,
    train_point_classifier,
)
from sonospine.phantom import SpineParams, generate_synthetic_spine

spine = generate_synthetic_spine(SpineParams(), seed=0)
cloud = raycast_views(spine, 1, np.random.default_rng(5), grid_spacing=2.0)[0]
print(f"ray-cast cloud: {len(cloud)} points, levels "
      f"{np.bincount(cloud.labels)[1:].tolist()}")

geo = label_by_geometry(cloud.points, spine.axis)
print(f"geometric labeler accuracy: {label_accuracy(geo, cloud.labels):.1%}")

if "--quick" in sys.argv:
    sys.exit(0)

print("\nbuilding a small training population (ray-cast views of 6 phantoms)...")
t0 = time.time()
data = build_classifier_dataset(n_phantoms=6, views_per_phantom=6, seed=100, n_points=384)
print(f"  {len(data)} labeled clouds in {time.time() - t0:.0f} s")

cfg = TrainConfig(epochs=100, learning_rate=1e-4, batch_size=4, seed=0)
t0 = time.time()
history = []
model = train_point_classifier(data, cfg, log=lambda e, v: history.append(v))
print(f"  trained 100 epochs in {time.time() - t0:.0f} s; "
      f"val loss {history[0]:.3f} -> {history[-1]:.3f}")

pred = classify_points(model, cloud.points)
print(f"classifier accuracy on the phantom cloud: "
      f"{label_accuracy(pred, cloud.labels):.1%}")
print(f"agreement with the geometric labeler:     "
      f"{(pred.labels == geo.labels).mean():.1%}")
