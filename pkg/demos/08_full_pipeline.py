"""The whole pipeline as a library call, plus the three-trajectory comparison.

Equivalent to `sonospine scan` / `sonospine compare`, writing sessions under
demos/output/.  Uses a lightened configuration so the comparison finishes in
about a minute; drop the overrides for the full default resolution.
"""

import json
import os

from sonospine import pipeline

out = os.path.join(os.path.dirname(__file__), "output")

config = pipeline.default_config_text(seed=0)
# lighten the run for demo purposes
config = config.replace("n_scanlines = 128", "n_scanlines = 64")
config = config.replace("samples_per_ray = 256", "samples_per_ray = 128")
config = config.replace("step_mm = 2.0", "step_mm = 4.0")
config = config.replace("atlas_size = 4", "atlas_size = 2")
config = config.replace("n_gt_samples = 2048", "n_gt_samples = 1024")

print("=== single scan session ===")
session = pipeline.run_scan(os.path.join(out, "session"), config_text=config)
print(open(session.path("report.txt")).read())

print("=== overlay export (offline replay) ===")
cfg = pipeline.load_config(session.path("config.toml"))
pipeline.stage_replay(session, cfg, slab_mm=1.0)
overlays = sorted(os.listdir(session.path("overlays")))
nonempty = sum(os.path.getsize(session.path("overlays", f)) > 0 for f in overlays)
print(f"{len(overlays)} per-frame overlay files, {nonempty} non-empty\n")

print("=== trajectory comparison (linear / ushape / zigzag) ===")
comparison = pipeline.compare_trajectories(os.path.join(out, "compare"),
                                           config_text=config)
print(open(os.path.join(out, "compare", "comparison.txt")).read())

best_counts = {m: 0 for m in comparison["methods"]}
for cell in comparison["cells"].values():
    for m in cell["best"]:
        best_counts[m] += 1
print("best-cell counts:", json.dumps(best_counts))
