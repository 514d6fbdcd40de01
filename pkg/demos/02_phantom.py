"""Generate the synthetic lumbar phantom and inspect its meshes.

Writes the five vertebra PLY files plus an index JSON to demos/output/phantom/.
"""

import os

import numpy as np

from sonospine.mesh import sample_surface
from sonospine.phantom import SpineParams, generate_synthetic_spine, save_spine_model

out = os.path.join(os.path.dirname(__file__), "output", "phantom")

params = SpineParams()
model = generate_synthetic_spine(params, seed=0)

print(f"level pitch (gap + body height): {params.level_pitch:.1f} mm")
print(f"{'level':>5} {'verts':>7} {'faces':>7} {'area mm^2':>10} {'watertight':>10} {'centroid y':>11}")
for level, mesh in model.vertebrae:
    print(f"{level:>5} {len(mesh.vertices):>7} {len(mesh.faces):>7} "
          f"{mesh.area():>10.0f} {str(mesh.is_watertight()):>10} "
          f"{mesh.centroid()[1]:>11.2f}")

lo, hi = model.bounds()
print(f"\nspine bounds: {np.round(lo, 1)} .. {np.round(hi, 1)} mm")
print(f"axis: {model.axis}")

# jitter makes every seed a different subject
for seed in (1, 2):
    other = generate_synthetic_spine(params, seed=seed)
    a0 = model.mesh(3).area()
    a1 = other.mesh(3).area()
    print(f"seed {seed}: L3 area {a1:.0f} mm^2 ({(a1 - a0) / a0:+.1%} vs seed 0)")

save_spine_model(model, out)
print(f"\nwrote {out}/vertebra_L*.ply")

# uniform surface sampling for ground-truth clouds
pts = sample_surface(model.mesh(1), 2000, seed=0)
print(f"sampled {len(pts)} points on L1; y range "
      f"[{pts[:, 1].min():.1f}, {pts[:, 1].max():.1f}] mm")
