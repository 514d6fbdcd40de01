"""Pose algebra and the pixel-to-world calibration chain.

Walks a pixel through probe mounting, robot pose and base registration, and
shows that composing the chain once equals applying it step by step.
"""

import numpy as np

from sonospine.transforms import (
    CalibrationChain,
    RigidTransform,
    canonical_image_to_probe,
    compose,
    invert,
    pixel_to_world,
    world_to_pixel,
)

# a probe mounted 120 mm out from the flange, robot arm at a tilted pose
t_probe_ee = RigidTransform.from_translation((0, 0, 120.0))
t_ee_base = RigidTransform.from_axis_angle((0, 1, 0), np.deg2rad(25), (400.0, 50.0, 300.0))
t_base_world = RigidTransform.from_translation((-200.0, 0.0, 0.0))

chain = CalibrationChain(
    t_base_world=t_base_world,
    t_ee_base=t_ee_base,
    t_probe_ee=t_probe_ee,
    t_image_probe=canonical_image_to_probe(),
    pixel_spacing=(0.4, 0.5),  # mm per pixel along width / depth
)

print("pixel (column, row) -> world (mm):")
for uv in [(0, 0), (64, 0), (64, 128), (127, 255)]:
    w = pixel_to_world(chain, *uv)
    print(f"  {uv} -> {np.round(w, 2)}")

# round trip
uv = np.array([101.25, 37.5])
w = pixel_to_world(chain, uv[0], uv[1])
back = world_to_pixel(chain, w)
print(f"\nround trip {uv} -> {np.round(w, 3)} -> {back}")

# composing the chain once == applying the four transforms in sequence
p_img = np.array([40 * 0.4, 200 * 0.5, 0.0])
step_by_step = t_base_world.apply(t_ee_base.apply(t_probe_ee.apply(
    canonical_image_to_probe().apply(p_img))))
at_once = chain.image_to_world().apply(p_img)
print(f"\nassociativity error: {np.abs(step_by_step - at_once).max():.2e} mm")

# transforms form a group: inverse undoes composition
t = compose(t_ee_base, t_probe_ee)
err = np.abs(compose(t, invert(t)).matrix() - np.eye(4)).max()
print(f"compose/invert round-trip error: {err:.2e}")
