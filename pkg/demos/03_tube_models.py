"""
Two tube models driven by the same cycle
========================================

The 4-region model and the constriction model share the cycle angle but
not the geometry.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from tractlab import CyclePoint, get_model

out = Path("demo_out")
out.mkdir(exist_ok=True)

drm = get_model("drm")
fant = get_model("fant")
print(drm.coordination)
print(fant.coordination)

# %%
fig, axes = plt.subplots(2, 1, figsize=(8, 6), sharex=True)
for theta in np.linspace(0, 2 * np.pi, 6, endpoint=False):
    point = CyclePoint(1.0, theta)
    for ax, model in zip(axes, (drm, fant)):
        area = model.area_function(model.params_at(point))
        ax.step(area.positions(), area.areas, where="mid", label=f"{theta:.2f}")
axes[0].set_title("drm")
axes[1].set_title("fant")
axes[1].set_xlabel("x (cm)")
axes[0].legend(fontsize=7)
fig.savefig(out / "tube_models.svg")

# %%
# The constriction model changes length along the cycle.
for theta in (np.pi / 3, 4 * np.pi / 3):
    params = fant.params_at(CyclePoint(1.0, theta))
    print(f"theta={theta:.3f}  xc={params[0]:.1f}  length={params[3]:.2f} cm")
