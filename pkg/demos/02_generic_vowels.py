"""
Eight vowels from two cosines
=============================
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from tractlab import formants, fourier_amplitudes, generic_area_function, vowel_point, vowel_targets

out = Path("demo_out")
out.mkdir(exist_ok=True)

# %%
fig, axes = plt.subplots(2, 4, figsize=(12, 5), sharey=True)
chart = []
for ax, (label, theta) in zip(axes.ravel(), vowel_targets()):
    point = vowel_point(label)
    area = generic_area_function(point)
    fs = formants(area)
    chart.append((label, fs.f1, fs.f2))
    pair = fourier_amplitudes(point)
    ax.step(area.positions(), area.areas, where="mid", color="k")
    ax.set_title(f"[{label}] a1={pair.a1:+.2f} a2={pair.a2:+.2f}", fontsize=9)
fig.tight_layout()
fig.savefig(out / "generic_areas.svg")

# %%
# [a] opens at the lips, [i] at the back.
for label, f1, f2 in chart:
    print(f"[{label}] {f1:7.1f} {f2:7.1f}")

# %%
# The ring closes on itself in the (f1, f2) plane.
fig, ax = plt.subplots()
f1 = [c[1] for c in chart]
f2 = [c[2] for c in chart]
ax.plot(f1 + f1[:1], f2 + f2[:1], "o-")
for label, x, y in chart:
    ax.annotate(label, (x, y))
ax.set_xlabel("f1 (Hz)")
ax.set_ylabel("f2 (Hz)")
fig.savefig(out / "generic_chart.svg")
print("mean f1", np.mean(f1))
