"""
Three-phase mixing of seed configurations
=========================================

A cycle angle blends three parameter vectors. Each seed is reached at its
anchor angle and opposite angles mirror around the mean.
"""

import numpy as np

from tractlab import ComponentTriple, CyclePoint, eval_coordination, mix_threephase, to_coordination

# %%
# Seeds of a 4-parameter model, one column per parameter.
seed = ComponentTriple(i=[3.0, 0.5, 1.5, -1.0], j=[-1.0, 0.0, 2.0, 3.0], k=[1.0, 2.5, -0.5, 1.0])

for theta in (np.pi / 3, np.pi, 5 * np.pi / 3):
    print(f"theta={theta:.4f}", mix_threephase(seed, theta))

# %%
# The same cycle as one cosine per parameter.
coord = to_coordination(seed)
print("omega", coord.omega)
print("psi1 ", coord.psi1)
print("psi2 ", coord.psi2)

theta = 0.8
print(np.allclose(mix_threephase(seed, theta), eval_coordination(coord, CyclePoint(1.0, theta))))

# %%
# Shrinking rho pulls every parameter toward omega.
for rho in (1.0, 0.5, 0.0):
    print(rho, eval_coordination(coord, CyclePoint(rho, theta)))
