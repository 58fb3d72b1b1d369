"""
Transfer functions and formant picking
======================================
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from tractlab import (LOSSLESS, LOSSY, CyclePoint, find_formants, formants, get_model,
                      transfer_spectrum)

out = Path("demo_out")
out.mkdir(exist_ok=True)

model = get_model("fant")
area = model.area_function(model.params_at(CyclePoint(1.0, 3.14159)))

# %%
# Losses turn the poles into finite peaks.
fig, ax = plt.subplots()
for name, consts in (("lossless", LOSSLESS), ("lossy", LOSSY)):
    spec = transfer_spectrum(area, constants=consts)
    ax.plot(spec.frequencies, spec.magnitude_db, label=name)
    print(name, "grid", find_formants(spec).as_tuple(), "refined", formants(area, consts).as_tuple())
ax.set_xlabel("frequency (Hz)")
ax.set_ylabel("dB")
ax.legend()
fig.savefig(out / "spectra.svg")

# %%
# Uniform tube: odd quarter-wave resonances.
neutral = get_model("generic").neutral_area()
print(formants(neutral, count=3))
