"""
Independent sampling versus the coordination function
======================================================

With independent parameters many shapes share a cosine pair yet differ in
formants. Along the cycle the relation tightens into a function.
"""

from tractlab import ExperimentConfig, functional_check, run_condition, vowel_space_hull

N = 1000  # the acceptance suite uses 5000

runs = {c: run_condition(ExperimentConfig("drm", c, N, rng_seed=42)) for c in ("C1", "C2")}

# %%
for cond, recs in runs.items():
    rep = functional_check(recs)
    print(f"{cond}: {rep.n_bins} bins, p95 spread {rep.spread_p95:.3f}")

# %%
# The cycle still reaches almost every formant pair of the free model.
hull = vowel_space_hull(runs["C2"])
print("C1 coverage", hull.coverage(runs["C1"]))
