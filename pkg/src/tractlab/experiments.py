"""
Simulation conditions and record datasets.

Conditions
----------
``C1``
    every model parameter drawn independently and uniformly on
    ``[Omega - |Psi1|, Omega + |Psi1|]``.
``C2``
    the coordination function: a deterministic ring at ``rho = 1`` over
    ``theta_grid_size`` angles, followed by ``sample_count`` draws with
    ``rho ~ U[0, 1]`` and ``theta ~ U[0, 2 pi)``.
``ring_sweep``
    the ring alone.
``vowel_sweep``
    the 8 characteristic vowels at ``rho = 1``.

Random draws use NumPy's PCG64 seeded from ``SeedSequence(rng_seed,
spawn_key=(draw_index,))``, so each draw depends only on the seed and its
index and serial and parallel runs agree exactly.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .acoustics import FormantSet, formants, frequency_grid
from .analysis import DctPair, DeviationPair, dct_coefficients, relative_deviations
from .errors import DegenerateHullError, FormantExtractionError, InvalidConfigError, InvalidInputError
from .generic_model import VOWELS
from .mixing import CyclePoint
from .models import MODEL_NAMES, get_model

__all__ = [
    "CONDITIONS",
    "RNG_ALGORITHM",
    "ExperimentConfig",
    "SimulationRecord",
    "VowelHull",
    "draw_rng",
    "run_condition",
    "simulate_point",
    "vowel_space_hull",
    "vowel_cycle_order",
    "same_cycle",
]

CONDITIONS = ("C1", "C2", "vowel_sweep", "ring_sweep")
RNG_ALGORITHM = "PCG64 via SeedSequence(seed, spawn_key=(draw_index,))"


@dataclass(frozen=True)
class ExperimentConfig:
    model: str = "drm"
    condition: str = "C2"
    sample_count: int = 5000
    rng_seed: int = 0
    theta_grid_size: int = 96
    model_options: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.model not in MODEL_NAMES:
            raise InvalidConfigError(f"unknown model {self.model!r}")
        if self.condition not in CONDITIONS:
            raise InvalidConfigError(f"unknown condition {self.condition!r}")
        if self.sample_count < 0 or (self.condition == "C1" and self.sample_count < 1):
            raise InvalidConfigError("sample_count must be >= 1 (>= 0 for C2)")
        if self.theta_grid_size < 1:
            raise InvalidConfigError("theta_grid_size must be >= 1")
        if not 0 <= int(self.rng_seed) < 2**64:
            raise InvalidConfigError("rng_seed must be an unsigned 64-bit integer")

    def build_model(self):
        return get_model(self.model, **self.model_options)


@dataclass
class SimulationRecord:
    condition: str
    index: int
    params: np.ndarray
    rho: float
    theta: float
    dct: DctPair
    formants: FormantSet
    deviations: DeviationPair
    failed: bool = False
    label: str = ""

    @property
    def f1(self):
        return self.formants.f1 if self.formants else float("nan")

    @property
    def f2(self):
        return self.formants.f2 if self.formants else float("nan")


def draw_rng(seed, draw_index):
    return np.random.Generator(np.random.PCG64(
        np.random.SeedSequence(int(seed), spawn_key=(int(draw_index),))))


def simulate_point(model, params, neutral, grid=None):
    """Area function, cosine pair, formants and deviations for one parameter vector."""
    area = model.area_function(params)
    pair = dct_coefficients(area)
    try:
        fs = formants(area, model.constants, grid)
    except FormantExtractionError:
        return pair, None, DeviationPair(float("nan"), float("nan")), True
    return pair, fs, relative_deviations(fs, neutral), False


def _plan(cfg, model):
    """Parameter vectors of a run: list of (condition, params, rho, theta, label)."""
    nan = float("nan")
    tasks = []
    if cfg.condition == "vowel_sweep":
        for label, theta in VOWELS:
            tasks.append(("vowel_sweep", model.params_at(CyclePoint(1.0, theta)), 1.0, theta, label))
        return tasks
    if cfg.condition in ("C2", "ring_sweep"):
        for t in range(cfg.theta_grid_size):
            theta = 2.0 * np.pi * t / cfg.theta_grid_size
            tasks.append((cfg.condition, model.params_at(CyclePoint(1.0, theta)), 1.0, theta, ""))
        if cfg.condition == "ring_sweep":
            return tasks
        for d in range(cfg.sample_count):
            rho, theta = draw_rng(cfg.rng_seed, d).random(2)
            theta *= 2.0 * np.pi
            tasks.append(("C2", model.params_at(CyclePoint(rho, theta)), rho, theta, ""))
        return tasks
    lo, hi = model.coordination.ranges()
    for d in range(cfg.sample_count):
        u = draw_rng(cfg.rng_seed, d).random(lo.size)
        tasks.append(("C1", lo + (hi - lo) * u, nan, nan, ""))
    return tasks


def _evaluate_chunk(model, neutral, grid, chunk):
    out = []
    for index, (cond, params, rho, theta, label) in chunk:
        pair, fs, dev, failed = simulate_point(model, params, neutral, grid)
        out.append(SimulationRecord(cond, index, np.asarray(params, dtype=float), float(rho),
                                    float(theta), pair, fs, dev, failed, label))
    return out


def run_condition(cfg, workers=1, grid=None, model=None, neutral=None):
    """Simulate every record of a condition, ordered by record index.

    ``workers > 1`` spreads the acoustic evaluation over processes; the
    output is identical to the serial run.
    """
    model = model or cfg.build_model()
    if neutral is None:
        neutral = formants(model.neutral_area(), model.constants, grid)
    tasks = list(enumerate(_plan(cfg, model)))
    if workers <= 1 or len(tasks) < 2:
        return _evaluate_chunk(model, neutral, grid, tasks)
    size = max(1, -(-len(tasks) // (4 * workers)))
    chunks = [tasks[i:i + size] for i in range(0, len(tasks), size)]
    records = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_evaluate_chunk, [model] * len(chunks), [neutral] * len(chunks),
                             [grid] * len(chunks), chunks):
            records.extend(part)
    return records


class VowelHull:
    """Convex hull of a set of (f1, f2) points."""

    def __init__(self, points):
        self.points = np.asarray(points, dtype=float)
        try:
            self._hull = ConvexHull(self.points)
        except QhullError as exc:
            raise DegenerateHullError(f"degenerate hull: {exc.__class__.__name__}") from None
        self.vertices = self.points[self._hull.vertices]

    @property
    def area(self):
        return float(self._hull.volume)

    def contains(self, points, tol=1e-9):
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        eq = self._hull.equations
        scale = np.abs(self.points).max()
        return np.all(pts @ eq[:, :2].T + eq[:, 2] <= tol * scale, axis=1)

    def coverage(self, records):
        """Fraction of non-failed records whose (f1, f2) lies in the hull."""
        pts = _formant_points(records)
        return float(np.mean(self.contains(pts))) if len(pts) else float("nan")


def _formant_points(records):
    return np.array([(r.f1, r.f2) for r in records if not r.failed]).reshape(-1, 2)


def vowel_space_hull(records):
    pts = _formant_points(records)
    if len(pts) < 3:
        raise InvalidInputError("a hull needs at least 3 non-failed records")
    return VowelHull(pts)


def vowel_cycle_order(records):
    """Labels of labelled records sorted by angle around their centroid.

    Angles are taken in standardized (f1, f2) coordinates, counter-clockwise
    with f1 on the horizontal axis.
    """
    labelled = [r for r in records if r.label and not r.failed]
    pts = np.array([(r.f1, r.f2) for r in labelled])
    z = (pts - pts.mean(axis=0)) / pts.std(axis=0)
    angles = np.arctan2(z[:, 1], z[:, 0])
    return [labelled[i].label for i in np.argsort(angles, kind="stable")]


def same_cycle(a, b):
    """True when sequence ``b`` is a rotation of sequence ``a``."""
    if len(a) != len(b) or not a:
        return False
    k = b.index(a[0]) if a[0] in b else -1
    return k >= 0 and list(b[k:]) + list(b[:k]) == list(a)
