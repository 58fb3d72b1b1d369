"""
Chain-matrix transmission line for a sampled area function.

Each tubelet of length ``d`` and area ``S`` is a uniform acoustic line with
the (pressure, volume velocity) two-port

    [[cos kd,           1j * Zc * sin kd],
     [1j * sin kd / Zc, cos kd          ]],   Zc = rho_air * c / S.

Matrices are multiplied from glottis to lips and the lip end is loaded by
``Z_load``. The returned ratio is ``U_lips / U_glottis = 1 / (C Z_load + D)``.

Losses
------
``lossless``
    ideal open end (``Z_load = 0``), real wavenumber.
``simple_lossy``
    wavenumber ``k (1 - 1j * loss_coefficient / sqrt(S) * sqrt(f / 1000))``
    per tubelet, and a piston-like radiation load
    ``(rho_air c / S_lips) (0.25 (ka)^2 + 1j 0.613 ka)``, ``a = sqrt(S_lips / pi)``.
    This is a simple stand-in for wall and radiation losses, not a
    calibrated vocal-tract loss model.
"""

from dataclasses import dataclass

import numpy as np

from .errors import FormantExtractionError, InvalidConfigError, InvalidInputError

__all__ = [
    "AcousticConstants",
    "LOSSLESS",
    "LOSSY",
    "TransferSpectrum",
    "FormantSet",
    "frequency_grid",
    "transfer_spectrum",
    "find_formants",
    "formants",
    "neutral_reference",
]

LOSS_MODELS = ("lossless", "simple_lossy")
#: Smallest denominator magnitude kept when evaluating 1 / (C Z + D).
DENOMINATOR_FLOOR = 1e-12


@dataclass(frozen=True)
class AcousticConstants:
    sound_speed_c: float = 35000.0  # cm/s
    air_density: float = 1.14e-3  # g/cm^3
    loss_model: str = "lossless"
    loss_coefficient: float = 0.007
    radiation_load: bool = True  # simple_lossy only; False keeps an ideal open end

    def __post_init__(self):
        if not self.sound_speed_c > 0 or not self.air_density > 0:
            raise InvalidConfigError("sound speed and air density must be positive")
        if self.loss_model not in LOSS_MODELS:
            raise InvalidConfigError(f"loss_model must be one of {LOSS_MODELS}")
        if self.loss_coefficient < 0:
            raise InvalidConfigError("loss_coefficient must be >= 0")


LOSSLESS = AcousticConstants()
LOSSY = AcousticConstants(loss_model="simple_lossy")


@dataclass(frozen=True)
class TransferSpectrum:
    frequencies: np.ndarray
    values: np.ndarray

    @property
    def step(self):
        return float(self.frequencies[1] - self.frequencies[0])

    @property
    def magnitude(self):
        return np.abs(self.values)

    @property
    def magnitude_db(self):
        return 20.0 * np.log10(self.magnitude)


@dataclass(frozen=True)
class FormantSet:
    f1: float
    f2: float
    f3: float = None

    def __post_init__(self):
        if not 0 < self.f1 < self.f2:
            raise InvalidInputError(f"formants must satisfy 0 < f1 < f2, got {self.f1}, {self.f2}")

    def as_tuple(self):
        return (self.f1, self.f2)


def frequency_grid(start=10.0, stop=4000.0, step=10.0):
    """Uniform grid from ``start`` to ``stop`` inclusive."""
    count = int(round((stop - start) / step)) + 1
    return start + step * np.arange(count)


def _merge_sections(area):
    """Collapse runs of equal tubelets into (area, length) sections.

    Cascading two equal lines equals one line of the summed length, so the
    merge is exact and only saves work on piecewise-constant models.
    """
    a = area.areas
    starts = np.flatnonzero(np.r_[True, a[1:] != a[:-1]])
    counts = np.diff(np.r_[starts, a.size])
    return a[starts], counts * area.tubelet_length_cm


def transfer_spectrum(area, grid=None, constants=LOSSLESS):
    """Volume-velocity transfer ratio lips/glottis on a frequency grid."""
    if grid is None:
        grid = frequency_grid()
    f = np.asarray(grid, dtype=float)
    if f.ndim != 1 or f.size < 3:
        raise InvalidInputError("frequency grid needs at least 3 points")
    if np.any(f <= 0) or np.any(f > 6000.0) or np.any(np.diff(f) <= 0):
        raise InvalidInputError("frequency grid must be ascending within (0, 6000] Hz")
    if area.n == 0 or np.any(area.areas <= 0):
        raise InvalidInputError("area function must be non-empty and positive")

    return TransferSpectrum(f, _response(area, f, constants))


def _response(area, f, constants):
    """1 / (C Z_load + D) at the frequencies ``f`` (any order)."""
    c, rho = constants.sound_speed_c, constants.air_density
    sections, lengths = _merge_sections(area)
    k0 = 2.0 * np.pi * f / c
    lossy = constants.loss_model == "simple_lossy"
    if lossy:
        damping = constants.loss_coefficient * np.sqrt(f / 1000.0)

    # one 2x2 chain matrix per (frequency, section), shape (F, S, 2, 2)
    k = k0[:, None] * np.ones((1, sections.size))
    if lossy:
        k = k * (1.0 - 1j * damping[:, None] / np.sqrt(sections)[None, :])
    phase = k * lengths[None, :]
    cs, sn = np.cos(phase), np.sin(phase)
    zc = rho * c / sections[None, :]
    m = np.empty(phase.shape + (2, 2), dtype=complex)
    m[..., 0, 0] = cs
    m[..., 0, 1] = 1j * zc * sn
    m[..., 1, 0] = 1j * sn / zc
    m[..., 1, 1] = cs
    # ordered pairwise reduction keeps the glottis-to-lips product order
    while m.shape[1] > 1:
        if m.shape[1] % 2:
            m = np.concatenate([m, np.broadcast_to(np.eye(2), (m.shape[0], 1, 2, 2))], axis=1)
        m = m[:, 0::2] @ m[:, 1::2]
    kc, kd = m[:, 0, 1, 0], m[:, 0, 1, 1]

    if lossy and constants.radiation_load:
        s_lips = area.areas[-1]
        radius = np.sqrt(s_lips / np.pi)
        x = k0 * radius
        z_load = rho * c / s_lips * (0.25 * x**2 + 1j * 0.613 * x)
        den = kc * z_load + kd
    else:
        den = kd
    mag = np.abs(den)
    small = mag < DENOMINATOR_FLOOR
    if np.any(small):
        phase = np.where(mag > 0, den / np.where(mag > 0, mag, 1.0), 1.0)
        den = np.where(small, DENOMINATOR_FLOOR * phase, den)
    return 1.0 / den


def _peak_candidates(mag):
    inner = mag[1:-1]
    return np.flatnonzero((inner > mag[:-2]) & (inner >= mag[2:])) + 1


def find_formants(spec, count=2):
    """Lowest ``count`` peaks of |H|, refined by parabolic fit in log magnitude."""
    if count not in (2, 3):
        raise InvalidInputError("count must be 2 or 3")
    logmag = np.log(spec.magnitude)
    peaks = _peak_candidates(logmag)
    if peaks.size < count:
        raise FormantExtractionError(count, int(peaks.size))
    f = spec.frequencies
    out = []
    for idx in peaks[:count]:
        ym1, y0, yp1 = logmag[idx - 1], logmag[idx], logmag[idx + 1]
        curv = ym1 - 2.0 * y0 + yp1
        p = 0.5 * (ym1 - yp1) / curv if curv < 0 else 0.0
        step = 0.5 * (f[idx + 1] - f[idx - 1])
        out.append(f[idx] + p * step)
    return FormantSet(*out)


def _parabolic_vertex(f, logmag):
    ym1, y0, yp1 = logmag
    curv = ym1 - 2.0 * y0 + yp1
    if curv >= 0:
        return f[1]
    p = 0.5 * (ym1 - yp1) / curv
    return f[1] + float(np.clip(p, -1.0, 1.0)) * (f[2] - f[1])


def formants(area, constants=LOSSLESS, grid=None, count=2, zoom_passes=8, zoom_points=9):
    """Formants of an area function.

    Peaks are located with :func:`find_formants` on ``grid``. Each peak is
    then bracketed by its two grid neighbours and the bracket is sampled at
    ``zoom_points`` frequencies; the best sample and its neighbours become
    the next bracket. A last parabolic fit refines the final bracket
    (``zoom_passes=0`` keeps the grid estimate).
    """
    spec = transfer_spectrum(area, grid, constants)
    found = find_formants(spec, count)
    estimates = np.array((found.f1, found.f2, found.f3)[:count], dtype=float)
    if zoom_passes <= 0:
        return FormantSet(*estimates)
    f = spec.frequencies
    idx = np.searchsorted(f, estimates)
    idx = np.clip(idx, 1, f.size - 1)
    # the grid peak sits at idx or idx - 1; its neighbours bracket the maximum
    peak = np.where(np.abs(f[idx] - estimates) <= np.abs(f[idx - 1] - estimates), idx, idx - 1)
    peak = np.clip(peak, 1, f.size - 2)
    lo, hi = f[peak - 1], f[peak + 1]
    t = np.linspace(0.0, 1.0, zoom_points)
    for _ in range(zoom_passes):
        pts = lo[:, None] + (hi - lo)[:, None] * t[None, :]
        logmag = np.log(np.abs(_response(area, pts.ravel(), constants))).reshape(pts.shape)
        j = np.clip(np.argmax(logmag, axis=1), 1, zoom_points - 2)
        rows = np.arange(count)
        lo, hi = pts[rows, j - 1], pts[rows, j + 1]
    stencils = np.stack([lo, 0.5 * (lo + hi), hi], axis=1)
    logmag = np.log(np.abs(_response(area, stencils.ravel(), constants))).reshape(stencils.shape)
    return FormantSet(*[_parabolic_vertex(s, y) for s, y in zip(stencils, logmag)])


def neutral_reference(model, constants=None, grid=None, **options):
    """Formants of the model's rho = 0 configuration.

    ``constants`` defaults to the model's own loss setting (lossless for the
    generic model and the DRM, lossy for the Fant model).
    """
    from .models import get_model

    m = get_model(model, **options)
    if constants is None:
        constants = m.constants
    return formants(m.neutral_area(), constants, grid)
