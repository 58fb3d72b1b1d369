"""
Four-tube models driven by the coordination function.

Two models are provided:

* the reduced distinctive-region model (DRM), cut at L/6, L/2 and 5L/6,
  whose first two section values come from the generic model at
  x = 0 and x = L/3 and whose last two are mirrored (p3 = 2 - p2,
  p4 = 2 - p1);
* a four-parameter Fant model {Xc, Ac, Al, L} with a sliding constriction
  of constant length and a lip section.

Parameters are pre-rectification values; :func:`soft_rectify` is applied
after the piecewise reconstruction.
"""

from dataclasses import dataclass, fields

import numpy as np

from .errors import InvalidConfigError, InvalidParamsError
from .generic_model import SampledAreaFunction, generic_seed, soft_rectify
from .mixing import CoordinationTriple, eval_coordination, to_coordination

__all__ = [
    "DrmParams",
    "FantParams",
    "FantGeometry",
    "drm_coordination",
    "drm_reduce",
    "drm_params_at",
    "drm_area_function",
    "drm_section_bounds",
    "fant_coordination",
    "fant_params_at",
    "fant_area_function",
]

DRM_DEFAULT_N = 120
DRM_DEFAULT_LENGTH = 17.5


@dataclass(frozen=True)
class DrmParams:
    p1: float
    p2: float
    p3: float
    p4: float

    def as_array(self):
        return np.array([self.p1, self.p2, self.p3, self.p4])

    @classmethod
    def from_array(cls, values):
        p1, p2, p3, p4 = (float(v) for v in values)
        return cls(p1, p2, p3, p4)


@dataclass(frozen=True)
class FantParams:
    xc: float
    ac: float
    al: float
    total_length_cm: float

    def __post_init__(self):
        if not self.total_length_cm > 0:
            raise InvalidParamsError("total_length_cm must be positive")

    def as_array(self):
        return np.array([self.xc, self.ac, self.al, self.total_length_cm])

    @classmethod
    def from_array(cls, values):
        xc, ac, al, length = (float(v) for v in values)
        return cls(xc, ac, al, length)


@dataclass(frozen=True)
class FantGeometry:
    """Geometry of the Fant model.

    Section extents are expressed as fractions of ``n`` tubelets: the
    constriction slides inside the first ``region_fraction * n`` tubelets
    and the lip section fills the rest. ``tube_area`` is the
    pre-rectification area of every tubelet that is neither constriction
    nor lips.
    """

    n: int = 200
    region_fraction: float = 0.9
    constriction_fraction: float = 0.3
    unit_area: float = 1.0
    mean_length: float = 17.5
    length_amplitude: float = 1.5
    tube_area: float = 4.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 100:
            raise InvalidConfigError("n must be an integer >= 100")
        object.__setattr__(self, "n", int(self.n))
        if not 0 < self.constriction_fraction < self.region_fraction <= 1:
            raise InvalidConfigError("need 0 < constriction_fraction < region_fraction <= 1")
        if not self.mean_length - abs(self.length_amplitude) > 0:
            raise InvalidConfigError("length range must stay positive")

    @classmethod
    def from_dict(cls, data):
        names = {f.name for f in fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise InvalidConfigError(f"unknown FantGeometry keys: {sorted(unknown)}")
        return cls(**data)

    @property
    def constriction_tubelets(self):
        return _round_half_up(self.constriction_fraction * self.n)

    @property
    def region_tubelets(self):
        return _round_half_up(self.region_fraction * self.n)

    @property
    def lip_tubelets(self):
        return self.n - self.region_tubelets


def _round_half_up(x):
    return int(np.floor(x + 0.5))


def drm_coordination():
    """Coordination triple of (P1, P2, P3, P4).

    P1 and P2 are converted from the generic seed at x = 0 and x = L/3; P3
    and P4 reuse the phases of P2 and P1 with negated amplitudes.
    """
    head = to_coordination(generic_seed([0.0, 1.0 / 3.0]))
    omega = np.array([1.0, 1.0, 1.0, 1.0])
    psi1 = np.array([head.psi1[0], head.psi1[1], -head.psi1[1], -head.psi1[0]])
    psi2 = np.array([head.psi2[0], head.psi2[1], head.psi2[1], head.psi2[0]])
    # offsets are exactly 1 for the generic seed; keep them exact
    return CoordinationTriple(omega, psi1, psi2)


def drm_reduce(p1, p2):
    """Complete (p1, p2) with the mirrored sections p3 = 2 - p2, p4 = 2 - p1."""
    return DrmParams(float(p1), float(p2), 2.0 - p2, 2.0 - p1)


def drm_params_at(point):
    return DrmParams.from_array(eval_coordination(drm_coordination(), point))


def drm_section_bounds(n=DRM_DEFAULT_N):
    """Tubelet index boundaries (0-based, half-open) of the 4 sections."""
    if n % 6:
        raise InvalidConfigError(f"DRM tubelet count must be divisible by 6, got {n}")
    return (0, n // 6, n // 2, 5 * n // 6, n)


def drm_profile(params, n=DRM_DEFAULT_N):
    """Piecewise-constant pre-rectification profile."""
    bounds = drm_section_bounds(n)
    return np.repeat(params.as_array(), np.diff(bounds))


def drm_area_function(params, n=DRM_DEFAULT_N, length_cm=DRM_DEFAULT_LENGTH):
    if not length_cm > 0:
        raise InvalidConfigError("length_cm must be positive")
    return SampledAreaFunction(length_cm / n, soft_rectify(drm_profile(params, n)))


def fant_coordination(geom=FantGeometry()):
    """Coordination triple of (Xc, Ac, Al, L); Xc in tubelet units."""
    n = geom.n
    lc, l, a = geom.region_fraction, geom.constriction_fraction, geom.unit_area
    omega = [lc * n / 2.0, -1.5 * a, a / 2.0, geom.mean_length]
    psi1 = [0.3 * (lc - l) * n, 2.0 * a, -a, geom.length_amplitude]
    psi2 = [5.0 * np.pi / 3.0, np.pi, np.pi / 3.0, np.pi / 3.0]
    return CoordinationTriple(omega, psi1, psi2)


def fant_params_at(point, geom=FantGeometry()):
    return FantParams.from_array(eval_coordination(fant_coordination(geom), point))


def fant_profile(params, geom=FantGeometry()):
    """Pre-rectification tubelet values after rounding and merging.

    The constriction block is centered on the rounded ``xc`` and clipped
    to the sliding region; constriction wins over lips, lips over the
    main tube.
    """
    n = geom.n
    region = geom.region_tubelets
    width = geom.constriction_tubelets
    start = _round_half_up(params.xc) - width // 2
    lo, hi = max(start, 0), min(start + width, region)
    if hi <= lo:
        raise InvalidParamsError(f"constriction at xc={params.xc} falls outside the sliding region")
    values = np.full(n, float(geom.tube_area))
    values[region:] = params.al
    values[lo:hi] = params.ac
    return values


def fant_area_function(params, geom=FantGeometry()):
    return SampledAreaFunction(params.total_length_cm / geom.n,
                               soft_rectify(fant_profile(params, geom)))
