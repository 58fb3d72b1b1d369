"""
Generic vocal-tract model built from two odd cosine components.

The unrectified profile is ``1 + a1 cos(pi x / L) + a2 cos(3 pi x / L)`` with
``(a1, a2)`` traced on an ellipse by the cycle angle and scaled by ``rho``.
A C1 soft rectifier keeps the sampled areas positive.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidConfigError, InvalidInputError
from .mixing import ComponentTriple, CyclePoint

__all__ = [
    "ALPHA",
    "GenericConfig",
    "FourierPair",
    "SampledAreaFunction",
    "VOWELS",
    "fourier_amplitudes",
    "soft_rectify",
    "generic_profile",
    "generic_area_function",
    "generic_seed",
    "vowel_targets",
    "vowel_theta",
    "vowel_point",
]

#: Peak amplitude of the cos(3 pi x / L) component, 4/3 sin(pi/3).
ALPHA = 4.0 / 3.0 * np.sin(np.pi / 3.0)

#: The eight characteristic vowels in cycle order with their angles.
VOWELS = (
    ("ɨ", 0.0),
    ("u", np.pi / 3.0),
    ("o", np.pi / 2.0),
    ("ɔ", 2.0 * np.pi / 3.0),
    ("a", np.pi),
    ("ɛ", 4.0 * np.pi / 3.0),
    ("e", 3.0 * np.pi / 2.0),
    ("i", 5.0 * np.pi / 3.0),
)


@dataclass(frozen=True)
class GenericConfig:
    length_cm: float = 17.5
    n_tubelets: int = 120

    def __post_init__(self):
        if not self.length_cm > 0:
            raise InvalidConfigError("length_cm must be positive")
        if int(self.n_tubelets) != self.n_tubelets or self.n_tubelets < 100:
            raise InvalidConfigError("n_tubelets must be an integer >= 100")
        object.__setattr__(self, "n_tubelets", int(self.n_tubelets))

    def positions(self):
        """Midpoint sample locations x_i = (i - 1/2) L / n, in cm."""
        n = self.n_tubelets
        return (np.arange(1, n + 1) - 0.5) * self.length_cm / n


@dataclass(frozen=True)
class FourierPair:
    a1: float
    a2: float


@dataclass(frozen=True)
class SampledAreaFunction:
    """Areas of ``n`` equal-length tubelets, glottis first."""

    tubelet_length_cm: float
    areas: np.ndarray

    def __post_init__(self):
        areas = np.asarray(self.areas, dtype=float).ravel()
        if areas.size < 2:
            raise InvalidInputError("an area function needs at least 2 tubelets")
        if not np.all(np.isfinite(areas)) or np.any(areas <= 0):
            raise InvalidInputError("areas must be finite and strictly positive")
        if not self.tubelet_length_cm > 0:
            raise InvalidInputError("tubelet_length_cm must be positive")
        areas.setflags(write=False)
        object.__setattr__(self, "areas", areas)
        object.__setattr__(self, "tubelet_length_cm", float(self.tubelet_length_cm))

    @property
    def n(self):
        return self.areas.size

    @property
    def total_length_cm(self):
        return self.n * self.tubelet_length_cm

    def positions(self):
        """Tubelet midpoints in cm from the glottis."""
        return (np.arange(1, self.n + 1) - 0.5) * self.tubelet_length_cm

    def reversed(self):
        return SampledAreaFunction(self.tubelet_length_cm, self.areas[::-1].copy())

    def scaled(self, factor):
        return SampledAreaFunction(self.tubelet_length_cm, self.areas * factor)


def fourier_amplitudes(point):
    """Cosine amplitudes ``(2 rho cos theta, rho alpha sin theta)``."""
    return FourierPair(2.0 * point.rho * np.cos(point.theta),
                       point.rho * ALPHA * np.sin(point.theta))


def soft_rectify(y):
    """Identity above 1, ``exp(y - 1)`` below; works on scalars and arrays."""
    y = np.asarray(y, dtype=float)
    out = np.where(y < 1.0, np.exp(np.minimum(y, 1.0) - 1.0), y)
    return out[()] if out.ndim == 0 else out


def generic_profile(point, cfg=GenericConfig()):
    """Unrectified profile sampled at the tubelet midpoints."""
    pair = fourier_amplitudes(point)
    x = cfg.positions() / cfg.length_cm
    return 1.0 + pair.a1 * np.cos(np.pi * x) + pair.a2 * np.cos(3.0 * np.pi * x)


def generic_area_function(point, cfg=GenericConfig()):
    return SampledAreaFunction(cfg.length_cm / cfg.n_tubelets,
                               soft_rectify(generic_profile(point, cfg)))


def generic_seed(x_over_length):
    """Seed vectors ``{1 + v1 + v2, 1 - 2 v1, 1 + v1 - v2}`` at relative positions.

    ``v1 = cos(pi x / L)`` and ``v2 = cos(3 pi x / L)``; positions are given
    as fractions of the tract length.
    """
    x = np.atleast_1d(np.asarray(x_over_length, dtype=float))
    v1 = np.cos(np.pi * x)
    v2 = np.cos(3.0 * np.pi * x)
    return ComponentTriple(1.0 + v1 + v2, 1.0 - 2.0 * v1, 1.0 + v1 - v2)


def vowel_targets():
    """The 8 ``(label, theta)`` vowel anchors in cycle order."""
    return list(VOWELS)


def vowel_theta(label):
    for name, theta in VOWELS:
        if name == label:
            return theta
    raise KeyError(label)


def vowel_point(label, rho=1.0):
    return CyclePoint(rho, vowel_theta(label))
