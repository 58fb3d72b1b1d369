"""
Three-phase mixing and coordination functions.

A model configuration is a parameter vector ``P``. Three seed vectors
``i, j, k`` are placed at the angles pi/3, pi and 5pi/3 of a cycle and
blended by

    P(theta) = Omega + 2/3 (i cos(theta - pi/3) + j cos(theta - pi)
                            + k cos(theta - 5pi/3))

with ``Omega = (i + j + k) / 3``. The same family is written per parameter
as an offset/amplitude/phase triple,

    P(rho, theta) = Omega + rho * Psi1 * cos(Psi2 - theta),

which is the coordination function. Both forms are evaluated elementwise.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError

__all__ = [
    "ANCHOR_ANGLES",
    "ComponentTriple",
    "CoordinationTriple",
    "CyclePoint",
    "mix_threephase",
    "to_coordination",
    "eval_coordination",
    "components_from_coordination",
]

TWO_PI = 2.0 * np.pi
#: Cycle angles of the three seed vectors i, j, k.
ANCHOR_ANGLES = (np.pi / 3.0, np.pi, 5.0 * np.pi / 3.0)


def _as_vector(value, name):
    arr = np.atleast_1d(np.asarray(value, dtype=float))
    if arr.ndim != 1 or arr.size == 0:
        raise InvalidInputError(f"{name} must be a non-empty 1-D vector")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"{name} contains non-finite entries")
    arr.setflags(write=False)
    return arr


def _same_size(name, *vectors):
    sizes = {v.size for v in vectors}
    if len(sizes) != 1:
        raise InvalidInputError(f"{name}: vectors have mismatched dimensions {sorted(sizes)}")


def normalize_angle(theta):
    """Wrap an angle into [0, 2pi)."""
    t = float(theta) % TWO_PI
    # float modulo can land exactly on 2pi for tiny negative inputs
    return 0.0 if t >= TWO_PI else t


@dataclass(frozen=True)
class ComponentTriple:
    """Seed vectors of the three extreme configurations ([u], [a], [i])."""

    i: np.ndarray
    j: np.ndarray
    k: np.ndarray

    def __post_init__(self):
        i = _as_vector(self.i, "i")
        j = _as_vector(self.j, "j")
        k = _as_vector(self.k, "k")
        _same_size("ComponentTriple", i, j, k)
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "k", k)

    @property
    def omega(self):
        return (self.i + self.j + self.k) / 3.0

    def __len__(self):
        return self.i.size


@dataclass(frozen=True)
class CoordinationTriple:
    """Offset ``omega``, amplitude ``psi1`` and phase ``psi2`` (radians)."""

    omega: np.ndarray
    psi1: np.ndarray
    psi2: np.ndarray

    def __post_init__(self):
        omega = _as_vector(self.omega, "omega")
        psi1 = _as_vector(self.psi1, "psi1")
        psi2 = _as_vector(self.psi2, "psi2")
        _same_size("CoordinationTriple", omega, psi1, psi2)
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "psi1", psi1)
        object.__setattr__(self, "psi2", psi2)

    def __len__(self):
        return self.omega.size

    def ranges(self):
        """Lower and upper bounds ``Omega -/+ |Psi1|`` of each parameter."""
        half = np.abs(self.psi1)
        return self.omega - half, self.omega + half


@dataclass(frozen=True)
class CyclePoint:
    """Polar position on the vowel disc: radius ``rho`` in [0, 1], angle ``theta``."""

    rho: float = 1.0
    theta: float = 0.0

    def __post_init__(self):
        rho = float(self.rho)
        if not np.isfinite(rho) or rho < 0.0 or rho > 1.0:
            raise InvalidInputError(f"rho must lie in [0, 1], got {self.rho!r}")
        if not np.isfinite(float(self.theta)):
            raise InvalidInputError("theta must be finite")
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "theta", normalize_angle(self.theta))


def mix_threephase(seed, theta):
    """Blend the seed vectors at cycle angle ``theta``.

    Exact at the anchors: ``P(pi/3) = i``, ``P(pi) = j``, ``P(5pi/3) = k``.
    """
    t = normalize_angle(theta)
    a_i, a_j, a_k = ANCHOR_ANGLES
    return seed.omega + (2.0 / 3.0) * (seed.i * np.cos(t - a_i) + seed.j * np.cos(t - a_j)
                                       + seed.k * np.cos(t - a_k))


def to_coordination(seed):
    """Convert seed vectors to the offset/amplitude/phase form.

    Solves ``Psi1 cos Psi2 = 2/3 ((i + k)/2 - j)`` and
    ``Psi1 sin Psi2 = 2/3 (i - k) sin(pi/3)`` with the two-argument
    arctangent. Where the cosine part is positive this matches the
    single-argument arctan convention ``Psi1 = (Omega - j) / cos Psi2``;
    otherwise the equivalent ``(-Psi1, Psi2 + pi)`` pair is returned folded
    back so that ``Psi2`` stays in (-pi/2, pi/2]. Zero-amplitude coordinates
    get ``Psi1 = Psi2 = 0``.
    """
    omega = seed.omega
    c_part = (2.0 / 3.0) * (0.5 * (seed.i + seed.k) - seed.j)
    s_part = (2.0 / 3.0) * (seed.i - seed.k) * np.sin(np.pi / 3.0)
    psi2 = np.arctan2(s_part, c_part)
    psi1 = np.hypot(c_part, s_part)
    # fold into the arctan branch (-pi/2, pi/2]
    flip = (psi2 > np.pi / 2.0) | (psi2 <= -np.pi / 2.0)
    psi2 = np.where(flip, psi2 - np.pi * np.sign(psi2), psi2)
    psi1 = np.where(flip, -psi1, psi1)
    zero = np.hypot(c_part, s_part) == 0.0
    psi1 = np.where(zero, 0.0, psi1)
    psi2 = np.where(zero, 0.0, psi2)
    return CoordinationTriple(omega, psi1, psi2)


def eval_coordination(coord, point):
    """``Omega + rho * Psi1 * cos(Psi2 - theta)``, elementwise."""
    return coord.omega + point.rho * coord.psi1 * np.cos(coord.psi2 - point.theta)


def components_from_coordination(coord):
    """Recover ``i, j, k`` as the evaluations at the three anchor angles."""
    i, j, k = (eval_coordination(coord, CyclePoint(1.0, a)) for a in ANCHOR_ANGLES)
    return ComponentTriple(i, j, k)
