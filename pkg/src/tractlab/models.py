"""Uniform handle on the three models (generic, drm, fant)."""

from dataclasses import dataclass, field

import numpy as np

from .acoustics import LOSSLESS, LOSSY, AcousticConstants
from .errors import InvalidConfigError
from .generic_model import ALPHA, GenericConfig, SampledAreaFunction, soft_rectify
from .mixing import CoordinationTriple, CyclePoint, eval_coordination
from .tube_models import (DRM_DEFAULT_LENGTH, DRM_DEFAULT_N, DrmParams, FantGeometry,
                          FantParams, drm_area_function, drm_coordination, drm_profile,
                          fant_area_function, fant_coordination, fant_profile)

MODEL_NAMES = ("generic", "drm", "fant")


@dataclass(frozen=True)
class Model:
    """A model as a map parameter vector -> area function.

    The generic model's parameter vector is the Fourier pair ``(a1, a2)``;
    its coordination triple is ``Omega = 0``, ``Psi1 = (2, alpha)``,
    ``Psi2 = (0, pi/2)``.
    """

    name: str
    coordination: CoordinationTriple
    constants: AcousticConstants
    generic: GenericConfig = field(default_factory=GenericConfig)
    drm_n: int = DRM_DEFAULT_N
    drm_length_cm: float = DRM_DEFAULT_LENGTH
    fant: FantGeometry = field(default_factory=FantGeometry)

    @property
    def n_params(self):
        return len(self.coordination)

    def params_at(self, point):
        return eval_coordination(self.coordination, point)

    def profile(self, params):
        """Pre-rectification tubelet values."""
        params = np.asarray(params, dtype=float)
        if self.name == "generic":
            x = self.generic.positions() / self.generic.length_cm
            return 1.0 + params[0] * np.cos(np.pi * x) + params[1] * np.cos(3.0 * np.pi * x)
        if self.name == "drm":
            return drm_profile(DrmParams.from_array(params), self.drm_n)
        return fant_profile(FantParams.from_array(params), self.fant)

    def area_function(self, params):
        params = np.asarray(params, dtype=float)
        if self.name == "generic":
            cfg = self.generic
            return SampledAreaFunction(cfg.length_cm / cfg.n_tubelets,
                                       soft_rectify(self.profile(params)))
        if self.name == "drm":
            return drm_area_function(DrmParams.from_array(params), self.drm_n, self.drm_length_cm)
        return fant_area_function(FantParams.from_array(params), self.fant)

    def neutral_area(self):
        return self.area_function(self.params_at(CyclePoint(0.0, 0.0)))

    def describe(self):
        """Plain dict of the configuration, for output headers and manifests."""
        out = {"model": self.name, "constants": vars(self.constants).copy()}
        if self.name == "generic":
            out["generic"] = vars(self.generic).copy()
        elif self.name == "drm":
            out["drm"] = {"n": self.drm_n, "length_cm": self.drm_length_cm}
        else:
            out["fant"] = vars(self.fant).copy()
        return out


def generic_coordination():
    return CoordinationTriple([0.0, 0.0], [2.0, ALPHA], [0.0, np.pi / 2.0])


def get_model(name, constants=None, generic=None, drm_n=DRM_DEFAULT_N,
              drm_length_cm=DRM_DEFAULT_LENGTH, fant=None):
    if name not in MODEL_NAMES:
        raise InvalidConfigError(f"unknown model {name!r}; expected one of {MODEL_NAMES}")
    generic = generic or GenericConfig()
    fant = fant or FantGeometry()
    if name == "generic":
        coord = generic_coordination()
    elif name == "drm":
        coord = drm_coordination()
    else:
        coord = fant_coordination(fant)
    if constants is None:
        constants = LOSSY if name == "fant" else LOSSLESS
    return Model(name, coord, constants, generic, drm_n, drm_length_cm, fant)
