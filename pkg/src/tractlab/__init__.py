"""Vocal-tract area functions from three-phase mixing and coordination functions.

Submodules
----------
mixing         three-phase mixing function, coordination function
generic_model  two-cosine generic model, soft rectifier, vowel targets
tube_models    reduced 4-tube DRM and 4-parameter Fant model
acoustics      chain-matrix transfer function, formant extraction
analysis       cosine coefficients, formant deviations, functional check
experiments    conditions C1 / C2, sweeps, vowel-space hulls
"""

__version__ = "0.1.0"

from .acoustics import *  # noqa: F401,F403
from .analysis import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from .experiments import *  # noqa: F401,F403
from .generic_model import *  # noqa: F401,F403
from .mixing import *  # noqa: F401,F403
from .models import Model, get_model  # noqa: F401
from .tube_models import *  # noqa: F401,F403
