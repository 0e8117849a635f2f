"""Abscissas of convergence of Dirichlet series.

Coefficient families, the sigma_c / sigma_b / sigma_a estimators, the Bohr
lift with its torus sup-norm optimizer, and the experiment drivers. Reports
are returned as plain dictionaries.
"""

import json

from ._core import *  # noqa: F401,F403
from ._core import __version__, _bohr_check, _thm1_sweep, _wintner_mc


def thm1_sweep(alphas=(0.25, 0.5, 0.75), N=1_000_000, tolerance=0.1):
    return json.loads(_thm1_sweep(list(alphas), N, tolerance))


def wintner_mc(trials=20, N=1_000_000, seed=0, forced_sign=None):
    return json.loads(_wintner_mc(trials, N, seed, forced_sign))


def bohr_check(count=500, degree=20, radii=(0.1, 1 / 3, 0.6, 0.9), seed=0):
    return json.loads(_bohr_check(count, degree, list(radii), seed))
