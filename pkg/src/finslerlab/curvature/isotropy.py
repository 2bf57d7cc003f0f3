"""Isotropy classification of the Kropina S-curvature.

For a homogeneous m-Kropina space the S-curvature is isotropic exactly when it
vanishes identically, so the classifier samples regular directions and tests
``S = 0`` against the size of the terms that would have to cancel.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..algebra import HomogeneousSpec, alpha_beta_s, bracket_pairings
from ..errors import ClassificationError
from ..phi import Kropina, PhiModel
from .scurvature import kropina_omega, s_curvature_kropina

ZERO_RTOL = 1e-10
MIN_ABS_S = 1e-3
DEFAULT_SEED = 42


@dataclass(frozen=True)
class IsotropyVerdict:
    verdict: str  # "zero" or "nonzero"
    max_abs_s: float
    scale: float
    samples: int

    @property
    def label(self) -> str:
        return "isotropic (hence zero)" if self.verdict == "zero" else "not isotropic"


def sample_directions(spec: HomogeneousSpec, count: int, seed: int = DEFAULT_SEED,
                      min_abs_s: float = MIN_ABS_S, max_draws: int | None = None,
                      model: PhiModel | None = None) -> np.ndarray:
    """Uniform directions on the alpha-unit sphere with ``|s| >= min_abs_s``.

    With a ``model`` whose phi is only real for ``s > 0`` (fractional Kropina
    exponents), directions with ``s < 0`` are reflected to ``-y``.
    """
    rng = np.random.default_rng(seed)
    lower = np.linalg.cholesky(spec.metric)
    if max_draws is None:
        max_draws = 100 * count + 100
    out = []
    for _ in range(max_draws):
        if len(out) == count:
            break
        u = rng.standard_normal(spec.n)
        u /= np.linalg.norm(u)
        y = np.linalg.solve(lower.T, u)
        _, _, s = alpha_beta_s(spec, y)
        if abs(s) >= min_abs_s:
            out.append(y if model is None or model.real_domain(s) else -y)
    return np.array(out).reshape(len(out), spec.n)


def classify_isotropy(spec: HomogeneousSpec, m: float, sample_count: int = 64,
                      seed: int = DEFAULT_SEED) -> IsotropyVerdict:
    dirs = sample_directions(spec, sample_count, seed, model=Kropina(m))
    if len(dirs) == 0:
        raise ClassificationError("no regular direction found (|s| too small everywhere)")
    max_s, scale = 0.0, 0.0
    for y in dirs:
        alpha, _, s = alpha_beta_s(spec, y)
        p_y, p_v = bracket_pairings(spec, y)
        omega = kropina_omega(m, s, spec.b2, spec.n)
        scale = max(scale, abs(omega) * (abs(p_y) / alpha + abs(m / ((m + 1.0) * s) * p_v)))
        max_s = max(max_s, abs(s_curvature_kropina(spec, m, y)))
    verdict = "zero" if max_s < ZERO_RTOL * max(1.0, scale) else "nonzero"
    return IsotropyVerdict(verdict=verdict, max_abs_s=max_s, scale=scale, samples=len(dirs))
