"""S-curvature of (alpha, beta)-metrics.

Three routes are provided:

* :func:`s_curvature_local` -- the local-coordinate expression in terms of the
  covariant-derivative tensors ``r_ij`` and ``s_ij`` of ``beta``;
* :func:`s_curvature_generic` -- the homogeneous-space expression at the
  origin for any metric family,

      S(H, y) = Phi / (2 alpha Delta^2) (<[v,y]_m, y> + alpha Q <[v,y]_m, v>);

* :func:`s_curvature_kropina` -- its closed form for ``phi = s**(-m)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..algebra import HomogeneousSpec, alpha_beta_s, bracket_pairings
from ..errors import InputError, SingularDirectionError
from ..jets import Jet
from ..phi import AlphaBetaScalars, Kropina, PhiModel, ab_scalars_generic, scalar_jets


@dataclass(frozen=True)
class CovDerivData:
    """Covariant-derivative data of ``beta`` at a point.

    ``b_upper`` holds the contravariant components ``b^i`` used to form
    ``s_j = b^i s_ij``; ``fb_log_deriv`` is the volume-form scalar
    ``f'(b) / (b f(b))``.
    """

    r: np.ndarray
    s_mat: np.ndarray
    r0_plus_s0_coeffs: np.ndarray
    b_upper: np.ndarray
    fb_log_deriv: float = 0.0

    def __post_init__(self):
        r = np.asarray(self.r, dtype=float)
        s_mat = np.asarray(self.s_mat, dtype=float)
        coeffs = np.asarray(self.r0_plus_s0_coeffs, dtype=float)
        b_upper = np.asarray(self.b_upper, dtype=float)
        n = b_upper.size
        if r.shape != (n, n) or s_mat.shape != (n, n) or coeffs.shape != (n,):
            raise InputError("covariant-derivative data has inconsistent dimensions")
        if not np.array_equal(r, r.T):
            raise InputError("r must be symmetric")
        if not np.array_equal(s_mat, -s_mat.T):
            raise InputError("s_mat must be antisymmetric")
        for name, val in (("r", r), ("s_mat", s_mat), ("r0_plus_s0_coeffs", coeffs),
                          ("b_upper", b_upper)):
            object.__setattr__(self, name, val)

    @property
    def n(self) -> int:
        return self.b_upper.size

    @property
    def s_lower(self) -> np.ndarray:
        """``s_j = b^i s_ij``."""
        return self.b_upper @ self.s_mat


def s_curvature_local(scalars: AlphaBetaScalars, data: CovDerivData, y, alpha: float,
                      Q: float | None = None) -> float:
    """``(2 psi - f'/(b f))(r_0 + s_0) - Phi / (alpha 2 Delta^2) (r_00 - 2 alpha Q s_0)``."""
    y = np.asarray(y, dtype=float)
    if y.shape != (data.n,):
        raise InputError(f"direction has shape {y.shape}, expected ({data.n},)")
    if Q is None:
        Q = scalars.Q
    r0_s0 = float(data.r0_plus_s0_coeffs @ y)
    r00 = float(y @ data.r @ y)
    s0 = float(data.s_lower @ y)
    first = (2.0 * scalars.psi - data.fb_log_deriv) * r0_s0
    second = scalars.Phi / (2.0 * scalars.Delta**2) / alpha * (r00 - 2.0 * alpha * Q * s0)
    return first - second


def _regular_s(spec: HomogeneousSpec, model: PhiModel, y) -> tuple[float, float, float]:
    alpha, beta, s = alpha_beta_s(spec, y)
    if beta == 0.0 and model.singular_at_zero:
        raise SingularDirectionError("beta(y) = 0: direction lies on the singular cone")
    return alpha, beta, s


def s_curvature_generic(spec: HomogeneousSpec, model: PhiModel, y) -> float:
    alpha, _, s = _regular_s(spec, model, y)
    sc = ab_scalars_generic(model, s, spec.b2, spec.n)
    p_y, p_v = bracket_pairings(spec, y)
    return sc.Phi / (2.0 * alpha * sc.Delta**2) * (p_y + alpha * sc.Q * p_v)


def kropina_omega(m: float, s: float, b2: float, n: int) -> float:
    """Prefactor ``m s [(n - nm) s^2 + (nm + 1) b^2] / [(1 - m) s^2 + b^2 m]^2``."""
    num = m * s * ((n - n * m) * s * s + (n * m + 1.0) * b2)
    den = (1.0 - m) * s * s + b2 * m
    return num / (den * den)


def s_curvature_kropina(spec: HomogeneousSpec, m: float, y) -> float:
    alpha, _, s = _regular_s(spec, Kropina(m), y)
    p_y, p_v = bracket_pairings(spec, y)
    omega = kropina_omega(m, s, spec.b2, spec.n)
    return omega * (p_y / alpha - m / ((m + 1.0) * s) * p_v)


def s_curvature_along(spec: HomogeneousSpec, model: PhiModel, y, d) -> Jet:
    """Second-order jet of ``t -> S(y + t d)`` at ``t = 0``.

    Each factor of the homogeneous S-curvature expression is expanded in
    ``t``; the scalars ``Q, Delta, Phi`` are composed with ``s(t)`` from
    fourth-order jets of ``Q`` in ``s``.
    """
    y = np.asarray(y, dtype=float)
    d = np.asarray(d, dtype=float)
    alpha0, _, s0 = _regular_s(spec, model, y)
    g = spec.metric
    gy, gd = g @ y, g @ d
    alpha = Jet((alpha0 * alpha0, 2.0 * float(d @ gy), float(d @ gd))).sqrt()
    bl = spec.v_lower
    beta = Jet((float(bl @ y), float(bl @ d), 0.0))
    s = beta / alpha

    Q, Delta, Phi = (j.compose(s) for j in scalar_jets(model, s0, spec.b2, spec.n, order=2))

    a = spec.ad_v.T @ g  # <[v, y], z> = y^T a z
    p_y = Jet((float(y @ a @ y), float(y @ (a + a.T) @ d), float(d @ a @ d)))
    w = spec.ad_v.T @ bl
    p_v = Jet((float(w @ y), float(w @ d), 0.0))
    return Phi / (2.0 * alpha * Delta * Delta) * (p_y + alpha * Q * p_v)
