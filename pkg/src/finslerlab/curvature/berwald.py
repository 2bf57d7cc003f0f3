"""Mean Berwald curvature ``E_ij = 1/2 d^2 S / dy^i dy^j`` at the origin.

The reference value (:func:`mean_berwald_oracle`) differentiates our own
S-curvature, either exactly with second-order jets along lines (default) or
with Richardson-extrapolated central differences.  Two closed forms for the
m-Kropina metric are evaluated against it:

* :func:`mean_berwald_closed` -- the expanded term-by-term expression,
  including its ambiguous symbol ``A``;
* :func:`mean_berwald_analytic` -- the Hessian of
  ``Omega <[v,y],y> / alpha - m Omega <[v,y],v> / ((m+1) s)`` worked out with
  the product and chain rules.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..algebra import HomogeneousSpec, alpha_beta_s
from ..errors import SingularDirectionError
from ..numdiff import hessian_stencil, richardson_hessian
from ..phi import Kropina, PhiModel
from .omega import omega_bundle, omega_y_derivatives
from .scurvature import _regular_s, s_curvature_along, s_curvature_generic

STENCIL_CONE_TOL = 1e-6
MAX_STEP_HALVINGS = 8


@dataclass(frozen=True)
class MeanBerwaldResult:
    E: np.ndarray
    source: str  # "oracle" or "closed_form"
    residual_vs_oracle: float | None = None

    @property
    def asymmetry(self) -> float:
        return float(np.max(np.abs(self.E - self.E.T)))


def _hessian_jet(spec: HomogeneousSpec, model: PhiModel, y: np.ndarray) -> np.ndarray:
    n = spec.n
    eye = np.eye(n)
    c2 = [s_curvature_along(spec, model, y, eye[i]).c[2] for i in range(n)]
    hess = np.empty((n, n))
    for i in range(n):
        hess[i, i] = 2.0 * c2[i]
        for j in range(i + 1, n):
            cij = s_curvature_along(spec, model, y, eye[i] + eye[j]).c[2]
            hess[i, j] = hess[j, i] = cij - c2[i] - c2[j]
    return hess


def _hessian_richardson(spec: HomogeneousSpec, model: PhiModel, y: np.ndarray) -> np.ndarray:
    h = 1e-4 * float(np.linalg.norm(y))
    bl = spec.v_lower
    for _ in range(MAX_STEP_HALVINGS + 1):
        pts = hessian_stencil(y, h) + hessian_stencil(y, h / 2.0)
        if all(abs(bl @ p) >= STENCIL_CONE_TOL * np.sqrt(p @ spec.metric @ p) for p in pts):
            break
        h /= 2.0
    else:
        raise SingularDirectionError("Hessian stencil cannot avoid the beta = 0 cone")
    return richardson_hessian(lambda p: s_curvature_generic(spec, model, p), y, h)


def mean_berwald_oracle(spec: HomogeneousSpec, model: PhiModel, y,
                        method: str = "jet") -> MeanBerwaldResult:
    """Half-Hessian of ``y -> S(H, y)``; ``method`` is ``"jet"`` or ``"richardson"``."""
    y = np.asarray(y, dtype=float)
    _regular_s(spec, model, y)
    if method == "jet":
        hess = _hessian_jet(spec, model, y)
    elif method == "richardson":
        hess = _hessian_richardson(spec, model, y)
        hess = 0.5 * (hess + hess.T)
    else:
        raise ValueError(f"unknown method {method!r}")
    return MeanBerwaldResult(E=0.5 * hess, source="oracle")


@dataclass(frozen=True)
class _KropinaTerms:
    alpha: float
    s: float
    k: float  # m / (m + 1)
    omega: float
    omega_i: np.ndarray
    omega_ij: np.ndarray
    s_i: np.ndarray
    s_ij: np.ndarray
    y_lower: np.ndarray
    metric: np.ndarray
    p_y: float
    p_y_i: np.ndarray
    p_y_ij: np.ndarray
    p_v: float
    p_v_i: np.ndarray


def _kropina_terms(spec: HomogeneousSpec, m: float, y) -> _KropinaTerms:
    y = np.asarray(y, dtype=float)
    _regular_s(spec, Kropina(m), y)
    alpha, _, s = alpha_beta_s(spec, y)
    g = spec.metric
    bundle = omega_bundle(m, s, spec.b2, spec.n)
    od = omega_y_derivatives(bundle, alpha, y, spec.v, g)
    ad = spec.ad_v
    gad = g @ ad  # (g ad)_ij = <[v, e_j], e_i>
    gy = g @ y
    return _KropinaTerms(
        alpha=alpha, s=s, k=m / (m + 1.0),
        omega=bundle.omega, omega_i=od.omega_j, omega_ij=od.omega_ij,
        s_i=od.s_y, s_ij=od.s_yy, y_lower=gy, metric=g,
        p_y=float(y @ gad.T @ y),
        p_y_i=ad.T @ gy + gad @ y,
        p_y_ij=gad + gad.T,
        p_v=float(spec.v_lower @ ad @ y),
        p_v_i=ad.T @ spec.v_lower,
    )


def _a_group(t: _KropinaTerms, a_value: float) -> np.ndarray:
    """Hessian of ``Omega <[v,y],y> / alpha`` with ``A`` standing in the g_ij slot."""
    al, om, yl = t.alpha, t.omega, t.y_lower
    first = (t.omega_ij / al - np.outer(yl, t.omega_i) / al**3 - np.outer(t.omega_i, yl) / al**3
             - a_value * t.metric / al**3 + 3.0 * om * np.outer(yl, yl) / al**5) * t.p_y
    grad = t.omega_i / al - om * yl / al**3  # d(Omega / alpha)
    return (first + np.outer(t.p_y_i, grad) + np.outer(grad, t.p_y_i)
            + om / al * t.p_y_ij)


def mean_berwald_closed(spec: HomogeneousSpec, m: float, y, a_reading: str = "omega",
                        oracle: MeanBerwaldResult | None = None) -> MeanBerwaldResult:
    """Expanded closed form of ``E_ij`` for the m-Kropina metric, evaluated term by term.

    ``a_reading`` selects the value of the undefined symbol ``A``: ``"omega"``
    takes ``A = Omega``; ``"a_term"`` takes ``A = Omega <[v,y],y> / alpha``.
    The result is not symmetrized.  ``residual_vs_oracle`` is the largest
    absolute entry difference against the jet oracle.
    """
    t = _kropina_terms(spec, m, y)
    if a_reading == "omega":
        a_value = t.omega
    elif a_reading == "a_term":
        a_value = t.omega * t.p_y / t.alpha
    else:
        raise ValueError(f"unknown reading of A: {a_reading!r}")
    s, k, om = t.s, t.k, t.omega
    si, oi = t.s_i, t.omega_i
    # B-group rows are indexed by i, columns by j
    b_coef = (-k * np.outer(oi, si) / s**2 + 2.0 * k * om * np.outer(si, si) / s**3
              - k * om * t.s_ij / s**2 + k * t.omega_ij / s - k * np.outer(si, oi) / s**2)
    last = np.outer(t.p_v_i, -k * om * si / s**2 + k * oi / s)
    E = 0.5 * (_a_group(t, a_value) + b_coef * t.p_v + last)
    if oracle is None:
        oracle = mean_berwald_oracle(spec, Kropina(m), y)
    return MeanBerwaldResult(E=E, source="closed_form",
                             residual_vs_oracle=float(np.max(np.abs(E - oracle.E))))


def mean_berwald_analytic(spec: HomogeneousSpec, m: float, y,
                          oracle: MeanBerwaldResult | None = None) -> MeanBerwaldResult:
    """Product- and chain-rule Hessian of the Kropina S-curvature."""
    t = _kropina_terms(spec, m, y)
    s, k, om = t.s, t.k, t.omega
    si, oi = t.s_i, t.omega_i
    # c(y) = -k Omega / s multiplies the linear pairing <[v,y],v>
    c_i = -k * (oi / s - om * si / s**2)
    c_ij = -k * (t.omega_ij / s - np.outer(oi, si) / s**2 - np.outer(si, oi) / s**2
                 - om * t.s_ij / s**2 + 2.0 * om * np.outer(si, si) / s**3)
    b_hess = c_ij * t.p_v + np.outer(c_i, t.p_v_i) + np.outer(t.p_v_i, c_i)
    E = 0.5 * (_a_group(t, t.omega) + b_hess)
    if oracle is None:
        oracle = mean_berwald_oracle(spec, Kropina(m), y)
    return MeanBerwaldResult(E=E, source="closed_form",
                             residual_vs_oracle=float(np.max(np.abs(E - oracle.E))))
