"""The Kropina prefactor Omega(s) and its derivatives in s and in y.

Two evaluations of the y-derivatives are kept side by side: the chain rule
through ``s(y) = beta / alpha`` (the reference), and the expanded polynomial
forms of dOmega/dy and d2Omega/dy dy as reference expressions, so the
two can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DegenerateMetricError
from ..jets import Jet

DENOM_RTOL = 1e-14


@dataclass(frozen=True)
class OmegaBundle:
    s: float
    b2: float
    m: float
    n: int
    omega: float
    omega_d1: float
    omega_d2: float

    @property
    def denominator(self) -> float:
        """``(1 - m) s^2 + b^2 m``."""
        return (1.0 - self.m) * self.s**2 + self.b2 * self.m


def omega_bundle(m: float, s: float, b2: float, n: int) -> OmegaBundle:
    sv = Jet.variable(float(s), 2)
    den = (1.0 - m) * sv * sv + b2 * m
    if abs(den.val) <= DENOM_RTOL * (abs(1.0 - m) * s * s + b2 * abs(m)):
        raise DegenerateMetricError(f"(1 - m) s^2 + b^2 m vanishes at s = {s}")
    om = m * sv * ((n - n * m) * sv * sv + (n * m + 1.0) * b2) / (den * den)
    return OmegaBundle(s=float(s), b2=float(b2), m=float(m), n=int(n),
                       omega=om.val, omega_d1=om.d1, omega_d2=om.d2)


def s_y_derivatives(alpha: float, s: float, y_lower, b_lower, metric) -> tuple[np.ndarray, np.ndarray]:
    """Gradient and Hessian of ``s = beta / alpha`` with respect to ``y``.

    ``s_i = (alpha b_i - s y_i) / alpha^2``,
    ``s_ij = (3 s y_i y_j - (b_i y_j + b_j y_i) alpha - alpha^2 s g_ij) / alpha^4``.
    """
    yl = np.asarray(y_lower, dtype=float)
    bl = np.asarray(b_lower, dtype=float)
    s_i = (alpha * bl - s * yl) / alpha**2
    s_ij = (3.0 * s * np.outer(yl, yl) - (np.outer(bl, yl) + np.outer(yl, bl)) * alpha
            - alpha**2 * s * np.asarray(metric, dtype=float)) / alpha**4
    return s_i, s_ij


def expanded_d1_polynomial(m: float, s: float, b2: float, n: int) -> float:
    """Numerator over ``D^3`` of the expanded dOmega/dy coefficient."""
    return (3 * m * n * (1 - m) ** 2 * s**4
            + m * (1 - m) * (1 + n * m + 3 * m * n * b2) * s**2
            - 4 * m * n * (1 - m) * s**3
            + m * (n * m + 1) * b2 * s
            + m**2 * (n * m + 1) * b2**2)


def expanded_d2_polynomial(m: float, s: float, b2: float, n: int) -> float:
    """Numerator over ``D^4`` of the expanded s_i s_j coefficient in d2Omega/dy dy."""
    return (-6 * m * n * (1 - m) ** 3 * s**5
            + 12 * m * n * (1 - m) ** 2 * s**4
            - 4 * m * (1 - m) ** 2 * (1 + n * m) * s**3
            - m * (1 - m) * (5 + 17 * m * n) * b2 * s**2
            + 2 * m**2 * (1 - m) * (m * n - 2) * b2 * s
            + m**2 * (1 + m * n) * b2**2)


@dataclass(frozen=True)
class OmegaYDerivatives:
    s_y: np.ndarray
    s_yy: np.ndarray
    omega_j: np.ndarray
    omega_ij: np.ndarray
    omega_j_expanded: np.ndarray
    omega_ij_expanded: np.ndarray

    @property
    def discrepancy_j(self) -> float:
        return float(np.max(np.abs(self.omega_j - self.omega_j_expanded)))

    @property
    def discrepancy_ij(self) -> float:
        return float(np.max(np.abs(self.omega_ij - self.omega_ij_expanded)))

    @property
    def discrepancy(self) -> float:
        return max(self.discrepancy_j, self.discrepancy_ij)


def omega_y_derivatives(bundle: OmegaBundle, alpha: float, y, v, metric) -> OmegaYDerivatives:
    """Chain-rule and expanded-polynomial values of ``Omega_j`` and ``Omega_ij``."""
    g = np.asarray(metric, dtype=float)
    y_lower = g @ np.asarray(y, dtype=float)
    b_lower = g @ np.asarray(v, dtype=float)
    s_i, s_ij = s_y_derivatives(alpha, bundle.s, y_lower, b_lower, g)

    omega_j = bundle.omega_d1 * s_i
    omega_ij = bundle.omega_d2 * np.outer(s_i, s_i) + bundle.omega_d1 * s_ij

    m, s, b2, n = bundle.m, bundle.s, bundle.b2, bundle.n
    den = bundle.denominator
    c1 = expanded_d1_polynomial(m, s, b2, n) / den**3
    c2 = expanded_d2_polynomial(m, s, b2, n) / den**4
    # a stray s_j factor on the expanded s_ij term is omitted
    return OmegaYDerivatives(
        s_y=s_i, s_yy=s_ij, omega_j=omega_j, omega_ij=omega_ij,
        omega_j_expanded=c1 * s_i,
        omega_ij_expanded=c2 * np.outer(s_i, s_i) + c1 * s_ij,
    )
