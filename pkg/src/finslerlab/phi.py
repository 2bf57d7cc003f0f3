"""Metric families ``phi(s)`` and the scalar bundle of an (alpha, beta)-metric.

An (alpha, beta)-metric is ``F = alpha * phi(beta / alpha)``.  Everything the
curvature formulas need from ``phi`` is collected in :class:`AlphaBetaScalars`:

    Q     = phi' / (phi - s phi')
    Delta = 1 + s Q + (b^2 - s^2) Q'
    Phi   = (s Q' - Q)(1 + n Delta + s Q) - (b^2 - s^2)(1 + s Q) Q''
    psi   = Q' / (2 Delta)

The derivatives of ``Q`` come from Taylor jets pushed through the quotient,
so any family that can be evaluated on a :class:`~finslerlab.jets.Jet` is
supported.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import DegenerateMetricError, DomainError, FinslerError, SingularityError
from .jets import Jet

Q_DENOM_RTOL = 1e-14
DEFAULT_GRID_POINTS = 201


class PhiModel:
    """A metric family ``phi``; subclasses implement :meth:`__call__` on jets."""

    family: str = "custom"
    singular_at_zero: bool = False

    def __call__(self, s: Jet) -> Jet:
        raise NotImplementedError

    def real_domain(self, s: float) -> bool:
        """Whether ``phi`` is real-valued at ``s``."""
        return True

    def describe(self) -> str:
        return self.family


@dataclass(frozen=True)
class Kropina(PhiModel):
    """Generalized m-Kropina family ``phi(s) = s**(-m)``."""

    m: float
    family = "kropina"
    singular_at_zero = True

    def __post_init__(self):
        if self.m in (-1.0, 0.0, 1.0):
            raise FinslerError(f"kropina exponent m must not be -1, 0 or 1 (got {self.m})")

    def __call__(self, s: Jet) -> Jet:
        if s.val == 0.0:
            raise SingularityError("kropina phi is undefined at s = 0")
        if not self.real_domain(s.val):
            raise DomainError(f"s**(-m) is not real for s = {s.val} and m = {self.m}")
        return s ** (-self.m)

    def real_domain(self, s: float) -> bool:
        return s > 0.0 or float(self.m).is_integer()

    def describe(self) -> str:
        return f"kropina m={self.m:g}"


@dataclass(frozen=True)
class Randers(PhiModel):
    """``phi(s) = 1 + s``."""

    family = "randers"

    def __call__(self, s: Jet) -> Jet:
        return 1.0 + s


@dataclass(frozen=True)
class Polynomial(PhiModel):
    """``phi(s) = sum coeffs[k] s**k`` (ascending coefficients)."""

    coeffs: tuple[float, ...]
    family = "polynomial"

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise FinslerError("polynomial phi needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))

    def __call__(self, s: Jet) -> Jet:
        out = Jet.constant(self.coeffs[-1], s.order)
        for c in reversed(self.coeffs[:-1]):
            out = out * s + c
        return out

    def describe(self) -> str:
        return f"polynomial {list(self.coeffs)}"


@dataclass(frozen=True)
class Custom(PhiModel):
    """User-supplied ``phi`` that accepts and returns jets."""

    func: Callable[[Jet], Jet]
    name: str = "custom"
    singular_at_zero: bool = False

    def __call__(self, s: Jet) -> Jet:
        return self.func(s)

    def describe(self) -> str:
        return self.name


RIEMANNIAN = Polynomial((1.0,))


def phi_jet(model: PhiModel, s: float) -> Jet:
    """``(phi, phi', phi'')`` at ``s`` as a second-order jet."""
    return model(Jet.variable(float(s), 2))


# -- validity ----------------------------------------------------------------


@dataclass(frozen=True)
class ValidityPoint:
    s: float
    phi: float
    condition: float
    status: str  # "ok", "fail", "singular" or "domain"


@dataclass(frozen=True)
class ValidityReport:
    b: float
    points: tuple[ValidityPoint, ...]
    verdict: str  # "pass", "fail", "singular" or "domain-restricted"

    @property
    def failures(self) -> list[ValidityPoint]:
        return [p for p in self.points if p.status != "ok"]


def default_grid(model: PhiModel, b: float, points: int = DEFAULT_GRID_POINTS) -> np.ndarray:
    if model.singular_at_zero:
        return np.linspace(b, 0.0, points, endpoint=False)[::-1]
    return np.linspace(-b, b, points)


def validity_check(model: PhiModel, b: float, grid: Sequence[float] | None = None) -> ValidityReport:
    """Pointwise test of ``phi > 0`` and ``phi - s phi' + (b^2 - s^2) phi'' > 0``."""
    if grid is None:
        grid = default_grid(model, b)
    pts = []
    for s in np.asarray(grid, dtype=float):
        s = float(s)
        if not model.real_domain(s):
            pts.append(ValidityPoint(s, float("nan"), float("nan"), "domain"))
            continue
        try:
            j = phi_jet(model, s)
        except SingularityError:
            pts.append(ValidityPoint(s, float("nan"), float("nan"), "singular"))
            continue
        cond = j.val - s * j.d1 + (b * b - s * s) * j.d2
        ok = j.val > 0.0 and cond > 0.0
        pts.append(ValidityPoint(s, j.val, cond, "ok" if ok else "fail"))

    statuses = {p.status for p in pts}
    if "singular" in statuses:
        verdict = "singular"
    elif "fail" in statuses:
        verdict = "fail"
    elif "domain" in statuses:
        verdict = "domain-restricted"
    else:
        verdict = "pass"
    return ValidityReport(b=float(b), points=tuple(pts), verdict=verdict)


# -- scalar bundle -----------------------------------------------------------


@dataclass(frozen=True)
class AlphaBetaScalars:
    s: float
    b2: float
    n: int
    Q: float
    Qp: float
    Qpp: float
    Delta: float
    Phi: float
    psi: float

    def phi_alternate(self) -> float:
        """``Phi`` written as ``-(Q - s Q')(1 + n Delta + s Q) - ...``; equal to :attr:`Phi`."""
        s, b2 = self.s, self.b2
        return (-(self.Q - s * self.Qp) * (1 + self.n * self.Delta + s * self.Q)
                - (b2 - s * s) * (1 + s * self.Q) * self.Qpp)


def q_jet(model: PhiModel, s: float, order: int) -> Jet:
    """Taylor jet of ``Q(s) = phi'/(phi - s phi')`` up to ``order``."""
    phi = model(Jet.variable(float(s), order + 1))
    dphi = phi.deriv()
    phi = phi.truncate(order)
    den = phi - Jet.variable(float(s), order) * dphi
    if abs(den.val) < Q_DENOM_RTOL * abs(phi.val) or den.val == 0.0:
        raise DegenerateMetricError(f"phi - s phi' vanishes at s = {s}")
    return dphi / den


def scalar_jets(model: PhiModel, s: float, b2: float, n: int, order: int = 0) -> tuple[Jet, Jet, Jet]:
    """``(Q, Delta, Phi)`` as jets in ``s`` of the requested order."""
    q = q_jet(model, s, order + 2)
    Q = q.truncate(order)
    dq = q.deriv()
    Qp = dq.truncate(order)
    Qpp = dq.deriv().truncate(order)
    sv = Jet.variable(float(s), order)
    rest = b2 - sv * sv
    Delta = 1.0 + sv * Q + rest * Qp
    Phi = (sv * Qp - Q) * (1.0 + n * Delta + sv * Q) - rest * (1.0 + sv * Q) * Qpp
    return Q, Delta, Phi


def ab_scalars_generic(model: PhiModel, s: float, b2: float, n: int) -> AlphaBetaScalars:
    q = q_jet(model, s, 2)
    Q, Qp, Qpp = q.derivs
    s = float(s)
    Delta = 1.0 + s * Q + (b2 - s * s) * Qp
    Phi = (s * Qp - Q) * (1.0 + n * Delta + s * Q) - (b2 - s * s) * (1.0 + s * Q) * Qpp
    return AlphaBetaScalars(s=s, b2=float(b2), n=int(n), Q=Q, Qp=Qp, Qpp=Qpp,
                            Delta=Delta, Phi=Phi, psi=Qp / (2.0 * Delta))


def ab_scalars_kropina(m: float, s: float, b2: float, n: int) -> AlphaBetaScalars:
    """Closed-form scalars for ``phi = s**(-m)``."""
    Kropina(m)
    if s == 0.0:
        raise SingularityError("kropina scalars are undefined at s = 0")
    s = float(s)
    mp1 = 1.0 + m
    Q = -m / (s * mp1)
    Qp = m / (mp1 * s * s)
    Qpp = -2.0 * m / (mp1 * s**3)
    Delta = ((1.0 - m) * s * s + b2 * m) / (mp1 * s * s)
    Phi = 2.0 * m / (mp1 * mp1 * s**3) * ((n - n * m) * s * s + (n * m + 1.0) * b2)
    return AlphaBetaScalars(s=s, b2=float(b2), n=int(n), Q=Q, Qp=Qp, Qpp=Qpp,
                            Delta=Delta, Phi=Phi, psi=Qp / (2.0 * Delta))
