"""The volume-form coefficient ``f(b)`` and its log-derivative.

Busemann-Hausdorff:

    f(b) = int_0^pi sin^(n-2) t dt / int_0^pi sin^(n-2) t / phi(b cos t)^n dt

Holmes-Thompson (the weight ``T`` must be supplied by the caller):

    f(b) = int_0^pi sin^(n-2) t T(b cos t) dt / int_0^pi sin^(n-2) t dt

Both integrals use globally adaptive composite Gauss-Legendre quadrature.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import FinslerError, QuadratureDivergenceError, SingularityError
from .jets import Jet
from .phi import PhiModel

GL_POINTS = 15
RTOL = 1e-10
MAX_DEPTH = 30
MAX_PANELS = 20000

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(GL_POINTS)


@dataclass(frozen=True)
class VolumeFormKind:
    kind: str  # "busemann_hausdorff" or "holmes_thompson"
    T: Callable[[float], float] | None = None

    def __post_init__(self):
        if self.kind not in ("busemann_hausdorff", "holmes_thompson"):
            raise FinslerError(f"unknown volume form {self.kind!r}")
        if self.kind == "holmes_thompson" and self.T is None:
            raise FinslerError("the Holmes-Thompson form needs a weight function T")


BUSEMANN_HAUSDORFF = VolumeFormKind("busemann_hausdorff")


def holmes_thompson(T: Callable[[float], float]) -> VolumeFormKind:
    return VolumeFormKind("holmes_thompson", T)


def _panel(f, a: float, b: float) -> float:
    half = 0.5 * (b - a)
    x = (a + b) / 2.0 + half * _NODES
    fx = np.array([f(float(t)) for t in x])
    if not np.all(np.isfinite(fx)):
        raise QuadratureDivergenceError(f"integrand is not finite on [{a}, {b}]")
    return half * float(_WEIGHTS @ fx)


def gauss_legendre_adaptive(f: Callable[[float], float], a: float, b: float, rtol: float = RTOL,
                            panels: int = 1, max_depth: int = MAX_DEPTH) -> float:
    """Integrate ``f`` over ``[a, b]``, bisecting the panel with the largest error estimate.

    Each panel's error is estimated by comparing one 15-point rule with the
    sum over its two halves.  Raises :class:`QuadratureDivergenceError` when a
    panel would exceed ``max_depth`` bisections.
    """
    edges = np.linspace(a, b, panels + 1)
    heap = []  # (-error, lo, hi, depth, value, left half, right half)

    def push(lo, hi, depth, whole):
        mid = 0.5 * (lo + hi)
        left, right = _panel(f, lo, mid), _panel(f, mid, hi)
        heapq.heappush(heap, (-abs(left + right - whole), lo, hi, depth, left + right, left, right))

    for lo, hi in zip(edges[:-1], edges[1:]):
        push(float(lo), float(hi), 0, _panel(f, float(lo), float(hi)))

    while True:
        total = math.fsum(item[4] for item in heap)
        err = math.fsum(-item[0] for item in heap)
        if err <= rtol * abs(total) or err == 0.0:
            return math.fsum(item[4] for item in sorted(heap, key=lambda it: it[1]))
        if len(heap) > MAX_PANELS:
            raise QuadratureDivergenceError("adaptive quadrature exceeded the panel budget")
        _, lo, hi, depth, _, left, right = heapq.heappop(heap)
        if depth + 1 > max_depth:
            raise QuadratureDivergenceError(
                f"adaptive quadrature did not converge near [{lo:.6g}, {hi:.6g}]")
        mid = 0.5 * (lo + hi)
        push(lo, mid, depth + 1, left)
        push(mid, hi, depth + 1, right)


def _phi_value(model: PhiModel, s: float) -> float:
    return model(Jet.constant(s, 0)).val


def f_of_b(model: PhiModel, b: float, n: int, kind: VolumeFormKind = BUSEMANN_HAUSDORFF,
           panels: int = 1, rtol: float = RTOL) -> float:
    if n < 2:
        raise FinslerError("dimension n must be at least 2")
    weight = (lambda t: 1.0) if n == 2 else (lambda t: math.sin(t) ** (n - 2))
    sphere = gauss_legendre_adaptive(weight, 0.0, math.pi, rtol, panels)
    if kind.kind == "busemann_hausdorff":
        def integrand(t):
            try:
                return weight(t) / _phi_value(model, b * math.cos(t)) ** n
            except (SingularityError, ZeroDivisionError) as exc:
                raise QuadratureDivergenceError(f"integrand undefined at t = {t}: {exc}") from exc
        return sphere / gauss_legendre_adaptive(integrand, 0.0, math.pi, rtol, panels)
    weighted = gauss_legendre_adaptive(lambda t: weight(t) * kind.T(b * math.cos(t)),
                                       0.0, math.pi, rtol, panels)
    return weighted / sphere


def fb_log_derivative(model: PhiModel, b: float, n: int,
                      kind: VolumeFormKind = BUSEMANN_HAUSDORFF) -> float:
    """``f'(b) / (b f(b))`` by a central difference of ``log f`` at step ``1e-5 b``."""
    h = 1e-5 * b
    up = math.log(f_of_b(model, b + h, n, kind))
    down = math.log(f_of_b(model, b - h, n, kind))
    return (up - down) / (2.0 * h) / b
