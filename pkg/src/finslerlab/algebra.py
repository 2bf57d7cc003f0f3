"""Reduced data of a reductive homogeneous space G/H at the origin.

The tangent space at the origin is identified with the complement ``m`` of the
isotropy algebra.  A :class:`HomogeneousSpec` carries an inner product on
``m`` (which defines the Riemannian part ``alpha``), the projected bracket
``[., .]_m`` as structure constants, and the vector ``v`` dual to the 1-form
``beta``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import InputError

SPD_PIVOT_TOL = 1e-12


def _frozen(a) -> np.ndarray:
    out = np.array(a, dtype=float)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class HomogeneousSpec:
    """Inner product, projected bracket and beta-vector on ``m``.

    ``bracket[i, j, k]`` is the coefficient of ``e_k`` in ``[e_i, e_j]_m``.
    Shapes are checked on construction; the algebraic invariants (symmetry,
    positive definiteness, antisymmetry, ``0 < b < 1``) are checked by
    :func:`validate_spec`.
    """

    metric: np.ndarray
    bracket: np.ndarray
    v: np.ndarray
    n: int = field(init=False)

    def __post_init__(self):
        metric = _frozen(self.metric)
        bracket = _frozen(self.bracket)
        v = _frozen(self.v)
        if v.ndim != 1 or v.size == 0:
            raise InputError("v must be a nonempty vector")
        n = v.size
        if metric.shape != (n, n):
            raise InputError(f"metric has shape {metric.shape}, expected {(n, n)}")
        if bracket.shape != (n, n, n):
            raise InputError(f"bracket has shape {bracket.shape}, expected {(n, n, n)}")
        for name, arr in (("metric", metric), ("bracket", bracket), ("v", v)):
            if not np.all(np.isfinite(arr)):
                raise InputError(f"{name} contains non-finite entries")
        object.__setattr__(self, "metric", metric)
        object.__setattr__(self, "bracket", bracket)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "n", n)

    @classmethod
    def from_structure_constants(cls, metric, v, constants) -> "HomogeneousSpec":
        """Build from ``{(i, j): {k: coef}}`` with 0-based ``i < j``; fills ``[e_j, e_i]`` by antisymmetry."""
        n = len(v)
        c = np.zeros((n, n, n))
        for (i, j), image in constants.items():
            if not i < j:
                raise InputError(f"bracket entry ({i}, {j}) must have i < j")
            for k, coef in image.items():
                c[i, j, k] += coef
                c[j, i, k] -= coef
        return cls(metric=metric, bracket=c, v=v)

    def inner(self, x, y) -> float:
        return float(np.asarray(x) @ self.metric @ np.asarray(y))

    @cached_property
    def b2(self) -> float:
        """Squared alpha-length of ``v``."""
        return float(self.v @ self.metric @ self.v)

    @property
    def b(self) -> float:
        return float(np.sqrt(self.b2))

    @cached_property
    def ad_v(self) -> np.ndarray:
        """Matrix of ``y -> [v, y]_m``."""
        return np.einsum("i,ijk->kj", self.v, self.bracket)

    @cached_property
    def v_lower(self) -> np.ndarray:
        """Covariant components ``b_i`` of the 1-form beta."""
        return self.metric @ self.v


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    message: str


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.ok), None)

    def __str__(self) -> str:
        if self.ok:
            return "valid"
        return f"invalid: {self.first_failure.message}"


def _first_index(mask: np.ndarray) -> tuple[int, ...]:
    return tuple(int(i) for i in np.argwhere(mask)[0])


def validate_spec(spec: HomogeneousSpec) -> ValidationReport:
    """Check every invariant of ``spec``; failures are reported, never raised."""
    checks = []
    g = spec.metric

    asym = np.abs(g - g.T) > 0
    if asym.any():
        i, j = _first_index(asym)
        checks.append(Check("metric symmetric", False,
                            f"metric not symmetric at ({i + 1}, {j + 1})"))
    else:
        checks.append(Check("metric symmetric", True, "metric symmetric"))

    try:
        chol = np.linalg.cholesky(g)
        pivot = float(np.min(np.diag(chol)))
        spd = pivot > SPD_PIVOT_TOL
    except np.linalg.LinAlgError:
        spd = False
    checks.append(Check("metric positive definite", spd,
                        "metric positive definite" if spd else "metric not positive definite"))

    c = spec.bracket
    bad = c + np.transpose(c, (1, 0, 2)) != 0
    if bad.any():
        i, j, k = _first_index(bad)
        checks.append(Check("bracket antisymmetric", False,
                            f"bracket not antisymmetric at ({i + 1}, {j + 1}, {k + 1})"))
    else:
        checks.append(Check("bracket antisymmetric", True, "bracket antisymmetric"))

    if spd:
        b = spec.b
        if b <= 0.0:
            checks.append(Check("0 < b < 1", False, "b = 0 (v is zero)"))
        elif b >= 1.0:
            checks.append(Check("0 < b < 1", False, f"b >= 1 (b = {b:.9g})"))
        else:
            checks.append(Check("0 < b < 1", True, f"b = {b:.9g}"))
    else:
        checks.append(Check("0 < b < 1", False, "b undefined: metric not positive definite"))
    return ValidationReport(tuple(checks))


def _vector(spec: HomogeneousSpec, x, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.shape != (spec.n,):
        raise InputError(f"{name} has shape {arr.shape}, expected ({spec.n},)")
    return arr


def bracket_m(spec: HomogeneousSpec, x, y) -> np.ndarray:
    """``[x, y]_m`` from the structure constants."""
    x = _vector(spec, x, "x")
    y = _vector(spec, y, "y")
    return np.einsum("i,j,ijk->k", x, y, spec.bracket)


def alpha_beta_s(spec: HomogeneousSpec, y) -> tuple[float, float, float]:
    """Riemannian length ``alpha``, ``beta = <v, y>`` and ``s = beta / alpha``."""
    y = _vector(spec, y, "y")
    alpha2 = float(y @ spec.metric @ y)
    if not alpha2 > 0.0:
        raise InputError("tangent vector must be nonzero")
    alpha = float(np.sqrt(alpha2))
    beta = float(spec.v_lower @ y)
    return alpha, beta, beta / alpha


def bracket_pairings(spec: HomogeneousSpec, y) -> tuple[float, float]:
    """The two pairings ``<[v, y]_m, y>`` and ``<[v, y]_m, v>``."""
    y = _vector(spec, y, "y")
    w = spec.ad_v @ y
    return float(w @ spec.metric @ y), float(w @ spec.v_lower)
