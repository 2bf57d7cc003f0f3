"""Finite-difference derivatives with Richardson extrapolation.

These are deliberately independent of the jet machinery and serve as the
cross-check for every jet-computed derivative.
"""

from __future__ import annotations

from typing import Callable

import numpy as np


def _central(f, x, h, order):
    if order == 1:
        return (f(x + h) - f(x - h)) / (2.0 * h)
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)


def ridders(f: Callable[[float], float], x: float, h: float, order: int = 1,
            ntab: int = 10, shrink: float = 1.4, min_rows: int = 4) -> tuple[float, float]:
    """Derivative of ``f`` at ``x`` by Ridders' extrapolation tableau.

    Returns ``(estimate, error_estimate)``.  ``h`` should be an increment over
    which ``f`` changes appreciably; the stencil never reaches beyond ``x +- h``.
    The early exit on a growing error only applies from row ``min_rows`` on:
    the first rows are often pre-asymptotic and would stop the tableau while
    it is still converging.
    """
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    c2 = shrink * shrink
    tab = np.zeros((ntab, ntab))
    tab[0, 0] = _central(f, x, h, order)
    best, err = tab[0, 0], np.inf
    for i in range(1, ntab):
        h /= shrink
        tab[0, i] = _central(f, x, h, order)
        fac = c2
        for j in range(1, i + 1):
            tab[j, i] = (tab[j - 1, i] * fac - tab[j - 1, i - 1]) / (fac - 1.0)
            fac *= c2
            e = max(abs(tab[j, i] - tab[j - 1, i]), abs(tab[j, i] - tab[j - 1, i - 1]))
            if e <= err:
                err, best = e, tab[j, i]
        if i >= min_rows and abs(tab[i, i] - tab[i - 1, i - 1]) >= 2.0 * err:
            break
    return float(best), float(err)


def richardson_hessian(f: Callable[[np.ndarray], float], x, h: float) -> np.ndarray:
    """Hessian from central differences at steps ``h`` and ``h/2`` combined as ``(4 H(h/2) - H(h)) / 3``."""
    x = np.asarray(x, dtype=float)
    return (4.0 * central_hessian(f, x, h / 2.0) - central_hessian(f, x, h)) / 3.0


def hessian_stencil(x, h: float) -> list[np.ndarray]:
    """All points visited by :func:`central_hessian` at step ``h``."""
    x = np.asarray(x, dtype=float)
    n = x.size
    eye = np.eye(n) * h
    pts = [x]
    for i in range(n):
        pts += [x + eye[i], x - eye[i]]
        for j in range(i + 1, n):
            pts += [x + eye[i] + eye[j], x + eye[i] - eye[j],
                    x - eye[i] + eye[j], x - eye[i] - eye[j]]
    return pts


def central_hessian(f, x, h: float) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    n = x.size
    eye = np.eye(n) * h
    f0 = f(x)
    hess = np.empty((n, n))
    for i in range(n):
        hess[i, i] = (f(x + eye[i]) - 2.0 * f0 + f(x - eye[i])) / (h * h)
        for j in range(i + 1, n):
            val = (f(x + eye[i] + eye[j]) - f(x + eye[i] - eye[j])
                   - f(x - eye[i] + eye[j]) + f(x - eye[i] - eye[j])) / (4.0 * h * h)
            hess[i, j] = hess[j, i] = val
    return hess
