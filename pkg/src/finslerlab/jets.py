"""Truncated Taylor jets for forward-mode differentiation of scalar functions.

A :class:`Jet` of order ``k`` stores the normalized Taylor coefficients
``c[0], ..., c[k]`` of a function around a point, so that ``c[j] = f^(j)/j!``.
Arithmetic follows the truncated power-series rules, which makes the
derivatives exact (up to rounding) for the rational and power functions used
by the metric families.

>>> x = Jet.variable(0.5, order=2)
>>> y = x ** -2
>>> y.val, y.d1, y.d2
(4.0, -16.0, 96.0)
"""

from __future__ import annotations

import math
from typing import Iterable, Union

Number = Union[int, float]


class Jet:
    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable[float]):
        c = tuple(float(x) for x in coeffs)
        if not c:
            raise ValueError("a jet needs at least one coefficient")
        self.c = c

    @classmethod
    def variable(cls, x: float, order: int = 2) -> "Jet":
        """The identity function seeded at ``x``."""
        if order == 0:
            return cls((x,))
        return cls((x, 1.0) + (0.0,) * (order - 1))

    @classmethod
    def constant(cls, x: float, order: int = 2) -> "Jet":
        return cls((x,) + (0.0,) * order)

    @classmethod
    def from_derivatives(cls, *derivs: float) -> "Jet":
        return cls(d / math.factorial(k) for k, d in enumerate(derivs))

    @property
    def order(self) -> int:
        return len(self.c) - 1

    def derivative(self, k: int) -> float:
        if k > self.order:
            raise ValueError(f"jet of order {self.order} has no derivative {k}")
        return self.c[k] * math.factorial(k)

    @property
    def val(self) -> float:
        return self.c[0]

    @property
    def d1(self) -> float:
        return self.derivative(1)

    @property
    def d2(self) -> float:
        return self.derivative(2)

    @property
    def derivs(self) -> tuple[float, ...]:
        return tuple(self.derivative(k) for k in range(len(self.c)))

    def truncate(self, order: int) -> "Jet":
        if order > self.order:
            raise ValueError("cannot raise the order of a jet")
        return Jet(self.c[: order + 1])

    def deriv(self) -> "Jet":
        """Jet of the derivative; the order drops by one."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 jet")
        return Jet((k + 1) * self.c[k + 1] for k in range(self.order))

    def compose(self, inner: "Jet") -> "Jet":
        """Evaluate ``f(inner)`` where ``self`` is the Taylor jet of ``f`` at ``inner.val``."""
        order = min(self.order, inner.order)
        du = Jet((0.0,) + inner.c[1 : order + 1])
        out = Jet.constant(self.c[order], order)
        for k in range(order - 1, -1, -1):
            out = out * du + self.c[k]
        return out

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> "Jet":
        if isinstance(other, Jet):
            return other
        return Jet.constant(float(other), self.order)

    def __add__(self, other) -> "Jet":
        o = self._coerce(other)
        k = min(self.order, o.order)
        return Jet(a + b for a, b in zip(self.c[: k + 1], o.c[: k + 1]))

    __radd__ = __add__

    def __neg__(self) -> "Jet":
        return Jet(-a for a in self.c)

    def __pos__(self) -> "Jet":
        return self

    def __sub__(self, other) -> "Jet":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Jet":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Jet":
        if not isinstance(other, Jet):
            f = float(other)
            return Jet(a * f for a in self.c)
        a, b = self.c, other.c
        k = min(len(a), len(b))
        return Jet(math.fsum(a[i] * b[j - i] for i in range(j + 1)) for j in range(k))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Jet":
        if not isinstance(other, Jet):
            f = float(other)
            return Jet(a / f for a in self.c)
        a, b = self.c, other.c
        if b[0] == 0.0:
            raise ZeroDivisionError("jet division by a jet with zero value")
        k = min(len(a), len(b))
        q: list[float] = []
        for j in range(k):
            acc = a[j] - math.fsum(b[i] * q[j - i] for i in range(1, j + 1))
            q.append(acc / b[0])
        return Jet(q)

    def __rtruediv__(self, other) -> "Jet":
        return self._coerce(other) / self

    def __pow__(self, p: Number) -> "Jet":
        if isinstance(p, Jet):
            raise TypeError("jet exponents are not supported")
        p = float(p)
        if p.is_integer() and p >= 0:
            out = Jet.constant(1.0, self.order)
            for _ in range(int(p)):
                out = out * self
            return out
        x0 = self.c[0]
        if x0 == 0.0:
            raise ZeroDivisionError("negative or fractional power of a jet at zero")
        if x0 < 0.0 and not p.is_integer():
            raise ValueError("fractional power of a jet with negative value")
        a = self.c
        y = [x0**p]
        # y' x = p y x'  =>  k x0 y_k = sum_{j=1..k} (p j + j - k) x_j y_{k-j}
        for k in range(1, len(a)):
            acc = math.fsum((p * j + (j - k)) * a[j] * y[k - j] for j in range(1, k + 1))
            y.append(acc / (k * x0))
        return Jet(y)

    def sqrt(self) -> "Jet":
        if self.c[0] <= 0.0:
            raise ValueError("sqrt of a jet with non-positive value")
        return self**0.5

    def __repr__(self) -> str:
        return f"Jet({', '.join(repr(x) for x in self.derivs)})"


def Jet2(val: float, d1: float, d2: float) -> Jet:
    """Second-order jet from a value and its first two derivatives."""
    return Jet.from_derivatives(val, d1, d2)
