"""Truncated power series with exact coefficients and the Schwarzian derivative.

A :class:`TruncatedSeries` of order ``N`` stores ``c_0, ..., c_N`` and knows
nothing about the coefficients beyond ``N``.  Binary operations truncate to the
smaller order of their operands, so a result never claims more precision than
its inputs carry.

Coefficients may be ``int``, ``Fraction`` or
:class:`~projstruct.scalars.Cyclotomic`; ``mpmath.mpc`` also works for
numerical cross-checks, but the exact-zero tests are then meaningless.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (
    DivisionByZeroConstantTerm,
    NonzeroConstantTerm,
    NotInvertible,
    NotLocallyInjective,
)
from .scalars import Scalar, format_scalar, is_exact

DEFAULT_ORDER = 16

__all__ = [
    "DEFAULT_ORDER",
    "TruncatedSeries",
    "series_arith",
    "derive",
    "compose_series",
    "revert_series",
    "schwarzian",
    "cocycle_residual",
    "is_moebius_series",
    "exp_series",
    "log1p_series",
]


def _norm(c):
    return Fraction(c) if isinstance(c, int) else c


@dataclass(frozen=True)
class TruncatedSeries:
    """``c_0 + c_1 w + ... + c_N w^N + O(w^{N+1})``."""

    coeffs: tuple

    def __init__(self, coeffs: Iterable, order: int | None = None):
        coeffs = [_norm(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("a series needs at least one coefficient")
        coeffs = coeffs[: order + 1] + [Fraction(0)] * (order + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def variable(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    @classmethod
    def constant(cls, value, order: int) -> "TruncatedSeries":
        return cls([value], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot raise the order of a series from {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # ring operations ------------------------------------------------------
    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([a * other for a in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = Fraction(0)
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return TruncatedSeries(out)

    def __rmul__(self, other):
        return self * other

    def reciprocal(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if not c0:
            raise DivisionByZeroConstantTerm("series has zero constant term")
        inv0 = 1 / c0
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    acc = acc + self.coeffs[i] * out[k - i]
            out.append(-acc * inv0)
        return TruncatedSeries(out)

    def __truediv__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self * (1 / _norm(other))
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.reciprocal()

    def __pow__(self, k: int):
        if k < 0:
            return self.reciprocal() ** (-k)
        result = TruncatedSeries.constant(1, self.order)
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, g: "TruncatedSeries") -> "TruncatedSeries":
        return compose_series(self, g)

    def __str__(self):
        out = ""
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            coeff = format_scalar(c) if is_exact(c) else str(c)
            if any(ch in coeff[1:] for ch in "+-"):
                coeff = f"({coeff})"
            neg = coeff.startswith("-")
            body = coeff[1:] if neg else coeff
            if k:
                mono = "w" if k == 1 else f"w^{k}"
                body = mono if body == "1" else f"{body}*{mono}"
            if out:
                out += " - " if neg else " + "
            elif neg:
                out = "-"
            out += body
        return f"{out or '0'} + O(w^{self.order + 1})"


def series_arith(a: TruncatedSeries, b: TruncatedSeries, op: str) -> TruncatedSeries:
    """Exact truncated arithmetic; ``op`` is one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown series operation {op!r}")


def derive(a: TruncatedSeries) -> TruncatedSeries:
    """Formal derivative; the order drops by one."""
    if a.order < 1:
        raise ValueError("derivative needs order >= 1")
    return TruncatedSeries([(k + 1) * a.coeffs[k + 1] for k in range(a.order)])


def compose_series(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """``f(g(w))`` for ``g(0) = 0``, by Horner's scheme."""
    if g.coeffs[0]:
        raise NonzeroConstantTerm("inner series must vanish at the expansion point")
    n = min(f.order, g.order)
    g = g.truncate(n)
    result = TruncatedSeries.constant(f.coeffs[n], n)
    for k in range(n - 1, -1, -1):
        result = result * g + f.coeffs[k]
    return result


def revert_series(f: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse ``g`` with ``f(g(w)) = w + O(w^{N+1})``."""
    if f.coeffs[0] or f.order < 1 or not f.coeffs[1]:
        raise NotInvertible("reversion needs c0 = 0 and c1 != 0")
    n = f.order
    inv1 = 1 / f.coeffs[1]
    g = [Fraction(0), inv1] + [Fraction(0)] * (n - 1)
    # fix one coefficient at a time: [w^k] f(g) is linear in g_k with slope c1
    for k in range(2, n + 1):
        err = compose_series(f, TruncatedSeries(g)).coeffs[k]
        g[k] = g[k] - err * inv1
    return TruncatedSeries(g)


def schwarzian(f: TruncatedSeries) -> TruncatedSeries:
    """``(f''/f')' - (f''/f')^2 / 2`` as a series of order ``N - 3``."""
    if f.order < 3:
        raise ValueError("the Schwarzian needs order >= 3")
    if not f.coeffs[1]:
        raise NotLocallyInjective("f'(0) = 0")
    d1 = derive(f)
    ratio = derive(d1) / d1
    return derive(ratio) - ratio * ratio * Fraction(1, 2)


def cocycle_residual(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """``S(f o g) - (S(f) o g) g'^2 - S(g)``; exactly zero when the chain rule holds."""
    lhs = schwarzian(compose_series(f, g))
    dg = derive(g)
    return lhs - compose_series(schwarzian(f), g) * dg * dg - schwarzian(g)


def is_moebius_series(f: TruncatedSeries) -> bool:
    """Whether the Schwarzian vanishes through the available order.

    This certifies agreement with some Möbius map up to order ``N`` only:
    ``w + w**(N+1)`` at order ``N`` is indistinguishable from ``w``.
    """
    return schwarzian(f).is_zero()


def exp_series(order: int, scale: Scalar = 1) -> TruncatedSeries:
    """Taylor series of ``exp(scale * w)``."""
    return TruncatedSeries(
        [_norm(scale) ** k * Fraction(1, math.factorial(k)) for k in range(order + 1)]
    )


def log1p_series(order: int) -> TruncatedSeries:
    """Taylor series of ``log(1 + w)``."""
    return TruncatedSeries([0] + [Fraction((-1) ** (k + 1), k) for k in range(1, order + 1)])

