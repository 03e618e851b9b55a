"""Möbius transformations of the Riemann sphere over exact scalar rings."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import PoleAtCenter
from .scalars import Scalar, format_scalar
from .series import TruncatedSeries

__all__ = ["Infinity", "INFINITY", "SpherePoint", "MobiusMap", "compose", "apply", "taylor_expand"]


class Infinity:
    """The point at infinity of the Riemann sphere (a singleton)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (Infinity, ())


INFINITY = Infinity()
SpherePoint = Union[Scalar, Infinity]


def _scalar(x) -> Scalar:
    return Fraction(x) if isinstance(x, int) else x


@dataclass(frozen=True)
class MobiusMap:
    """``z -> (a z + b) / (c z + d)``, normalized so that PSL2-equal maps compare equal.

    The first nonzero entry of ``(a, b, c, d)`` is scaled to 1.

    >>> MobiusMap(2, 0, 0, 2) == MobiusMap.identity()
    True
    """

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar

    def __post_init__(self):
        entries = [_scalar(x) for x in (self.a, self.b, self.c, self.d)]
        a, b, c, d = entries
        if a * d - b * c == 0:
            raise ValueError("degenerate Möbius map: ad - bc = 0")
        lead = next(x for x in entries if x)
        for name, x in zip("abcd", entries):
            object.__setattr__(self, name, x / lead)

    @classmethod
    def identity(cls) -> "MobiusMap":
        return cls(1, 0, 0, 1)

    @property
    def matrix(self) -> tuple:
        return ((self.a, self.b), (self.c, self.d))

    def determinant(self) -> Scalar:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> "MobiusMap":
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def pole(self) -> SpherePoint:
        """The point sent to infinity."""
        return apply(self.inverse(), INFINITY)

    def __matmul__(self, other: "MobiusMap") -> "MobiusMap":
        return compose(self, other)

    def __call__(self, p):
        return apply(self, p)

    def __str__(self):
        a, b, c, d = (format_scalar(x) for x in (self.a, self.b, self.c, self.d))
        return f"z -> ({a}*z + {b}) / ({c}*z + {d})"


def compose(f: MobiusMap, g: MobiusMap) -> MobiusMap:
    """``f o g`` (apply g first)."""
    return MobiusMap(
        f.a * g.a + f.b * g.c,
        f.a * g.b + f.b * g.d,
        f.c * g.a + f.d * g.c,
        f.c * g.b + f.d * g.d,
    )


def apply(f: MobiusMap, p: SpherePoint) -> SpherePoint:
    if p is INFINITY:
        return f.a / f.c if f.c else INFINITY
    p = _scalar(p)
    den = f.c * p + f.d
    if den == 0:
        return INFINITY
    return (f.a * p + f.b) / den


def taylor_expand(f: MobiusMap, center: Scalar, order: int) -> TruncatedSeries:
    """Exact coefficients of ``f(center + w)`` through ``w**order``."""
    center = _scalar(center)
    num0 = f.a * center + f.b
    den0 = f.c * center + f.d
    if den0 == 0:
        raise PoleAtCenter(f"{center} is the pole of {f}")
    num = TruncatedSeries([num0, f.a], order)
    den = TruncatedSeries([den0, f.c], order)
    return num / den
