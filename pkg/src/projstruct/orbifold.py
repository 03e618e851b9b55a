"""Riemann-Hurwitz arithmetic, invariant dimensions and triangle signatures.

All ratios are exact :class:`~fractions.Fraction` values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Sequence

from .errors import ExcludedCase, InfiniteEnumeration, NegativeDimension, NotHyperbolic

__all__ = [
    "OrbifoldSignature",
    "TriangleSignature",
    "riemann_hurwitz_genus",
    "invariant_quadratic_dimension",
    "is_very_large",
    "automorphisms_per_genus",
    "enumerate_triangle_signatures",
    "quotient_differential_order",
    "fermat_genus",
    "HURWITZ_CONSTANT",
    "TRIANGLE_RATIO_LIMIT",
]

HURWITZ_CONSTANT = 84
# (2, 3, c) as c -> infinity; every other family (a, b, c -> infinity) has a smaller limit
TRIANGLE_RATIO_LIMIT = 12


@dataclass(frozen=True)
class OrbifoldSignature:
    """Group order ``N``, quotient genus ``g0`` and branch orders ``m_1..m_n``.

    Branch orders need not divide ``N``; only ``2 <= m_i <= N`` is enforced.
    """

    order: int
    quotient_genus: int
    branch_orders: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "branch_orders", tuple(self.branch_orders))
        if self.order < 1:
            raise ValueError("group order must be at least 1")
        if self.quotient_genus < 0:
            raise ValueError("quotient genus must be non-negative")
        for m in self.branch_orders:
            if not 2 <= m <= self.order:
                raise ValueError(f"branch order {m} outside [2, {self.order}]")

    @property
    def n(self) -> int:
        return len(self.branch_orders)


@dataclass(frozen=True, order=True)
class TriangleSignature:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if not 2 <= self.a <= self.b <= self.c:
            raise ValueError("triangle signature needs 2 <= a <= b <= c")

    @property
    def angle_sum(self) -> Fraction:
        return Fraction(1, self.a) + Fraction(1, self.b) + Fraction(1, self.c)

    @property
    def is_hyperbolic(self) -> bool:
        return self.angle_sum < 1

    def __iter__(self):
        return iter((self.a, self.b, self.c))


def riemann_hurwitz_genus(sig: OrbifoldSignature) -> int | None:
    """Genus ``g`` with ``2g - 2 = N (2 g0 - 2) + N sum(1 - 1/m_i)``.

    Returns None when ``g`` is not a non-negative integer, i.e. no surface has
    this signature.

    >>> riemann_hurwitz_genus(OrbifoldSignature(168, 0, (2, 3, 7)))
    3
    """
    N = sig.order
    chi = N * (2 * sig.quotient_genus - 2) + N * sum((1 - Fraction(1, m) for m in sig.branch_orders), Fraction(0))
    g = (chi + 2) / 2
    if g.denominator != 1 or g < 0:
        return None
    return int(g)


def invariant_quadratic_dimension(g0: int, n: int) -> int:
    """Dimension ``3 g0 - 3 + n`` of the invariant holomorphic quadratic differentials.

    ``(g0, n) = (1, 0)`` cannot arise from a surface of genus >= 2 and raises
    :class:`ExcludedCase`; pairs with a negative value, such as ``(0, 1)`` and
    ``(0, 2)``, raise :class:`NegativeDimension`.  Each branch point counts
    once, which is exact when every branch order is at least 2.
    """
    if g0 < 0 or n < 0:
        raise ValueError("g0 and n must be non-negative")
    if (g0, n) == (1, 0):
        raise ExcludedCase("(g0, n) = (1, 0) does not arise from a surface of genus >= 2")
    dim = 3 * g0 - 3 + n
    if dim < 0:
        raise NegativeDimension(f"3*{g0} - 3 + {n} = {dim} < 0: no such quotient of a genus >= 2 surface")
    return dim


def is_very_large(g0: int, n: int) -> bool:
    """Quotient is the sphere and the quotient map branches over exactly three points."""
    return g0 == 0 and n == 3


def automorphisms_per_genus(sig: TriangleSignature | Sequence[int]) -> Fraction:
    """``N / (g - 1) = 2 / (1 - 1/a - 1/b - 1/c)`` for a triangle quotient."""
    if not isinstance(sig, TriangleSignature):
        sig = TriangleSignature(*sorted(sig))
    if not sig.is_hyperbolic:
        raise NotHyperbolic(f"{tuple(sig)} is not hyperbolic")
    return 2 / (1 - sig.angle_sum)


def enumerate_triangle_signatures(ratio_min, c_max: int | None = None) -> list[tuple[TriangleSignature, Fraction]]:
    """Hyperbolic ``(a, b, c)`` with ``automorphisms_per_genus >= ratio_min``.

    Sorted by ratio descending, then by ``(a, b, c)``.  The search is finite on
    its own only when ``ratio_min > 12``: the family ``(2, 3, c)`` has ratios
    tending to 12 from above.  Otherwise ``c_max`` must bound the search.
    """
    r = Fraction(ratio_min)
    if r <= 0:
        raise ValueError("ratio_min must be positive")
    if r <= TRIANGLE_RATIO_LIMIT and c_max is None:
        raise InfiniteEnumeration(
            f"ratio_min = {r} <= {TRIANGLE_RATIO_LIMIT} admits infinitely many triples; pass c_max"
        )
    # ratio >= r  <=>  1/a + 1/b + 1/c >= 1 - 2/r =: s_min; hyperbolic <=> sum < 1
    s_min = 1 - 2 / r
    found = []
    a = 2
    while Fraction(3, a) >= s_min and (c_max is None or a <= c_max):
        b = a
        while Fraction(1, a) + Fraction(2, b) >= s_min and (c_max is None or b <= c_max):
            rest = 1 - Fraction(1, a) - Fraction(1, b)
            if rest > 0:
                # hyperbolic needs 1/c < rest
                c_lo = max(b, floor(1 / rest) + 1)
                slack = s_min - Fraction(1, a) - Fraction(1, b)
                c_hi = c_max
                if slack > 0:
                    bound = floor(1 / slack)
                    c_hi = bound if c_hi is None else min(c_hi, bound)
                assert c_hi is not None, "unbounded c with ratio_min > 12"
                # integer form: ratio = 2abc / (abc - ab - bc - ca) >= p/q
                ab = a * b
                for c in range(c_lo, c_hi + 1):
                    num = 2 * ab * c
                    den = ab * c - ab - (a + b) * c
                    if num * r.denominator >= r.numerator * den:
                        found.append((TriangleSignature(a, b, c), Fraction(num, den)))
            b += 1
        a += 1
    # found is in lexicographic order; stable sorts keep it among equal ratios.
    # The float pass leaves the list nearly sorted, so the exact pass is cheap.
    found.sort(key=lambda item: float(item[1]), reverse=True)
    found.sort(key=lambda item: item[1], reverse=True)
    return found


def quotient_differential_order(s: int, m: int) -> tuple[Fraction, bool]:
    """Order of the pushed-forward quadratic differential at a point with stabilizer order ``m``.

    ``s`` is the zero order upstairs.  Returns ``((s - 2(m - 1)) / m, holomorphic)``.
    """
    if s < 0 or m < 1:
        raise ValueError("need s >= 0 and m >= 1")
    return Fraction(s - 2 * (m - 1), m), s >= 2 * (m - 1)


def fermat_genus(n: int) -> int:
    """Genus of the Fermat curve ``x^n + y^n = z^n``."""
    if n < 1:
        raise ValueError("degree must be positive")
    return (n - 1) * (n - 2) // 2
