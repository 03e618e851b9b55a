"""Seeded random exact inputs for the randomized law checks."""
from __future__ import annotations

import random
from fractions import Fraction

from .moebius import MobiusMap
from .scalars import I, Scalar
from .series import TruncatedSeries


def random_rational(rng: random.Random, bound: int = 5, max_den: int = 4, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))
        if x or not nonzero:
            return x


def random_gaussian(rng: random.Random, bound: int = 3, max_den: int = 3) -> Scalar:
    return random_rational(rng, bound, max_den) + random_rational(rng, bound, max_den) * I


def random_polynomial_series(
    rng: random.Random, order: int, degree: int = 5, vanish_at_zero: bool = False
) -> TruncatedSeries:
    """A locally injective polynomial of the given degree, as a series of ``order``."""
    coeffs = [random_rational(rng) for _ in range(degree + 1)]
    if vanish_at_zero:
        coeffs[0] = Fraction(0)
    coeffs[1] = random_rational(rng, nonzero=True)
    return TruncatedSeries(coeffs, order)


def random_series_pair(rng: random.Random, order: int, degree: int = 5) -> tuple[TruncatedSeries, TruncatedSeries]:
    """``(f, g)`` with ``g(0) = 0``, both locally injective at 0."""
    f = random_polynomial_series(rng, order, degree)
    g = random_polynomial_series(rng, order, degree, vanish_at_zero=True)
    return f, g


def random_gaussian_mobius(rng: random.Random) -> MobiusMap:
    while True:
        a, b, c, d = (random_gaussian(rng) for _ in range(4))
        if a * d - b * c != 0:
            return MobiusMap(a, b, c, d)
