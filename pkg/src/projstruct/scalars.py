"""Exact scalar rings: Q, Q(i), Q(zeta_3) and their compositum Q(zeta_12).

Rationals are plain :class:`fractions.Fraction` (or ``int``).  Elements of the
imaginary quadratic rings are :class:`Cyclotomic` instances stored as rational
coordinates against the power basis of a primitive root of unity.  Every
result is reduced to the smallest supported field containing it, so ``I * I``
comes back as ``Fraction(-1)`` and equality is plain coordinate equality.

    >>> I * I
    Fraction(-1, 1)
    >>> (1 + I) / (1 - I) == I
    True
    >>> ZETA3 ** 3
    Fraction(1, 1)
"""
from __future__ import annotations

import math
import numbers
from fractions import Fraction
from typing import Sequence, Union

import mpmath

__all__ = [
    "Cyclotomic",
    "Scalar",
    "I",
    "ZETA3",
    "ZETA6",
    "ZETA12",
    "root_of_unity",
    "as_scalar",
    "is_exact",
    "to_mpc",
    "format_scalar",
]

# conductor -> cyclotomic polynomial, lowest degree first, monic
_MINPOLY = {
    1: (-1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    12: (1, 0, -1, 0, 1),
}
_ZERO = Fraction(0)
_UNITS = {n: [k for k in range(1, n + 1) if math.gcd(k, n) == 1] for n in _MINPOLY}


def _reduce(coeffs: list, n: int) -> list:
    """Reduce a polynomial in zeta_n modulo the n-th cyclotomic polynomial."""
    poly = _MINPOLY[n]
    deg = len(poly) - 1
    coeffs = list(coeffs)
    for k in range(len(coeffs) - 1, deg - 1, -1):
        lead = coeffs[k]
        if lead:
            for j in range(deg):
                coeffs[k - deg + j] -= lead * poly[j]
        coeffs[k] = 0
    coeffs += [0] * (deg - len(coeffs))
    return coeffs[:deg]


def _power_coords(n: int, k: int) -> list:
    """Coordinates of zeta_n**k in the power basis of Q(zeta_n)."""
    mono = [0] * (k % n) + [1]
    return _reduce(mono, n)


def _embed(x: "Scalar", n: int) -> Sequence:
    """Coordinates of x inside Q(zeta_n); n must be a multiple of x's conductor."""
    if isinstance(x, Cyclotomic):
        if x.conductor == n:
            return x.coords
        step = n // x.conductor
        out = [0] * (x.conductor * step)
        for j, c in enumerate(x.coords):
            out[j * step] += c
        return _reduce(out, n)
    return [x] + [_ZERO] * (len(_MINPOLY[n]) - 2)


def _make(n: int, coords: Sequence) -> "Scalar":
    coords = [c if type(c) is Fraction else Fraction(c) for c in coords]
    # demote to the smallest subfield that contains the value
    if n == 12:
        c0, c1, c2, c3 = coords
        if not c1 and not c3:
            # zeta_12**2 = zeta_3 + 1
            return _make(3, [c0 + c2, c2])
        if not c1 and not c2:
            # zeta_12**3 = i
            return _make(4, [c0, c3])
    elif n in (3, 4) and not coords[1]:
        return coords[0]
    elif n == 1:
        return coords[0]
    return Cyclotomic._raw(n, tuple(coords))


def _lcm_conductor(a: int, b: int) -> int:
    n = a * b // math.gcd(a, b)
    if n not in _MINPOLY:
        raise ValueError(f"no supported field contains both Q(zeta_{a}) and Q(zeta_{b})")
    return n


class Cyclotomic(numbers.Number):
    """An element of Q(zeta_n) for n in {3, 4, 12}, never rational.

    Build values from :data:`I`, :data:`ZETA3`, :data:`ZETA12` or
    :func:`root_of_unity`; arithmetic with ``int`` and ``Fraction`` promotes
    automatically.
    """

    __slots__ = ("conductor", "coords")

    def __new__(cls, conductor: int, coords: Sequence):
        if conductor not in _MINPOLY:
            raise ValueError(f"unsupported conductor {conductor}")
        deg = len(_MINPOLY[conductor]) - 1
        if len(coords) != deg:
            raise ValueError(f"Q(zeta_{conductor}) needs {deg} coordinates")
        return _make(conductor, coords)

    @classmethod
    def _raw(cls, conductor: int, coords: tuple) -> "Cyclotomic":
        self = object.__new__(cls)
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coords", coords)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    # arithmetic -----------------------------------------------------------
    def _binary(self, other, op):
        if op is Cyclotomic._mul and isinstance(other, (int, Fraction)):
            if not other:
                return _ZERO
            return Cyclotomic._raw(self.conductor, tuple(c * other for c in self.coords))
        if isinstance(other, Cyclotomic):
            n = _lcm_conductor(self.conductor, other.conductor)
        elif isinstance(other, (int, Fraction)):
            n = self.conductor
        else:
            return NotImplemented
        return op(_embed(self, n), _embed(other, n), n)

    @staticmethod
    def _add(a, b, n):
        return _make(n, [x + y for x, y in zip(a, b)])

    @staticmethod
    def _sub(a, b, n):
        return _make(n, [x - y for x, y in zip(a, b)])

    @staticmethod
    def _mul(a, b, n):
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return _make(n, _reduce(prod, n))

    def __add__(self, other):
        return self._binary(other, self._add)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, self._sub)

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self._sub(_embed(other, self.conductor), list(self.coords), self.conductor)

    def __mul__(self, other):
        return self._binary(other, self._mul)

    __rmul__ = __mul__

    def __neg__(self):
        return Cyclotomic._raw(self.conductor, tuple(-c for c in self.coords))

    def __pos__(self):
        return self

    def galois_conjugate(self, k: int) -> "Scalar":
        """Apply the automorphism zeta_n -> zeta_n**k (k a unit mod n)."""
        n = self.conductor
        if math.gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit modulo {n}")
        out = [Fraction(0)] * (len(_MINPOLY[n]) - 1)
        for j, c in enumerate(self.coords):
            if c:
                for t, p in enumerate(_power_coords(n, j * k)):
                    out[t] += c * p
        return _make(n, out)

    def conjugate(self) -> "Scalar":
        return self.galois_conjugate(-1 % self.conductor)

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        result: Scalar = Fraction(1)
        for k in _UNITS[self.conductor]:
            result = result * self.galois_conjugate(k)
        assert not isinstance(result, Cyclotomic)
        return Fraction(result)

    def inverse(self) -> "Scalar":
        # x^{-1} = prod_{k != 1} sigma_k(x) / N(x)
        others: Scalar = Fraction(1)
        for k in _UNITS[self.conductor][1:]:
            others = others * self.galois_conjugate(k)
        return others * (1 / self.norm())

    def __truediv__(self, other):
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self.inverse() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result: Scalar = Fraction(1)
        base: Scalar = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison, hashing ----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.conductor == other.conductor and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return False  # reduced form is never rational
        return NotImplemented

    def __hash__(self):
        return hash((self.conductor, self.coords))

    def __bool__(self):
        return True

    def __complex__(self):
        z = sum(
            complex(c) * complex(mpmath.exp(2j * mpmath.pi * j / self.conductor))
            for j, c in enumerate(self.coords)
        )
        return complex(z)

    def __repr__(self):
        return f"Cyclotomic({self.conductor}, {list(map(str, self.coords))})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[int, Fraction, Cyclotomic]

I = Cyclotomic(4, (0, 1))
ZETA3 = Cyclotomic(3, (0, 1))
ZETA6 = 1 + ZETA3
ZETA12 = Cyclotomic(12, (0, 1, 0, 0))


def root_of_unity(m: int, k: int = 1) -> Scalar:
    """exp(2*pi*i*k/m) as an exact scalar, for m dividing 12."""
    if m < 1 or 12 % m:
        raise ValueError(f"zeta_{m} does not lie in a supported exact ring")
    return ZETA12 ** ((12 // m * k) % 12)


def as_scalar(x) -> Scalar:
    """Coerce ints and Fractions; pass Cyclotomic values through."""
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, Cyclotomic))


def to_mpc(x, prec: int = 100) -> mpmath.mpc:
    """Big-float image of an exact scalar, for numerical cross-checks."""
    with mpmath.workprec(prec):
        if isinstance(x, Cyclotomic):
            return mpmath.fsum(
                mpmath.mpf(c.numerator) / c.denominator
                * mpmath.expjpi(mpmath.mpf(2 * j) / x.conductor)
                for j, c in enumerate(x.coords)
            )
        x = Fraction(x)
        return mpmath.mpc(mpmath.mpf(x.numerator) / x.denominator)


_NAMES = {3: "w", 4: "i", 12: "z12"}


def format_scalar(x) -> str:
    """Render an exact scalar as a literal that :func:`projstruct.io.parse_scalar` reads back.

    Q(i) uses ``i``, Q(zeta_3) uses ``w`` (= zeta_3) and Q(zeta_12) uses
    ``z12``.
    """
    if not isinstance(x, Cyclotomic):
        return str(Fraction(x))
    name = _NAMES[x.conductor]
    terms = []
    for j, c in enumerate(x.coords):
        if not c:
            continue
        if j == 0:
            terms.append(str(c))
            continue
        mono = name if j == 1 else f"{name}^{j}"
        if c == 1:
            body = mono
        elif c == -1:
            body = f"-{mono}"
        else:
            body = f"{c}*{mono}"
        terms.append(body)
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out
