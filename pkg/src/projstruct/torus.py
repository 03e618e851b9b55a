"""Affine structures on genus-1 surfaces and which automorphisms respect them.

For ``c != 0`` the structure ``sigma_c`` on ``X_tau = C / Lambda_tau`` has
developing map ``z -> exp(c z)``; ``c = 0`` is the Euclidean uniformization,
with developing map the identity.  An automorphism ``z -> a z + b`` is
classified by what it becomes in the developed picture,
``h = dev o A o dev^{-1}``: affine, Möbius but not affine, or neither.

Two independent routes are provided.  :func:`classify_by_formula` reads the
answer off the multiplier ``a``; :func:`classify_by_series` builds ``h`` as a
truncated power series (by reversion and composition) and tests ``h'' = 0``
and ``S(h) = 0`` exactly.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import IncompatibleMultiplier
from .scalars import I, ZETA6, Scalar
from .series import (
    TruncatedSeries,
    compose_series,
    exp_series,
    is_moebius_series,
    revert_series,
)

__all__ = [
    "TauClass",
    "Classification",
    "TorusAutomorphism",
    "multipliers",
    "classify_by_formula",
    "classify_by_series",
    "relatively_hurwitz_affine",
    "relatively_hurwitz_projective",
    "affine_multiplier_count",
]


class TauClass(enum.Enum):
    GENERIC = "generic"
    SQUARE = "square"  # tau = i
    HEXAGONAL = "hexagonal"  # tau = exp(2 pi i / 3)


class Classification(enum.Enum):
    AFFINE = "Affine"
    PROJECTIVE_NOT_AFFINE = "ProjectiveNotAffine"
    NOT_PROJECTIVE = "NotProjective"


_GENERATOR = {TauClass.GENERIC: Fraction(-1), TauClass.SQUARE: I, TauClass.HEXAGONAL: ZETA6}


def multipliers(tau: TauClass) -> list[Scalar]:
    """The reduced automorphism group of ``X_tau`` as multipliers: ``<-1>``, ``<i>`` or ``<zeta_6>``."""
    gen = _GENERATOR[tau]
    out = [Fraction(1)]
    x = gen
    while x != 1:
        out.append(x)
        x = x * gen
    return out


@dataclass(frozen=True)
class TorusAutomorphism:
    """``z -> a z + b`` on ``X_tau``.

    ``dilation`` is ``exp(c b)`` for the structure under study, when known
    exactly; it only rescales the developed map and defaults to 1.
    """

    multiplier: Scalar
    translation: Scalar = Fraction(0)
    tau: TauClass = TauClass.GENERIC
    label: str = ""
    dilation: Scalar = Fraction(1)

    def __post_init__(self):
        if self.multiplier not in multipliers(self.tau):
            raise IncompatibleMultiplier(
                f"multiplier {self.multiplier} is not an automorphism of a {self.tau.value} torus"
            )
        if self.dilation == 0:
            raise ValueError("dilation exp(c b) cannot vanish")

    @classmethod
    def translation_by(cls, p: Scalar, tau: TauClass = TauClass.GENERIC, dilation: Scalar = 1) -> "TorusAutomorphism":
        return cls(Fraction(1), p, tau, "T_p", dilation)

    @classmethod
    def involution(cls, tau: TauClass = TauClass.GENERIC) -> "TorusAutomorphism":
        return cls(Fraction(-1), Fraction(0), tau, "J")

    @classmethod
    def rotation(cls, tau: TauClass) -> "TorusAutomorphism":
        """The complex multiplication generating the reduced automorphism group."""
        name = {TauClass.SQUARE: "R_i", TauClass.HEXAGONAL: "R_zeta6"}.get(tau, "J")
        return cls(_GENERATOR[tau], Fraction(0), tau, name)


def classify_by_formula(c: Scalar, A: TorusAutomorphism) -> Classification:
    a = A.multiplier
    if c == 0 or a == 1:
        return Classification.AFFINE
    if a == -1:
        return Classification.PROJECTIVE_NOT_AFFINE
    return Classification.NOT_PROJECTIVE


def developed_map(c: Scalar, A: TorusAutomorphism, order: int = 12) -> TruncatedSeries:
    """``dev o A o dev^{-1}`` expanded around ``dev(0)``, in ``u = w - dev(0)``.

    The constant term is dropped, which is a translation in the target and
    changes neither classification.
    """
    a = A.multiplier
    u = TruncatedSeries.variable(order)
    if c == 0:
        h = u * a
    else:
        # dev(z) - dev(0) = exp(c z) - 1, inverted to z = dev^{-1}(1 + u)
        dev = exp_series(order, c)
        inverse = revert_series(dev - 1)
        # dev(a z + b) = exp(c b) * dev(a z)
        h = compose_series(dev, inverse * a) * A.dilation
    return h - h[0]


def classify_by_series(c: Scalar, A: TorusAutomorphism, order: int = 12) -> Classification:
    if order < 8:
        raise ValueError("series classification needs order >= 8")
    h = developed_map(c, A, order)
    if not any(h.coeffs[2:]):
        return Classification.AFFINE
    if is_moebius_series(h):
        return Classification.PROJECTIVE_NOT_AFFINE
    return Classification.NOT_PROJECTIVE


def _all_acting(tau: TauClass, c: Scalar, allowed: set) -> bool:
    return all(
        classify_by_formula(c, TorusAutomorphism(a, tau=tau)) in allowed for a in multipliers(tau)
    )


def relatively_hurwitz_affine(tau: TauClass, c: Scalar) -> bool:
    """Every automorphism of ``X_tau`` is affine for ``sigma_c``."""
    return _all_acting(tau, c, {Classification.AFFINE})


def relatively_hurwitz_projective(tau: TauClass, c: Scalar) -> bool:
    """Every automorphism of ``X_tau`` is projective for ``sigma_c``."""
    return _all_acting(tau, c, {Classification.AFFINE, Classification.PROJECTIVE_NOT_AFFINE})


def affine_multiplier_count(tau: TauClass, c: Scalar) -> int:
    """Size of the reduced affine group: multipliers acting affinely on ``sigma_c``."""
    return sum(
        classify_by_formula(c, TorusAutomorphism(a, tau=tau)) is Classification.AFFINE
        for a in multipliers(tau)
    )
