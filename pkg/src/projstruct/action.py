"""Affine action of automorphisms on quadratic-differential coordinates.

Fix a base projective structure on a genus ``g`` surface.  Projective
structures are then coordinatized by vectors ``q`` of length ``3g - 3`` (the
Schwarzian of the structure relative to the base), and an automorphism acts by
``q -> P q + t``: the linear part ``P`` is the pullback of quadratic
differentials, and the translation ``t`` is the Schwarzian of the lifted
inverse automorphism.  ``t`` vanishes when the base structure is the Fuchsian
uniformization.

An automorphism is projective for the structure ``q`` exactly when it fixes
``q``, so the relatively Hurwitz structures are the common fixed points of the
automorphism group.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from . import linalg
from .errors import DimensionMismatch
from .scalars import root_of_unity

__all__ = [
    "AffineAutAction",
    "MonomialAction",
    "ActionGroup",
    "FixedLocus",
    "quad_dimension",
    "apply_action",
    "is_projective_for",
    "fixed_locus",
    "relatively_hurwitz_set",
]

FUCHSIAN = "fuchsian"
OTHER = "other"


def quad_dimension(genus: int) -> int:
    """Dimension 3g - 3 of the space of holomorphic quadratic differentials."""
    if genus < 2:
        raise ValueError("quadratic-differential coordinates need genus >= 2")
    return 3 * genus - 3


def _vec(values: Sequence) -> tuple:
    return tuple(Fraction(x) if isinstance(x, int) else x for x in values)


@dataclass(frozen=True)
class AffineAutAction:
    """One automorphism acting by ``q -> P q + t``."""

    P: tuple
    t: tuple = None
    label: str = ""

    def __post_init__(self):
        P = tuple(_vec(row) for row in self.P)
        d = len(P)
        if any(len(row) != d for row in P):
            raise DimensionMismatch("pullback matrix must be square")
        t = _vec(self.t) if self.t is not None else _vec([0] * d)
        if len(t) != d:
            raise DimensionMismatch(f"translation has length {len(t)}, expected {d}")
        if linalg.rank(P) != d:
            raise ValueError(f"pullback matrix of {self.label or 'action'} is singular")
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "t", t)

    @property
    def dimension(self) -> int:
        return len(self.P)

    @property
    def is_linear(self) -> bool:
        return not any(self.t)

    def as_affine(self) -> "AffineAutAction":
        return self


@dataclass(frozen=True)
class MonomialAction:
    """A diagonal action by roots of unity, kept as integer exponents.

    Basis element ``i`` is multiplied by ``signs[i] * zeta_m ** exponents[i]``
    with ``zeta_m = exp(2 pi i / m)``.  ``permutation`` is the index map of the
    generalized-diagonal matrix; every action built in this package uses the
    identity.
    """

    modulus: int
    exponents: tuple
    signs: tuple = None
    permutation: tuple = None
    label: str = ""

    def __post_init__(self):
        m = self.modulus
        if m < 1:
            raise ValueError("modulus must be positive")
        d = len(self.exponents)
        object.__setattr__(self, "exponents", tuple(e % m for e in self.exponents))
        signs = tuple(self.signs) if self.signs is not None else (1,) * d
        if len(signs) != d or any(s not in (1, -1) for s in signs):
            raise DimensionMismatch("signs must be +1/-1, one per basis element")
        object.__setattr__(self, "signs", signs)
        perm = tuple(self.permutation) if self.permutation is not None else tuple(range(d))
        if sorted(perm) != list(range(d)):
            raise ValueError("permutation must be a bijection of the basis indices")
        object.__setattr__(self, "permutation", perm)

    @property
    def dimension(self) -> int:
        return len(self.exponents)

    @property
    def is_diagonal(self) -> bool:
        return self.permutation == tuple(range(self.dimension))

    @property
    def root_order(self) -> int:
        """Order M of the roots of unity needed once signs are folded in."""
        m = self.modulus
        if all(s == 1 for s in self.signs):
            return m
        return m if m % 2 == 0 else 2 * m

    def folded_exponents(self) -> tuple:
        """Entry ``i`` as ``zeta_M ** k`` with ``M = root_order``."""
        M = self.root_order
        step = M // self.modulus
        return tuple(
            (e * step + (M // 2 if s == -1 else 0)) % M
            for e, s in zip(self.exponents, self.signs)
        )

    def trivial_entries(self) -> tuple:
        return tuple(k == 0 for k in self.folded_exponents())

    def then(self, other: "MonomialAction") -> "MonomialAction":
        """Product action (entrywise for diagonal actions)."""
        if not (self.is_diagonal and other.is_diagonal):
            raise ValueError("only diagonal monomial actions compose here")
        if self.dimension != other.dimension:
            raise DimensionMismatch("monomial actions of different dimension")
        m = self.modulus * other.modulus // math.gcd(self.modulus, other.modulus)
        return MonomialAction(
            m,
            tuple(
                a * (m // self.modulus) + b * (m // other.modulus)
                for a, b in zip(self.exponents, other.exponents)
            ),
            tuple(a * b for a, b in zip(self.signs, other.signs)),
            label=f"{self.label}*{other.label}",
        )

    def embeddable(self) -> bool:
        """Whether every entry lies in a supported exact ring."""
        return 12 % self.root_order == 0

    def as_affine(self) -> AffineAutAction:
        """Explicit matrix form; only for actions with :meth:`embeddable` entries."""
        if not self.embeddable():
            raise ValueError(f"zeta_{self.root_order} entries leave the supported exact rings")
        d = self.dimension
        M = self.root_order
        P = [[Fraction(0)] * d for _ in range(d)]
        for i, k in enumerate(self.folded_exponents()):
            P[self.permutation[i]][i] = root_of_unity(M, k)
        return AffineAutAction(P, label=self.label)


Generator = Union[AffineAutAction, MonomialAction]


@dataclass(frozen=True)
class ActionGroup:
    """Generators of an automorphism action on ``3g - 3`` coordinates."""

    generators: tuple
    genus: int
    base: str = FUCHSIAN

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if self.base not in (FUCHSIAN, OTHER):
            raise ValueError(f"base must be {FUCHSIAN!r} or {OTHER!r}")
        d = self.dimension
        for gen in self.generators:
            if gen.dimension != d:
                raise DimensionMismatch(
                    f"generator {gen.label!r} acts on {gen.dimension} coordinates, genus {self.genus} needs {d}"
                )
            if self.base == FUCHSIAN and isinstance(gen, AffineAutAction) and not gen.is_linear:
                raise ValueError(f"generator {gen.label!r} has a translation part over a Fuchsian base")

    @property
    def dimension(self) -> int:
        return quad_dimension(self.genus)


@dataclass(frozen=True)
class FixedLocus:
    """Affine subspace ``basepoint + span(directions)``; ``basepoint`` None means empty."""

    dimension: int
    basepoint: tuple | None
    directions: tuple
    metadata: dict = field(default_factory=dict, compare=False)

    @property
    def is_empty(self) -> bool:
        return self.basepoint is None

    def contains(self, group: ActionGroup, q: Sequence) -> bool:
        return all(is_projective_for(gen, q) for gen in group.generators)


def apply_action(A: Generator, q: Sequence) -> tuple:
    """``P q + t``."""
    A = A.as_affine()
    q = _vec(q)
    if len(q) != A.dimension:
        raise DimensionMismatch(f"vector of length {len(q)} for a {A.dimension}-dimensional action")
    return tuple(x + y for x, y in zip(linalg.matvec(A.P, q), A.t))


def is_projective_for(A: Generator, q: Sequence) -> bool:
    """Whether the automorphism is projective for the structure with coordinates ``q``."""
    if isinstance(A, MonomialAction) and not A.embeddable():
        q = _vec(q)
        if len(q) != A.dimension:
            raise DimensionMismatch(f"vector of length {len(q)} for a {A.dimension}-dimensional action")
        if not A.is_diagonal:
            raise ValueError("non-diagonal monomial actions need an explicit matrix")
        return all(triv or x == 0 for triv, x in zip(A.trivial_entries(), q))
    return apply_action(A, q) == _vec(q)


def fixed_locus(G: ActionGroup) -> FixedLocus:
    """Common fixed points of the generators, solved exactly.

    Stacks ``(P_i - I) q = -t_i`` for every generator and eliminates.
    Diagonal root-of-unity actions whose entries leave the exact rings are
    handled combinatorially: a coordinate is free iff every generator acts
    trivially on it.
    """
    d = G.dimension
    meta = {"generators": len(G.generators), "base": G.base, "assumes_full_group": True}
    gens = G.generators
    if any(isinstance(g, MonomialAction) and not g.embeddable() for g in gens):
        if not all(isinstance(g, MonomialAction) and g.is_diagonal for g in gens):
            raise ValueError("cannot mix non-embeddable monomial actions with matrix generators")
        meta["pathway"] = "monomial"
        free = [i for i in range(d) if all(g.trivial_entries()[i] for g in gens)]
        zero = (Fraction(0),) * d
        directions = tuple(tuple(Fraction(int(k == i)) for k in range(d)) for i in free)
        return FixedLocus(len(free), zero, directions, meta)

    meta["pathway"] = "elimination"
    lhs, rhs = [], []
    for gen in gens:
        A = gen.as_affine()
        for i in range(d):
            lhs.append([A.P[i][j] - (1 if i == j else 0) for j in range(d)])
            rhs.append(-A.t[i])
    particular, kernel = linalg.solve_affine(lhs, rhs, d)
    if particular is None:
        return FixedLocus(0, None, (), meta)
    return FixedLocus(len(kernel), tuple(particular), tuple(tuple(v) for v in kernel), meta)


def relatively_hurwitz_set(G: ActionGroup) -> FixedLocus:
    """Relatively Hurwitz projective structures, in Schwarzian coordinates.

    The answer is only meaningful if ``G`` generates the full automorphism
    group of the surface; the metadata records that this was assumed.
    """
    locus = fixed_locus(G)
    locus.metadata["interpretation"] = "relatively Hurwitz projective structures"
    return locus
