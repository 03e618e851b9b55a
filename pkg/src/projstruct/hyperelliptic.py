"""Hyperelliptic models ``y^2 = p(x)`` and the pullback action on quadratic differentials.

The basis used for holomorphic quadratic differentials on a genus ``g``
hyperelliptic curve with ``deg p = 2g + 2`` is

* ``x^i (dx)^2 / y^2`` for ``0 <= i <= 2g - 2`` (even part, ``2g - 1`` elements)
* ``x^j (dx)^2 / y``   for ``0 <= j <= g - 3``  (odd part, ``g - 2`` elements)

:func:`divisor` computes the order of every basis element at every kind of
point, which certifies holomorphy and the degree ``4g - 4`` of the bicanonical
divisor independently of the counting argument.

The rotation model is ``y^2 = 1 - x^m`` with ``m = 2g + 2``, carrying the
hyperelliptic involution ``J: (x, y) -> (x, -y)`` and the rotation
``R: (x, y) -> (lambda x, y)`` with ``lambda`` a primitive ``m``-th root of 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .action import ActionGroup, MonomialAction
from .errors import DimensionMismatch, NoRotationOrder

__all__ = [
    "HyperellipticModel",
    "BasisElement",
    "basis",
    "divisor",
    "pullback_of_involution",
    "pullback_of_rotation",
    "invariant_dimension",
    "export_action",
    "belyi_branch_data",
]


@dataclass(frozen=True)
class HyperellipticModel:
    """Genus ``g`` curve ``y^2 = p(x)`` with ``2g + 2`` distinct finite branch points.

    ``rotation_order`` is set for the family ``y^2 = 1 - x^m``; it defaults to
    ``None`` (generic branch points, none at ``x = 0``).
    """

    genus: int
    rotation_order: int | None = None

    def __post_init__(self):
        if self.genus < 2:
            raise ValueError("hyperelliptic models need genus >= 2")
        if self.rotation_order is not None and self.rotation_order != self.branch_count:
            raise ValueError(
                f"y^2 = 1 - x^m has genus {self.genus} only for m = {self.branch_count}"
            )

    @classmethod
    def rotation_family(cls, genus: int) -> "HyperellipticModel":
        return cls(genus, 2 * genus + 2)

    @property
    def branch_count(self) -> int:
        return 2 * self.genus + 2


@dataclass(frozen=True)
class BasisElement:
    """``x^x_power (dx)^2 / y^y_power``."""

    x_power: int
    y_power: int

    @property
    def dx_power(self) -> int:
        return 2

    def __str__(self):
        return f"x^{self.x_power}(dx)^2/y^{self.y_power}"


def basis(model: HyperellipticModel) -> list[BasisElement]:
    g = model.genus
    even = [BasisElement(i, 2) for i in range(2 * g - 1)]
    odd = [BasisElement(j, 1) for j in range(g - 2)]
    return even + odd


def divisor(model: HyperellipticModel, element: BasisElement) -> list[tuple[str, int, int]]:
    """Zero orders of a basis element as ``(place kind, number of places, order)``.

    Local parameters: ``x - e = t^2`` at a branch point (``dx`` has order 1,
    ``y`` order 1); ``x - a = t`` at an ordinary point; ``x = 1/t`` at each of
    the two points over infinity (``dx`` order -2, ``y`` order ``-(g + 1)``).
    """
    g = model.genus
    i, k = element.x_power, element.y_power
    places = []
    # no branch point sits at x = 0 in either model
    places.append(("branch point", model.branch_count, 2 - k))
    # the two points over x = 0 are unramified
    places.append(("over x=0", 2, i))
    places.append(("over infinity", 2, k * (g + 1) - i - 4))
    return places


def _character_exponent(element: BasisElement, k: int, m: int) -> int:
    # x -> lambda^k x scales x^i (dx)^2 by lambda^(k (i + 2)); y is fixed
    return (k * (element.x_power + element.dx_power)) % m


def pullback_of_involution(model: HyperellipticModel) -> MonomialAction:
    """``J: y -> -y``; even-part elements are fixed, odd-part elements change sign."""
    elems = basis(model)
    return MonomialAction(
        1,
        (0,) * len(elems),
        tuple(1 if e.y_power % 2 == 0 else -1 for e in elems),
        label="J",
    )


def pullback_of_rotation(model: HyperellipticModel, k: int = 1) -> MonomialAction:
    """``R^k: x -> lambda^k x``; multiplies ``x^i (dx)^2`` by ``lambda^(k (i + 2))``."""
    m = model.rotation_order
    if m is None:
        raise NoRotationOrder("model has no rotation order")
    if not 0 <= k < m:
        raise ValueError(f"rotation exponent must lie in [0, {m})")
    elems = basis(model)
    return MonomialAction(
        m,
        tuple(_character_exponent(e, k, m) for e in elems),
        label="R" if k == 1 else f"R^{k}",
    )


def invariant_dimension(model: HyperellipticModel, generators: Sequence[MonomialAction]) -> int:
    """Number of basis elements on which every generator acts trivially."""
    d = 3 * model.genus - 3
    for gen in generators:
        if gen.dimension != d:
            raise DimensionMismatch(f"generator {gen.label!r} has dimension {gen.dimension}, expected {d}")
    count = 0
    for i in range(d):
        if all(gen.trivial_entries()[i] for gen in generators):
            count += 1
    return count


def export_action(model: HyperellipticModel, generators: Sequence[MonomialAction]) -> ActionGroup:
    """Wrap the generators as an action over the Fuchsian base (no translation part).

    Generators whose roots of unity lie in Q, Q(i), Q(zeta_3) or Q(zeta_12)
    become explicit matrices; anything else stays in monomial form and the
    fixed-locus computation takes its combinatorial pathway.
    """
    gens = list(generators)
    if all(g.embeddable() for g in gens):
        gens = [g.as_affine() for g in gens]
    return ActionGroup(tuple(gens), model.genus)


def belyi_branch_data(model: HyperellipticModel) -> dict:
    """Branching of ``(x, y) -> x^m`` on ``y^2 = 1 - x^m`` over 0, 1 and infinity.

    Returns the degree ``2m`` and, per branch value, the number of points in the
    fibre and the ramification order of each.
    """
    m = model.rotation_order
    if m is None:
        raise NoRotationOrder("model has no rotation order")
    degree = 2 * m
    fibres = {"0": 2, "1": m, "inf": 2}
    return {
        "degree": degree,
        "fibres": {v: {"points": p, "ramification": degree // p} for v, p in fibres.items()},
    }
