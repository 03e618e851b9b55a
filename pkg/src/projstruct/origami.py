"""Square-tiled surfaces (origamis) as pairs of permutations.

Squares are labelled ``0..n-1`` internally; ``h[x]`` is the square to the
right of ``x`` and ``v[x]`` the square above it.  Cycle notation for input and
output is 1-based, e.g. ``(1 2 3 4)(5 6 7 8)``.

Products are applied left to right: the commutator ``h v h^-1 v^-1`` sends
``x`` to ``v^-1(h^-1(v(h(x))))``, walking right, up, left and down around the
upper-right corner of ``x``.  Its cycles are the vertices of the square
complex, and a cycle of length ``e`` is a cone point of angle ``2 pi e``.
"""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import Disconnected, GenusTooSmall, GroupTooLarge, ParseError

__all__ = [
    "Origami",
    "TranslationGroup",
    "parse_cycles",
    "format_cycles",
    "genus",
    "commutator",
    "translation_group",
    "monodromy_group_order",
    "is_normal",
    "check_hurwitz_translation_bound",
    "normal_origami_genus_condition",
    "enumerate_origamis",
    "canonical_form",
    "cone_orders",
    "census_row",
]

Perm = tuple  # images of 0..n-1

DEFAULT_GROUP_CAP = 10**6


def _inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def _then(p: Perm, q: Perm) -> Perm:
    """Apply ``p`` first, then ``q``."""
    return tuple(q[x] for x in p)


def _cycles(p: Perm) -> list[list[int]]:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(cyc)
    return out


def _is_transitive(h: Perm, v: Perm) -> bool:
    n = len(h)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in (h[x], v[x]):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def parse_cycles(text: str, n: int | None = None) -> Perm:
    """Parse 1-based cycle notation such as ``(1 2 3)(4 5)``; ``()`` or ``id`` is the identity."""
    text = text.strip()
    groups = re.findall(r"\(([^()]*)\)", text)
    if re.sub(r"\([^()]*\)", "", text).strip() not in ("", "id"):
        raise ParseError(f"cannot parse cycle notation {text!r}")
    cycles = []
    for grp in groups:
        items = [int(tok) - 1 for tok in re.split(r"[\s,]+", grp.strip()) if tok]
        if any(x < 0 for x in items):
            raise ParseError("squares are numbered from 1")
        cycles.append(items)
    largest = max((x + 1 for c in cycles for x in c), default=0)
    n = largest if n is None else n
    if largest > n:
        raise ParseError(f"cycle mentions square {largest} but n = {n}")
    perm = list(range(n))
    used = set()
    for cyc in cycles:
        for i, x in enumerate(cyc):
            if x in used:
                raise ParseError(f"square {x + 1} appears twice")
            used.add(x)
            perm[x] = cyc[(i + 1) % len(cyc)]
    return tuple(perm)


def format_cycles(p: Perm) -> str:
    """1-based cycle notation, fixed points omitted; the identity is ``()``."""
    parts = [
        "(" + " ".join(str(x + 1) for x in cyc) + ")" for cyc in _cycles(p) if len(cyc) > 1
    ]
    return "".join(parts) or "()"


@dataclass(frozen=True)
class Origami:
    """A connected square-tiled surface given by right and up neighbour maps."""

    h: Perm
    v: Perm

    def __post_init__(self):
        h, v = tuple(self.h), tuple(self.v)
        n = len(h)
        if n < 1 or len(v) != n:
            raise ValueError("h and v must be permutations of the same n >= 1 squares")
        if sorted(h) != list(range(n)) or sorted(v) != list(range(n)):
            raise ValueError("h and v must be permutations")
        if not _is_transitive(h, v):
            raise Disconnected("<h, v> is not transitive: the surface is disconnected")
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "v", v)

    @classmethod
    def from_cycles(cls, h: str, v: str, n: int | None = None) -> "Origami":
        if n is None:
            n = max(len(parse_cycles(h)), len(parse_cycles(v)), 1)
        return cls(parse_cycles(h, n), parse_cycles(v, n))

    @property
    def n(self) -> int:
        return len(self.h)

    def __str__(self):
        return f"Origami(n={self.n}, h={format_cycles(self.h)}, v={format_cycles(self.v)})"


@dataclass(frozen=True)
class TranslationGroup:
    elements: tuple

    @property
    def order(self) -> int:
        return len(self.elements)


def commutator(o: Origami) -> Perm:
    """``h v h^-1 v^-1``, applied left to right."""
    return _then(_then(_then(o.h, o.v), _inverse(o.h)), _inverse(o.v))


def cone_orders(o: Origami) -> list[int]:
    """Cycle lengths of the commutator: total angle / 2 pi at each vertex."""
    return sorted(len(c) for c in _cycles(commutator(o)))


def genus(o: Origami) -> int:
    """``g = (n - #cycles([h, v]) + 2) / 2``, from the Euler characteristic of the squares."""
    twice = o.n - len(_cycles(commutator(o))) + 2
    if twice % 2:
        raise AssertionError(f"odd Euler characteristic for {o}")
    return twice // 2


def _extend(h: Perm, v: Perm, target: int) -> Perm | None:
    """The unique permutation commuting with h and v sending square 0 to ``target``, if any."""
    n = len(h)
    t = [-1] * n
    t[0] = target
    hit = [False] * n
    hit[target] = True
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for p in (h, v):
            y, ty = p[x], p[t[x]]
            if t[y] == -1:
                if hit[ty]:
                    return None
                t[y] = ty
                hit[ty] = True
                queue.append(y)
            elif t[y] != ty:
                return None
    return tuple(t)


def translation_group(o: Origami) -> TranslationGroup:
    """All permutations of the squares commuting with ``h`` and ``v``.

    Transitivity makes such a permutation determined by the image of one
    square, so the search tries the ``n`` candidates for it.
    """
    elements = []
    for target in range(o.n):
        t = _extend(o.h, o.v, target)
        if t is not None:
            elements.append(t)
    return TranslationGroup(tuple(elements))


def monodromy_group_order(o: Origami, cap: int = DEFAULT_GROUP_CAP) -> int:
    """``|<h, v>|`` by closure; raises :class:`GroupTooLarge` past ``cap`` elements."""
    return len(_closure(o, cap, raise_on_cap=True))


def _closure(o: Origami, cap: int, raise_on_cap: bool) -> set:
    identity = tuple(range(o.n))
    seen = {identity}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for s in (o.h, o.v):
            gs = _then(g, s)
            if gs not in seen:
                seen.add(gs)
                if len(seen) > cap:
                    if raise_on_cap:
                        raise GroupTooLarge(f"monodromy group exceeds {cap} elements")
                    return seen
                queue.append(gs)
    return seen


def is_normal(o: Origami) -> bool:
    """Whether the torus cover is Galois, i.e. ``|<h, v>| = n``.

    A transitive group has order at least ``n``, so the closure stops as soon
    as it exceeds ``n`` elements.
    """
    return len(_closure(o, o.n, raise_on_cap=False)) == o.n


def check_hurwitz_translation_bound(o: Origami) -> dict:
    """Compare ``|Trans|`` with ``4(g - 1)`` for a genus >= 2 origami.

    ``tight`` is ``|Trans| == 4(g - 1)``.  ``commutator_order`` is reported
    alongside ``normal`` because a normal origami is tight exactly when its
    commutator is an involution.
    """
    g = genus(o)
    if g < 2:
        raise GenusTooSmall(f"genus {g}: the translation bound is stated for g >= 2")
    trans = translation_group(o).order
    bound = 4 * (g - 1)
    if trans > bound:
        raise AssertionError(f"{o} has {trans} translations, above 4(g-1) = {bound}")
    return {
        "genus": g,
        "trans_order": trans,
        "bound": bound,
        "tight": trans == bound,
        "normal": is_normal(o),
        "commutator_order": math.lcm(*cone_orders(o)),
    }


def normal_origami_genus_condition(g: int) -> bool:
    """Necessary condition for a genus ``g`` Hurwitz translation surface: 2 or 3 divides ``g - 1``."""
    if g < 2:
        raise ValueError("condition is stated for g >= 2")
    return (g - 1) % 2 == 0 or (g - 1) % 3 == 0


# enumeration ----------------------------------------------------------------


def _relabel_from(h: Perm, v: Perm, start: int) -> tuple:
    """Relabel squares in breadth-first order from ``start`` (h before v)."""
    n = len(h)
    label = [-1] * n
    label[start] = 0
    order = [start]
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for p in (h, v):
            y = p[x]
            if label[y] == -1:
                label[y] = len(order)
                order.append(y)
    return tuple(label[h[x]] for x in order) + tuple(label[v[x]] for x in order)


def canonical_form(o: Origami) -> tuple[Perm, Perm]:
    """Representative of the simultaneous-conjugacy class of ``(h, v)``.

    The lexicographically smallest ``h + v`` among the ``n`` breadth-first
    relabelings; two origamis are relabelings of each other exactly when their
    canonical forms agree.
    """
    best = min(_relabel_from(o.h, o.v, s) for s in range(o.n))
    return best[: o.n], best[o.n :]


def _is_canonical(h: Perm, v: Perm) -> bool:
    current = h + v
    return all(_relabel_from(h, v, s) >= current for s in range(1, len(h)))


def _pointed_pairs(n: int) -> Iterator[tuple[Perm, Perm]]:
    """Transitive pairs on ``n`` points already in breadth-first labelling from 0.

    Images are assigned in traversal order (h(0), v(0), h(1), v(1), ...);
    each image is either an unused existing label or the next fresh label, so
    every transitive pair is produced once per choice of base square.
    """
    h = [-1] * n
    v = [-1] * n
    h_used = [False] * n
    v_used = [False] * n
    maps = (h, v)
    used = (h_used, v_used)

    def slots(k: int, count: int):
        # slot k defines maps[k % 2][k // 2]; count labels exist so far
        x = k // 2
        if x == count:
            if count == n:
                yield tuple(h), tuple(v)
            return
        p, u = maps[k % 2], used[k % 2]
        for y in range(count):
            if not u[y]:
                p[x] = y
                u[y] = True
                yield from slots(k + 1, count)
                u[y] = False
        if count < n:
            p[x] = count
            u[count] = True
            yield from slots(k + 1, count + 1)
            u[count] = False
        p[x] = -1

    yield from slots(0, 1)


def enumerate_origamis(n_max: int, n_min: int = 1) -> Iterator[Origami]:
    """All connected origamis with ``n_min..n_max`` squares, one per relabeling class.

    Output is in canonical form, ordered by ``n`` and then lexicographically.
    """
    for n in range(n_min, n_max + 1):
        found = [pair for pair in _pointed_pairs(n) if _is_canonical(*pair)]
        found.sort(key=lambda pair: pair[0] + pair[1])
        for h, v in found:
            yield Origami(h, v)


def census_row(o: Origami) -> dict:
    """One census record: n, h, v (cycle notation), genus, trans_order, normal, tight."""
    g = genus(o)
    trans = translation_group(o).order
    return {
        "n": o.n,
        "h": format_cycles(o.h),
        "v": format_cycles(o.v),
        "genus": g,
        "trans_order": trans,
        "normal": is_normal(o),
        "tight": g >= 2 and trans == 4 * (g - 1),
    }
