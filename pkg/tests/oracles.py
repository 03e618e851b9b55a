"""Independent reference computations used only by the tests.

Nothing here calls into the package's series, group or linear-algebra code.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import sympy

from projstruct.scalars import I

z = sympy.Symbol("z")


def exact(value):
    value = sympy.nsimplify(sympy.expand(value))
    re, im = sympy.re(value), sympy.im(value)
    out = Fraction(int(re.p), int(re.q))
    if im != 0:
        out = out + Fraction(int(im.p), int(im.q)) * I
    return out


def taylor_coefficients(expr, order: int, center=0) -> list:
    """Exact Taylor coefficients of a sympy expression in ``z`` around ``center``."""
    w = sympy.Symbol("w")
    shifted = expr.subs(z, center + w)
    poly = sympy.series(shifted, w, 0, order + 1).removeO()
    return [exact(poly.coeff(w, k)) for k in range(order + 1)]


def symbolic_schwarzian(expr):
    d1 = sympy.diff(expr, z)
    ratio = sympy.diff(d1, z) / d1
    return sympy.simplify(sympy.diff(ratio, z) - ratio**2 / 2)


def lagrange_inversion(coeffs: list, order: int) -> list[Fraction]:
    """``[w^n] f^{-1} = (1/n) [w^{n-1}] (w / f(w))^n`` with sympy series."""
    w = sympy.Symbol("w")
    f = sum(sympy.Rational(c.numerator, c.denominator) * w**k for k, c in enumerate(coeffs))
    out = [Fraction(0)]
    for n in range(1, order + 1):
        series = sympy.series((w / f) ** n, w, 0, n).removeO()
        out.append(exact(series.coeff(w, n - 1) / n))
    return out


# permutations as 0-based tuples; p then q means apply p first


def _then(p, q):
    return tuple(q[p[i]] for i in range(len(p)))


def _transitive(h, v) -> bool:
    seen, stack = {0}, [0]
    while stack:
        s = stack.pop()
        for t in (h[s], v[s]):
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return len(seen) == len(h)


def origami_classes_bruteforce(n: int) -> int:
    """Connected pairs in S_n x S_n up to simultaneous conjugation, by full orbit dedup."""
    perms = list(itertools.permutations(range(n)))
    seen = set()
    classes = 0
    for h in perms:
        for v in perms:
            if (h, v) in seen or not _transitive(h, v):
                continue
            classes += 1
            for s in perms:
                sinv = [0] * n
                for i, x in enumerate(s):
                    sinv[x] = i
                # conjugate by relabeling i -> s[i]
                hh = tuple(s[h[sinv[i]]] for i in range(n))
                vv = tuple(s[v[sinv[i]]] for i in range(n))
                seen.add((hh, vv))
    return classes


def genus_by_vertices(h, v) -> int:
    """Genus of the square complex: glue corners with union-find, then Euler characteristic."""
    n = len(h)
    parent = list(range(4 * n))  # corners 4s + (0 BL, 1 BR, 2 TL, 3 TR)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    for s in range(n):
        r, u = h[s], v[s]
        union(4 * s + 1, 4 * r + 0)
        union(4 * s + 3, 4 * r + 2)
        union(4 * s + 2, 4 * u + 0)
        union(4 * s + 3, 4 * u + 1)
    vertices = len({find(x) for x in range(4 * n)})
    chi = vertices - 2 * n + n
    return (2 - chi) // 2


def centralizer_order_bruteforce(h, v) -> int:
    n = len(h)
    count = 0
    for s in itertools.permutations(range(n)):
        if _then(s, h) == _then(h, s) and _then(s, v) == _then(v, s):
            count += 1
    return count


def group_order_bruteforce(h, v) -> int:
    ident = tuple(range(len(h)))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in (h, v):
                q = _then(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)


def triangle_ratios_bruteforce(bound: int):
    """All hyperbolic ``a <= b <= c <= bound`` with ``2 / (1 - 1/a - 1/b - 1/c)``."""
    out = {}
    for a in range(2, bound + 1):
        for b in range(a, bound + 1):
            for c in range(b, bound + 1):
                defect = 1 - Fraction(1, a) - Fraction(1, b) - Fraction(1, c)
                if defect > 0:
                    out[(a, b, c)] = 2 / defect
    return out
