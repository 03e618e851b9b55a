"""Exact Gaussian elimination over the scalar rings (first nonzero pivot)."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list  # list of rows, each a list of scalars


def rref(rows: Sequence[Sequence]) -> tuple[list, list]:
    """Reduced row echelon form of a copy of ``rows`` and its pivot columns."""
    m = [[Fraction(x) if isinstance(x, int) else x for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def solve_affine(lhs: Sequence[Sequence], rhs: Sequence, ncols: int):
    """Solution set of ``lhs @ x = rhs`` as ``(particular, kernel_basis)``.

    ``particular`` is None when the system is inconsistent; free variables are
    set to zero in the particular solution.
    """
    if not lhs:
        zero = [Fraction(0)] * ncols
        return zero, [_unit(ncols, j) for j in range(ncols)]
    augmented = [list(row) + [b] for row, b in zip(lhs, rhs)]
    m, pivots = rref(augmented)
    if ncols in pivots:
        return None, []
    pivots = [p for p in pivots if p < ncols]
    particular = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        particular[p] = m[i][ncols]
    free = [j for j in range(ncols) if j not in pivots]
    kernel = []
    for j in free:
        vec = _unit(ncols, j)
        for i, p in enumerate(pivots):
            vec[p] = -m[i][j]
        kernel.append(vec)
    return particular, kernel


def _unit(n: int, j: int) -> list:
    return [Fraction(int(k == j)) for k in range(n)]


def matvec(matrix: Sequence[Sequence], vec: Sequence) -> list:
    out = []
    for row in matrix:
        acc = Fraction(0)
        for x, y in zip(row, vec):
            if x != 0 and y != 0:
                acc = acc + x * y
        out.append(acc)
    return out


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    cols = list(zip(*b))
    return [matvec(cols, row) for row in a]


def identity(n: int) -> list:
    return [_unit(n, j) for j in range(n)]


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])
