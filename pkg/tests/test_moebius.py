from fractions import Fraction

import pytest

from projstruct.errors import PoleAtCenter
from projstruct.moebius import INFINITY, MobiusMap, apply, compose, taylor_expand
from projstruct.scalars import I
from projstruct.series import TruncatedSeries

ID = MobiusMap.identity()
INV = MobiusMap(0, 1, 1, 0)


def matmul2(m, n):
    (a, b), (c, d) = m
    (e, f), (g, h) = n
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def test_compose_with_identity():
    f = MobiusMap(2, 1, 1, 1)
    assert compose(ID, f) == f and compose(f, ID) == f


def test_inversion_is_an_involution():
    assert compose(INV, INV) == ID


def test_compose_against_matrix_product():
    f, g = MobiusMap(1, 1, 0, 1), MobiusMap(2, 0, 0, 1)
    assert compose(f, g) == MobiusMap(2, 1, 0, 1)
    (a, b), (c, d) = matmul2(f.matrix, g.matrix)
    assert compose(f, g) == MobiusMap(a, b, c, d)


def test_normalization_identifies_scalar_multiples():
    assert MobiusMap(2, 4, 6, 10) == MobiusMap(1, 2, 3, 5)
    assert MobiusMap(I, 0, 0, I) == ID


def test_singular_matrix_rejected():
    with pytest.raises(ValueError):
        MobiusMap(1, 2, 2, 4)


def test_apply():
    assert apply(ID, 5) == 5
    assert apply(INV, 0) is INFINITY
    assert apply(INV, INFINITY) == 0
    assert apply(MobiusMap(2, 1, 1, 1), 1) == Fraction(3, 2)
    assert apply(MobiusMap(2, 1, 1, 1), INFINITY) == 2
    assert apply(MobiusMap(1, 1, 0, 1), INFINITY) is INFINITY


def test_inverse_undoes():
    f = MobiusMap(2 + I, 1, 3, 1 - I)
    for p in (0, 1, I, Fraction(-7, 3)):
        assert apply(f.inverse(), apply(f, p)) == p


def test_taylor_examples():
    assert taylor_expand(ID, 0, 4) == TruncatedSeries([0, 1], 4)
    assert taylor_expand(INV, 1, 3) == TruncatedSeries([1, -1, 1, -1])
    assert taylor_expand(MobiusMap(2, 1, 0, 1), 7, 2) == TruncatedSeries([15, 2, 0])


def test_taylor_at_pole_raises():
    with pytest.raises(PoleAtCenter):
        taylor_expand(INV, 0, 4)


def test_taylor_matches_geometric_series_oracle():
    # (2z+1)/(z+1) = 2 - 1/(1+z)
    s = taylor_expand(MobiusMap(2, 1, 1, 1), 0, 8)
    assert list(s.coeffs) == [1] + [-((-1) ** k) for k in range(1, 9)]
