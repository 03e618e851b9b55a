import cmath
from fractions import Fraction

import pytest

from projstruct.io import parse_scalar
from projstruct.scalars import I, ZETA3, ZETA6, ZETA12, Cyclotomic, format_scalar, root_of_unity, to_mpc


def test_units_have_the_right_orders():
    assert I * I == -1
    assert ZETA3**3 == 1 and ZETA3 != 1
    assert ZETA6**6 == 1 and ZETA6**3 == -1
    assert ZETA12**12 == 1 and ZETA12**6 == -1


def test_rational_results_demote_to_fraction():
    x = (1 + I) * (1 - I)
    assert x == 2 and isinstance(x, Fraction)
    assert isinstance(ZETA3 + ZETA3**2, Fraction)


def test_mixed_fields_meet_in_the_compositum():
    x = I * ZETA3
    assert isinstance(x, Cyclotomic) and x.conductor == 12
    assert x * x.inverse() == 1
    # i * zeta_3 is a primitive 12th root of unity
    assert x**12 == 1 and x**6 == -1 and x**4 != 1


@pytest.mark.parametrize("m", [1, 2, 3, 4, 6, 12])
def test_root_of_unity_matches_complex_exponential(m):
    for k in range(m):
        z = complex(root_of_unity(m, k))
        assert abs(z - cmath.exp(2j * cmath.pi * k / m)) < 1e-12


def test_inverse_and_norm():
    x = 2 - 3 * ZETA3
    assert x * x.inverse() == 1
    assert abs(complex(x)) ** 2 == pytest.approx(float(x.norm()))
    with pytest.raises(ZeroDivisionError):
        ZETA3 / (ZETA3 - ZETA3)


def test_conjugate_is_complex_conjugation():
    for x in (1 + 2 * I, ZETA3 - 5, ZETA12 + I):
        assert complex(x.conjugate()) == pytest.approx(complex(x).conjugate())


def test_big_float_embedding():
    assert complex(to_mpc(ZETA12)) == pytest.approx(cmath.exp(2j * cmath.pi / 12))


@pytest.mark.parametrize(
    "value",
    [Fraction(-1, 2), Fraction(1, 2) + Fraction(3, 4) * I, 2 * ZETA3, ZETA12**5 - 3, -I, ZETA3**2],
)
def test_format_parse_round_trip(value):
    assert parse_scalar(format_scalar(value)) == value
