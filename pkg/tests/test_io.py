from fractions import Fraction

import pytest

from projstruct.action import ActionGroup, AffineAutAction, MonomialAction, fixed_locus
from projstruct.errors import ParseError
from projstruct.io import parse_scalar, parse_series, read_action_file, write_action_file
from projstruct.scalars import I, ZETA3, ZETA12


@pytest.mark.parametrize(
    "text,value",
    [
        ("3", 3),
        ("-1/2", Fraction(-1, 2)),
        ("1/2+3/4*i", Fraction(1, 2) + Fraction(3, 4) * I),
        ("2w", 2 * ZETA3),
        ("-i", -I),
        ("z12^5", ZETA12**5),
        ("1 + i", 1 + I),
    ],
)
def test_scalar_literals(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("text", ["0.5", "", "1/2x", "^3", "2**i", "1e3"])
def test_bad_scalar_literals(text):
    with pytest.raises(ParseError):
        parse_scalar(text)


def test_series_parsing():
    s = parse_series("0, 1, 1/2 i", order=5)
    assert s.order == 5 and s.coeffs[:3] == (0, 1, Fraction(1, 2)) and s.coeffs[3] == I
    with pytest.raises(ParseError):
        parse_series("1 2 3", order=1)


def test_action_file_round_trip():
    A = AffineAutAction([[1, 0, 0], [0, -1, 0], [0, 0, I]], label="A")
    M = MonomialAction(10, (2, 3, 4), (1, -1, 1), label="R")
    G = ActionGroup((A, M), 2)
    H = read_action_file(write_action_file(G))
    assert H == G


def test_action_file_with_translation():
    text = """
    # synthetic affine data
    genus 2
    base other
    generator T
    row -1 0 0
    row 0 1 0
    row 0 0 1
    translation 2 0 0
    end
    """
    G = read_action_file(text)
    assert fixed_locus(G).basepoint[0] == 1
    assert read_action_file(write_action_file(G)) == G


@pytest.mark.parametrize(
    "text,where",
    [
        ("genus 2\nfoo 1\n", "line 2"),
        ("genus 2\ngenerator A\nrow 1 0 0\n", "not closed"),
        ("generator A\nrow 1\nend\n", "genus"),
        ("genus 2\ngenerator A\nrow 1 0.5 0\nend\n", "line 3"),
        ("genus 2\ngenerator A modulus 5\nrow 1 0 0\nend\n", "line 4"),
    ],
)
def test_action_file_errors(text, where):
    with pytest.raises(ParseError, match=where):
        read_action_file(text)
