from fractions import Fraction

import pytest

from germinv.errors import ParseError
from germinv.parser import parse_polynomial
from germinv.ring import Polynomial, format_polynomial

XYZ = ["x", "y", "z"]


def test_precedence_and_unary_minus():
    p = parse_polynomial("-x^2 + 2*x*y - (y - z)^2", XYZ)
    q = parse_polynomial("-x^2 + 2*x*y - y^2 + 2*y*z - z^2", XYZ)
    assert p == q


def test_rational_coefficients():
    p = parse_polynomial("3/2*x - y/4", XYZ)
    assert p.terms[(1, 0, 0)] == Fraction(3, 2)
    assert p.terms[(0, 1, 0)] == Fraction(-1, 4)


def test_constants_and_whitespace():
    assert parse_polynomial("  7 ", XYZ) == Polynomial.constant(3, 7)
    assert parse_polynomial("0", XYZ).is_zero()


def test_round_trip_through_formatter():
    for text in ["x*y - z^2", "x^3 + y^2", "1/3*x^2*z - 5", "-x"]:
        p = parse_polynomial(text, XYZ)
        assert parse_polynomial(format_polynomial(p, XYZ), XYZ) == p


@pytest.mark.parametrize("text, fragment", [
    ("x + w", "unknown variable"),
    ("2x", "unexpected"),
    ("x y", "unexpected"),
    ("x^-1", "exponent not a nonnegative integer"),
    ("x^y", "exponent not a nonnegative integer"),
    ("x/y", "division only by a nonzero constant"),
    ("x/0", "division only by a nonzero constant"),
    ("(x + y", "expected ')'"),
    ("", "empty expression"),
    ("x + ", "unexpected end"),
    ("x $ y", "unexpected character"),
])
def test_errors(text, fragment):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, XYZ)
    assert fragment in str(info.value)


def test_error_position_points_at_token():
    with pytest.raises(ParseError) as info:
        parse_polynomial("x + w", XYZ)
    assert info.value.position == 4
