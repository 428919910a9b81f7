from fractions import Fraction as F

import pytest
from hypothesis import given

from corpus import corpus
from folia.algebra import W, Z, BiPoly
from folia.cli.parser import (
    ExprSyntaxError,
    MixedSyntax,
    NonIntegerExponent,
    parse_foliation,
    parse_point,
    parse_polynomial,
)
from folia.germ import FoliationGerm
from strategies import bipolys


def test_one_form_duality():
    parsed = parse_foliation("-w*dz + z*dw")
    assert parsed.kind == "form"
    assert (parsed.germ.P, parsed.germ.Q) == (Z, W)


def test_vector_field_direct_read():
    parsed = parse_foliation("z*d/dz - 2*w*d/dw")
    assert parsed.kind == "vector"
    assert (parsed.germ.P, parsed.germ.Q) == (Z, -2 * W)
    assert parsed.warnings == ()


def test_unclosed_parenthesis_offset():
    with pytest.raises(ExprSyntaxError) as info:
        parse_foliation("z*(d/dz")
    # reported at the end of input, naming where the parenthesis opened
    assert info.value.offset == 7
    assert "opened at 2" in info.value.detail


def test_precedence():
    assert parse_polynomial("2*z^2 - w*3 + 1/2") == 2 * Z**2 - 3 * W + BiPoly.const(F(1, 2))
    assert parse_polynomial("-z^2") == -(Z**2)
    assert parse_polynomial("(z + w)^2") == Z**2 + 2 * Z * W + W**2
    assert parse_polynomial("2*-w") == -2 * W


def test_common_factor_removed_with_warning():
    parsed = parse_foliation("z^2*d/dz + z*w*d/dw")
    assert (parsed.germ.P, parsed.germ.Q) == (Z, W)
    assert parsed.warnings and "z" in parsed.warnings[0]


@pytest.mark.parametrize("text,error,offset", [
    ("z*d/dz + dw", MixedSyntax, 9),
    ("z^1/2*d/dz", NonIntegerExponent, 2),
    ("z^w*d/dz", NonIntegerExponent, 2),
    ("z d/dz", ExprSyntaxError, 2),
    ("zw*d/dz", ExprSyntaxError, 0),
    ("z*d/dz*d/dw", ExprSyntaxError, 6),
    ("1/0*d/dz", ExprSyntaxError, 0),
    ("z + w", ExprSyntaxError, 0),
    ("z*d/dz + w", ExprSyntaxError, 0),
    ("0*d/dz", ExprSyntaxError, 0),
    ("z*d/dz $", ExprSyntaxError, 7),
    ("z^", ExprSyntaxError, 2),
    ("", ExprSyntaxError, 0),
])
def test_errors(text, error, offset):
    with pytest.raises(error) as info:
        parse_foliation(text)
    assert info.value.offset == offset


def test_parse_point():
    assert parse_point("1,-1/2") == (F(1), F(-1, 2))
    assert parse_point("(0, 3)") == (F(0), F(3))
    with pytest.raises(ExprSyntaxError):
        parse_point("1")


@pytest.mark.parametrize("name,germ", corpus(), ids=[n for n, _ in corpus()])
def test_print_parse_round_trip(name, germ):
    back = parse_foliation(str(germ)).germ
    assert (back.P, back.Q) == (germ.P, germ.Q)


@given(bipolys(max_degree=3, max_terms=4), bipolys(max_degree=3, max_terms=4))
def test_round_trip_random(P, Q):
    if P.is_zero() and Q.is_zero():
        return
    g = FoliationGerm(P, Q)
    back = parse_foliation(str(g)).germ
    assert (back.P, back.Q) == (g.P, g.Q)
    assert parse_polynomial(str(P)) == P
