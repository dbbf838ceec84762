"""
Tests for the link specification grammar
"""

import pytest

from errors import SpecRangeError, SpecSyntaxError
from notation import (Braid, ConnSum, Disjoint, Fraction, Mirror, Montesinos, Named, Pd,
                      Pretzel, Rational, parse_spec, serialize_spec)


def test_fraction_normalisation():
    assert Fraction(4, -6) == Fraction(-2, 3)
    assert Fraction(-1, 0) == Fraction(1, 0)
    assert Fraction(1, 0).is_infinity
    assert str(Fraction(10, 4)) == "5/2"
    with pytest.raises(SpecRangeError):
        Fraction(0, 0)


def test_parse_every_kind():
    assert parse_spec("braid:3:[1,-2]") == Braid(3, (1, -2))
    assert parse_spec("braid:2:[]") == Braid(2, ())
    assert parse_spec("pd:[[1,4,2,5],[3,6,4,1],[5,2,6,3]]").crossings[0] == (1, 4, 2, 5)
    assert parse_spec("rational:5/2") == Rational(Fraction(5, 2))
    assert parse_spec("pretzel:[2,2,2]") == Pretzel((2, 2, 2))
    assert parse_spec("montesinos:[3/5,1/2,1/2]") == Montesinos(
        (Fraction(3, 5), Fraction(1, 2), Fraction(1, 2)))
    assert parse_spec("mirror(named:6^3_1)") == Mirror(Named("6^3_1"))
    assert parse_spec("sum(named:H; named:H)") == ConnSum((Named("H"), Named("H")))
    assert parse_spec("disjoint(braid:1:[];braid:1:[])") == Disjoint((Braid(1, ()), Braid(1, ())))


def test_whitespace_is_ignored():
    assert parse_spec("  braid : 3 : [ 1 , -2 ]  ") == Braid(3, (1, -2))


@pytest.mark.parametrize("text", [
    "braid:3:[1,-2]",
    "rational:-2/3",
    "pretzel:[2,2,2,2,-1,-1]",
    "montesinos:[3/5,1/2,1/2]",
    "mirror(sum(named:H;rational:5/2))",
    "disjoint(named:4_1;braid:1:[])",
])
def test_serialize_is_canonical(text):
    assert serialize_spec(parse_spec(text)) == text


def test_unknown_keyword_offset():
    with pytest.raises(SpecSyntaxError) as info:
        parse_spec("foo:1")
    assert info.value.offset == 0


def test_trailing_characters():
    with pytest.raises(SpecSyntaxError) as info:
        parse_spec("braid:3:[1,-2] x")
    assert info.value.offset == 15
    assert "trailing characters" in str(info.value)


def test_unclosed_bracket():
    with pytest.raises(SpecSyntaxError) as info:
        parse_spec("braid:3:[1,-2")
    assert info.value.offset == 13


def test_non_ascii_is_rejected():
    with pytest.raises(SpecSyntaxError) as info:
        parse_spec("named:4_1é")
    assert info.value.offset == 9


@pytest.mark.parametrize("text", [
    "braid:0:[]",
    "braid:2:[2]",
    "braid:3:[0]",
    "pretzel:[]",
    "montesinos:[]",
    "rational:0/0",
    "pd:[]",
    "pd:[[1,2,3]]",
])
def test_range_errors(text):
    with pytest.raises(SpecRangeError):
        parse_spec(text)


def test_pd_requires_four_edges():
    with pytest.raises(SpecRangeError):
        Pd(((1, 2, 3),))
