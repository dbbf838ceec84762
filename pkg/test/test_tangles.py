"""
Tests for continued fractions, the twelve tangle classes and bracket vectors
"""

import math

import pytest

from algebra import LaurentPoly
from bracket import kauffman_bracket, v_abs
from colorings import col_n
from kauffman import f_at_special
from montesinos import rational_vector
from notation import Fraction
from tangles import (ContinuedFraction, RationalLinkClass, TangleClass12, TangleVector,
                     cf_of, check_term_shift, classify12, classify_rational_link, closure_n,
                     fraction_of, pretzel_parity_check, tangle_vector, term_shift_pairs)


def test_continued_fractions():
    assert cf_of(Fraction(5, 2)).terms == (2, 2)
    assert cf_of(Fraction(2, 5)).terms == (0, 2, 2)
    assert cf_of(Fraction(-7, 3)).terms == (-2, -3)
    assert cf_of(Fraction(1, 0)).infinity
    assert str(cf_of(Fraction(5, 2))) == "[2,2]"


@pytest.mark.parametrize("f", [Fraction(5, 2), Fraction(2, 5), Fraction(-7, 3), Fraction(20, 9),
                               Fraction(0, 1), Fraction(1, 0)])
def test_fraction_of_inverts_cf(f):
    assert fraction_of(cf_of(f)) == f


def test_fraction_of_mixed_signs():
    assert fraction_of(ContinuedFraction((1, -3))) == Fraction(2, 3)


@pytest.mark.parametrize("p, q, expected", [
    (9, 4, TangleClass12.ONE),
    (3, 5, TangleClass12.TWO_FIFTHS),
    (2, 5, TangleClass12.TWO_FIFTHS),
    (5, 2, TangleClass12.FIVE_HALVES),
    (-5, 2, TangleClass12.FIVE_HALVES),
    (5, 3, TangleClass12.FIVE_HALVES),
    (3, 2, TangleClass12.THREE_HALVES),
    (2, 3, TangleClass12.THREE_HALVES),
    (1, 2, TangleClass12.HALF),
    (-1, 2, TangleClass12.MINUS_HALF),
    (1, 0, TangleClass12.INF),
    (0, 1, TangleClass12.ZERO),
    (7, 1, TangleClass12.TWO),
])
def test_classify12(p, q, expected):
    assert classify12(Fraction(p, q)) is expected


def test_class_mirror():
    assert TangleClass12.ONE.mirror is TangleClass12.MINUS_ONE
    assert TangleClass12.HALF.mirror is TangleClass12.MINUS_HALF
    assert TangleClass12.FIVE_HALVES.mirror is TangleClass12.FIVE_HALVES
    assert TangleClass12.TWO_FIFTHS.representative == Fraction(2, 5)


@pytest.mark.parametrize("p, q, expected", [
    (20, 9, RationalLinkClass.T2),
    (3, 1, RationalLinkClass.H),
    (5, 2, RationalLinkClass.FIGURE_EIGHT),
    (1, 1, RationalLinkClass.T1),
    (7, 3, RationalLinkClass.H),
    (9, 4, RationalLinkClass.T1),
])
def test_rational_link_class(p, q, expected):
    f = Fraction(p, q)
    cls = classify_rational_link(f)
    assert cls is expected
    link = closure_n(f)
    assert f_at_special(link) == cls.f_value
    assert col_n(link, 5) == (25 if p % 5 == 0 else 5)


def test_rational_link_class_values():
    assert RationalLinkClass.T1.v_abs == pytest.approx(1.0)
    assert RationalLinkClass.T2.v_abs == pytest.approx(1.902113, abs=1e-5)
    assert RationalLinkClass.H.v_abs == pytest.approx(1.618034, abs=1e-5)
    assert RationalLinkClass.FIGURE_EIGHT.v_abs == pytest.approx(0.0)
    assert RationalLinkClass.H.components == 2


def test_unit_tangle_vector():
    A = LaurentPoly.variable("A")
    assert tangle_vector(Fraction(1, 1)) == TangleVector(A ** -1, A)


@pytest.mark.parametrize("f", [Fraction(2, 1), Fraction(1, 2), Fraction(5, 2), Fraction(2, 5),
                               Fraction(-3, 2)])
def test_tangle_vector_matches_vector_calculus(f):
    assert tangle_vector(f) == rational_vector(f)


def test_vector_numerator_is_closure_bracket():
    f = Fraction(7, 3)
    assert tangle_vector(f).numerator() == kauffman_bracket(closure_n(f))


@pytest.mark.parametrize("shift", term_shift_pairs())
def test_term_shifts_keep_invariants(shift):
    assert all(check_term_shift(shift).values())


@pytest.mark.parametrize("m, s", [(1, 0), (1, 2), (2, 1)])
def test_pretzel_parity(m, s):
    assert pretzel_parity_check(m, s).holds


def coprime_fractions(bound):
    for p in range(-bound, bound + 1):
        for q in range(1, abs(p) + 1):
            if math.gcd(p, q) == 1:
                yield Fraction(p, q)


@pytest.mark.slow
def test_rational_link_classifier_sweep():
    mismatches = []
    for f in coprime_fractions(21):
        expected = classify_rational_link(f).v_abs
        if abs(v_abs(closure_n(f), limit=40) - expected) > 1e-6:
            mismatches.append(str(f))
    assert mismatches == []
