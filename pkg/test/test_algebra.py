"""
Tests for Laurent polynomials, Z[zeta_40] arithmetic and the quotient reductions
"""

import pytest

from algebra import (SQRT5, T_SPECIAL, X0, Cyclo40, Ideal, LaurentPoly, LaurentPoly2,
                     chebyshev_t, chebyshev_v1, chebyshev_v2, parse_quadratic,
                     reduce_mod, reduce_mod_ideal_5)
from errors import ConventionError

A = LaurentPoly.variable("A")
t = LaurentPoly.variable("t")
a = LaurentPoly.variable("a")


def test_laurent_arithmetic():
    """Products, inverse powers and equality ignore zero terms"""
    p = A + LaurentPoly.monomial(-1, 1, "A")
    assert p * p == A ** 2 + 2 + A ** -2
    assert (p - p).is_zero()
    assert (A ** 3).shift(-3) == LaurentPoly.constant(1, "A")
    assert LaurentPoly({2: 0, 1: 5}, "A") == LaurentPoly({1: 5}, "A")


def test_exact_div():
    assert (A ** 2 - 1).exact_div(A - 1) == A + 1
    with pytest.raises(ConventionError):
        (A ** 2 + 1).exact_div(A - 1)
    with pytest.raises(ConventionError):
        A.exact_div(0)


def test_halve_exponents_rejects_odd_powers():
    assert (A ** 4 + A ** -2).halve_exponents("u") == LaurentPoly({2: 1, -1: 1}, "u")
    with pytest.raises(ConventionError):
        (A ** 3).halve_exponents("u")


def test_two_variable_polynomial():
    x = LaurentPoly2.monomial(0, 1)
    p = (LaurentPoly2.monomial(1, 0) + x) ** 2
    assert p.coefficient(1, 1) == 2
    assert p.coefficient(2, 0) == 1
    assert p.invert_first().coefficient(-2, 0) == 1
    assert p.at_first_one() == LaurentPoly({0: 1, 1: 2, 2: 1}, "x")


def test_zeta_has_order_40():
    zeta = Cyclo40.zeta(1)
    assert zeta ** 20 == -Cyclo40.one()
    assert zeta ** 40 == Cyclo40.one()
    assert zeta * Cyclo40.zeta(-1) == Cyclo40.one()


def test_golden_ratio_constants():
    assert SQRT5 * SQRT5 == Cyclo40.from_int(5)
    assert str(SQRT5) == "sqrt5"
    assert str(-SQRT5) == "-sqrt5"
    assert X0.to_complex().real == pytest.approx(0.6180339887)
    assert X0 * X0 + X0 == Cyclo40.one()


def test_parse_quadratic_matches_format():
    for text in ("5", "-1", "sqrt5", "-sqrt5", "1+sqrt5", "3-2*sqrt5"):
        assert str(parse_quadratic(text)) == text
    with pytest.raises(ConventionError):
        parse_quadratic("1/3")


def test_inverse_and_galois():
    unit = Cyclo40.one() + T_SPECIAL ** 2
    assert unit * unit.inverse == Cyclo40.one()
    assert SQRT5.galois(3) == -SQRT5
    assert SQRT5.is_real()
    with pytest.raises(ConventionError):
        Cyclo40.from_int(2).inverse


def test_cyclo_is_hashable():
    values = {Cyclo40.from_int(1), Cyclo40.one(), SQRT5}
    assert len(values) == 2


def test_reduce_mod_i_t():
    assert reduce_mod(t ** 5, Ideal.I_T).vector() == (-1, 0, 0, 0)
    assert reduce_mod(t ** 4, Ideal.I_T).vector() == (-1, 1, -1, 1)
    assert reduce_mod(t ** 10, Ideal.I_T).vector() == (1, 0, 0, 0)
    assert reduce_mod(t ** -1, Ideal.I_T).vector() == reduce_mod(-(t ** 4), Ideal.I_T).vector()


def test_reduce_mod_i_a_is_a_ring_map():
    p, q = A ** 7 - A ** -3, A ** 21 + 2
    left = reduce_mod(p * q, Ideal.I_A)
    right = reduce_mod(p, Ideal.I_A) * reduce_mod(q, Ideal.I_A)
    assert left.vector() == right.vector()


def test_reduce_mod_checks_the_variable():
    with pytest.raises(ConventionError):
        reduce_mod(A, Ideal.I_T)


def test_reduce_mod_ideal_5():
    assert reduce_mod_ideal_5((a ** 2 - 1) ** 3).is_zero()
    assert reduce_mod_ideal_5(a * 5).is_zero()
    inverse = reduce_mod_ideal_5(a ** -1)
    assert reduce_mod_ideal_5(inverse * a) == LaurentPoly.constant(1, "a")


def test_chebyshev():
    x = LaurentPoly.variable("x")
    assert chebyshev_t(-1).is_zero()
    assert chebyshev_t(0) == LaurentPoly.constant(1, "x")
    assert chebyshev_t(2) == x ** 2 - 1
    assert chebyshev_v1(1) == LaurentPoly.constant(1, "x")
    assert chebyshev_v2(1).is_zero()
    assert chebyshev_v2(2) == LaurentPoly2.monomial(-1, 0)
