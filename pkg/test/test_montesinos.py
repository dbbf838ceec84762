"""
Tests for Montesinos vectors, the closed-form families and canonical reduction
"""

import pytest

from algebra import Ideal
from bracket import jones_class5, kauffman_bracket
from diagram import build_diagram
from errors import SpecRangeError
from montesinos import (PretzelClass, SumClass, TwoFiveClass, bracket_two_five_family,
                        bracket_v_squared, canonical_jones_class, canonical_v_squared, equal_up_to_unit,
                        jones_class_two_five, montesinos_vector, pretzel_bracket, pretzel_spec,
                        pretzel_v_agrees, pretzel_v_squared, problem_flags, reduce_montesinos,
                        v_abs_of)
from notation import Fraction, Montesinos, Pretzel, parse_spec
from tangles import RationalLinkClass


def montesinos(text):
    return parse_spec(f"montesinos:[{text}]")


@pytest.mark.parametrize("m, s", [(3, 0), (3, 1), (3, 2), (4, -2)])
def test_pretzel_bracket_matches_diagram(m, s):
    assert pretzel_bracket(m, s) == kauffman_bracket(build_diagram(pretzel_spec(m, s)))


@pytest.mark.slow
@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("s", range(-2, 3))
def test_pretzel_bracket_grid(m, s):
    assert pretzel_bracket(m, s) == kauffman_bracket(build_diagram(pretzel_spec(m, s)))


def test_montesinos_vector_matches_diagram():
    spec = montesinos("3/5,1/2,1/2")
    assert montesinos_vector(spec.columns).numerator() == kauffman_bracket(build_diagram(spec))


@pytest.mark.parametrize("k, m", [(1, 0), (1, 2), (2, 1), (2, 2)])
def test_two_five_closed_form(k, m):
    """Closed form and exact bracket agree up to +-A^i modulo I_A only"""
    closed = bracket_two_five_family(k, m)
    exact = bracket_two_five_family(k, m, exact=True)
    assert equal_up_to_unit(closed, exact, Ideal.I_A)
    assert bracket_v_squared(closed) == bracket_v_squared(exact)


def test_two_five_closed_form_differs_before_reduction():
    closed = bracket_two_five_family(2, 2)
    assert not equal_up_to_unit(closed, bracket_two_five_family(2, 2, exact=True))
    assert equal_up_to_unit(closed, closed.shift(4))
    assert equal_up_to_unit(closed, -closed, Ideal.I_A)


@pytest.mark.slow
@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_two_five_class_matches_diagram(k, m):
    spec = Montesinos(tuple([Fraction(2, 5)] * k + [Fraction(1, 2)] * m))
    assert jones_class_two_five(k, m) == jones_class5(build_diagram(spec))


def test_two_five_classes():
    assert jones_class_two_five(2, 2).contains([1, -1, -1, 1])
    assert jones_class_two_five(2, 2, form="ii") == jones_class_two_five(2, 2)
    with pytest.raises(SpecRangeError):
        jones_class_two_five(1, 0, form="ii")
    with pytest.raises(SpecRangeError):
        bracket_two_five_family(0, 1)


@pytest.mark.parametrize("m, s, member, v", [
    (3, 0, [1, 0, 2, 0], 2.49721),
    (3, 2, [2, 0, 1, 0], 2.49721),
    (3, 1, [1, 1, 0, 0], 1.90211),
    (4, -2, [2, 2, 0, 0], 3.80423),
])
def test_pretzel_classes(m, s, member, v):
    canonical = PretzelClass(m, s)
    assert canonical_jones_class(canonical).contains(member)
    assert v_abs_of(canonical_v_squared(canonical)) == pytest.approx(v, abs=1e-4)


# printed members are matched up to mirror image
@pytest.mark.slow
@pytest.mark.parametrize("m, s, member, v", [
    (3, 0, [2, 0, 1, 0], 2.49721),
    (3, 2, [1, 0, 2, 0], 2.49721),
    (3, 1, [1, 1, 0, 0], 1.90211),
    (3, -1, [1, 1, 0, -1], 2.14896),
    (3, -2, [1, 1, 0, 1], 2.14896),
    (4, 0, [1, 2, 0, 2], 3.67044),
    (4, 1, [2, 0, 2, 1], 3.67044),
    (4, -1, [3, 0, 1, 0], 3.44298),
    (4, 2, [1, 0, 3, 0], 3.44298),
    (4, -2, [2, 2, 0, 0], 3.80423),
])
def test_pretzel_table_values(m, s, member, v):
    direct = jones_class5(build_diagram(pretzel_spec(m, s)))
    assert direct.contains(member) or direct.mirror().contains(member)
    assert direct == canonical_jones_class(PretzelClass(m, s))
    assert v_abs_of(pretzel_v_squared(m, s)) == pytest.approx(v, abs=1e-4)


def test_pretzel_v_criterion():
    assert pretzel_v_agrees(3, 0, 2)
    assert not pretzel_v_agrees(3, 0, 1)
    assert pretzel_v_squared(3, 0) == pretzel_v_squared(3, 2)
    assert pretzel_v_squared(3, 0) != pretzel_v_squared(3, 1)


def test_pretzel_mirror():
    assert PretzelClass(3, 0).mirror() == PretzelClass(3, 2)
    assert PretzelClass(3, 1).mirror() == PretzelClass(3, 1)


def test_reduce_two_five():
    assert reduce_montesinos(montesinos("3/5,1/2,1/2")) == TwoFiveClass(1, 2)
    assert reduce_montesinos(montesinos("2/5")) == SumClass((RationalLinkClass.H,))
    assert reduce_montesinos(montesinos("2/5,1/2")) == SumClass(())
    assert reduce_montesinos(montesinos("2/5,2/5")) == SumClass((RationalLinkClass.T2,))


def test_reduce_pretzel():
    assert reduce_montesinos(montesinos("1/2,1/2,1/2,2/1")) == PretzelClass(3, 2)
    assert reduce_montesinos(Pretzel((2, 2, 2))) == PretzelClass(3, 0)
    assert reduce_montesinos(Pretzel((2, 2))) == SumClass(())


def test_reduce_with_infinity_column():
    assert reduce_montesinos(montesinos("1/0,3/1,5/2")) == SumClass((RationalLinkClass.H,))


def test_reordered_two_five_is_flagged():
    canonical = reduce_montesinos(montesinos("2/5,1/2,2/5,1/2"))
    assert canonical == TwoFiveClass(2, 2)
    assert canonical.reordered
    assert any(flag.startswith("column_order") for flag in problem_flags(canonical))
    assert problem_flags(reduce_montesinos(montesinos("2/5,2/5,1/2,1/2"))) == []


def test_sum_with_figure_eight_is_flagged():
    canonical = SumClass.of([RationalLinkClass.FIGURE_EIGHT, RationalLinkClass.H])
    assert any(flag.startswith("figure_eight_sum") for flag in problem_flags(canonical))


def test_canonical_class_matches_direct_computation():
    spec = montesinos("3/5,1/2,1/2")
    canonical = reduce_montesinos(spec)
    assert jones_class5(build_diagram(spec)) == canonical_jones_class(canonical)


def test_representatives_build():
    for canonical in (PretzelClass(3, 1), TwoFiveClass(1, 2), SumClass((RationalLinkClass.T2,))):
        assert build_diagram(canonical.representative()).crossing_count >= 0
    assert isinstance(TwoFiveClass(2, 1).representative(), Montesinos)
    assert TwoFiveClass(2, 1).representative().columns[0] == Fraction(2, 5)
