"""
Tests for the Kauffman bracket, the Jones polynomial and V(t, 5)
"""

import pytest

from algebra import Cyclo40, LaurentPoly
from bracket import JonesClass5, jones, jones_class5, jones_tilde, kauffman_bracket, v_abs, v_squared
from diagram import braid_closure, mirror
from errors import CrossingLimitError

TREFOIL = braid_closure(2, [1, 1, 1])
HOPF = braid_closure(2, [1, 1])
FIGURE_EIGHT = braid_closure(3, [1, -2, 1, -2])
FIVE_TWO = braid_closure(3, [1, 1, 1, 2, -1, 2])


def coefficient_sum(p: LaurentPoly) -> int:
    return sum(c for _, c in p.items())


def test_unknot_and_unlink():
    assert kauffman_bracket(braid_closure(1, [])) == LaurentPoly.constant(1, "A")
    assert jones(braid_closure(2, [])) == LaurentPoly({1: -1, -1: -1}, "u")


def test_trefoil_jones():
    right = LaurentPoly({2: 1, 6: 1, 8: -1}, "u")
    assert jones(TREFOIL) in (right, right.scale_exponents(-1))


@pytest.mark.parametrize("d", [TREFOIL, HOPF, FIGURE_EIGHT, FIVE_TWO])
def test_state_sum_matches_contraction(d):
    assert kauffman_bracket(d, method="states") == kauffman_bracket(d, method="contract")


def test_jones_at_one():
    assert coefficient_sum(jones(TREFOIL)) == 1
    assert coefficient_sum(jones(FIVE_TWO)) == 1
    assert coefficient_sum(jones(HOPF)) == -2


def test_mirror_inverts_u():
    for d in (TREFOIL, FIVE_TWO, HOPF):
        assert jones(mirror(d)) == jones(d).scale_exponents(-1)


def test_crossing_limit():
    with pytest.raises(CrossingLimitError) as info:
        kauffman_bracket(FIVE_TWO, limit=4)
    assert info.value.crossings == 6


def test_v_abs_values():
    assert v_abs(braid_closure(1, [])) == pytest.approx(1.0)
    assert v_abs(TREFOIL) == pytest.approx(1.618034, abs=1e-5)
    assert v_abs(HOPF) == pytest.approx(1.618034, abs=1e-5)
    assert v_squared(FIGURE_EIGHT) == Cyclo40.zero()


def test_jones_class_of_trefoil_and_hopf_agree():
    trefoil_class = jones_class5(TREFOIL)
    assert trefoil_class == jones_class5(HOPF)
    assert trefoil_class.contains([1, 0, 1, 0])
    assert trefoil_class.contains([-1, 0, -1, 0])
    assert len(trefoil_class.members) == 5


def test_jones_class_mirror():
    for d in (TREFOIL, FIVE_TWO, HOPF):
        assert jones_class5(mirror(d)) == jones_class5(d).mirror()


def test_jones_tilde_ignores_linking():
    # orientation reversal of one Hopf component flips the linking number only
    assert jones_tilde(HOPF) == jones_tilde(HOPF.reverse_components([0]))


def test_class_text():
    cls = JonesClass5.from_t_polynomial(LaurentPoly({0: 1, 2: 1}, "t"))
    assert str(cls).startswith("{") and "1 + t^2" in str(cls)
