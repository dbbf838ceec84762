"""
Kauffman Module
Two-variable Kauffman polynomial by descending-diagram skein recursion,
special-point evaluations and the k-move identities
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from algebra import (A0_DEFAULT_POWER, P0_DEFAULT_POWER, X0, Cyclo40, LaurentPoly,
                     LaurentPoly2, chebyshev_v1, chebyshev_v2, reduce_mod_ideal_5)
from config import Config
from diagram import (LinkDiagram, MoveSite, apply_rational_move, apply_twist_move,
                     reidemeister_simplify, smoothing, switch_crossing)
from errors import CrossingLimitError, InvalidPointError, InvalidSiteError
from notation import Fraction

logger = logging.getLogger(__name__)


# ============================================================================
# Coefficient rings for the recursion
# ============================================================================

class _Ring:
    """Values of a and x plus the split-circle factor delta = (a + 1/a)/x - 1.

    delta follows from the axioms: a kink resolved by the skein relation
    gives a + 1/a = x(1 + delta).
    """

    def __init__(self, a, x, one):
        self.a = a
        self.x = x
        self.one = one
        self.zero = one * 0
        self._a_powers: Dict[int, object] = {0: one, 1: a, -1: a ** -1}
        self.delta = (a + self._a_powers[-1]) * x ** -1 - one

    def a_power(self, n: int):
        if n not in self._a_powers:
            self._a_powers[n] = self.a ** n
        return self._a_powers[n]


def _poly_ring() -> _Ring:
    return _Ring(LaurentPoly2.monomial(1, 0), LaurentPoly2.monomial(0, 1), LaurentPoly2.constant(1))


def _point_ring(a_power: int, x: Cyclo40) -> _Ring:
    return _Ring(Cyclo40.zeta(a_power), x, Cyclo40.one())


# ============================================================================
# Descending-diagram recursion
# ============================================================================

def first_bad_crossing(d: LinkDiagram) -> Optional[int]:
    """First crossing met from below along the traversal.

    Components are walked in order of their lowest edge, starting at its
    tail; earlier components must pass over later ones and every
    self-crossing must first be met on its over-strand.
    """
    comp = d.component_of
    seen = set()
    for walk in d.components:
        for label in walk:
            i, s = d.head(label)
            if i in seen:
                continue
            seen.add(i)
            t = d.crossings[i]
            over_comp = comp[t[d.over_in_slot(i)]]
            under_comp = comp[t[0]]
            if over_comp != under_comp:
                if over_comp > under_comp:
                    return i
            elif s == 0:
                return i
    return None


class _Skein:
    def __init__(self, ring: _Ring):
        self.ring = ring
        self.memo: Dict[LinkDiagram, object] = {}

    def lam(self, d: LinkDiagram):
        # labels survive a switch, so the count of bad crossings strictly drops
        d, framing = reidemeister_simplify(d)
        return self._core(d) * self.ring.a_power(framing)

    def _core(self, d: LinkDiagram):
        if d in self.memo:
            return self.memo[d]
        ring = self.ring
        if not d.crossings:
            value = ring.delta ** (d.free_circles - 1) if d.free_circles else ring.one
        else:
            bad = first_bad_crossing(d)
            if bad is None:
                stats = d.stats()
                value = ring.a_power(stats.self_writhe) * ring.delta ** (stats.components - 1)
            else:
                value = ring.x * (self.lam(smoothing(d, bad, "A")) + self.lam(smoothing(d, bad, "B")))
                value = value - self.lam(switch_crossing(d, bad))
        self.memo[d] = value
        return value


@lru_cache(maxsize=None)
def _skein_poly() -> _Skein:
    return _Skein(_poly_ring())


@lru_cache(maxsize=64)
def _skein_point(a_power: int, x: Cyclo40) -> _Skein:
    return _Skein(_point_ring(a_power, x))


def _check_limit(d: LinkDiagram, limit: Optional[int]):
    limit = Config.KAUFFMAN_CROSSING_LIMIT if limit is None else limit
    if d.crossing_count > limit:
        raise CrossingLimitError("kauffman", d.crossing_count, limit)


def kauffman_lambda(d: LinkDiagram, limit: Optional[int] = None) -> LaurentPoly2:
    """Regular-isotopy invariant: unknot 1, positive kink a, Lp + Lm = x(L0 + Linf)"""
    _check_limit(d, limit)
    skein = _skein_poly()
    value = skein.lam(d)
    logger.debug("lambda memo holds %d diagrams", len(skein.memo))
    return value


def kauffman_f(d: LinkDiagram, limit: Optional[int] = None) -> LaurentPoly2:
    """F = a^-w Lambda"""
    return kauffman_lambda(d, limit).shift(-d.stats().writhe, 0)


def lambda_at(d: LinkDiagram, a_power: int, x: Cyclo40, limit: Optional[int] = None) -> Cyclo40:
    _check_limit(d, limit)
    return _skein_point(a_power % 40, x).lam(d)


def f_at(d: LinkDiagram, a_power: int, x: Cyclo40, limit: Optional[int] = None) -> Cyclo40:
    value = lambda_at(d, a_power, x, limit)
    return value * Cyclo40.zeta(-a_power * d.stats().writhe)


def f_at_special(d: LinkDiagram, limit: Optional[int] = None) -> Cyclo40:
    """F(1, 2cos(2pi/5)), an element of Z[sqrt 5]"""
    return lambda_at(d, 0, X0, limit)


def q_polynomial(d: LinkDiagram, limit: Optional[int] = None) -> LaurentPoly:
    """F(1, x)"""
    return kauffman_f(d, limit).at_first_one()


# ============================================================================
# Set(F) orbit invariant
# ============================================================================

@dataclass(frozen=True)
class FSetInvariant:
    a_power: int
    p_power: int
    members: Tuple[Cyclo40, ...]

    @property
    def has_real_member(self) -> bool:
        return any(m.is_real() for m in self.members)

    def to_json(self) -> dict:
        return {
            "a0": f"zeta^{self.a_power}",
            "x0": f"zeta^{self.p_power}+zeta^{-self.p_power}",
            "members": [m.to_json() for m in self.members],
            "has_real_member": self.has_real_member,
        }


def validate_point(a_power: int, p_power: int):
    """a0 = zeta^a_power, x0 = p0 + 1/p0 with p0 = zeta^p_power"""
    problems = []
    if a_power % 4:
        problems.append("a0^10 != 1")
    if (p_power - a_power) % 8:
        problems.append("p0^5 != a0^5")
    if (a_power - p_power) % 40 == 0 or (a_power + p_power) % 40 == 0:
        problems.append("a0 is p0 or 1/p0")
    if p_power % 10 == 0:
        problems.append("p0 is one of 1, -1, i, -i")
    if problems:
        raise InvalidPointError(f"(zeta^{a_power}, zeta^{p_power}): " + "; ".join(problems))


def x_of(p_power: int) -> Cyclo40:
    return Cyclo40.zeta(p_power) + Cyclo40.zeta(-p_power)


def set_f_at(d: LinkDiagram, a_power: int = A0_DEFAULT_POWER, p_power: int = P0_DEFAULT_POWER,
             limit: Optional[int] = None) -> FSetInvariant:
    validate_point(a_power, p_power)
    value = f_at(d, a_power, x_of(p_power), limit)
    members = [value * Cyclo40.zeta(a_power * i) for i in range(10)]
    return FSetInvariant(a_power % 40, p_power % 40, tuple(sorted(members, key=lambda m: m.coords)))


def f_set(d: LinkDiagram, a0: Cyclo40, x0: Cyclo40, limit: Optional[int] = None) -> FSetInvariant:
    """Set(F) for cyclotomic a0, x0; the pair is matched against zeta powers"""
    a_power = next((k for k in range(40) if Cyclo40.zeta(k) == a0), None)
    if a_power is None:
        raise InvalidPointError("a0 is not a 40th root of unity")
    for p_power in range(40):
        if x_of(p_power) != x0:
            continue
        try:
            validate_point(a_power, p_power)
        except InvalidPointError:
            continue
        return set_f_at(d, a_power, p_power, limit)
    raise InvalidPointError("x0 is not p0 + 1/p0 for an admissible p0")


# ============================================================================
# k-move identities
# ============================================================================

def skein_check(d: LinkDiagram, index: int) -> bool:
    """Lp + Lm = x(L0 + Linf) at one crossing"""
    x = LaurentPoly2.monomial(0, 1)
    left = kauffman_lambda(d) + kauffman_lambda(switch_crossing(d, index))
    right = x * (kauffman_lambda(smoothing(d, index, "A")) + kauffman_lambda(smoothing(d, index, "B")))
    return left == right


def _to_p(poly: LaurentPoly2) -> LaurentPoly2:
    """Substitute x = p + 1/p into a polynomial without negative x-powers"""
    step = LaurentPoly2({(0, 1): 1, (0, -1): 1}, ("a", "p"))
    total = LaurentPoly2(vars=("a", "p"))
    for (i, j), c in poly.items():
        total = total + step ** j * LaurentPoly2.monomial(i, 0, c, ("a", "p"))
    return total


def _move_family(d: LinkDiagram, site: MoveSite, k: int):
    return (apply_twist_move(d, site, 1), apply_twist_move(d, site, k),
            apply_rational_move(d, site, Fraction(1, 0)))


def kmove_lambda_identity_check(d: LinkDiagram, site: MoveSite, k: int) -> bool:
    """L_k = v1^(k) L_1 - v1^(k-1) L_0 + x v2^(k) L_inf, in (a, x) and in (a, p)"""
    if k < 2:
        raise InvalidSiteError("the k-move identity needs k >= 2")
    l1, lk, linf = _move_family(d, site, k)
    x = LaurentPoly2.monomial(0, 1)
    v1 = LaurentPoly2.from_second(chebyshev_v1(k))
    v1_prev = LaurentPoly2.from_second(chebyshev_v1(k - 1))
    left = kauffman_lambda(lk)
    right = (v1 * kauffman_lambda(l1) - v1_prev * kauffman_lambda(d)
             + x * chebyshev_v2(k) * kauffman_lambda(linf))
    if left != right:
        logger.warning("k-move identity fails for k=%d at edges %d,%d", k, site.edge_a, site.edge_b)
        return False
    low = min(left.min_second_degree(), right.min_second_degree(), 0)
    return _to_p(left.shift(0, -low)) == _to_p(right.shift(0, -low))


def five_move_lambda_check(d: LinkDiagram, site: MoveSite) -> bool:
    """Lambda_L5(a, a + 1/a) = a^5 Lambda_L0(a, a + 1/a) mod (5, (a^2 - 1)^3)"""
    l5 = apply_twist_move(d, site, 5)
    difference = kauffman_lambda(l5) - kauffman_lambda(d).shift(5, 0)
    if difference.is_zero():
        return True
    # x = a + 1/a is a unit modulo the ideal, so x-denominators may be cleared
    cleared = difference.shift(0, -min(difference.min_second_degree(), 0))
    a = LaurentPoly.variable("a")
    value = cleared.evaluate(a, a + LaurentPoly.monomial(-1, 1, "a"))
    return reduce_mod_ideal_5(value).is_zero()
