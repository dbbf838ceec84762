"""
Bracket Module
Handles the Kauffman bracket, the Jones polynomial and its 5-move invariants
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from algebra import Cyclo40, Ideal, LaurentPoly, reduce_mod
from config import Config
from diagram import LinkDiagram
from errors import ConventionError, CrossingLimitError

logger = logging.getLogger(__name__)

A = LaurentPoly.variable("A")
LOOP = LaurentPoly({2: -1, -2: -1}, "A")          # d = -A^2 - A^-2
KINK = LaurentPoly.monomial(3, -1, "A")           # -A^3

Matching = FrozenSet[Tuple[int, int]]


# ============================================================================
# Bracket by frontier contraction
# ============================================================================

def _contraction_order(d: LinkDiagram) -> List[int]:
    """Greedy order keeping the set of half-attached edges small"""
    remaining = list(range(d.crossing_count))
    order: List[int] = []
    open_edges: set = set()
    while remaining:
        best = max(remaining, key=lambda i: (len(open_edges & set(d.crossings[i])), -i))
        remaining.remove(best)
        order.append(best)
        open_edges ^= set(d.crossings[best])
    return order


def _attach(matching: Dict[int, int], p: int, q: int) -> int:
    """Attach the arc p-q; returns the number of loops it closes"""
    if p == q:
        return 1
    if matching.get(p) == q:
        del matching[p], matching[q]
        return 1
    far_p = matching.pop(p, p)
    if far_p != p:
        del matching[far_p]
    far_q = matching.pop(q, q)
    if far_q != q:
        del matching[far_q]
    matching[far_p] = far_q
    matching[far_q] = far_p
    return 0


def _bracket_contract(d: LinkDiagram) -> LaurentPoly:
    states: Dict[Matching, LaurentPoly] = {frozenset(): LaurentPoly.constant(1)}
    a_weight, b_weight = A, LaurentPoly.monomial(-1, 1, "A")
    for i in _contraction_order(d):
        t = d.crossings[i]
        smoothings = (
            (a_weight, ((t[0], t[1]), (t[2], t[3]))),
            (b_weight, ((t[0], t[3]), (t[1], t[2]))),
        )
        nxt: Dict[Matching, LaurentPoly] = {}
        for key, poly in states.items():
            for weight, arcs in smoothings:
                matching = dict(key)
                loops = sum(_attach(matching, p, q) for p, q in arcs)
                value = poly * weight * LOOP ** loops
                frozen = frozenset(matching.items())
                nxt[frozen] = nxt[frozen] + value if frozen in nxt else value
        states = nxt
        logger.debug("contracted crossing %d: %d frontier states", i, len(states))
    total = sum(states.values(), LaurentPoly({}, "A"))
    return total.exact_div(LOOP)


# ============================================================================
# Bracket by the full state sum
# ============================================================================

def _count_loops(d: LinkDiagram, choice: Sequence[bool]) -> int:
    parent: Dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t, use_a in zip(d.crossings, choice):
        pairs = ((t[0], t[1]), (t[2], t[3])) if use_a else ((t[0], t[3]), (t[1], t[2]))
        for p, q in pairs:
            parent[find(p)] = find(q)
    return len({find(v) for v in parent})


def _bracket_states(d: LinkDiagram) -> LaurentPoly:
    total = LaurentPoly({}, "A")
    n = d.crossing_count
    for choice in product((True, False), repeat=n):
        a_count = sum(choice)
        loops = _count_loops(d, choice)
        total = total + LaurentPoly.monomial(2 * a_count - n, 1, "A") * LOOP ** (loops - 1)
    return total


@lru_cache(maxsize=1024)
def _bracket_cached(d: LinkDiagram, method: str) -> LaurentPoly:
    if not d.crossings:
        return LOOP ** (d.free_circles - 1) if d.free_circles else LaurentPoly.constant(1)
    core = _bracket_states(d) if method == "states" else _bracket_contract(d)
    return core * LOOP ** d.free_circles


def kauffman_bracket(d: LinkDiagram, method: Optional[str] = None,
                     limit: Optional[int] = None) -> LaurentPoly:
    """<D> with <O> = 1 and loop value d = -A^2 - A^-2"""
    limit = Config.BRACKET_CROSSING_LIMIT if limit is None else limit
    if d.crossing_count > limit:
        raise CrossingLimitError("bracket", d.crossing_count, limit)
    return _bracket_cached(d, method or Config.BRACKET_METHOD)


# ============================================================================
# Jones polynomial
# ============================================================================

def to_u(p: LaurentPoly) -> LaurentPoly:
    """A^e -> u^(-e/2), since u = t^(1/2) = A^-2"""
    return p.halve_exponents("u").scale_exponents(-1)


def jones(d: LinkDiagram, **options) -> LaurentPoly:
    """V = (-A^3)^-w <D> in u = t^(1/2)"""
    w = d.stats().writhe
    return to_u(KINK ** -w * kauffman_bracket(d, **options))


def jones_tilde(d: LinkDiagram, **options) -> LaurentPoly:
    """Orientation-free version using the self-writhe"""
    sw = d.stats().self_writhe
    return to_u(KINK ** -sw * kauffman_bracket(d, **options))


def v_squared(d: LinkDiagram, **options) -> Cyclo40:
    """|V(exp(pi i/5))|^2 as an exact element of the real subfield"""
    return Cyclo40.from_laurent(jones_tilde(d, **options), power=-2).squared_modulus()


def v_abs(d: LinkDiagram, **options) -> float:
    return math.sqrt(max(v_squared(d, **options).to_complex().real, 0.0))


# ============================================================================
# V_L(t, 5)
# ============================================================================

Vector4 = Tuple[int, int, int, int]


def _sign_normalise(v: Sequence[int]) -> Vector4:
    lead = next((c for c in v if c), 0)
    return tuple(-c for c in v) if lead < 0 else tuple(v)


@dataclass(frozen=True)
class JonesClass5:
    """Orbit of the Jones polynomial modulo I_t under t, up to sign"""

    members: Tuple[Vector4, ...]
    # odd u-powers were multiplied by u; the orbit itself is unchanged
    shifted: bool = field(default=False, compare=False)

    @classmethod
    def from_t_polynomial(cls, p: LaurentPoly, shifted: bool = False) -> "JonesClass5":
        current = reduce_mod(p, Ideal.I_T)
        t = reduce_mod(LaurentPoly.variable("t"), Ideal.I_T)
        members = []
        for _ in range(5):
            members.append(_sign_normalise(current.vector()))
            current = current * t
        return cls(tuple(sorted(members)), shifted)

    @classmethod
    def from_jones(cls, v: LaurentPoly) -> "JonesClass5":
        """Accepts a polynomial in u; odd u-powers are first multiplied by u"""
        parities = {e % 2 for e in v.exponents()}
        if len(parities) > 1:
            raise ConventionError(f"mixed parity Jones polynomial {v}")
        shifted = parities == {1}
        if shifted:
            v = v.shift(1)
        return cls.from_t_polynomial(v.halve_exponents("t"), shifted)

    def contains(self, vector: Sequence[int]) -> bool:
        padded = list(vector) + [0] * (4 - len(vector))
        return _sign_normalise(padded[:4]) in self.members

    def mirror(self) -> "JonesClass5":
        """Class of the mirror image, t -> 1/t"""
        poly = LaurentPoly({-e: c for e, c in enumerate(self.members[0])}, "t")
        return JonesClass5.from_t_polynomial(poly, self.shifted)

    def to_json(self) -> List[List[int]]:
        return [list(m) for m in self.members]

    def __str__(self) -> str:
        return "{" + ", ".join(format_vector(m) for m in self.members) + "}"


def format_vector(v: Sequence[int]) -> str:
    return str(LaurentPoly(dict(enumerate(v)), "t"))


def jones_class5(d: LinkDiagram, **options) -> JonesClass5:
    return JonesClass5.from_jones(jones_tilde(d, **options))
