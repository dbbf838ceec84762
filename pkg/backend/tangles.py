"""
Tangles Module
Handles rational tangles: continued fractions, the twelve 5-move tangle
classes, the four rational-link classes and bracket vectors
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Sequence, Tuple, Union

from algebra import SQRT5, T_SPECIAL, Cyclo40, LaurentPoly
from bracket import LOOP, jones_class5, kauffman_bracket
from colorings import col_n
from diagram import LinkDiagram, close_tangle, montesinos_tangle
from errors import ConventionError, SpecRangeError
from kauffman import f_at_special
from notation import Fraction
from tangle_diagram import TangleDiagram, expand_fraction

logger = logging.getLogger(__name__)


# ============================================================================
# Continued fractions
# ============================================================================

@dataclass(frozen=True)
class ContinuedFraction:
    """[a_k, ..., a_1] = a_k + 1/(a_(k-1) + ... + 1/a_1); the infinity tangle has no terms"""

    terms: Tuple[int, ...]
    infinity: bool = False

    def __str__(self) -> str:
        if self.infinity:
            return "[inf]"
        return "[" + ",".join(str(a) for a in self.terms) + "]"


def cf_of(f: Fraction) -> ContinuedFraction:
    """All-same-sign expansion, the alternating form of the twist diagram"""
    if f.is_infinity:
        return ContinuedFraction((), True)
    return ContinuedFraction(tuple(expand_fraction(f.p, f.q)))


def fraction_of(cf: ContinuedFraction) -> Fraction:
    if cf.infinity or not cf.terms:
        return Fraction(1, 0)
    p, q = cf.terms[-1], 1
    for a in reversed(cf.terms[:-1]):
        # a + 1/(p/q), read projectively so 1/0 passes through
        p, q = a * p + q, p
    return Fraction(p, q)


def as_cf(value: Union[Fraction, ContinuedFraction, Sequence[int]]) -> ContinuedFraction:
    if isinstance(value, ContinuedFraction):
        return value
    if isinstance(value, Fraction):
        return cf_of(value)
    return ContinuedFraction(tuple(value))


# ============================================================================
# Twelve tangle classes
# ============================================================================

class TangleClass12(str, Enum):
    INF = "inf"
    ZERO = "0"
    ONE = "1"
    MINUS_ONE = "-1"
    TWO = "2"
    MINUS_TWO = "-2"
    TWO_FIFTHS = "2/5"
    FIVE_HALVES = "5/2"
    THREE_HALVES = "3/2"
    MINUS_THREE_HALVES = "-3/2"
    HALF = "1/2"
    MINUS_HALF = "-1/2"

    @property
    def representative(self) -> Fraction:
        if self is TangleClass12.INF:
            return Fraction(1, 0)
        p, _, q = self.value.partition("/")
        return Fraction(int(p), int(q or 1))

    @property
    def mirror(self) -> "TangleClass12":
        return classify12(-self.representative)


# (q class, p as a multiple of q) -> class; q class 0 and p class 0 are handled apart
_RULES: Dict[Tuple[int, int], TangleClass12] = {
    (1, -1): TangleClass12.MINUS_ONE,
    (2, -1): TangleClass12.THREE_HALVES,
    (1, 1): TangleClass12.ONE,
    (2, 1): TangleClass12.MINUS_THREE_HALVES,
    (1, -2): TangleClass12.MINUS_TWO,
    (2, -2): TangleClass12.HALF,
    (1, 2): TangleClass12.TWO,
    (2, 2): TangleClass12.MINUS_HALF,
}


def _signed_residue(n: int) -> int:
    r = n % 5
    return r - 5 if r > 2 else r


def _explicit_rule(p: int, q: int) -> TangleClass12:
    q5, p5 = q % 5, p % 5
    if q5 == 0:
        return TangleClass12.INF if p5 in (1, 4) else TangleClass12.TWO_FIFTHS
    q_kind = abs(_signed_residue(q))
    if p5 == 0:
        return TangleClass12.ZERO if q_kind == 1 else TangleClass12.FIVE_HALVES
    ratio = _signed_residue(p5 * pow(q5, -1, 5))
    return _RULES[(q_kind, ratio)]


def _succinct_match(p: int, q: int, cls: TangleClass12) -> bool:
    rep = cls.representative
    return ((q - rep.q) % 5 == 0 and (p - rep.p) % 5 == 0) or \
        ((q + rep.q) % 5 == 0 and (p + rep.p) % 5 == 0)


def classify12(f: Fraction) -> TangleClass12:
    """5-move class of [p/q] among the twelve tangles"""
    if f.p % 5 == 0 and f.q % 5 == 0:
        raise ConventionError(f"{f} is not reduced")
    cls = _explicit_rule(f.p, f.q)
    matches = [c for c in TangleClass12 if _succinct_match(f.p, f.q, c)]
    if matches != [cls]:
        raise ConventionError(f"rule table and residue criterion disagree on {f}: {cls.value} vs {matches}")
    return cls


# ============================================================================
# Four rational-link classes
# ============================================================================

class RationalLinkClass(str, Enum):
    T1 = "T1"
    T2 = "T2"
    H = "H"
    FIGURE_EIGHT = "4_1"

    @property
    def f_value(self) -> Cyclo40:
        """F(1, 2cos(2pi/5))"""
        return {
            RationalLinkClass.T1: Cyclo40.one(),
            RationalLinkClass.T2: SQRT5,
            RationalLinkClass.H: -Cyclo40.one(),
            RationalLinkClass.FIGURE_EIGHT: -SQRT5,
        }[self]

    @property
    def v_squared(self) -> Cyclo40:
        """|V(exp(pi i/5))|^2 of the class: 1, |1+t|^2, |1+t^2|^2, 0"""
        one = Cyclo40.one()
        return {
            RationalLinkClass.T1: one,
            RationalLinkClass.T2: (one + T_SPECIAL).squared_modulus(),
            RationalLinkClass.H: (one + T_SPECIAL ** 2).squared_modulus(),
            RationalLinkClass.FIGURE_EIGHT: Cyclo40.zero(),
        }[self]

    @property
    def v_abs(self) -> float:
        return math.sqrt(max(self.v_squared.to_complex().real, 0.0))

    @property
    def components(self) -> int:
        return 2 if self in (RationalLinkClass.T2, RationalLinkClass.H) else 1


def classify_rational_link(f: Fraction) -> RationalLinkClass:
    """5-move class of the numerator closure [p/q]^N"""
    p5, q5 = f.p % 5, f.q % 5
    if p5 == 0:
        return RationalLinkClass.T2 if q5 in (1, 4) else RationalLinkClass.FIGURE_EIGHT
    return RationalLinkClass.T1 if p5 in (1, 4) else RationalLinkClass.H


# ============================================================================
# Diagrams and closures
# ============================================================================

def tangle_diagram(value: Union[Fraction, ContinuedFraction, Sequence[int]]) -> TangleDiagram:
    cf = as_cf(value)
    return TangleDiagram.from_cf(list(cf.terms), cf.infinity)


def closure_n(value) -> LinkDiagram:
    return close_tangle(tangle_diagram(value), "N")


def closure_d(value) -> LinkDiagram:
    return close_tangle(tangle_diagram(value), "D")


# ============================================================================
# Bracket vectors
# ============================================================================

def _poly(value) -> LaurentPoly:
    return value if isinstance(value, LaurentPoly) else LaurentPoly.constant(value, "A")


@dataclass(frozen=True)
class TangleVector:
    """<T> = a1 e_h + a2 e_v in the skein module of the tangle"""

    a1: LaurentPoly
    a2: LaurentPoly

    @classmethod
    def of(cls, a1, a2) -> "TangleVector":
        return cls(_poly(a1), _poly(a2))

    def numerator(self) -> LaurentPoly:
        return self.a1 * LOOP + self.a2

    def denominator(self) -> LaurentPoly:
        return self.a1 + self.a2 * LOOP

    def star(self, other: "TangleVector") -> "TangleVector":
        a1, a2, b1, b2 = self.a1, self.a2, other.a1, other.a2
        return TangleVector(a1 * b1, a1 * b2 + a2 * b1 + a2 * b2 * LOOP)

    def inverse(self) -> "TangleVector":
        """Vector of 1/T: rotation swaps e_h and e_v, the mirror inverts A"""
        return TangleVector(self.a2.scale_exponents(-1), self.a1.scale_exponents(-1))

    def to_json(self) -> dict:
        return {"a1": str(self.a1), "a2": str(self.a2)}


def tangle_vector(value) -> TangleVector:
    """Vector of the twist diagram, solved from its two closure brackets"""
    tangle = tangle_diagram(value)
    numerator = kauffman_bracket(close_tangle(tangle, "N"))
    denominator = kauffman_bracket(close_tangle(tangle, "D"))
    a1 = (LOOP * numerator - denominator).exact_div(LOOP * LOOP - 1)
    return TangleVector(a1, numerator - a1 * LOOP)


# ============================================================================
# Move equivalences between rational tangles
# ============================================================================

@dataclass(frozen=True)
class TermShift:
    """A 5-move realised as a +-5 change of one continued-fraction term"""

    source: Tuple[int, ...]
    target: Tuple[int, ...]
    index: int

    @property
    def source_fraction(self) -> Fraction:
        return fraction_of(ContinuedFraction(self.source))

    @property
    def target_fraction(self) -> Fraction:
        return fraction_of(ContinuedFraction(self.target))


def term_shift_pairs() -> List[TermShift]:
    """3/2 ~ 2/3, 5/2 ~ -5/2, 5/3 ~ 5/2 and 3/5 ~ 2/5"""
    return [
        TermShift((1, 2), (1, -3), 1),
        TermShift((2, 2), (-3, 2), 0),
        TermShift((2, -3), (2, 2), 1),
        TermShift((0, 2, -3), (0, 2, 2), 2),
    ]


def check_term_shift(shift: TermShift) -> Dict[str, bool]:
    """Compare the two numerator closures on every 5-move invariant"""
    changed = [i for i, (a, b) in enumerate(zip(shift.source, shift.target)) if a != b]
    if changed != [shift.index] or abs(shift.source[shift.index] - shift.target[shift.index]) != 5:
        raise SpecRangeError(f"{shift.source} -> {shift.target} is not a single 5-twist change")
    before, after = closure_n(shift.source), closure_n(shift.target)
    return {
        "class12": classify12(shift.source_fraction) == classify12(shift.target_fraction),
        "jones_class5": jones_class5(before) == jones_class5(after),
        "f_special": f_at_special(before) == f_at_special(after),
        "col5": col_n(before, 5) == col_n(after, 5),
    }


@dataclass(frozen=True)
class ParityCheck:
    m: int
    s: int
    montesinos_f: Cyclo40
    reduced_f: Cyclo40

    @property
    def holds(self) -> bool:
        return self.montesinos_f == self.reduced_f * (-1) ** self.m


def pretzel_parity_check(m: int, s: int) -> ParityCheck:
    """F(M[m[1/2], [s]]) against (-1)^m F([s - 2m]^N); m (2,2)-moves turn each [2] into [-2]"""
    if m < 0:
        raise SpecRangeError("m must be nonnegative")
    columns = [Fraction(1, 2)] * m + [Fraction(s, 1)]
    link = close_tangle(montesinos_tangle(columns), "N")
    reduced = closure_n(Fraction(s - 2 * m, 1))
    return ParityCheck(m, s, f_at_special(link), f_at_special(reduced))
