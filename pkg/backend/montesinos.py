"""
Montesinos Module
Handles bracket vectors of Montesinos tangles, closed forms for the
[k[2/5], m[1/2]] and pretzel families, and canonical 5-move reduction
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from algebra import Cyclo40, Ideal, LaurentPoly
from bracket import KINK, LOOP, JonesClass5, to_u, kauffman_bracket
from diagram import build_diagram
from errors import ConventionError, SpecRangeError
from notation import Braid, ConnSum, Fraction, LinkSpec, Montesinos, Pretzel
from tangles import (RationalLinkClass, TangleClass12, TangleVector, classify12,
                     classify_rational_link, cf_of)

logger = logging.getLogger(__name__)

A = LaurentPoly.variable("A")
E_H = TangleVector.of(1, 0)
E_V = TangleVector.of(0, 1)
UNIT = TangleVector(LaurentPoly.monomial(-1), LaurentPoly.monomial(1))     # [1]
NEG = TangleVector(LaurentPoly.monomial(1), LaurentPoly.monomial(-1))      # [-1]


# ============================================================================
# Vector calculus
# ============================================================================

def tangle_star(u: TangleVector, v: TangleVector) -> TangleVector:
    """(a1 b1) e_h + (a1 b2 + a2 b1 + a2 b2 d) e_v"""
    return u.star(v)


def integer_vector(n: int) -> TangleVector:
    vector = E_H
    for _ in range(abs(n)):
        vector = vector.star(UNIT if n > 0 else NEG)
    return vector


def rational_vector(f: Fraction) -> TangleVector:
    """[a_k] * 1/[a_(k-1), ..., a_1], matching the twist diagram"""
    cf = cf_of(f)
    if cf.infinity:
        return E_V
    vector = integer_vector(cf.terms[-1])
    for a in reversed(cf.terms[:-1]):
        vector = integer_vector(a).star(vector.inverse())
    return vector


def montesinos_vector(columns: Sequence[Fraction]) -> TangleVector:
    vector = rational_vector(columns[0])
    for column in columns[1:]:
        vector = vector.star(rational_vector(column))
    return vector


TWO_FIFTHS = rational_vector(Fraction(2, 5))
HALF = rational_vector(Fraction(1, 2))


def equal_up_to_unit(p: LaurentPoly, q: LaurentPoly, ideal: Optional[Ideal] = None) -> bool:
    """p = +-A^i q, exactly or modulo I_A"""
    if ideal is Ideal.I_A:
        # +-A^i runs over all powers of zeta in Z[A]/I_A
        left, right = Cyclo40.from_laurent(p), Cyclo40.from_laurent(q)
        return any(left == Cyclo40.zeta(j) * right for j in range(40))
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    shift = p.min_degree() - q.min_degree()
    return p == q.shift(shift) or p == -q.shift(shift)


def jones_class_of_bracket(p: LaurentPoly) -> JonesClass5:
    """JonesClass5 of a bracket known only up to +-A^i"""
    if p.is_zero():
        return JonesClass5.from_t_polynomial(LaurentPoly({}, "t"))
    residue = p.min_degree() % 4
    if any((e - residue) % 4 for e in p.exponents()):
        raise ConventionError(f"{p} is not a bracket: exponents differ mod 4")
    # A^-4 = t
    t_poly = p.shift(-residue).halve_exponents("u").halve_exponents("t").scale_exponents(-1)
    return JonesClass5.from_t_polynomial(t_poly)


def bracket_v_squared(p: LaurentPoly) -> Cyclo40:
    """|V(exp(pi i/5))|^2 from a bracket; the writhe factor has modulus one"""
    return Cyclo40.from_laurent(p).squared_modulus()


# ============================================================================
# M[k[2/5], m[1/2]]
# ============================================================================

def bracket_two_five_family(k: int, m: int, exact: bool = False) -> LaurentPoly:
    """Closed form -A^-2 (1 + A^-8) (A^-8 - A^-4 + 2 - A^4)^(k-1) (1 - A^-4)^m.

    With ``exact`` the numerator closure of the star product is returned
    instead. The two agree up to +-A^i only modulo I_A, which is all that
    |V(exp(pi i/5))| sees.
    """
    if k < 1 or m < 0:
        raise SpecRangeError("the [k[2/5], m[1/2]] family needs k >= 1, m >= 0")
    if exact:
        return montesinos_vector([Fraction(2, 5)] * k + [Fraction(1, 2)] * m).numerator()
    factor = LaurentPoly({-8: 1, -4: -1, 0: 2, 4: -1})
    return (LaurentPoly.monomial(-2, -1) * LaurentPoly({0: 1, -8: 1}) * factor ** (k - 1)
            * LaurentPoly({0: 1, -4: -1}) ** m)


def jones_class_two_five(k: int, m: int, form: str = "i") -> JonesClass5:
    """(1+t^2)(1-t^2)^(k-1)(1-t)^m, or (1+t)^(k-1)(1-t)^(k+m-2) for form (ii)"""
    if k < 1 or m < 0:
        raise SpecRangeError("the [k[2/5], m[1/2]] family needs k >= 1, m >= 0")
    one = LaurentPoly.constant(1, "t")
    t = LaurentPoly.variable("t")
    first = (one + t * t) * (one - t * t) ** (k - 1) * (one - t) ** m
    first_class = JonesClass5.from_t_polynomial(first)
    if k + m < 2:
        if form == "ii":
            raise SpecRangeError("form (ii) needs k + m >= 2")
        return first_class
    second_class = JonesClass5.from_t_polynomial((one + t) ** (k - 1) * (one - t) ** (k + m - 2))
    if first_class != second_class:
        raise ConventionError(f"closed forms disagree for k={k}, m={m}")
    return second_class if form == "ii" else first_class


# ============================================================================
# Pretzel links M[m[1/2], [s]]
# ============================================================================

def _pretzel_a2(m: int) -> LaurentPoly:
    """e_v coefficient of the star of m copies of [1/2]"""
    numerator = LaurentPoly({4: -1, -4: -1}) ** m - LaurentPoly({0: 1, -4: -1}) ** m
    return numerator.exact_div(LOOP)


def pretzel_bracket(m: int, s: int) -> LaurentPoly:
    """(1 - A^-4)^m <[s]^N> + a2(m) (-A^3)^s"""
    if m < 1:
        raise SpecRangeError("pretzel family needs m >= 1")
    a1 = LaurentPoly({0: 1, -4: -1}) ** m
    return a1 * integer_vector(s).numerator() + _pretzel_a2(m) * KINK ** s


def pretzel_spec(m: int, s: int) -> Pretzel:
    return Pretzel(tuple([2] * m + [1 if s > 0 else -1] * abs(s)))


def pretzel_jones_tilde(m: int, s: int) -> LaurentPoly:
    """Orientation-free Jones polynomial in u, self-writhe read off the built diagram"""
    sw = build_diagram(pretzel_spec(m, s)).stats().self_writhe
    return to_u(KINK ** -sw * pretzel_bracket(m, s))


def pretzel_v_squared(m: int, s: int) -> Cyclo40:
    return bracket_v_squared(pretzel_bracket(m, s))


def pretzel_v_agrees(m: int, s: int, s2: int) -> bool:
    """|V| agrees on (m, s) and (m, s2) iff s = s2 or m + s + s2 = 0 mod 5"""
    return (s - s2) % 5 == 0 or (m + s + s2) % 5 == 0


# ============================================================================
# Canonical classes
# ============================================================================

def _reduce_s(s: int) -> int:
    r = s % 5
    return r - 5 if r > 2 else r


_SUMMAND_SPECS: Dict[RationalLinkClass, LinkSpec] = {
    RationalLinkClass.T2: Braid(2, ()),
    RationalLinkClass.H: Braid(2, (1, 1)),
    RationalLinkClass.FIGURE_EIGHT: Braid(3, (1, -2, 1, -2)),
}


@dataclass(frozen=True)
class PretzelClass:
    """M[m[1/2], [s]] with m >= 3 and s in [-2, 2]"""

    m: int
    s: int

    kind = "pretzel"

    def mirror(self) -> "PretzelClass":
        return PretzelClass(self.m, _reduce_s(-self.m - self.s))

    def representative(self) -> LinkSpec:
        return pretzel_spec(self.m, self.s)

    def to_json(self) -> dict:
        return {"kind": self.kind, "m": self.m, "s": self.s}

    def __str__(self) -> str:
        return f"M[{self.m}[1/2],[{self.s}]]"


@dataclass(frozen=True)
class TwoFiveClass:
    """M[k[2/5], m[1/2]]; ``reordered`` records that the column order was changed"""

    k: int
    m: int
    reordered: bool = field(default=False, compare=False)

    kind = "two_five"

    def representative(self) -> LinkSpec:
        return Montesinos(tuple([Fraction(2, 5)] * self.k + [Fraction(1, 2)] * self.m))

    def to_json(self) -> dict:
        return {"kind": self.kind, "k": self.k, "m": self.m, "reordered": self.reordered}

    def __str__(self) -> str:
        return f"M[{self.k}[2/5],{self.m}[1/2]]"


@dataclass(frozen=True)
class SumClass:
    """Connected sum of T2, H and 4_1 summands; empty means T1"""

    summands: Tuple[RationalLinkClass, ...] = ()

    kind = "sum"

    @classmethod
    def of(cls, classes: Sequence[RationalLinkClass]) -> "SumClass":
        kept = [c for c in classes if c is not RationalLinkClass.T1]
        return cls(tuple(sorted(kept, key=lambda c: c.value)))

    def representative(self) -> LinkSpec:
        if not self.summands:
            return Braid(1, ())
        if len(self.summands) == 1:
            return _SUMMAND_SPECS[self.summands[0]]
        return ConnSum(tuple(_SUMMAND_SPECS[c] for c in self.summands))

    def to_json(self) -> dict:
        return {"kind": self.kind, "summands": [c.value for c in self.summands]}

    def __str__(self) -> str:
        return "#".join(c.value for c in self.summands) or "T1"


CanonicalClass = Union[PretzelClass, TwoFiveClass, SumClass]

# (number of [1/2] columns, twist) contributed by each class outside the 2/5 case
_PRETZEL_PARTS: Dict[TangleClass12, Tuple[int, int]] = {
    TangleClass12.ZERO: (0, 0),
    TangleClass12.ONE: (0, 1),
    TangleClass12.MINUS_ONE: (0, -1),
    TangleClass12.TWO: (0, 2),
    TangleClass12.MINUS_TWO: (0, -2),
    TangleClass12.HALF: (1, 0),
    TangleClass12.MINUS_HALF: (1, -1),
    TangleClass12.THREE_HALVES: (1, 1),
    TangleClass12.MINUS_THREE_HALVES: (1, -2),
    TangleClass12.FIVE_HALVES: (1, 2),
}

_INTEGER_CLASSES = {c for c, (dm, _) in _PRETZEL_PARTS.items() if dm == 0}


def _columns(spec: Union[Montesinos, Pretzel, Sequence[Fraction]]) -> List[Fraction]:
    if isinstance(spec, Pretzel):
        return [Fraction(1, n) for n in spec.columns]
    if isinstance(spec, Montesinos):
        return list(spec.columns)
    return list(spec)


def _is_cyclic_shift(word: str, target: str) -> bool:
    return len(word) == len(target) and word in target + target


def _reduce_sum(columns: List[Fraction], classes: List[TangleClass12]) -> SumClass:
    drop = classes.index(TangleClass12.INF)
    rest = [f for i, f in enumerate(columns) if i != drop]
    # M[inf, T_2, ..., T_k] is the connected sum of the denominator closures
    return SumClass.of([classify_rational_link(Fraction(f.q, f.p)) for f in rest])


def _reduce_two_five(classes: List[TangleClass12]) -> CanonicalClass:
    kinds = "".join("F" if c is TangleClass12.TWO_FIFTHS else "H"
                    for c in classes if c not in _INTEGER_CLASSES)
    k = kinds.count("F")
    m = kinds.count("H")
    if (k, m) == (1, 0):
        return SumClass.of([RationalLinkClass.H])
    if (k, m) == (1, 1):
        return SumClass.of([])
    if (k, m) == (2, 0):
        return SumClass.of([RationalLinkClass.T2])
    reordered = not _is_cyclic_shift(kinds, "F" * k + "H" * m)
    return TwoFiveClass(k, m, reordered)


def _reduce_pretzel(classes: List[TangleClass12]) -> CanonicalClass:
    m = sum(_PRETZEL_PARTS[c][0] for c in classes)
    s = _reduce_s(sum(_PRETZEL_PARTS[c][1] for c in classes))
    if m == 0:
        return SumClass.of([classify_rational_link(Fraction(s, 1))])
    if m == 1:
        return SumClass.of([classify_rational_link(Fraction(2 * s + 1, 2))])
    if m == 2:
        small = {0: RationalLinkClass.T1, 1: RationalLinkClass.H, 2: RationalLinkClass.H,
                 -1: RationalLinkClass.T2, -2: RationalLinkClass.T1}
        return SumClass.of([small[s]])
    return PretzelClass(m, s)


def reduce_montesinos(spec: Union[Montesinos, Pretzel, Sequence[Fraction]]) -> CanonicalClass:
    """Canonical 5-move class of a Montesinos or pretzel link"""
    columns = _columns(spec)
    if not columns:
        raise SpecRangeError("a Montesinos link needs at least one column")
    classes = [classify12(f) for f in columns]
    logger.debug("column classes: %s", [c.value for c in classes])
    if TangleClass12.INF in classes:
        return _reduce_sum(columns, classes)
    if TangleClass12.TWO_FIFTHS in classes:
        return _reduce_two_five(classes)
    return _reduce_pretzel(classes)


def problem_flags(canonical: CanonicalClass) -> List[str]:
    """Identifications that rest on open problems rather than proved moves"""
    flags = []
    if isinstance(canonical, TwoFiveClass) and canonical.reordered \
            and canonical.k >= 2 and canonical.m >= 2:
        flags.append("column_order: column order of [2/5] and [1/2] tangles was canonicalised")
    if isinstance(canonical, SumClass) and RationalLinkClass.FIGURE_EIGHT in canonical.summands \
            and len(canonical.summands) >= 2:
        flags.append("figure_eight_sum: sums with 4_1 and further summands are not separated")
    return flags


def canonical_jones_class(canonical: CanonicalClass) -> JonesClass5:
    """JonesClass5 of a canonical class from its closed form"""
    if isinstance(canonical, TwoFiveClass):
        return jones_class_two_five(canonical.k, canonical.m)
    if isinstance(canonical, PretzelClass):
        return jones_class_of_bracket(pretzel_bracket(canonical.m, canonical.s))
    return jones_class_of_bracket(kauffman_bracket(build_diagram(canonical.representative())))


def canonical_v_squared(canonical: CanonicalClass) -> Cyclo40:
    if isinstance(canonical, TwoFiveClass):
        return bracket_v_squared(bracket_two_five_family(canonical.k, canonical.m))
    if isinstance(canonical, PretzelClass):
        return pretzel_v_squared(canonical.m, canonical.s)
    result = Cyclo40.one()
    for summand in canonical.summands:
        result = result * summand.v_squared
    return result


def v_abs_of(value: Cyclo40) -> float:
    return math.sqrt(max(value.to_complex().real, 0.0))
