"""
Algebra Module
Exact Laurent polynomials, the cyclotomic ring of 40th roots of unity and
the quotient reductions used by the 5-move invariants
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction as Rational
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from errors import ConventionError

Number = Union[int, "LaurentPoly"]


class LaurentPoly:
    """Sparse integer Laurent polynomial in one named variable.

    The variable name is a role tag: ``A`` for the bracket, ``u`` for
    t^(1/2), ``t`` for the Jones variable, ``x`` and ``a`` for the
    one-variable specialisations of the Kauffman polynomial.
    """

    __slots__ = ("var", "_terms")

    def __init__(self, terms: Optional[Mapping[int, int]] = None, var: str = "A"):
        self.var = var
        self._terms: Dict[int, int] = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1, var: str = "A") -> "LaurentPoly":
        return cls({exponent: coefficient}, var)

    @classmethod
    def constant(cls, value: int, var: str = "A") -> "LaurentPoly":
        return cls({0: value}, var)

    @classmethod
    def variable(cls, var: str) -> "LaurentPoly":
        return cls({1: 1}, var)

    # ---------------------------------------------------------------- access

    def items(self) -> List[Tuple[int, int]]:
        return sorted(self._terms.items())

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def min_degree(self) -> int:
        return min(self._terms) if self._terms else 0

    def max_degree(self) -> int:
        return max(self._terms) if self._terms else 0

    def exponents(self) -> List[int]:
        return sorted(self._terms)

    # ------------------------------------------------------------ arithmetic

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.var != self.var and other._terms and self._terms:
                raise ConventionError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.var)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(terms, self.var if self._terms else other.var)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()}, self.var)
        other = self._coerce(other)
        terms: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(terms, self.var if self._terms else other.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial() or abs(next(iter(self._terms.values()))) != 1:
                raise ConventionError("only unit monomials have Laurent inverses")
            (e, c), = self._terms.items()
            return LaurentPoly({-e * -n: c ** -n}, self.var)
        result = LaurentPoly.constant(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            if not self._terms and not other._terms:
                return True
            return self.var == other.var and self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.var, frozenset(self._terms.items())))

    # ------------------------------------------------------------ transforms

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by var^k"""
        return LaurentPoly({e + k: c for e, c in self._terms.items()}, self.var)

    def scale_exponents(self, factor: int, var: Optional[str] = None) -> "LaurentPoly":
        """Substitute var -> new_var^factor"""
        return LaurentPoly({e * factor: c for e, c in self._terms.items()}, var or self.var)

    def halve_exponents(self, var: str) -> "LaurentPoly":
        """Substitute var^2 -> new_var; every exponent must be even"""
        if any(e % 2 for e in self._terms):
            raise ConventionError(f"odd exponent while halving {self}")
        return LaurentPoly({e // 2: c for e, c in self._terms.items()}, var)

    def rename(self, var: str) -> "LaurentPoly":
        return LaurentPoly(self._terms, var)

    def map_coefficients(self, fn) -> "LaurentPoly":
        return LaurentPoly({e: fn(c) for e, c in self._terms.items()}, self.var)

    def exact_div(self, other: Number) -> "LaurentPoly":
        """Divide exactly in Z[var^(+-1)]; a remainder is a convention error"""
        other = self._coerce(other)
        if other.is_zero():
            raise ConventionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly({}, self.var)
        num_low, den_low = self.min_degree(), other.min_degree()
        rem = {e - num_low: c for e, c in self._terms.items()}
        den = {e - den_low: c for e, c in other._terms.items()}
        den_deg = max(den)
        lead = den[den_deg]
        quotient: Dict[int, int] = {}
        while rem and max(rem) >= den_deg:
            top = max(rem)
            coeff, leftover = divmod(rem[top], lead)
            if leftover:
                raise ConventionError(f"{self} is not divisible by {other}")
            shift = top - den_deg
            quotient[shift] = coeff
            for e, c in den.items():
                value = rem.get(e + shift, 0) - coeff * c
                if value:
                    rem[e + shift] = value
                else:
                    rem.pop(e + shift, None)
        if rem:
            raise ConventionError(f"{self} is not divisible by {other}")
        return LaurentPoly({e + num_low - den_low: c for e, c in quotient.items()}, self.var)

    def evaluate(self, value):
        """Substitute a ring element (int, Cyclo40, LaurentPoly, LaurentPoly2)"""
        total = value * 0
        if not self._terms:
            return total
        inverse = None
        for e, c in self.items():
            if e >= 0:
                power = value ** e
            else:
                if inverse is None:
                    inverse = value ** -1
                power = inverse ** -e
            total = total + power * c
        return total

    # ---------------------------------------------------------------- output

    def to_json(self) -> List[List[int]]:
        return [[e, c] for e, c in self.items()]

    def __str__(self) -> str:
        return _format_terms(((c, _power(self.var, e)) for e, c in self.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


class LaurentPoly2:
    """Sparse integer Laurent polynomial in two named variables (default a, x)"""

    __slots__ = ("vars", "_terms")

    def __init__(self, terms: Optional[Mapping[Tuple[int, int], int]] = None,
                 vars: Tuple[str, str] = ("a", "x")):
        self.vars = vars
        self._terms: Dict[Tuple[int, int], int] = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, i: int, j: int, coefficient: int = 1,
                 vars: Tuple[str, str] = ("a", "x")) -> "LaurentPoly2":
        return cls({(i, j): coefficient}, vars)

    @classmethod
    def constant(cls, value: int, vars: Tuple[str, str] = ("a", "x")) -> "LaurentPoly2":
        return cls({(0, 0): value}, vars)

    @classmethod
    def from_first(cls, p: LaurentPoly, vars: Tuple[str, str] = ("a", "x")) -> "LaurentPoly2":
        return cls({(e, 0): c for e, c in p.items()}, vars)

    @classmethod
    def from_second(cls, p: LaurentPoly, vars: Tuple[str, str] = ("a", "x")) -> "LaurentPoly2":
        return cls({(0, e): c for e, c in p.items()}, vars)

    def items(self) -> List[Tuple[Tuple[int, int], int]]:
        return sorted(self._terms.items())

    def coefficient(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def min_second_degree(self) -> int:
        return min(j for _, j in self._terms) if self._terms else 0

    def _coerce(self, other) -> "LaurentPoly2":
        if isinstance(other, LaurentPoly2):
            if other.vars != self.vars and other._terms and self._terms:
                raise ConventionError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, int):
            return LaurentPoly2.constant(other, self.vars)
        raise TypeError(f"cannot combine LaurentPoly2 with {type(other).__name__}")

    def __add__(self, other) -> "LaurentPoly2":
        other = self._coerce(other)
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, 0) + c
        return LaurentPoly2(terms, self.vars)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({k: -c for k, c in self._terms.items()}, self.vars)

    def __sub__(self, other) -> "LaurentPoly2":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly2":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly2":
        if isinstance(other, int):
            return LaurentPoly2({k: c * other for k, c in self._terms.items()}, self.vars)
        other = self._coerce(other)
        terms: Dict[Tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return LaurentPoly2(terms, self.vars)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly2":
        if n < 0:
            if len(self._terms) != 1 or abs(next(iter(self._terms.values()))) != 1:
                raise ConventionError("only unit monomials have Laurent inverses")
            ((i, j), c), = self._terms.items()
            return LaurentPoly2({(i * n, j * n): c ** -n}, self.vars)
        result = LaurentPoly2.constant(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == ({(0, 0): other} if other else {})
        if isinstance(other, LaurentPoly2):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def shift(self, i: int, j: int) -> "LaurentPoly2":
        """Multiply by first^i * second^j"""
        return LaurentPoly2({(a + i, b + j): c for (a, b), c in self._terms.items()}, self.vars)

    def invert_first(self) -> "LaurentPoly2":
        """Substitute first -> first^-1"""
        return LaurentPoly2({(-i, j): c for (i, j), c in self._terms.items()}, self.vars)

    def negate_variables(self) -> "LaurentPoly2":
        """Substitute (first, second) -> (-first, -second)"""
        return LaurentPoly2({(i, j): c * (-1) ** (i + j) for (i, j), c in self._terms.items()},
                            self.vars)

    def at_first_one(self) -> LaurentPoly:
        """Specialise first = 1, leaving a polynomial in the second variable"""
        terms: Dict[int, int] = {}
        for (_, j), c in self._terms.items():
            terms[j] = terms.get(j, 0) + c
        return LaurentPoly(terms, self.vars[1])

    def evaluate(self, first, second):
        """Substitute ring elements for both variables"""
        total = first * 0
        cache_a: Dict[int, object] = {}
        cache_b: Dict[int, object] = {}

        def power(value, n, cache):
            if n not in cache:
                cache[n] = value ** n
            return cache[n]

        for (i, j), c in self.items():
            total = total + power(first, i, cache_a) * power(second, j, cache_b) * c
        return total

    def to_json(self) -> List[List[int]]:
        return [[i, j, c] for (i, j), c in self.items()]

    def __str__(self) -> str:
        a, x = self.vars
        return _format_terms((c, "*".join(s for s in (_power(a, i), _power(x, j)) if s))
                             for (i, j), c in sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0])))

    def __repr__(self) -> str:
        return f"LaurentPoly2({self})"


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def _format_terms(terms: Iterable[Tuple[int, str]]) -> str:
    out = ""
    for c, mono in terms:
        sign = "-" if c < 0 else "+"
        body = str(abs(c)) if not mono else (mono if abs(c) == 1 else f"{abs(c)}*{mono}")
        out += f" {sign} {body}" if out else (f"-{body}" if c < 0 else body)
    return out or "0"


# ============================================================================
# Cyclotomic ring Z[zeta], zeta a primitive 40th root of unity
# ============================================================================

_DEGREE = 16
_ORDER = 40
_UNITS = tuple(j for j in range(1, _ORDER) if math.gcd(j, _ORDER) == 1)
_ZETA_FLOAT = cmath.exp(-1j * math.pi / 20)


def _fold(vector: List[int]) -> Tuple[int, ...]:
    """Reduce exponents >= 16 with z^16 = z^12 - z^8 + z^4 - 1"""
    c = list(vector) + [0] * max(0, _DEGREE - len(vector))
    for e in range(len(c) - 1, _DEGREE - 1, -1):
        v = c[e]
        if v:
            c[e] = 0
            c[e - 4] += v
            c[e - 8] -= v
            c[e - 12] += v
            c[e - 16] -= v
    return tuple(c[:_DEGREE])


def _from_exponents(pairs: Iterable[Tuple[int, int]]) -> Tuple[int, ...]:
    vector = [0] * 20
    for e, c in pairs:
        e %= _ORDER
        if e >= 20:
            vector[e - 20] -= c
        else:
            vector[e] += c
    return _fold(vector)


@dataclass(frozen=True, eq=False)
class Cyclo40:
    """Element of Z[zeta] in the power basis 1, zeta, ..., zeta^15.

    zeta is fixed as exp(-pi*i/20) for the float embedding, so A = zeta gives
    t = A^-4 = exp(pi*i/5).
    """

    coords: Tuple[int, ...]

    @classmethod
    def zero(cls) -> "Cyclo40":
        return cls((0,) * _DEGREE)

    @classmethod
    def from_int(cls, value: int) -> "Cyclo40":
        return cls((value,) + (0,) * (_DEGREE - 1))

    @classmethod
    def one(cls) -> "Cyclo40":
        return cls.from_int(1)

    @classmethod
    def zeta(cls, k: int = 1) -> "Cyclo40":
        return cls(_from_exponents([(k, 1)]))

    @classmethod
    def from_laurent(cls, p: LaurentPoly, power: int = 1) -> "Cyclo40":
        """Evaluate p at zeta^power"""
        return cls(_from_exponents((e * power, c) for e, c in p.items()))

    @classmethod
    def from_json(cls, coords: Iterable[int]) -> "Cyclo40":
        values = tuple(int(c) for c in coords)
        if len(values) != _DEGREE:
            raise ConventionError("a Cyclo40 value needs 16 coordinates")
        return cls(values)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other) -> "Cyclo40":
        if isinstance(other, int):
            other = Cyclo40.from_int(other)
        if not isinstance(other, Cyclo40):
            return NotImplemented
        return Cyclo40(tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> "Cyclo40":
        return Cyclo40(tuple(-a for a in self.coords))

    def __sub__(self, other) -> "Cyclo40":
        if isinstance(other, int):
            other = Cyclo40.from_int(other)
        return self + (-other)

    def __rsub__(self, other) -> "Cyclo40":
        return Cyclo40.from_int(other) - self

    def __mul__(self, other) -> "Cyclo40":
        if isinstance(other, int):
            return Cyclo40(tuple(a * other for a in self.coords))
        if not isinstance(other, Cyclo40):
            return NotImplemented
        product = [0] * (2 * _DEGREE - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        product[i + j] += a * b
        return Cyclo40(_fold(product))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Cyclo40":
        if n < 0:
            return self.inverse ** -n
        result = Cyclo40.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Cyclo40.from_int(other)
        if not isinstance(other, Cyclo40):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def galois(self, j: int) -> "Cyclo40":
        """Apply the automorphism zeta -> zeta^j"""
        if math.gcd(j, _ORDER) != 1:
            raise ConventionError(f"zeta -> zeta^{j} is not an automorphism")
        return Cyclo40(_from_exponents((i * j, c) for i, c in enumerate(self.coords)))

    def conj(self) -> "Cyclo40":
        return self.galois(_ORDER - 1)

    def squared_modulus(self) -> "Cyclo40":
        return self * self.conj()

    def is_real(self) -> bool:
        return self == self.conj()

    @cached_property
    def inverse(self) -> "Cyclo40":
        if self.is_zero():
            raise ConventionError("zero has no inverse")
        others = Cyclo40.one()
        for j in _UNITS[1:]:
            others = others * self.galois(j)
        norm = self * others
        n = norm.coords[0]
        if any(norm.coords[1:]) or any(c % n for c in others.coords):
            raise ConventionError(f"{self} is not a unit of Z[zeta]")
        return Cyclo40(tuple(c // n for c in others.coords))

    def to_complex(self) -> complex:
        return sum((c * _ZETA_FLOAT ** k for k, c in enumerate(self.coords) if c), 0j)

    def __abs__(self) -> float:
        return abs(self.to_complex())

    def real_quadratic(self) -> Optional[Tuple[Rational, Rational]]:
        """Return (r, s) with self = r + s*sqrt(5), or None outside Q(sqrt 5)"""
        c = self.coords
        if any(v for k, v in enumerate(c) if k not in (0, 8, 12)) or c[12] != -c[8]:
            return None
        half = Rational(c[8], 2)
        return Rational(c[0]) - half, half

    def to_json(self) -> List[int]:
        return list(self.coords)

    def __str__(self) -> str:
        quad = self.real_quadratic()
        if quad is not None:
            return format_quadratic(*quad)
        return _format_terms((c, _power("z", k)) for k, c in enumerate(self.coords) if c)

    def __repr__(self) -> str:
        return f"Cyclo40({self})"


def format_quadratic(r: Rational, s: Rational) -> str:
    """Format r + s*sqrt(5) compactly, e.g. '-sqrt5', '5', '1/2+3/2*sqrt5'"""
    parts = []
    if r:
        parts.append(str(r))
    if s:
        body = "sqrt5" if abs(s) == 1 else f"{abs(s)}*sqrt5"
        if parts:
            parts.append(("-" if s < 0 else "+") + body)
        else:
            parts.append(("-" if s < 0 else "") + body)
    return "".join(parts) or "0"


def parse_quadratic(text: str) -> Cyclo40:
    """Inverse of format_quadratic for the values stored in the catalog"""
    value = text.strip().replace(" ", "")
    if not value:
        raise ConventionError("empty quadratic value")
    rational, surd = value, ""
    if "sqrt5" in value:
        idx = max(value.rfind("+", 0, value.index("sqrt5")), value.rfind("-", 0, value.index("sqrt5")))
        rational, surd = (value[:idx], value[idx:]) if idx > 0 else ("", value)
    r = Rational(rational) if rational else Rational(0)
    s = Rational(0)
    if surd:
        coeff = surd.replace("sqrt5", "").rstrip("*")
        s = Rational(1) if coeff in ("", "+") else Rational(-1) if coeff == "-" else Rational(coeff)
    # r + s*sqrt5 = (r + s) + 2s*x0
    total = r + s
    if total.denominator != 1 or (2 * s).denominator != 1:
        raise ConventionError(f"{text} is not an algebraic integer of Q(sqrt 5)")
    return Cyclo40.from_int(int(total)) + X0 * int(2 * s)


ZETA = Cyclo40.zeta(1)
X0 = Cyclo40.zeta(8) + Cyclo40.zeta(-8)      # 2cos(2pi/5)
SQRT5 = X0 * 2 + 1
T_SPECIAL = Cyclo40.zeta(-4)                   # t = exp(pi i/5)
U_SPECIAL = Cyclo40.zeta(-2)                   # t^(1/2)
A0_DEFAULT_POWER = 24                           # a0 = exp(4 pi i/5)
P0_DEFAULT_POWER = 32                           # p0 = exp(2 pi i/5)


# ============================================================================
# Quotient reductions
# ============================================================================

class Ideal(str, Enum):
    I_A = "I_A"
    I_T = "I_t"


_IDEAL_VARIABLE = {Ideal.I_A: "A", Ideal.I_T: "t"}


@dataclass(frozen=True)
class QuotClass:
    """Canonical remainder of a Laurent polynomial modulo I_A or I_t"""

    representative: LaurentPoly
    ideal: Ideal

    def __mul__(self, other: "QuotClass") -> "QuotClass":
        return reduce_mod(self.representative * other.representative, self.ideal)

    def __add__(self, other: "QuotClass") -> "QuotClass":
        return reduce_mod(self.representative + other.representative, self.ideal)

    def vector(self) -> Tuple[int, ...]:
        size = 4 if self.ideal is Ideal.I_T else _DEGREE
        return tuple(self.representative.coefficient(e) for e in range(size))


def reduce_mod(p: LaurentPoly, ideal: Ideal) -> QuotClass:
    """Reduce modulo I_t = (t^4-t^3+t^2-t+1) or I_A = (A^16-A^12+A^8-A^4+1).

    Negative exponents are cleared with the unit t^10 = 1 (resp. A^40 = 1),
    which keeps the map a ring homomorphism.
    """
    expected = _IDEAL_VARIABLE[ideal]
    if not p.is_zero() and p.var != expected:
        raise ConventionError(f"{ideal.value} reduces polynomials in {expected}, got {p.var}")
    if ideal is Ideal.I_A:
        coords = Cyclo40.from_laurent(p).coords
        return QuotClass(LaurentPoly(dict(enumerate(coords)), "A"), ideal)
    acc = [0] * 5
    for e, c in p.items():
        r = e % 10
        if r >= 5:
            r, c = r - 5, -c
        acc[r] += c
    top = acc[4]
    acc[3] += top
    acc[2] -= top
    acc[1] += top
    acc[0] -= top
    return QuotClass(LaurentPoly({e: acc[e] for e in range(4)}, "t"), ideal)


def eval_cyclo(p: Union[LaurentPoly, LaurentPoly2], assignment: Mapping[str, Cyclo40]) -> Cyclo40:
    """Exact evaluation at cyclotomic values"""
    try:
        if isinstance(p, LaurentPoly2):
            return p.evaluate(assignment[p.vars[0]], assignment[p.vars[1]]) if not p.is_zero() else Cyclo40.zero()
        if p.is_zero():
            return Cyclo40.zero()
        return p.evaluate(assignment[p.var])
    except KeyError as missing:
        raise ConventionError(f"unassigned variable {missing}") from None


# ============================================================================
# Chebyshev coefficients of the k-move formula
# ============================================================================

def chebyshev_t(n: int, var: str = "x") -> LaurentPoly:
    """Shifted Chebyshev polynomial: T_-1 = 0, T_0 = 1, T_n = x*T_(n-1) - T_(n-2)"""
    x = LaurentPoly.variable(var)
    previous, current = LaurentPoly({}, var), LaurentPoly.constant(1, var)
    if n < 0:
        return previous
    for _ in range(n):
        previous, current = current, x * current - previous
    return current


def chebyshev_v1(k: int) -> LaurentPoly:
    """v1^(k)(x) = T_(k-1)(x), so v1^(k)(p + 1/p) = (p^k - p^-k)/(p - 1/p)"""
    if k < 0:
        raise ConventionError("v1 needs k >= 0")
    return chebyshev_t(k - 1)


def chebyshev_v2(k: int) -> LaurentPoly2:
    """v2^(k)(a, x) = sum_(i=1..k-1) T_(i-1)(x) a^(i-k)"""
    if k < 1:
        raise ConventionError("v2 needs k >= 1")
    total = LaurentPoly2()
    for i in range(1, k):
        total = total + LaurentPoly2.from_second(chebyshev_t(i - 1)).shift(i - k, 0)
    return total


# ============================================================================
# Reduction modulo (5, (a^2 - 1)^3)
# ============================================================================

_MOD = 5
_A_INVERSE = {1: 3, 3: -3, 5: 1}               # a^-1 = 3a - 3a^3 + a^5


def _mod_cube(coeffs: Dict[int, int]) -> Dict[int, int]:
    c = dict(coeffs)
    for e in range(max(c, default=0), 5, -1):
        v = c.pop(e, 0) % _MOD
        if v:
            # a^6 = 3a^4 - 3a^2 + 1
            c[e - 2] = c.get(e - 2, 0) + 3 * v
            c[e - 4] = c.get(e - 4, 0) - 3 * v
            c[e - 6] = c.get(e - 6, 0) + v
    return {e: v % _MOD for e, v in c.items() if v % _MOD}


def _mul_mod(p: Dict[int, int], q: Dict[int, int]) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return _mod_cube(out)


def reduce_mod_ideal_5(p: LaurentPoly) -> LaurentPoly:
    """Canonical remainder in Z_5[a]/((a^2-1)^3), coefficients in 0..4"""
    if p.is_zero():
        return LaurentPoly({}, "a")
    if p.var != "a":
        raise ConventionError(f"reduce_mod_ideal_5 expects a polynomial in a, got {p.var}")
    low = min(p.min_degree(), 0)
    shifted = {e - low: c % _MOD for e, c in p.items()}
    result = _mod_cube(shifted)
    inverse = _mod_cube(dict(_A_INVERSE))
    for _ in range(-low):
        result = _mul_mod(result, inverse)
    return LaurentPoly(result, "a")
