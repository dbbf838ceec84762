"""
Notation Module
Parses and serializes link and tangle specifications
"""

from __future__ import annotations

import math
import string
from dataclasses import dataclass
from typing import Callable, List, Tuple, Union

from errors import SpecRangeError, SpecSyntaxError


@dataclass(frozen=True)
class Fraction:
    """Rational tangle slope p/q, normalised so gcd = 1 and q >= 0; 1/0 is the infinity tangle"""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p == 0 and q == 0:
            raise SpecRangeError("0/0 is not a tangle")
        g = math.gcd(abs(p), abs(q))
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def is_infinity(self) -> bool:
        return self.q == 0

    def __neg__(self) -> "Fraction":
        return Fraction(-self.p, self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


# ============================================================================
# Link specification variants
# ============================================================================

@dataclass(frozen=True)
class Braid:
    strands: int
    word: Tuple[int, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise SpecRangeError(f"braid needs at least one strand, got {self.strands}")
        for letter in self.word:
            if letter == 0 or abs(letter) > self.strands - 1:
                raise SpecRangeError(
                    f"braid letter {letter} out of range for {self.strands} strands"
                )


@dataclass(frozen=True)
class Pd:
    crossings: Tuple[Tuple[int, int, int, int], ...]

    def __post_init__(self):
        if not self.crossings:
            raise SpecRangeError("pd code needs at least one crossing")
        for crossing in self.crossings:
            if len(crossing) != 4:
                raise SpecRangeError(f"pd crossing {list(crossing)} does not have four edges")


@dataclass(frozen=True)
class Rational:
    fraction: Fraction


@dataclass(frozen=True)
class Pretzel:
    columns: Tuple[int, ...]

    def __post_init__(self):
        if not self.columns:
            raise SpecRangeError("pretzel needs at least one column")


@dataclass(frozen=True)
class Montesinos:
    columns: Tuple[Fraction, ...]

    def __post_init__(self):
        if not self.columns:
            raise SpecRangeError("montesinos needs at least one column")


@dataclass(frozen=True)
class Mirror:
    spec: "LinkSpec"


@dataclass(frozen=True)
class ConnSum:
    parts: Tuple["LinkSpec", ...]

    def __post_init__(self):
        if not self.parts:
            raise SpecRangeError("sum() needs at least one part")


@dataclass(frozen=True)
class Disjoint:
    parts: Tuple["LinkSpec", ...]

    def __post_init__(self):
        if not self.parts:
            raise SpecRangeError("disjoint() needs at least one part")


@dataclass(frozen=True)
class Named:
    key: str


LinkSpec = Union[Braid, Pd, Rational, Pretzel, Montesinos, Mirror, ConnSum, Disjoint, Named]

_KEY_CHARS = set(string.ascii_letters + string.digits + "_^.-+")


# ============================================================================
# Parser
# ============================================================================

class _Parser:
    """Recursive descent over the spec grammar; offsets refer to the raw text"""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str):
        raise SpecSyntaxError(message, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str):
        self.skip()
        if not self.text.startswith(token, self.pos):
            self.fail(f"expected '{token}'")
        self.pos += len(token)

    def word(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if start == self.pos:
            self.fail("expected a spec keyword")
        return self.text[start:self.pos]

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if digits == self.pos:
            self.pos = start
            self.fail("expected an integer")
        return int(self.text[start:self.pos])

    def fraction(self) -> Fraction:
        p = self.integer()
        self.expect("/")
        q = self.integer()
        return Fraction(p, q)

    def bracketed(self, item: Callable[[], object]) -> List:
        self.expect("[")
        items: List = []
        if self.peek() == "]":
            self.pos += 1
            return items
        while True:
            items.append(item())
            if self.peek() == ",":
                self.pos += 1
                continue
            self.expect("]")
            return items

    def spec_list(self) -> List[LinkSpec]:
        self.expect("(")
        parts = [self.spec()]
        while self.peek() == ";":
            self.pos += 1
            parts.append(self.spec())
        self.expect(")")
        return parts

    def key(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _KEY_CHARS:
            self.pos += 1
        if start == self.pos:
            self.fail("expected a catalog key")
        return self.text[start:self.pos]

    def spec(self) -> LinkSpec:
        start = self.pos
        keyword = self.word()
        if keyword == "mirror":
            self.expect("(")
            inner = self.spec()
            self.expect(")")
            return Mirror(inner)
        if keyword == "sum":
            return ConnSum(tuple(self.spec_list()))
        if keyword == "disjoint":
            return Disjoint(tuple(self.spec_list()))
        self.expect(":")
        if keyword == "braid":
            strands = self.integer()
            self.expect(":")
            return Braid(strands, tuple(self.bracketed(self.integer)))
        if keyword == "pd":
            rows = self.bracketed(lambda: tuple(self.bracketed(self.integer)))
            return Pd(tuple(rows))
        if keyword == "rational":
            return Rational(self.fraction())
        if keyword == "pretzel":
            return Pretzel(tuple(self.bracketed(self.integer)))
        if keyword == "montesinos":
            return Montesinos(tuple(self.bracketed(self.fraction)))
        if keyword == "named":
            return Named(self.key())
        self.pos = start
        self.fail(f"unknown spec kind '{keyword}'")


def parse_spec(text: str) -> LinkSpec:
    """Parse a spec string such as 'braid:3:[1,-2]' or 'sum(named:4_1;rational:2/1)'"""
    if not text.isascii():
        offset = next(i for i, ch in enumerate(text) if not ch.isascii())
        raise SpecSyntaxError("non-ASCII character", offset)
    parser = _Parser(text)
    spec = parser.spec()
    parser.skip()
    if parser.pos != len(text):
        parser.fail("trailing characters")
    return spec


def _join(values) -> str:
    return ",".join(str(v) for v in values)


def serialize_spec(spec: LinkSpec) -> str:
    """Canonical text form; parse_spec(serialize_spec(s)) == s"""
    if isinstance(spec, Braid):
        return f"braid:{spec.strands}:[{_join(spec.word)}]"
    if isinstance(spec, Pd):
        return "pd:[" + ",".join(f"[{_join(row)}]" for row in spec.crossings) + "]"
    if isinstance(spec, Rational):
        return f"rational:{spec.fraction}"
    if isinstance(spec, Pretzel):
        return f"pretzel:[{_join(spec.columns)}]"
    if isinstance(spec, Montesinos):
        return f"montesinos:[{_join(spec.columns)}]"
    if isinstance(spec, Mirror):
        return f"mirror({serialize_spec(spec.spec)})"
    if isinstance(spec, ConnSum):
        return "sum(" + ";".join(serialize_spec(p) for p in spec.parts) + ")"
    if isinstance(spec, Disjoint):
        return "disjoint(" + ";".join(serialize_spec(p) for p in spec.parts) + ")"
    if isinstance(spec, Named):
        return f"named:{spec.key}"
    raise TypeError(f"not a link spec: {spec!r}")
