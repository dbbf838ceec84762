"""
Tangle Diagram Module
Handles diagrammatic 2-tangles: integer twists, sums, rotation and closures
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

Crossing = Tuple[int, int, int, int]
Join = Tuple[int, int]

CORNERS = ("NW", "NE", "SW", "SE")


@dataclass(frozen=True)
class TangleDiagram:
    """Raw 2-tangle: PD crossings, the labels at the four corners and pending joins.

    Labels are plain integers local to the tangle. Two labels listed in
    ``joins`` denote the same strand; a label shared by two corners is a
    crossing-free arc between them.
    """

    crossings: Tuple[Crossing, ...]
    ends: Dict[str, int] = field(hash=False)
    joins: Tuple[Join, ...] = ()
    free_circles: int = 0

    # ------------------------------------------------------------ builders

    @classmethod
    def zero(cls) -> "TangleDiagram":
        """[0] = e_h: arcs NW-NE and SW-SE"""
        return cls((), {"NW": 1, "NE": 1, "SW": 2, "SE": 2})

    @classmethod
    def infinity(cls) -> "TangleDiagram":
        """[1/0] = e_v: arcs NW-SW and NE-SE"""
        return cls((), {"NW": 1, "SW": 1, "NE": 2, "SE": 2})

    @classmethod
    def unit(cls, sign: int) -> "TangleDiagram":
        """[1] has its over-strand SW-NE; [-1] is its mirror"""
        nw, ne, sw, se = 1, 2, 3, 4
        if sign > 0:
            crossing = (nw, sw, se, ne)
        else:
            crossing = (sw, se, ne, nw)
        return cls((crossing,), {"NW": nw, "NE": ne, "SW": sw, "SE": se})

    @classmethod
    def integer(cls, n: int) -> "TangleDiagram":
        """[n]: |n| horizontal half-twists"""
        tangle = cls.zero()
        for _ in range(abs(n)):
            tangle = tangle.add(cls.unit(1 if n > 0 else -1))
        return tangle

    @classmethod
    def from_cf(cls, terms: Sequence[int], infinity: bool = False) -> "TangleDiagram":
        """Twist realisation of [a_k, ..., a_1] = a_k + 1/(a_(k-1) + ... + 1/a_1)"""
        if infinity or not terms:
            return cls.infinity()
        tangle = cls.integer(terms[-1])
        for a in reversed(terms[:-1]):
            tangle = cls.integer(a).add(tangle.invert())
        return tangle

    # ---------------------------------------------------------- operations

    @property
    def max_label(self) -> int:
        labels = [v for c in self.crossings for v in c] + list(self.ends.values())
        labels += [v for j in self.joins for v in j]
        return max(labels, default=0)

    def relabel(self, offset: int) -> "TangleDiagram":
        return TangleDiagram(
            tuple(tuple(v + offset for v in c) for c in self.crossings),
            {k: v + offset for k, v in self.ends.items()},
            tuple((a + offset, b + offset) for a, b in self.joins),
            self.free_circles,
        )

    def add(self, other: "TangleDiagram") -> "TangleDiagram":
        """Horizontal sum T + S (the * product of Montesinos columns)"""
        other = other.relabel(self.max_label)
        joins = self.joins + other.joins + (
            (self.ends["NE"], other.ends["NW"]),
            (self.ends["SE"], other.ends["SW"]),
        )
        ends = {"NW": self.ends["NW"], "SW": self.ends["SW"],
                "NE": other.ends["NE"], "SE": other.ends["SE"]}
        return TangleDiagram(self.crossings + other.crossings, ends, joins,
                             self.free_circles + other.free_circles)

    def rotate(self) -> "TangleDiagram":
        """Quarter turn counterclockwise: the NE corner moves to NW"""
        e = self.ends
        ends = {"NW": e["NE"], "SW": e["NW"], "SE": e["SW"], "NE": e["SE"]}
        return TangleDiagram(self.crossings, ends, self.joins, self.free_circles)

    def mirror(self) -> "TangleDiagram":
        """Switch every crossing; [n] becomes [-n]"""
        return TangleDiagram(
            tuple((c[1], c[2], c[3], c[0]) for c in self.crossings),
            dict(self.ends), self.joins, self.free_circles,
        )

    def invert(self) -> "TangleDiagram":
        """1/T: rotation followed by mirror"""
        return self.rotate().mirror()

    # ------------------------------------------------------------ closures

    def numerator_joins(self) -> Tuple[Join, ...]:
        e = self.ends
        return self.joins + ((e["NW"], e["NE"]), (e["SW"], e["SE"]))

    def denominator_joins(self) -> Tuple[Join, ...]:
        e = self.ends
        return self.joins + ((e["NW"], e["SW"]), (e["NE"], e["SE"]))


def expand_fraction(p: int, q: int) -> List[int]:
    """Continued fraction [a_k, ..., a_1] of p/q with all terms of one sign; [] for 1/0"""
    if q == 0:
        return []
    if p < 0:
        return [-a for a in expand_fraction(-p, q)]
    terms = []
    while q:
        a = p // q
        terms.append(a)
        p, q = q, p - a * q
    return terms


def star(tangles: Iterable[TangleDiagram]) -> TangleDiagram:
    """Montesinos product T_1 * ... * T_k of the columns, left to right"""
    result = None
    for tangle in tangles:
        result = tangle if result is None else result.add(tangle)
    if result is None:
        raise ValueError("star() needs at least one tangle")
    return result


def labels_of(crossings: Iterable[Crossing]) -> List[int]:
    return sorted({v for c in crossings for v in c})
