"""
Colorings Module
Handles Fox n-colorings: the coloring matrix and its solution count
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Tuple, Union

from sympy import GF, ZZ, isprime
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from diagram import LinkDiagram, UnionFind, close_tangle, rational_tangle
from errors import ConventionError, SpecRangeError
from notation import Fraction
from tangle_diagram import TangleDiagram, star

logger = logging.getLogger(__name__)

TangleIndex = Union[int, str]     # an integer tangle [i] or "inf"


@dataclass(frozen=True)
class ColoringSystem:
    """Fox relations 2*over - under_in - under_out, one row per crossing.

    Columns are arcs (maximal over-strands); crossing-free circles are
    extra columns with no relation.
    """

    rows: Tuple[Tuple[int, ...], ...]
    arcs: int
    free_circles: int

    @property
    def columns(self) -> int:
        return self.arcs + self.free_circles

    def matrix(self, domain=ZZ) -> DomainMatrix:
        rows = [[domain(v) for v in row] + [domain(0)] * self.free_circles for row in self.rows]
        return DomainMatrix(rows, (len(rows), self.columns), domain)


def coloring_system(d: LinkDiagram) -> ColoringSystem:
    arcs = UnionFind()
    for t in d.crossings:
        arcs.union(t[1], t[3])
    roots = sorted({arcs.find(v) for t in d.crossings for v in t})
    column = {root: k for k, root in enumerate(roots)}
    rows = []
    for t in d.crossings:
        row = [0] * len(roots)
        row[column[arcs.find(t[1])]] += 2
        row[column[arcs.find(t[0])]] -= 1
        row[column[arcs.find(t[2])]] -= 1
        rows.append(tuple(row))
    return ColoringSystem(tuple(rows), len(roots), d.free_circles)


def _count_by_snf(system: ColoringSystem, n: int) -> int:
    factors = [int(f) for f in invariant_factors(system.matrix())]
    count = n ** (system.columns - len(factors))
    for f in factors:
        count *= math.gcd(f, n)
    return count


def nullity_mod_p(d: LinkDiagram, p: int) -> int:
    """Dimension of the coloring space over GF(p)"""
    if not isprime(p):
        raise SpecRangeError(f"{p} is not prime")
    system = coloring_system(d)
    if not system.rows:
        return system.columns
    return system.columns - system.matrix().convert_to(GF(p)).rank()


def col_n(d: LinkDiagram, n: int) -> int:
    """Number of Fox n-colorings, counting the trivial ones"""
    if n < 2:
        raise SpecRangeError("col_n needs n >= 2")
    if not d.crossings:
        return n ** d.free_circles
    system = coloring_system(d)
    count = _count_by_snf(system, n)
    if isprime(n):
        by_field = n ** nullity_mod_p(d, n)
        if by_field != count:
            raise ConventionError(f"col_{n}: Smith form gives {count}, GF({n}) gives {by_field}")
    logger.debug("col_%d over %d arcs: %d", n, system.arcs, count)
    return count


# ============================================================================
# Tangle families
# ============================================================================

def _tangle(index: TangleIndex) -> TangleDiagram:
    return TangleDiagram.infinity() if index == "inf" else TangleDiagram.integer(int(index))


def sum_coloring_table(n: int) -> Dict[Tuple[TangleIndex, TangleIndex], int]:
    """col_n(([i] * [j])^N) for i, j in {inf, 0, ..., n-1}"""
    if not isprime(n) or n > 13:
        raise SpecRangeError(f"the sum table needs a prime n <= 13, got {n}")
    indices: List[TangleIndex] = ["inf"] + list(range(n))
    table = {}
    for i in indices:
        for j in indices:
            link = close_tangle(star([_tangle(i), _tangle(j)]), "N")
            table[(i, j)] = col_n(link, n)
    return table


def sum_coloring_partners(n: int) -> Dict[TangleIndex, List[TangleIndex]]:
    """For each i, the j with col_n(([i] * [j])^N) = n^2"""
    partners: Dict[TangleIndex, List[TangleIndex]] = {}
    for (i, j), count in sum_coloring_table(n).items():
        partners.setdefault(i, [])
        if count == n * n:
            partners[i].append(j)
    return partners


def two_fifths_family(tangle: Fraction, k: int) -> LinkDiagram:
    """L(T_A, k) = (T_A * k[2/5])^N"""
    if k < 1:
        raise SpecRangeError("the family needs k >= 1")
    columns = [rational_tangle(tangle)] + [rational_tangle(Fraction(2, 5)) for _ in range(k)]
    return close_tangle(star(columns), "N")
