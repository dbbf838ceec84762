"""
Diagram Module
Handles planar-diagram codes: construction, orientation, statistics, faces
and the tangle-move rewriting engine
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from errors import ConventionError, InvalidSiteError, SpecRangeError, UnknownLinkError
from notation import (Braid, ConnSum, Disjoint, Fraction, LinkSpec, Mirror, Montesinos,
                      Named, Pd, Pretzel, Rational)
from tangle_diagram import Crossing, Join, TangleDiagram, expand_fraction, star

logger = logging.getLogger(__name__)

Position = Tuple[int, int]      # (crossing index, slot)


@dataclass(frozen=True)
class DiagramStats:
    writhe: int
    linking: int
    self_writhe: int
    components: int


@dataclass(frozen=True)
class MoveSite:
    """Two edges bounding a common face; edges above the last label are crossing-free circles"""

    edge_a: int
    edge_b: int
    face: int = -1


# ============================================================================
# Assembly: union of labels, orientation tracing, renumbering
# ============================================================================

class UnionFind:
    """Union-find over raw labels"""

    def __init__(self):
        self.parent: Dict[int, int] = {}

    def find(self, x: int) -> int:
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _assemble(crossings: Sequence[Crossing], joins: Iterable[Join] = (), free: int = 0,
              hints: Iterable[Position] = ()) -> "LinkDiagram":
    """Turn raw crossings plus label identifications into a normalised diagram.

    Under-strands occupy slots 0/2 and over-strands 1/3 of every raw tuple.
    Orientation is traced per component, starting from the first unused
    position in ``hints`` (taken as an incoming slot), otherwise from the
    smallest unused position.
    """
    labels = UnionFind()
    for c in crossings:
        for v in c:
            labels.find(v)
    for a, b in joins:
        labels.union(a, b)

    raw = [tuple(labels.find(v) for v in c) for c in crossings]
    occurrences: Dict[int, List[Position]] = {}
    for i, c in enumerate(raw):
        for s, v in enumerate(c):
            occurrences.setdefault(v, []).append((i, s))
    for v, where in occurrences.items():
        if len(where) != 2:
            raise ConventionError(f"edge {v} occurs {len(where)} times")
    roots = {labels.find(v) for v in labels.parent}
    free += len(roots - set(occurrences))

    def partner(position: Position) -> Position:
        first, second = occurrences[raw[position[0]][position[1]]]
        return second if first == position else first

    entries: Set[Position] = set()
    visited: Set[Position] = set()
    order: List[Position] = []           # exit positions in traversal order
    starts = [h for h in hints] + [(i, s) for i in range(len(raw)) for s in range(4)]
    for start in starts:
        if start in visited:
            continue
        position = start
        while position not in visited:
            entries.add(position)
            exit_slot = (position[0], (position[1] + 2) % 4)
            visited.update((position, exit_slot))
            order.append(exit_slot)
            position = partner(exit_slot)

    numbering = {}
    for exit_slot in order:
        numbering[raw[exit_slot[0]][exit_slot[1]]] = len(numbering) + 1

    tuples, signs = [], []
    for i, c in enumerate(raw):
        shift = 0 if (i, 0) in entries else 2
        rotated = tuple(numbering[c[(s + shift) % 4]] for s in range(4))
        over_in = 1 if (i, (1 + shift) % 4) in entries else 3
        tuples.append(rotated)
        signs.append(1 if over_in == 3 else -1)
    diagram = LinkDiagram(tuple(tuples), tuple(signs), free)
    diagram.check_euler()
    return diagram


# ============================================================================
# Link diagram
# ============================================================================

@dataclass(frozen=True)
class LinkDiagram:
    """PD code: counterclockwise tuples starting at the incoming under-strand.

    Edges are numbered 1..2n consecutively along the traced components;
    crossing-free circles are a separate count.
    """

    crossings: Tuple[Crossing, ...]
    signs: Tuple[int, ...]
    free_circles: int = 0

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    @property
    def max_label(self) -> int:
        return self.edge_count

    @cached_property
    def occurrences(self) -> Dict[int, Tuple[Position, Position]]:
        found: Dict[int, List[Position]] = {}
        for i, c in enumerate(self.crossings):
            for s, v in enumerate(c):
                found.setdefault(v, []).append((i, s))
        return {v: tuple(where) for v, where in found.items()}

    def over_in_slot(self, i: int) -> int:
        return 3 if self.signs[i] > 0 else 1

    def is_entry(self, position: Position) -> bool:
        i, s = position
        return s == 0 or s == self.over_in_slot(i)

    def entry_positions(self) -> List[Position]:
        return [(i, s) for i in range(len(self.crossings)) for s in (0, self.over_in_slot(i))]

    def head(self, label: int) -> Position:
        return next(p for p in self.occurrences[label] if self.is_entry(p))

    def tail(self, label: int) -> Position:
        return next(p for p in self.occurrences[label] if not self.is_entry(p))

    def other(self, position: Position) -> Position:
        first, second = self.occurrences[self.crossings[position[0]][position[1]]]
        return second if first == position else first

    # ---------------------------------------------------------- components

    @cached_property
    def components(self) -> Tuple[Tuple[int, ...], ...]:
        """Edge labels of each crossed component in traversal order"""
        seen: Set[int] = set()
        result = []
        for label in sorted(self.occurrences):
            if label in seen:
                continue
            walk = []
            current = label
            while current not in seen:
                seen.add(current)
                walk.append(current)
                i, s = self.head(current)
                current = self.crossings[i][(s + 2) % 4]
            result.append(tuple(walk))
        return tuple(result)

    @cached_property
    def component_of(self) -> Dict[int, int]:
        return {label: k for k, walk in enumerate(self.components) for label in walk}

    @property
    def component_count(self) -> int:
        return len(self.components) + self.free_circles

    def stats(self) -> DiagramStats:
        writhe = sum(self.signs)
        mixed = 0
        for i, c in enumerate(self.crossings):
            under = self.component_of[c[0]]
            over = self.component_of[c[self.over_in_slot(i)]]
            if under != over:
                mixed += self.signs[i]
        if mixed % 2:
            raise ConventionError("odd inter-component crossing sum")
        return DiagramStats(writhe, mixed // 2, writhe - mixed, self.component_count)

    def reverse_components(self, indices: Iterable[int]) -> "LinkDiagram":
        """Same diagram with the listed crossed components traversed backwards"""
        flipped = set(indices)
        hints = []
        for i, c in enumerate(self.crossings):
            for s in range(4):
                entry = self.is_entry((i, s))
                if entry != (self.component_of[c[s]] in flipped):
                    hints.append((i, s))
        return _assemble(self.crossings, (), self.free_circles, hints)

    # --------------------------------------------------------------- faces

    @cached_property
    def faces(self) -> Tuple[Tuple[Position, ...], ...]:
        """Boundary darts of each face, the face kept on the left of every dart"""
        seen: Set[Position] = set()
        faces = []
        for i in range(len(self.crossings)):
            for s in range(4):
                if (i, s) in seen:
                    continue
                boundary = []
                dart = (i, s)
                while dart not in seen:
                    seen.add(dart)
                    boundary.append(dart)
                    j, t = self.other(dart)
                    dart = (j, (t - 1) % 4)
                faces.append(tuple(boundary))
        return tuple(faces)

    @cached_property
    def face_of_dart(self) -> Dict[Position, int]:
        return {dart: f for f, boundary in enumerate(self.faces) for dart in boundary}

    def face_edges(self, face: int) -> Set[int]:
        return {self.crossings[i][s] for i, s in self.faces[face]}

    @cached_property
    def pieces(self) -> Dict[int, int]:
        """Crossing index -> connected piece of the projection"""
        labels = UnionFind()
        for i in range(len(self.crossings)):
            labels.find(i)
        for first, second in self.occurrences.values():
            labels.union(first[0], second[0])
        roots = sorted({labels.find(i) for i in range(len(self.crossings))})
        return {i: roots.index(labels.find(i)) for i in range(len(self.crossings))}

    @property
    def piece_count(self) -> int:
        return len(set(self.pieces.values()))

    def check_euler(self):
        """Each connected projection piece must satisfy V - E + F = 2"""
        if not self.crossings:
            return
        expected = len(self.crossings) + 2 * self.piece_count
        if len(self.faces) != expected:
            raise ConventionError(
                f"face count {len(self.faces)} != {expected}: PD code is not planar"
            )

    # ---------------------------------------------------------- move sites

    def _is_virtual(self, edge: int) -> bool:
        return self.max_label < edge <= self.max_label + self.free_circles

    def _edge_faces(self, edge: int) -> List[int]:
        return sorted(self.face_of_dart[p] for p in self.occurrences[edge])

    def move_sites(self) -> List[MoveSite]:
        """Every pair of edges that can bound a [0]-tangle"""
        sites: Dict[Tuple[int, int, int], MoveSite] = {}
        for f in range(len(self.faces)):
            edges = sorted(self.face_edges(f))
            for x, a in enumerate(edges):
                for b in edges[x + 1:]:
                    sites.setdefault((a, b, f), MoveSite(a, b, f))
        real = sorted(self.occurrences)
        for x, a in enumerate(real):
            for b in real[x + 1:]:
                if self.pieces[self.occurrences[a][0][0]] != self.pieces[self.occurrences[b][0][0]]:
                    face = self._edge_faces(a)[0]
                    sites.setdefault((a, b, face), MoveSite(a, b, face))
        virtual = list(range(self.max_label + 1, self.max_label + self.free_circles + 1))
        for x, v in enumerate(virtual):
            for a in real:
                face = self._edge_faces(a)[0]
                sites.setdefault((a, v, face), MoveSite(a, v, face))
            for w in virtual[x + 1:]:
                sites.setdefault((v, w, -1), MoveSite(v, w, -1))
        return [sites[key] for key in sorted(sites)]

    def find_site(self, edge_a: int, edge_b: int, face: Optional[int] = None) -> MoveSite:
        """Validate an edge pair and attach a face on which both lie"""
        for edge in (edge_a, edge_b):
            if edge not in self.occurrences and not self._is_virtual(edge):
                raise InvalidSiteError(f"edge {edge} is not in the diagram")
        if edge_a == edge_b:
            raise InvalidSiteError("a move site needs two different edges")
        real = [e for e in (edge_a, edge_b) if e in self.occurrences]
        if not real:
            return MoveSite(edge_a, edge_b, -1)
        if len(real) == 2:
            piece_a = self.pieces[self.occurrences[edge_a][0][0]]
            piece_b = self.pieces[self.occurrences[edge_b][0][0]]
            if piece_a == piece_b:
                common = sorted(set(self._edge_faces(edge_a)) & set(self._edge_faces(edge_b)))
                if face is None and common:
                    face = common[0]
                if face not in common:
                    raise InvalidSiteError(
                        f"edges {edge_a} and {edge_b} do not bound a common face"
                    )
                return MoveSite(edge_a, edge_b, face)
        faces = self._edge_faces(real[0])
        if face is None:
            face = faces[0]
        if face not in faces:
            raise InvalidSiteError(f"edge {real[0]} does not bound face {face}")
        return MoveSite(edge_a, edge_b, face)

    # --------------------------------------------------------------- output

    def to_json(self) -> dict:
        return {"crossings": [list(c) for c in self.crossings], "free_circles": self.free_circles}

    def __str__(self) -> str:
        return f"LinkDiagram({len(self.crossings)} crossings, {self.free_circles} free circles)"


# ============================================================================
# Local rewriting
# ============================================================================

def switch_crossing(d: LinkDiagram, index: int) -> LinkDiagram:
    """Exchange over and under at one crossing; labels are kept"""
    a, b, c, e = d.crossings[index]
    switched = (b, c, e, a) if d.signs[index] < 0 else (e, a, b, c)
    crossings = d.crossings[:index] + (switched,) + d.crossings[index + 1:]
    signs = d.signs[:index] + (-d.signs[index],) + d.signs[index + 1:]
    return LinkDiagram(crossings, signs, d.free_circles)


def mirror(d: LinkDiagram) -> LinkDiagram:
    result = d
    for i in range(len(d.crossings)):
        result = switch_crossing(result, i)
    return result


def remove_crossings(d: LinkDiagram, removals: Mapping[int, Sequence[Join]]) -> LinkDiagram:
    """Delete crossings, joining the listed slot labels of each removed one"""
    kept = [i for i in range(len(d.crossings)) if i not in removals]
    index = {old: new for new, old in enumerate(kept)}
    joins = [pair for pairs in removals.values() for pair in pairs]
    hints = [(index[i], s) for i, s in d.entry_positions() if i in index]
    return _assemble([d.crossings[i] for i in kept], joins, d.free_circles, hints)


def smoothing(d: LinkDiagram, index: int, kind: str) -> LinkDiagram:
    """A-smoothing joins slots (0,1),(2,3); B-smoothing joins (0,3),(1,2)"""
    t = d.crossings[index]
    pairs = ((t[0], t[1]), (t[2], t[3])) if kind == "A" else ((t[0], t[3]), (t[1], t[2]))
    return remove_crossings(d, {index: pairs})


def _straight(t: Crossing) -> Tuple[Join, Join]:
    return (t[0], t[2]), (t[1], t[3])


def find_kink(d: LinkDiagram) -> Optional[int]:
    for i, t in enumerate(d.crossings):
        if any(t[s] == t[(s + 1) % 4] for s in range(4)):
            return i
    return None


def find_bigon(d: LinkDiagram) -> Optional[Tuple[int, int]]:
    """Crossing pair of a bigon whose strand is over (or under) at both corners"""
    for boundary in d.faces:
        if len(boundary) != 2:
            continue
        (c1, s1), _ = boundary
        c2, arrival = d.other((c1, s1))
        if c1 != c2 and s1 % 2 == arrival % 2:
            return c1, c2
    return None


def reidemeister_simplify(d: LinkDiagram) -> Tuple[LinkDiagram, int]:
    """Greedy R1 kink and R2 bigon removal; returns the diagram and the removed framing"""
    framing = 0
    while True:
        i = find_kink(d)
        if i is not None:
            framing += d.signs[i]
            d = remove_crossings(d, {i: _straight(d.crossings[i])})
            continue
        pair = find_bigon(d)
        if pair is None:
            return d, framing
        d = remove_crossings(d, {c: _straight(d.crossings[c]) for c in pair})


def splice(d: LinkDiagram, site: MoveSite, tangle: TangleDiagram) -> LinkDiagram:
    """Replace the [0]-tangle at ``site`` by ``tangle``.

    With the face on the left of both darts, edge a runs SW -> SE along the
    bottom of the tangle and edge b runs NE -> NW along its top.
    """
    site = d.find_site(site.edge_a, site.edge_b, None if site.face < 0 else site.face)
    crossings = [list(c) for c in d.crossings]
    fresh = d.max_label + d.free_circles + 1
    tangle = tangle.relabel(fresh + 4)
    ends = tangle.ends
    joins: List[Join] = list(tangle.joins)
    free = d.free_circles + tangle.free_circles

    bottom = (ends["SW"], ends["SE"])
    top = (ends["NE"], ends["NW"])
    for edge, (start_end, finish_end), offset in ((site.edge_a, bottom, 0), (site.edge_b, top, 2)):
        if d._is_virtual(edge):
            joins.append((start_end, finish_end))
            free -= 1
            continue
        darts = d.occurrences[edge]
        if site.face >= 0 and edge in d.face_edges(site.face):
            start = next(p for p in darts if d.face_of_dart[p] == site.face)
        else:
            start = darts[0]
        finish = d.other(start)
        crossings[start[0]][start[1]] = fresh + offset
        crossings[finish[0]][finish[1]] = fresh + offset + 1
        joins += [(fresh + offset, start_end), (fresh + offset + 1, finish_end)]

    raw = [tuple(c) for c in crossings] + list(tangle.crossings)
    return _assemble(raw, joins, free, d.entry_positions())


def apply_twist_move(d: LinkDiagram, site: MoveSite, k: int) -> LinkDiagram:
    """Add k right-handed half-twists, i.e. insert Conway's [-k]"""
    if k == 0:
        d.find_site(site.edge_a, site.edge_b, None if site.face < 0 else site.face)
        return d
    return splice(d, site, TangleDiagram.integer(-k))


def apply_rational_move(d: LinkDiagram, site: MoveSite, frac: Fraction) -> LinkDiagram:
    """Replace the [0]-tangle at the site by [p/q]"""
    terms = expand_fraction(frac.p, frac.q)
    return splice(d, site, TangleDiagram.from_cf(terms, frac.is_infinity))


# ============================================================================
# Sums
# ============================================================================

def _offset(d: LinkDiagram, by: int) -> List[Crossing]:
    return [tuple(v + by for v in c) for c in d.crossings]


def connected_sum(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    """Join the lowest edge of each diagram by exchanging their heads"""
    if not d1.crossings or not d2.crossings:
        base, other = (d2, d1) if not d1.crossings else (d1, d2)
        extra = max(other.free_circles - 1, 0)
        return LinkDiagram(base.crossings, base.signs, base.free_circles + extra)
    offset = d1.max_label
    crossings = [list(c) for c in d1.crossings] + [list(c) for c in _offset(d2, offset)]
    h1 = d1.head(1)
    h2 = d2.head(1)
    h2 = (h2[0] + len(d1.crossings), h2[1])
    crossings[h1[0]][h1[1]] = 1 + offset
    crossings[h2[0]][h2[1]] = 1
    hints = d1.entry_positions() + [(i + len(d1.crossings), s) for i, s in d2.entry_positions()]
    return _assemble([tuple(c) for c in crossings], (), d1.free_circles + d2.free_circles, hints)


def disjoint_sum(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    crossings = list(d1.crossings) + _offset(d2, d1.max_label)
    hints = d1.entry_positions() + [(i + len(d1.crossings), s) for i, s in d2.entry_positions()]
    return _assemble(crossings, (), d1.free_circles + d2.free_circles, hints)


# ============================================================================
# Builders
# ============================================================================

def braid_closure(strands: int, word: Sequence[int]) -> LinkDiagram:
    """Closure of an upward braid; sigma_i is a positive crossing"""
    current = list(range(1, strands + 1))
    initial = list(current)
    next_label = strands + 1
    crossings: List[Crossing] = []
    for letter in word:
        i = abs(letter) - 1
        left, right = current[i], current[i + 1]
        new_left, new_right = next_label, next_label + 1
        next_label += 2
        if letter > 0:
            crossings.append((right, new_right, new_left, left))
        else:
            crossings.append((left, right, new_right, new_left))
        current[i], current[i + 1] = new_left, new_right
    joins = list(zip(current, initial))
    return _assemble(crossings, joins, 0, [(i, 0) for i in range(len(crossings))])


def pd_diagram(rows: Sequence[Crossing]) -> LinkDiagram:
    counts: Dict[int, int] = {}
    for row in rows:
        for v in row:
            counts[v] = counts.get(v, 0) + 1
    bad = sorted(v for v, n in counts.items() if n != 2)
    if bad:
        raise SpecRangeError(f"pd edges must occur exactly twice: {bad}")
    try:
        return _assemble(list(rows), (), 0, [(i, 0) for i in range(len(rows))])
    except ConventionError as exc:
        raise SpecRangeError(str(exc)) from exc


def close_tangle(tangle: TangleDiagram, kind: str = "N") -> LinkDiagram:
    """Numerator (N) or denominator (D) closure"""
    joins = tangle.numerator_joins() if kind == "N" else tangle.denominator_joins()
    return _assemble(tangle.crossings, joins, tangle.free_circles)


def rational_tangle(frac: Fraction) -> TangleDiagram:
    return TangleDiagram.from_cf(expand_fraction(frac.p, frac.q), frac.is_infinity)


def montesinos_tangle(columns: Sequence[Fraction]) -> TangleDiagram:
    return star(rational_tangle(f) for f in columns)


Resolver = Callable[[str], LinkSpec]


def build_diagram(spec: LinkSpec, resolve: Optional[Resolver] = None) -> LinkDiagram:
    """Construct the diagram a spec describes; named keys go through ``resolve``"""
    if isinstance(spec, Braid):
        return braid_closure(spec.strands, spec.word)
    if isinstance(spec, Pd):
        return pd_diagram(spec.crossings)
    if isinstance(spec, Rational):
        return close_tangle(rational_tangle(spec.fraction))
    if isinstance(spec, Pretzel):
        return close_tangle(montesinos_tangle([Fraction(1, n) for n in spec.columns]))
    if isinstance(spec, Montesinos):
        return close_tangle(montesinos_tangle(spec.columns))
    if isinstance(spec, Mirror):
        return mirror(build_diagram(spec.spec, resolve))
    if isinstance(spec, ConnSum):
        result = build_diagram(spec.parts[0], resolve)
        for part in spec.parts[1:]:
            result = connected_sum(result, build_diagram(part, resolve))
        return result
    if isinstance(spec, Disjoint):
        result = build_diagram(spec.parts[0], resolve)
        for part in spec.parts[1:]:
            result = disjoint_sum(result, build_diagram(part, resolve))
        return result
    if isinstance(spec, Named):
        if resolve is None:
            raise UnknownLinkError(f"no catalog to resolve named:{spec.key}")
        logger.debug("resolving named:%s", spec.key)
        return build_diagram(resolve(spec.key), resolve)
    raise TypeError(f"not a link spec: {spec!r}")
