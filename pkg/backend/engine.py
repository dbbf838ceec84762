"""
Invariant Engine Module
Orchestrates parsing, diagram building and the invariant suite for the
CLI and the API
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple, Union

from algebra import T_SPECIAL, Cyclo40, LaurentPoly2
from bracket import JonesClass5, jones_class5, v_squared
from catalog import Box, CatalogRow, load_catalog, resolve, table41, table71
from colorings import col_n
from config import Config
from diagram import LinkDiagram, MoveSite, apply_rational_move, apply_twist_move, build_diagram
from errors import ConventionError, CrossingLimitError, SpecRangeError
from kauffman import FSetInvariant, f_at_special, kauffman_f, set_f_at
from montesinos import (CanonicalClass, canonical_jones_class, canonical_v_squared,
                        problem_flags, reduce_montesinos, v_abs_of)
from notation import Fraction, LinkSpec, Montesinos, Pretzel, parse_spec, serialize_spec
from tangles import (ContinuedFraction, RationalLinkClass, TangleClass12, cf_of, classify12,
                     classify_rational_link)

logger = logging.getLogger(__name__)

V_TOLERANCE = 1e-4

SpecLike = Union[str, LinkSpec]


def _fmt(value: float) -> float:
    return round(value, Config.FLOAT_DIGITS)


# ============================================================================
# Result records
# ============================================================================

@dataclass
class InvariantReport:
    """All 5-move and (2,2)-move invariants of one link diagram"""

    spec: str
    crossings: int
    components: int
    col5: int
    col3: int
    f_special: Cyclo40
    v_squared: Cyclo40
    class5: JonesClass5
    kauffman: Optional[LaurentPoly2] = None
    f_set: Optional[FSetInvariant] = None

    @property
    def f_float(self) -> float:
        return self.f_special.to_complex().real

    @property
    def v_abs(self) -> float:
        return v_abs_of(self.v_squared)

    def to_json(self) -> dict:
        data = {
            "spec": self.spec,
            "crossings": self.crossings,
            "components": self.components,
            "col5": self.col5,
            "col3": self.col3,
            "F": {"exact": str(self.f_special), "float": _fmt(self.f_float)},
            "v_abs": {"float": _fmt(self.v_abs), "squared_exact": self.v_squared.to_json()},
            "jones_class5": self.class5.to_json(),
            "jones_class5_text": str(self.class5),
        }
        if self.kauffman is not None:
            data["kauffman_F"] = str(self.kauffman)
        if self.f_set is not None:
            data["set_F"] = self.f_set.to_json()
        return data


@dataclass
class Verdict:
    """Invariants only ever separate links; agreement decides nothing"""

    spec_a: str
    spec_b: str
    by: List[str]

    @property
    def distinguished(self) -> bool:
        return bool(self.by)

    @property
    def label(self) -> str:
        return f"distinguished(by: {', '.join(self.by)})" if self.by else "not-distinguished"

    def to_json(self) -> dict:
        return {"spec_a": self.spec_a, "spec_b": self.spec_b,
                "verdict": "distinguished" if self.by else "not-distinguished", "by": self.by}


@dataclass
class CheckRow:
    """One table entry checked column by column"""

    key: str
    checks: Dict[str, bool]
    computed: Dict[str, object] = field(default_factory=dict)
    note: str = ""

    @property
    def status(self) -> str:
        if not self.checks:
            return "SKIP"
        return "PASS" if all(self.checks.values()) else "FAIL"

    def to_json(self) -> dict:
        return {"key": self.key, "status": self.status,
                "checks": {k: "PASS" if v else "FAIL" for k, v in self.checks.items()},
                "computed": self.computed, "note": self.note}


@dataclass(frozen=True)
class DensityPoint:
    k1: int
    k2: int
    squared: Cyclo40

    @property
    def value(self) -> float:
        return math.sqrt(max(self.squared.to_complex().real, 0.0))

    def to_json(self) -> dict:
        return {"k1": self.k1, "k2": self.k2, "v_abs": _fmt(self.value)}


@dataclass
class RationalReduction:
    fraction: Fraction
    cf: ContinuedFraction
    class12: TangleClass12
    link_class: RationalLinkClass

    def to_json(self) -> dict:
        return {
            "fraction": str(self.fraction),
            "continued_fraction": str(self.cf),
            "class12": self.class12.value,
            "link_class": self.link_class.value,
            "F": str(self.link_class.f_value),
            "v_abs": _fmt(self.link_class.v_abs),
        }


@dataclass
class MontesinosReduction:
    spec: str
    canonical: CanonicalClass
    class5: JonesClass5
    v_squared: Cyclo40
    flags: List[str]
    report: Optional[InvariantReport] = None

    @property
    def consistent(self) -> Optional[bool]:
        """Closed-form class against the directly computed one"""
        if self.report is None:
            return None
        return self.report.class5 == self.class5

    def to_json(self) -> dict:
        return {
            "spec": self.spec,
            "canonical": self.canonical.to_json(),
            "canonical_text": str(self.canonical),
            "representative": serialize_spec(self.canonical.representative()),
            "jones_class5": self.class5.to_json(),
            "v_abs": _fmt(v_abs_of(self.v_squared)),
            "flags": self.flags,
            "consistent": self.consistent,
            "report": self.report.to_json() if self.report else None,
        }


@dataclass
class MoveResult:
    site: MoveSite
    move: str
    before: InvariantReport
    after: InvariantReport

    def to_json(self) -> dict:
        return {
            "site": {"edge_a": self.site.edge_a, "edge_b": self.site.edge_b, "face": self.site.face},
            "move": self.move,
            "before": self.before.to_json(),
            "after": self.after.to_json(),
        }


# ============================================================================
# Engine
# ============================================================================

class InvariantEngine:
    """Entry point shared by the CLI and the API"""

    def __init__(self, limit: Optional[int] = None, method: Optional[str] = None):
        self.bracket_limit = limit if limit is not None else Config.BRACKET_CROSSING_LIMIT
        self.kauffman_limit = limit if limit is not None else Config.KAUFFMAN_CROSSING_LIMIT
        self.method = method or Config.BRACKET_METHOD
        logger.debug("engine limits: bracket %d, kauffman %d, method %s",
                     self.bracket_limit, self.kauffman_limit, self.method)

    # ------------------------------------------------------------- building

    @staticmethod
    def parse(spec: SpecLike) -> LinkSpec:
        return parse_spec(spec) if isinstance(spec, str) else spec

    def build(self, spec: SpecLike) -> LinkDiagram:
        return build_diagram(self.parse(spec), resolve)

    # ------------------------------------------------------------- reports

    def report_diagram(self, d: LinkDiagram, spec: str = "", kauffman: bool = False,
                       point: Optional[Tuple[int, int]] = None) -> InvariantReport:
        options = {"method": self.method, "limit": self.bracket_limit}
        f_special = f_at_special(d, self.kauffman_limit)
        col5 = col_n(d, 5)
        squared = f_special * f_special * 5
        if squared != Cyclo40.from_int(col5):
            raise ConventionError(f"5F^2 = {squared} but col_5 = {col5} for {spec or d}")
        report = InvariantReport(
            spec=spec,
            crossings=d.crossing_count,
            components=d.component_count,
            col5=col5,
            col3=col_n(d, 3),
            f_special=f_special,
            v_squared=v_squared(d, **options),
            class5=jones_class5(d, **options),
        )
        if kauffman:
            report.kauffman = kauffman_f(d, self.kauffman_limit)
        if point is not None:
            report.f_set = set_f_at(d, point[0], point[1], self.kauffman_limit)
        return report

    def report(self, spec: SpecLike, kauffman: bool = False,
               point: Optional[Tuple[int, int]] = None) -> InvariantReport:
        parsed = self.parse(spec)
        text = serialize_spec(parsed)
        logger.info("📊 computing invariants of %s", text)
        return self.report_diagram(self.build(parsed), text, kauffman, point)

    # ------------------------------------------------------------- compare

    @classmethod
    def differences(cls, a: InvariantReport, b: InvariantReport) -> List[str]:
        by = []
        if a.col5 != b.col5:
            by.append("col5")
        if a.f_special != b.f_special:
            by.append("F")
        if a.class5 != b.class5:
            by.append("JonesClass5")
        if a.f_set is not None and b.f_set is not None and a.f_set.members != b.f_set.members:
            by.append("Set(F)")
        return by

    def compare(self, spec_a: SpecLike, spec_b: SpecLike,
                point: Optional[Tuple[int, int]] = None) -> Verdict:
        a = self.report(spec_a, point=point)
        b = self.report(spec_b, point=point)
        return Verdict(a.spec, b.spec, self.differences(a, b))

    # ------------------------------------------------------------- tables

    def check_row(self, row: CatalogRow) -> CheckRow:
        d = self.build(row.braid)
        report = self.report_diagram(d, serialize_spec(row.braid))
        checks = {
            "F": report.f_special == row.expected_f,
            "V": abs(report.v_abs - float(row.expected_v)) <= V_TOLERANCE,
            "V(t,5)": report.class5.contains(row.member),
        }
        computed = {"F": str(report.f_special), "V": _fmt(report.v_abs), "V(t,5)": str(report.class5)}
        return CheckRow(str(row.class_id), checks, computed, row.link_name)

    def check_alternates(self, row: CatalogRow) -> List[CheckRow]:
        """Alternate braids of a class against the shortest one.

        Long alternates are beyond the Kauffman limit, so F is compared
        through col_5 = 5F^2 and the sign is left to the main row.
        """
        base = self.report_diagram(self.build(row.braid), serialize_spec(row.braid))
        results = []
        for alternate in row.alternates:
            d = self.build(alternate)
            checks = {
                "col5": col_n(d, 5) == base.col5,
                "V(t,5)": jones_class5(d, method=self.method, limit=max(self.bracket_limit,
                                                                         d.crossing_count)) == base.class5,
            }
            results.append(CheckRow(serialize_spec(alternate), checks, {}, f"class {row.class_id}"))
        return results

    def table41(self, only: Optional[int] = None) -> List[CheckRow]:
        rows = [r for r in table41() if only is None or r.class_id == only]
        if only is not None and not rows:
            raise SpecRangeError(f"no row {only} in the braid table")
        results = []
        for r in rows:
            results.append(self.check_row(r))
            logger.info("row %d: %s", r.class_id, results[-1].status)
        return results

    def check_box(self, box: Box) -> CheckRow:
        checks: Dict[str, bool] = {}
        computed: Dict[str, object] = {}
        reports = []
        for member in box.members:
            if not member.constructible:
                continue
            report = self.report(member.spec)
            reports.append((member.name, report))
            checks[f"{member.name}:F"] = report.f_special == box.expected_f
            checks[f"{member.name}:V"] = abs(report.v_abs - float(box.expected_v)) <= V_TOLERANCE
            checks[f"{member.name}:V(t,5)"] = report.class5.contains(box.member)
            computed[member.name] = {"F": str(report.f_special), "V": _fmt(report.v_abs),
                                     "V(t,5)": str(report.class5)}
        for (name_a, a), (name_b, b) in combinations(reports, 2):
            checks[f"{name_a}~{name_b}"] = not self.differences(a, b)
        notes = [box.note] if box.note else []
        if box.open:
            notes.append("open")
        if box.unverifiable:
            notes.append("unverifiable")
        return CheckRow(box.name, checks, computed, "; ".join(notes))

    def table71(self, only: Optional[str] = None) -> List[CheckRow]:
        boxes = [b for b in table71() if only is None or b.name == only]
        if only is not None and not boxes:
            raise SpecRangeError(f"no box {only} in the small-link table")
        return [self.check_box(b) for b in boxes]

    # ------------------------------------------------------------- density

    @staticmethod
    def density(kmax: int) -> List[DensityPoint]:
        """|1+t|^k1 |1-t|^k2 at t = exp(pi i/5), checked pairwise distinct"""
        if not 1 <= kmax <= Config.DENSITY_MAX_K:
            raise SpecRangeError(f"density needs 1 <= kmax <= {Config.DENSITY_MAX_K}, got {kmax}")
        one = Cyclo40.one()
        plus = (one + T_SPECIAL).squared_modulus()
        minus = (one - T_SPECIAL).squared_modulus()
        points = [DensityPoint(k1, k2, plus ** k1 * minus ** k2)
                  for k1 in range(kmax + 1) for k2 in range(kmax + 1)]
        seen: Dict[Cyclo40, DensityPoint] = {}
        for p in points:
            if p.squared in seen:
                other = seen[p.squared]
                raise ConventionError(f"({p.k1},{p.k2}) and ({other.k1},{other.k2}) coincide")
            seen[p.squared] = p
        return sorted(points, key=lambda p: p.value)

    # ------------------------------------------------------------- reductions

    @staticmethod
    def reduce_rational(p: int, q: int) -> RationalReduction:
        f = Fraction(p, q)
        return RationalReduction(f, cf_of(f), classify12(f), classify_rational_link(f))

    def reduce_montesinos(self, spec: SpecLike, with_report: bool = True) -> MontesinosReduction:
        parsed = self.parse(spec)
        if not isinstance(parsed, (Montesinos, Pretzel)):
            raise SpecRangeError("reduce-montesinos takes a pretzel or montesinos spec")
        canonical = reduce_montesinos(parsed)
        result = MontesinosReduction(
            spec=serialize_spec(parsed),
            canonical=canonical,
            class5=canonical_jones_class(canonical),
            v_squared=canonical_v_squared(canonical),
            flags=problem_flags(canonical),
        )
        if with_report:
            try:
                result.report = self.report(parsed)
            except CrossingLimitError as e:
                logger.warning("⚠️ direct report skipped: %s", e)
        return result

    # ------------------------------------------------------------- moves

    def sites(self, spec: SpecLike) -> List[MoveSite]:
        return self.build(spec).move_sites()

    @staticmethod
    def apply_move(d: LinkDiagram, site: MoveSite, move: str) -> LinkDiagram:
        """``move`` is ``twist:<k>`` or ``rational:<p>/<q>``"""
        kind, _, arg = move.partition(":")
        if kind == "twist":
            try:
                return apply_twist_move(d, site, int(arg))
            except ValueError:
                raise SpecRangeError(f"bad twist count '{arg}'") from None
        if kind == "rational":
            p, _, q = arg.partition("/")
            try:
                return apply_rational_move(d, site, Fraction(int(p), int(q or 1)))
            except ValueError:
                raise SpecRangeError(f"bad move fraction '{arg}'") from None
        raise SpecRangeError(f"unknown move '{move}'")

    def move(self, spec: SpecLike, edge_a: int, edge_b: int, move: str,
             face: Optional[int] = None) -> MoveResult:
        parsed = self.parse(spec)
        d = self.build(parsed)
        site = d.find_site(edge_a, edge_b, face)
        after = self.apply_move(d, site, move)
        text = serialize_spec(parsed)
        return MoveResult(site, move, self.report_diagram(d, text),
                          self.report_diagram(after, f"{text} after {move}"))

    def move_suite(self, samples: int, seed: Optional[int] = None,
                   specs: Optional[Sequence[LinkSpec]] = None) -> List[CheckRow]:
        """Random catalog sites: a 5-twist keeps every invariant, a 5/2 move keeps col_5 and negates F"""
        rng = random.Random(Config.MOVE_SUITE_SEED if seed is None else seed)
        # small rows keep the 5-twist diagram inside the Kauffman limit
        pool = list(specs) if specs else [r.braid for r in table41() if 0 < len(r.braid.word) <= 6]
        results = []
        for _ in range(samples):
            spec = rng.choice(pool)
            d = self.build(spec)
            site = rng.choice(d.move_sites())
            base = self.report_diagram(d)
            five = self.report_diagram(apply_twist_move(d, site, 5))
            two_two = apply_rational_move(d, site, Fraction(5, 2))
            checks = {
                "5-move": not self.differences(base, five),
                "(2,2)-col5": col_n(two_two, 5) == base.col5,
                "(2,2)-F": f_at_special(two_two, self.kauffman_limit) == -base.f_special,
            }
            key = f"{serialize_spec(spec)}@{site.edge_a},{site.edge_b}"
            results.append(CheckRow(key, checks))
        return results


def catalog_info() -> dict:
    catalog = load_catalog()
    return {"version": catalog.version, "checksum": catalog.digest,
            "rows": len(catalog.rows), "boxes": len(catalog.boxes), "named": len(catalog.links)}
