"""
Tests for the invariant engine: reports, comparisons, tables and moves
"""

import pytest

from algebra import SQRT5
from catalog import row, table71
from config import Config
from errors import InvalidPointError, SpecRangeError, UnknownLinkError
from montesinos import TwoFiveClass
from tangles import RationalLinkClass, TangleClass12


def test_figure_eight_report(engine):
    report = engine.report("named:4_1")
    assert report.crossings == 4
    assert report.components == 1
    assert report.col5 == 25
    assert report.f_special == -SQRT5
    assert report.class5.contains([0, 0, 0, 0])
    data = report.to_json()
    assert data["spec"] == "named:4_1"
    assert data["F"]["exact"] == "-sqrt5"
    assert data["v_abs"]["float"] == pytest.approx(0.0, abs=1e-6)


def test_two_component_unlink(engine):
    report = engine.report("braid:2:[]")
    assert report.col5 == 25
    assert report.f_special == SQRT5
    assert report.components == 2


def test_optional_report_fields(engine):
    report = engine.report("named:3_1", kauffman=True, point=(24, 32))
    data = report.to_json()
    assert "kauffman_F" in data
    assert len(data["set_F"]["members"]) == 10
    with pytest.raises(InvalidPointError):
        engine.report("named:3_1", point=(1, 32))


def test_unknown_named_link(engine):
    with pytest.raises(UnknownLinkError):
        engine.report("named:9_49")


def test_mirror_pair_distinguished_by_jones_class(engine):
    verdict = engine.compare("named:6^3_1", "mirror(named:6^3_1)")
    assert verdict.distinguished
    assert "JonesClass5" in verdict.by
    assert verdict.label.startswith("distinguished(by:")


@pytest.mark.parametrize("key", ["8^3_10", "9^2_40"])
def test_open_mirror_pairs_are_not_distinguished(engine, key):
    verdict = engine.compare(f"named:{key}", f"mirror(named:{key})")
    assert not verdict.distinguished
    assert verdict.label == "not-distinguished"
    assert verdict.to_json()["verdict"] == "not-distinguished"


def test_eleven_crossing_rows_differ(engine):
    a = engine.report(row(43).braid)
    b = engine.report(row(44).braid)
    assert a.class5 != b.class5


def test_same_box_links_agree(engine):
    assert not engine.compare("named:3_1", "named:H").distinguished
    assert not engine.compare("named:T_2", "named:5_1").distinguished


@pytest.mark.parametrize("class_id", [1, 8, 39])
def test_table_rows(engine, class_id):
    result = engine.table41(class_id)
    assert len(result) == 1
    assert result[0].status == "PASS"


def test_table_row_out_of_range(engine):
    with pytest.raises(SpecRangeError):
        engine.table41(99)
    with pytest.raises(SpecRangeError):
        engine.table71("no-box")


@pytest.mark.parametrize("box", ["H", "T2", "8_10", "9^2_13"])
def test_table_boxes(engine, box):
    result, = engine.table71(box)
    assert result.status == "PASS"


def test_metadata_only_box_is_skipped(engine):
    result, = engine.table71("9_40")
    assert result.status == "SKIP"
    open_box, = engine.table71("8^3_10")
    assert "open" in open_box.note


@pytest.mark.slow
def test_full_braid_table(engine):
    failed = [r.key for r in engine.table41() if r.status == "FAIL"]
    assert failed == []


@pytest.mark.slow
def test_full_box_table(engine):
    results = engine.table71()
    assert len(results) == len(table71())
    assert [r.key for r in results if r.status == "FAIL"] == []


@pytest.mark.slow
def test_alternate_braids(engine):
    for class_id in (6, 9, 10):
        results = engine.check_alternates(row(class_id))
        assert results
        assert all(r.status == "PASS" for r in results)


def test_density(engine):
    points = engine.density(6)
    assert len(points) == 49
    values = {(p.k1, p.k2): p.value for p in points}
    assert values[(1, 0)] == pytest.approx(1.902113, abs=1e-5)
    assert values[(0, 1)] == pytest.approx(0.618034, abs=1e-5)
    assert values[(0, 0)] == pytest.approx(1.0)
    assert [p.value for p in points] == sorted(p.value for p in points)
    with pytest.raises(SpecRangeError):
        engine.density(0)
    with pytest.raises(SpecRangeError):
        engine.density(Config.DENSITY_MAX_K + 1)


@pytest.mark.parametrize("p, q, class12, link_class", [
    (9, 4, TangleClass12.ONE, RationalLinkClass.T1),
    (3, 5, TangleClass12.TWO_FIFTHS, RationalLinkClass.H),
    (5, 2, TangleClass12.FIVE_HALVES, RationalLinkClass.FIGURE_EIGHT),
])
def test_reduce_rational(engine, p, q, class12, link_class):
    reduction = engine.reduce_rational(p, q)
    assert reduction.class12 is class12
    assert reduction.link_class is link_class
    assert reduction.to_json()["link_class"] == link_class.value


def test_reduce_montesinos(engine):
    reduction = engine.reduce_montesinos("montesinos:[3/5,1/2,1/2]")
    assert reduction.canonical == TwoFiveClass(1, 2)
    assert reduction.consistent is True
    data = reduction.to_json()
    assert data["representative"] == "montesinos:[2/5,1/2,1/2]"
    assert engine.reduce_montesinos("pretzel:[2,2,2]", with_report=False).consistent is None
    with pytest.raises(SpecRangeError):
        engine.reduce_montesinos("braid:2:[1,1,1]")


def test_five_move_keeps_invariants(engine):
    site = engine.sites("named:3_1")[0]
    result = engine.move("named:3_1", site.edge_a, site.edge_b, "twist:5", site.face)
    assert result.after.crossings == result.before.crossings + 5
    assert not engine.differences(result.before, result.after)


def test_two_two_move_negates_f(engine):
    site = engine.sites("named:4_1")[0]
    result = engine.move("named:4_1", site.edge_a, site.edge_b, "rational:5/2", site.face)
    assert result.after.col5 == result.before.col5
    assert result.after.f_special == -result.before.f_special


@pytest.mark.parametrize("move", ["twist:x", "rational:a/b", "flip:1"])
def test_bad_move_strings(engine, move):
    site = engine.sites("named:3_1")[0]
    with pytest.raises(SpecRangeError):
        engine.move("named:3_1", site.edge_a, site.edge_b, move, site.face)


@pytest.mark.slow
def test_random_move_suite(engine):
    results = engine.move_suite(samples=100, seed=1)
    assert len(results) == 100
    assert [r.key for r in results if r.status != "PASS"] == []
