"""
Tests for PD diagrams, builders and local rewriting
"""

import pytest

from diagram import (apply_rational_move, apply_twist_move, braid_closure, build_diagram,
                     mirror, pd_diagram, reidemeister_simplify, smoothing)
from errors import InvalidSiteError, SpecRangeError, UnknownLinkError
from notation import Fraction, parse_spec


def trefoil():
    return braid_closure(2, [1, 1, 1])


def test_braid_closure_counts():
    d = trefoil()
    assert d.crossing_count == 3
    assert d.component_count == 1
    assert d.stats().writhe == 3
    d.check_euler()


def test_hopf_link_stats():
    stats = braid_closure(2, [1, 1]).stats()
    assert stats.components == 2
    assert stats.linking == 1
    assert stats.self_writhe == 0


def test_trivial_braid_is_free_circles():
    d = braid_closure(2, [])
    assert d.crossing_count == 0
    assert d.free_circles == 2
    assert d.component_count == 2


def test_edges_are_numbered_consecutively():
    d = braid_closure(3, [1, -2, 1, -2])
    labels = sorted({v for c in d.crossings for v in c})
    assert labels == list(range(1, 2 * d.crossing_count + 1))
    assert all(len(d.occurrences[v]) == 2 for v in labels)


def test_mirror_negates_writhe():
    d = braid_closure(3, [1, -2, 1, -2, 1])
    assert mirror(d).stats().writhe == -d.stats().writhe
    assert mirror(mirror(d)).signs == d.signs


def test_smoothings_remove_one_crossing():
    d = trefoil()
    for kind in ("A", "B"):
        assert smoothing(d, 0, kind).crossing_count == 2


def test_cancelling_letters_simplify_away():
    d, framing = reidemeister_simplify(braid_closure(2, [1, -1]))
    assert d.crossing_count == 0
    assert d.component_count == 2
    assert framing == 0


def test_build_from_specs():
    assert build_diagram(parse_spec("rational:5/2")).crossing_count == 4
    assert build_diagram(parse_spec("pretzel:[2,2,2]")).component_count == 3
    assert build_diagram(parse_spec("montesinos:[1/2,1/3]")).crossing_count == 5
    summed = build_diagram(parse_spec("sum(braid:2:[1,1,1];braid:2:[1,1,1])"))
    assert summed.crossing_count == 6
    assert summed.component_count == 1
    split = build_diagram(parse_spec("disjoint(braid:2:[1,1,1];braid:1:[])"))
    assert split.component_count == 2


def test_named_spec_needs_a_resolver():
    with pytest.raises(UnknownLinkError):
        build_diagram(parse_spec("named:4_1"))


def test_pd_edges_must_pair_up():
    with pytest.raises(SpecRangeError):
        pd_diagram([(1, 2, 3, 4)])


def test_move_sites_lie_on_the_diagram():
    d = trefoil()
    sites = d.move_sites()
    assert sites
    for site in sites:
        assert site.edge_a in d.occurrences and site.edge_b in d.occurrences
        assert site.edge_a in d.face_edges(site.face) and site.edge_b in d.face_edges(site.face)


def test_find_site_rejects_bad_edges():
    d = trefoil()
    with pytest.raises(InvalidSiteError):
        d.find_site(1, 99)
    with pytest.raises(InvalidSiteError):
        d.find_site(1, 1)


def test_twist_and_rational_moves_add_crossings():
    d = trefoil()
    site = d.move_sites()[0]
    assert apply_twist_move(d, site, 0) is d
    assert apply_twist_move(d, site, 5).crossing_count == 8
    assert apply_rational_move(d, site, Fraction(5, 2)).crossing_count == 7
    assert apply_rational_move(d, site, Fraction(1, 0)).crossing_count == 3
