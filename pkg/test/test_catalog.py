"""
Tests for the bundled catalog: schema, checksum and named links
"""

import json

import pytest

from catalog import (checksum, file_digest, load_catalog, named, named_keys, resolve, row,
                     table41, table71)
from config import Config
from errors import ConventionError, UnknownLinkError
from notation import Braid, Pretzel, parse_spec


def test_rows_cover_every_class(catalog):
    assert [r.class_id for r in catalog.rows] == list(range(1, 46))
    assert all(r.braid.strands == 3 for r in catalog.rows)
    assert len(table41()) == 45


def test_mirror_pairs_are_symmetric():
    for r in table41():
        if r.mirror_of is not None:
            assert row(r.mirror_of).mirror_of == r.class_id


def test_row_lookup():
    assert row(39).link_name == "8_18"
    assert row(39).braid == Braid(3, (1, -2, 1, -2, 1, -2, 1, -2))
    assert str(row(1).expected_f) == "5"
    with pytest.raises(UnknownLinkError):
        row(46)


def test_checksum_matches_sidecar():
    path = Config.CATALOG_PATH
    sidecar = path.with_name(path.name + ".sha256")
    assert checksum() == file_digest(path)
    assert sidecar.read_text().split()[0] == checksum()


def test_tampered_catalog_is_rejected(tmp_path):
    original = Config.CATALOG_PATH.read_bytes()
    path = tmp_path / "catalog.json"
    path.write_bytes(original.replace(b'"version": "1.0.0"', b'"version": "1.0.1"'))
    (tmp_path / "catalog.json.sha256").write_text(file_digest(Config.CATALOG_PATH) + "\n")
    with pytest.raises(ConventionError):
        load_catalog(path)


def test_catalog_without_sidecar_still_loads(tmp_path):
    path = tmp_path / "catalog.json"
    path.write_bytes(Config.CATALOG_PATH.read_bytes())
    assert load_catalog(path).version == "1.0.0"


def test_malformed_catalog(tmp_path):
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps({"version": "x", "table41": [], "table71": []}))
    with pytest.raises(ConventionError):
        load_catalog(path)


def test_named_links():
    assert resolve("4_1") == Braid(3, (1, -2, 1, -2))
    assert resolve("6^3_1") == Pretzel((2, 2, 2))
    assert named("3_1").box == "H"
    assert "H+H" in named_keys()
    assert named("8^3_10").flags[0].startswith("open")


def test_metadata_only_links_cannot_be_built():
    assert str(named("9_49").expected_f) == "-5"
    for key in ("9_49", "9_40"):
        with pytest.raises(UnknownLinkError):
            resolve(key)
    with pytest.raises(UnknownLinkError):
        named("no_such_link")


def test_named_references_resolve():
    for key in named_keys():
        spec = named(key).spec
        if spec is not None:
            assert parse_spec(named(key).to_json()["spec"]) == spec


def test_boxes():
    boxes = {b.name: b for b in table71()}
    assert boxes["8^3_10"].open
    assert boxes["9_49"].unverifiable
    assert not any(m.constructible for m in boxes["9_49"].members)
    assert [m.name for m in boxes["H"].members] == ["H", "3_1", "5^2_1", "6_3"]
