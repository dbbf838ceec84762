"""
Catalog Module
Handles the bundled link data: the 45 three-braid classes, the 5-move boxes
of small links and the named-link constructors
"""

from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError

from algebra import Cyclo40, parse_quadratic
from config import Config
from errors import ConventionError, UnknownLinkError
from notation import Braid, LinkSpec, parse_spec, serialize_spec

logger = logging.getLogger(__name__)


# ============================================================================
# File schema
# ============================================================================

class _RowModel(BaseModel):
    id: int = Field(ge=1, le=45)
    strands: int
    braid: List[int]
    F: str
    V: str
    member: List[int] = Field(min_length=4, max_length=4)
    link: str = ""
    mirror_of: Optional[int] = None
    alternates: List[List[int]] = []


class _BoxMemberModel(BaseModel):
    name: str
    spec: Optional[str] = None


class _BoxModel(BaseModel):
    box: str
    F: str
    member: List[int] = Field(min_length=4, max_length=4)
    V: str
    open: bool = False
    unverifiable: bool = False
    note: str = ""
    members: List[_BoxMemberModel]


class _NamedModel(BaseModel):
    spec: Optional[str] = None
    box: Optional[str] = None
    F: Optional[str] = None
    flags: List[str] = []


class _CatalogModel(BaseModel):
    version: str
    table41: List[_RowModel]
    table71: List[_BoxModel]
    named: Dict[str, _NamedModel]


# ============================================================================
# Domain records
# ============================================================================

@dataclass(frozen=True)
class CatalogRow:
    class_id: int
    braid: Braid
    expected_f: Cyclo40
    expected_v: str
    member: Tuple[int, ...]
    link_name: str
    mirror_of: Optional[int]
    alternates: Tuple[Braid, ...]

    def to_json(self) -> dict:
        return {
            "class_id": self.class_id,
            "braid": list(self.braid.word),
            "F": str(self.expected_f),
            "V": self.expected_v,
            "member": list(self.member),
            "link": self.link_name,
            "mirror_of": self.mirror_of,
        }


@dataclass(frozen=True)
class BoxMember:
    name: str
    spec: Optional[LinkSpec]

    @property
    def constructible(self) -> bool:
        return self.spec is not None


@dataclass(frozen=True)
class Box:
    """Links with a common 5-move box; same-box links are 5-move equivalent"""

    name: str
    expected_f: Cyclo40
    member: Tuple[int, ...]
    expected_v: str
    members: Tuple[BoxMember, ...]
    open: bool
    unverifiable: bool
    note: str


@dataclass(frozen=True)
class NamedLink:
    key: str
    spec: Optional[LinkSpec]
    box: Optional[str]
    flags: Tuple[str, ...]
    expected_f: Optional[Cyclo40] = None

    def to_json(self) -> dict:
        return {
            "key": self.key,
            "spec": serialize_spec(self.spec) if self.spec is not None else None,
            "box": self.box,
            "flags": list(self.flags),
            "F": str(self.expected_f) if self.expected_f is not None else None,
        }


@dataclass(frozen=True)
class Catalog:
    version: str
    digest: str
    rows: Tuple[CatalogRow, ...]
    boxes: Tuple[Box, ...]
    links: Dict[str, NamedLink]


# ============================================================================
# Loading
# ============================================================================

def _sidecar(path: Path) -> Path:
    return path.with_name(path.name + ".sha256")


def file_digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _expected_digest(path: Path) -> Optional[str]:
    sidecar = _sidecar(path)
    if not sidecar.exists():
        return None
    # sha256sum output carries the file name after the digest
    text = sidecar.read_text().split()
    return text[0].lower() if text else None


def _row(model: _RowModel) -> CatalogRow:
    return CatalogRow(
        class_id=model.id,
        braid=Braid(model.strands, tuple(model.braid)),
        expected_f=parse_quadratic(model.F),
        expected_v=model.V,
        member=tuple(model.member),
        link_name=model.link,
        mirror_of=model.mirror_of,
        alternates=tuple(Braid(model.strands, tuple(word)) for word in model.alternates),
    )


def _box(model: _BoxModel) -> Box:
    members = tuple(BoxMember(m.name, parse_spec(m.spec) if m.spec else None) for m in model.members)
    return Box(model.box, parse_quadratic(model.F), tuple(model.member), model.V,
               members, model.open, model.unverifiable, model.note)


def _named(key: str, model: _NamedModel) -> NamedLink:
    return NamedLink(
        key=key,
        spec=parse_spec(model.spec) if model.spec else None,
        box=model.box,
        flags=tuple(model.flags),
        expected_f=parse_quadratic(model.F) if model.F else None,
    )


@lru_cache(maxsize=4)
def load_catalog(path: Optional[Path] = None) -> Catalog:
    """Read, checksum and validate the catalog file"""
    path = Path(path or Config.CATALOG_PATH)
    if not path.exists():
        raise ConventionError(f"catalog file not found: {path}")
    digest = file_digest(path)
    expected = _expected_digest(path)
    if expected is None:
        logger.warning("⚠️ no checksum sidecar next to %s", path)
    elif expected != digest:
        raise ConventionError(f"catalog checksum mismatch: {digest} != {expected}")

    try:
        model = _CatalogModel.model_validate_json(path.read_bytes())
    except ValidationError as e:
        raise ConventionError(f"malformed catalog: {e}") from e

    rows = tuple(sorted((_row(r) for r in model.table41), key=lambda r: r.class_id))
    ids = [r.class_id for r in rows]
    if ids != list(range(1, 46)):
        raise ConventionError("the braid table must list class ids 1..45 exactly once")
    boxes = tuple(_box(b) for b in model.table71)
    links = {key: _named(key, entry) for key, entry in model.named.items()}
    logger.debug("catalog %s: %d rows, %d boxes, %d named links",
                 model.version, len(rows), len(boxes), len(links))
    return Catalog(model.version, digest, rows, boxes, links)


# ============================================================================
# Public accessors
# ============================================================================

def table41(path: Optional[Path] = None) -> List[CatalogRow]:
    return list(load_catalog(path).rows)


def row(class_id: int, path: Optional[Path] = None) -> CatalogRow:
    for r in load_catalog(path).rows:
        if r.class_id == class_id:
            return r
    raise UnknownLinkError(f"no braid class {class_id}")


def table71(path: Optional[Path] = None) -> List[Box]:
    return list(load_catalog(path).boxes)


def named(key: str, path: Optional[Path] = None) -> NamedLink:
    links = load_catalog(path).links
    if key not in links:
        raise UnknownLinkError(f"unknown catalog key '{key}'")
    return links[key]


def named_keys(path: Optional[Path] = None) -> List[str]:
    return sorted(load_catalog(path).links)


def resolve(key: str) -> LinkSpec:
    """Spec behind named:<key>; entries kept only as metadata cannot be built"""
    link = named(key)
    if link.spec is None:
        raise UnknownLinkError(f"'{key}' has no braid, rational, pretzel or Montesinos form")
    return link.spec


def checksum(path: Optional[Path] = None) -> str:
    return load_catalog(path).digest
