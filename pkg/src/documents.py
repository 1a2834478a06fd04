"""
JSON documents for objects, orientations and morphisms (schema "hyperbox/1").

Element labels are canonical strings (see elements.label). On load, labels
with product structure ("(x,y)", "t:x:y", ...) are parsed back into
structured elements, so a document written from a product reloads as the
same object. Morphism-valued elements (exponential carriers) reload as
opaque string labels.
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Any, Dict, Iterable, List, Mapping, Optional, Union

from .core import (
    EDGE,
    INCIDENCE,
    OBJECT_CLASSES,
    SORT_PLURAL,
    VERTEX,
    GraphObject,
    IncidenceHypergraph,
    Morphism,
    Orientation,
    Quiver,
    SetSystemHypergraph,
    check,
    make_morphism,
)
from .elements import Element, label, parse_label
from .errors import DocumentError

logger = logging.getLogger(__name__)

SCHEMA = "hyperbox/1"

# Structure-map fields per category, in document order
STRUCTURE_FIELDS = {
    Quiver.category: ("source", "target"),
    SetSystemHypergraph.category: ("endpoints",),
    IncidenceHypergraph.category: ("port", "attachment"),
}

MAP_FIELDS = {VERTEX: "vertex_map", EDGE: "edge_map", INCIDENCE: "incidence_map"}


@dataclass(frozen=True)
class GraphDocument:
    """A parsed object document: the object and its optional orientation."""

    obj: GraphObject
    orientation: Optional[Orientation] = None

    @property
    def category(self) -> str:
        return self.obj.category


# =============================================================================
# Serialization
# =============================================================================

def _labels(elements: Iterable[Element]) -> List[str]:
    return sorted(label(x) for x in elements)


def _pairs(mapping: Mapping) -> List[List[Any]]:
    return sorted([label(x), label(y)] for x, y in mapping.items())


def serialize(obj: GraphObject, orientation: Optional[Orientation] = None) -> Dict[str, Any]:
    """Canonical document for an object: every array sorted by label."""
    doc: Dict[str, Any] = {"schema": SCHEMA, "category": obj.category}
    for sort in obj.sorts:
        doc[SORT_PLURAL[sort]] = _labels(obj.elements(sort))
    if isinstance(obj, SetSystemHypergraph):
        doc["endpoints"] = sorted([label(e), _labels(vs)] for e, vs in obj.endpoints.items())
    else:
        for name in STRUCTURE_FIELDS[obj.category]:
            doc[name] = _pairs(getattr(obj, name))
    if orientation is not None:
        doc["orientation"] = sorted([label(i), int(s)] for i, s in orientation.sign.items())
    return doc


def serialize_morphism(f: Morphism) -> Dict[str, Any]:
    """Document for a morphism: categories plus sorted assignment pairs per sort."""
    doc: Dict[str, Any] = {
        "schema": SCHEMA,
        "kind": "morphism",
        "domain": f.domain.category,
        "codomain": f.codomain.category,
    }
    for sort in f.domain.sorts:
        doc[MAP_FIELDS[sort]] = _pairs(f.component(sort))
    return doc


def serialize_hom_set(morphisms: Iterable[Morphism], count: Optional[int] = None) -> Dict[str, Any]:
    docs = [serialize_morphism(f) for f in morphisms]
    return {"schema": SCHEMA, "kind": "hom-set", "count": len(docs) if count is None else count, "morphisms": docs}


def dumps(doc: Mapping[str, Any]) -> str:
    """Stable JSON text (two-space indent, trailing newline)."""
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def dumps_object(obj: GraphObject, orientation: Optional[Orientation] = None) -> str:
    return dumps(serialize(obj, orientation))


# =============================================================================
# Parsing
# =============================================================================

def _require_fields(doc: Mapping[str, Any], required: Iterable[str], optional: Iterable[str]) -> None:
    allowed = set(required) | set(optional)
    unknown = sorted(set(doc) - allowed)
    if unknown:
        raise DocumentError(f"Unknown field(s): {', '.join(unknown)}")
    missing = [name for name in required if name not in doc]
    if missing:
        raise DocumentError(f"Missing field(s): {', '.join(missing)}")


def _parse(text: str) -> Element:
    try:
        return parse_label(text)
    except ValueError as e:
        raise DocumentError(f"Bad label {text!r}: {e}") from e


def _element_list(doc: Mapping[str, Any], name: str) -> List[Element]:
    values = doc[name]
    if not isinstance(values, list) or not all(isinstance(x, str) for x in values):
        raise DocumentError(f"Field {name!r} must be an array of string labels")
    if len(set(values)) != len(values):
        duplicate = next(x for x in values if values.count(x) > 1)
        raise DocumentError(f"Duplicate label {duplicate!r} in {name!r}")
    return [_parse(x) for x in values]


def _pair_map(doc: Mapping[str, Any], name: str, value_kind=str) -> Dict[Element, Any]:
    result: Dict[Element, Any] = {}
    entries = doc[name]
    if not isinstance(entries, list):
        raise DocumentError(f"Field {name!r} must be an array of pairs")
    for entry in entries:
        if not (isinstance(entry, list) and len(entry) == 2 and isinstance(entry[0], str)):
            raise DocumentError(f"Malformed pair in {name!r}: {entry!r}")
        key, value = entry
        if not isinstance(value, value_kind) or isinstance(value, bool):
            raise DocumentError(f"Malformed value in {name!r} for {key!r}: {value!r}")
        parsed = _parse(key)
        if parsed in result:
            raise DocumentError(f"{name!r} assigns {key!r} twice")
        result[parsed] = _parse(value) if value_kind is str else value
    return result


def _endpoint_map(doc: Mapping[str, Any]) -> Dict[Element, frozenset]:
    result: Dict[Element, frozenset] = {}
    if not isinstance(doc["endpoints"], list):
        raise DocumentError("Field 'endpoints' must be an array of [edge, [vertices]] pairs")
    for entry in doc["endpoints"]:
        if not (
            isinstance(entry, list) and len(entry) == 2 and isinstance(entry[0], str)
            and isinstance(entry[1], list) and all(isinstance(v, str) for v in entry[1])
        ):
            raise DocumentError(f"Malformed endpoints entry: {entry!r}")
        edge = _parse(entry[0])
        if edge in result:
            raise DocumentError(f"'endpoints' assigns {entry[0]!r} twice")
        result[edge] = frozenset(_parse(v) for v in entry[1])
    return result


def from_document(doc: Mapping[str, Any]) -> GraphDocument:
    """
    Build and validate an object from a parsed JSON document.

    Raises:
        DocumentError: Wrong schema, unknown category, unknown or missing fields.
        ValidationError: The described object (or orientation) violates a constraint.
    """
    if not isinstance(doc, Mapping):
        raise DocumentError("Document must be a JSON object")
    if doc.get("schema") != SCHEMA:
        raise DocumentError(f"Unsupported schema {doc.get('schema')!r}; expected {SCHEMA!r}")
    category = doc.get("category")
    if category not in OBJECT_CLASSES:
        raise DocumentError(f"Unknown category {category!r}")

    cls = OBJECT_CLASSES[category]
    sort_fields = [SORT_PLURAL[sort] for sort in cls.sorts]
    optional = ["orientation"] if cls is IncidenceHypergraph else []
    _require_fields(doc, ["schema", "category"] + sort_fields + list(STRUCTURE_FIELDS[category]), optional)

    sorts = {name: _element_list(doc, name) for name in sort_fields}
    if cls is SetSystemHypergraph:
        obj = SetSystemHypergraph(sorts["vertices"], sorts["edges"], _endpoint_map(doc))
    else:
        maps = {name: _pair_map(doc, name) for name in STRUCTURE_FIELDS[category]}
        obj = cls(**sorts, **maps)
    check(obj)

    orientation = None
    if "orientation" in doc:
        orientation = check(Orientation(obj, _pair_map(doc, "orientation", value_kind=int)))
    logger.debug(f"Loaded {category} document: {obj.describe()}")
    return GraphDocument(obj, orientation)


def parse(source: Union[str, Path, IO[str]]) -> GraphDocument:
    """
    Parse a document from a path or an open text stream.

    Raises:
        DocumentError: Unreadable file, malformed JSON or bad structure.
        ValidationError: Invalid object.
    """
    try:
        if hasattr(source, "read"):
            doc = json.load(source)
        else:
            with open(source, "r", encoding="utf-8") as f:
                doc = json.load(f)
    except json.JSONDecodeError as e:
        raise DocumentError(f"Malformed JSON: {e}") from e
    except OSError as e:
        raise DocumentError(f"Cannot read {source}: {e}") from e
    return from_document(doc)


def loads(text: str) -> GraphDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"Malformed JSON: {e}") from e
    return from_document(doc)


def load_object(source: Union[str, Path, IO[str]]) -> GraphObject:
    return parse(source).obj


def morphism_from_document(doc: Mapping[str, Any], domain: GraphObject, codomain: GraphObject) -> Morphism:
    """
    Rebuild a morphism document against known domain and codomain objects.

    Raises:
        DocumentError: Category mismatch or malformed assignments.
        ValidationError: The assignments do not form a morphism.
    """
    if doc.get("schema") != SCHEMA or doc.get("kind") != "morphism":
        raise DocumentError("Not a hyperbox/1 morphism document")
    if doc.get("domain") != domain.category or doc.get("codomain") != codomain.category:
        raise DocumentError("Morphism document categories do not match the given objects")
    fields = [MAP_FIELDS[sort] for sort in domain.sorts]
    _require_fields(doc, ["schema", "kind", "domain", "codomain"] + fields, [])
    maps = {sort: _pair_map(doc, MAP_FIELDS[sort]) for sort in domain.sorts}
    return check(make_morphism(domain, codomain, maps))
