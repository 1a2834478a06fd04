"""
Objects and morphisms of the three categories.

Quivers (directed multigraphs), set-system hypergraphs and incidence
hypergraphs are immutable values. Morphisms carry one component map per
sort. validate() reports the first violated constraint instead of raising.
"""

import logging
from dataclasses import dataclass, field, fields
from enum import Enum
from typing import Any, ClassVar, Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

from .elements import Element, FrozenMap, is_atom_label, label, ordered
from .errors import MorphismMismatchError, ValidationError

logger = logging.getLogger(__name__)

VERTEX = "vertex"
EDGE = "edge"
INCIDENCE = "incidence"

# Short prefixes used in morphism labels
SORT_PREFIX = {VERTEX: "V", EDGE: "E", INCIDENCE: "I"}

# Plural sort names used in reports and documents
SORT_PLURAL = {VERTEX: "vertices", EDGE: "edges", INCIDENCE: "incidences"}


# =============================================================================
# Objects
# =============================================================================

class _ObjectBase:
    """Equality, hashing and sort access shared by the three object kinds."""

    category: ClassVar[str] = ""
    sorts: ClassVar[Tuple[str, ...]] = ()

    def _freeze(self, **maps: Mapping) -> None:
        for name in ("vertices", "edges", "incidences"):
            if hasattr(self, name):
                object.__setattr__(self, name, frozenset(getattr(self, name)))
        for name, value in maps.items():
            object.__setattr__(self, name, value if isinstance(value, FrozenMap) else FrozenMap(value))
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_ordered", {})

    def _key(self) -> Tuple:
        return tuple(getattr(self, f.name) for f in fields(self))

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if type(self) is not type(other):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.category,) + self._key()))
        return self._hash

    def elements(self, sort: str) -> FrozenSet[Element]:
        """Elements of the given sort."""
        if sort not in self.sorts:
            raise ValueError(f"{self.category} has no sort {sort!r}")
        return getattr(self, SORT_PLURAL[sort])

    def ordered(self, sort: str) -> List[Element]:
        """Elements of a sort in canonical label order (cached)."""
        if sort not in self._ordered:
            self._ordered[sort] = ordered(self.elements(sort))
        return self._ordered[sort]

    def sizes(self) -> Tuple[int, ...]:
        """Cardinalities of the sorts, in sort order."""
        return tuple(len(self.elements(sort)) for sort in self.sorts)

    def describe(self) -> str:
        """Human-readable size summary, e.g. '2 vertices, 1 edge, 2 incidences'."""
        parts = []
        for sort in self.sorts:
            count = len(self.elements(sort))
            name = sort if count == 1 else SORT_PLURAL[sort]
            parts.append(f"{count} {name}")
        return ", ".join(parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.describe()})"


@dataclass(frozen=True, eq=False, repr=False)
class Quiver(_ObjectBase):
    """Directed multigraph: vertices, edges, source and target maps."""

    vertices: FrozenSet[Element] = frozenset()
    edges: FrozenSet[Element] = frozenset()
    source: FrozenMap = field(default_factory=FrozenMap)
    target: FrozenMap = field(default_factory=FrozenMap)

    category: ClassVar[str] = "quiver"
    sorts: ClassVar[Tuple[str, ...]] = (VERTEX, EDGE)

    def __post_init__(self):
        self._freeze(source=self.source, target=self.target)


@dataclass(frozen=True, eq=False, repr=False)
class SetSystemHypergraph(_ObjectBase):
    """Vertices and edges, each edge carrying a set of endpoint vertices."""

    vertices: FrozenSet[Element] = frozenset()
    edges: FrozenSet[Element] = frozenset()
    endpoints: FrozenMap = field(default_factory=FrozenMap)

    category: ClassVar[str] = "hypergraph"
    sorts: ClassVar[Tuple[str, ...]] = (VERTEX, EDGE)

    def __post_init__(self):
        self._freeze(endpoints={e: frozenset(vs) for e, vs in dict(self.endpoints).items()})

    @property
    def is_multigraph(self) -> bool:
        """Every endpoint set has size 1 or 2 (size 1 is a loop)."""
        return all(len(vs) in (1, 2) for vs in self.endpoints.values())


@dataclass(frozen=True, eq=False, repr=False)
class IncidenceHypergraph(_ObjectBase):
    """Vertices, edges and incidences; each incidence has a port and an attachment."""

    vertices: FrozenSet[Element] = frozenset()
    edges: FrozenSet[Element] = frozenset()
    incidences: FrozenSet[Element] = frozenset()
    port: FrozenMap = field(default_factory=FrozenMap)
    attachment: FrozenMap = field(default_factory=FrozenMap)

    category: ClassVar[str] = "incidence"
    sorts: ClassVar[Tuple[str, ...]] = (VERTEX, EDGE, INCIDENCE)

    def __post_init__(self):
        self._freeze(port=self.port, attachment=self.attachment)


GraphObject = Union[Quiver, SetSystemHypergraph, IncidenceHypergraph]

OBJECT_CLASSES: Dict[str, type] = {
    Quiver.category: Quiver,
    SetSystemHypergraph.category: SetSystemHypergraph,
    IncidenceHypergraph.category: IncidenceHypergraph,
}


def is_multigraph(graph: SetSystemHypergraph) -> bool:
    """Every endpoint set of the set-system hypergraph has size 1 or 2."""
    return graph.is_multigraph


@dataclass(frozen=True)
class Orientation:
    """A +1/-1 sign on every incidence of an incidence hypergraph."""

    carrier: IncidenceHypergraph
    sign: FrozenMap

    def __post_init__(self):
        if not isinstance(self.sign, FrozenMap):
            object.__setattr__(self, "sign", FrozenMap(self.sign))

    @classmethod
    def constant(cls, carrier: IncidenceHypergraph, value: int = 1) -> "Orientation":
        """Orientation with the same sign everywhere ("extroverted" for +1)."""
        return cls(carrier, FrozenMap({i: value for i in carrier.incidences}))

    def flipped(self) -> "Orientation":
        """Global sign flip."""
        return Orientation(self.carrier, FrozenMap({i: -s for i, s in self.sign.items()}))


# =============================================================================
# Morphisms
# =============================================================================

class _MorphismBase:
    """Equality, hashing and labels shared by the three morphism variants."""

    sorts: ClassVar[Tuple[str, ...]] = ()
    object_class: ClassVar[type] = object

    def _freeze_maps(self) -> None:
        for sort in self.sorts:
            name = f"{sort}_map"
            value = getattr(self, name)
            if not isinstance(value, FrozenMap):
                object.__setattr__(self, name, FrozenMap(value))

    def component(self, sort: str) -> FrozenMap:
        """Component map for a sort."""
        if sort not in self.sorts:
            raise ValueError(f"{type(self).__name__} has no {sort} component")
        return getattr(self, f"{sort}_map")

    def maps(self) -> Dict[str, FrozenMap]:
        return {sort: self.component(sort) for sort in self.sorts}

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if type(self) is not type(other):
            return NotImplemented
        return (
            self.maps() == other.maps()
            and self.domain == other.domain
            and self.codomain == other.codomain
        )

    def __hash__(self) -> int:
        return hash((type(self).__name__,) + tuple(self.component(s) for s in self.sorts))

    def label(self) -> str:
        """Canonical serialization: sorted assignment lists per sort."""
        return "[" + "|".join(SORT_PREFIX[s] + self.component(s).label() for s in self.sorts) + "]"

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label()})"


@dataclass(frozen=True, eq=False, repr=False)
class QuiverMorphism(_MorphismBase):
    domain: Quiver
    codomain: Quiver
    vertex_map: FrozenMap = field(default_factory=FrozenMap)
    edge_map: FrozenMap = field(default_factory=FrozenMap)

    sorts: ClassVar[Tuple[str, ...]] = (VERTEX, EDGE)
    object_class: ClassVar[type] = Quiver

    def __post_init__(self):
        self._freeze_maps()


@dataclass(frozen=True, eq=False, repr=False)
class HypergraphMorphism(_MorphismBase):
    domain: SetSystemHypergraph
    codomain: SetSystemHypergraph
    vertex_map: FrozenMap = field(default_factory=FrozenMap)
    edge_map: FrozenMap = field(default_factory=FrozenMap)

    sorts: ClassVar[Tuple[str, ...]] = (VERTEX, EDGE)
    object_class: ClassVar[type] = SetSystemHypergraph

    def __post_init__(self):
        self._freeze_maps()


@dataclass(frozen=True, eq=False, repr=False)
class IncidenceMorphism(_MorphismBase):
    domain: IncidenceHypergraph
    codomain: IncidenceHypergraph
    vertex_map: FrozenMap = field(default_factory=FrozenMap)
    edge_map: FrozenMap = field(default_factory=FrozenMap)
    incidence_map: FrozenMap = field(default_factory=FrozenMap)

    sorts: ClassVar[Tuple[str, ...]] = (VERTEX, EDGE, INCIDENCE)
    object_class: ClassVar[type] = IncidenceHypergraph

    def __post_init__(self):
        self._freeze_maps()


Morphism = Union[QuiverMorphism, HypergraphMorphism, IncidenceMorphism]

MORPHISM_CLASSES: Dict[type, type] = {
    Quiver: QuiverMorphism,
    SetSystemHypergraph: HypergraphMorphism,
    IncidenceHypergraph: IncidenceMorphism,
}


def make_morphism(domain: GraphObject, codomain: GraphObject, maps: Mapping[str, Mapping]) -> Morphism:
    """
    Build the morphism variant matching the objects' category.

    Args:
        domain: Source object.
        codomain: Target object.
        maps: Component map per sort (missing sorts default to empty).

    Raises:
        MorphismMismatchError: If domain and codomain are of different kinds.
    """
    if type(domain) is not type(codomain):
        raise MorphismMismatchError(
            f"Cannot map a {domain.category} into a {codomain.category}"
        )
    cls = MORPHISM_CLASSES[type(domain)]
    components = {f"{sort}_map": FrozenMap(maps.get(sort, {})) for sort in cls.sorts}
    return cls(domain=domain, codomain=codomain, **components)


def identity(obj: GraphObject) -> Morphism:
    """Identity morphism of an object."""
    return make_morphism(obj, obj, {sort: {x: x for x in obj.elements(sort)} for sort in obj.sorts})


def compose(g: Morphism, f: Morphism) -> Morphism:
    """
    Composite g ∘ f.

    Raises:
        MorphismMismatchError: If the variants differ or codomain(f) != domain(g).
    """
    if type(g) is not type(f):
        raise MorphismMismatchError(
            f"Cannot compose {type(g).__name__} with {type(f).__name__}"
        )
    if f.codomain != g.domain:
        raise MorphismMismatchError(
            f"Codomain ({f.codomain.describe()}) does not match domain ({g.domain.describe()})"
        )
    maps = {}
    for sort in f.sorts:
        outer = g.component(sort)
        maps[sort] = {x: outer[y] for x, y in f.component(sort).items()}
    return make_morphism(f.domain, g.codomain, maps)


def compose_all(*morphisms: Morphism) -> Morphism:
    """Composite of a chain written outermost first: compose_all(h, g, f) = h∘g∘f."""
    result = morphisms[-1]
    for outer in reversed(morphisms[:-1]):
        result = compose(outer, result)
    return result


def is_bijective(f: Morphism) -> bool:
    """Every component map is a bijection between the corresponding sorts."""
    for sort in f.sorts:
        component = f.component(sort)
        if len(set(component.values())) != len(component):
            return False
        if len(component) != len(f.codomain.elements(sort)):
            return False
    return True


def inverse(f: Morphism) -> Morphism:
    """
    Inverse of a bijective morphism, checked to be a morphism itself.

    Raises:
        MorphismMismatchError: If f is not bijective or its inverse is not a morphism.
    """
    if not is_bijective(f):
        raise MorphismMismatchError("Morphism is not bijective")
    maps = {sort: {y: x for x, y in f.component(sort).items()} for sort in f.sorts}
    result = make_morphism(f.codomain, f.domain, maps)
    report = validate(result)
    if not report:
        raise MorphismMismatchError(f"Inverse is not a morphism ({report.describe()})")
    return result


def is_isomorphism(f: Morphism) -> bool:
    """f is a valid bijective morphism whose inverse is a morphism."""
    if not validate(f) or not is_bijective(f):
        return False
    try:
        inverse(f)
    except MorphismMismatchError:
        return False
    return True


# =============================================================================
# Validation
# =============================================================================

@dataclass(frozen=True)
class ValidationResult:
    """Outcome of validate(); falsy when a constraint is violated."""

    ok: bool
    constraint: Optional[str] = None
    element: Any = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        if self.element is None:
            return self.constraint
        return f"{self.constraint}: {label(self.element)}"


VALID = ValidationResult(True)


def _check_function(
    name: str,
    mapping: Mapping,
    domain: FrozenSet,
    codomain: FrozenSet,
    member=None,
) -> Optional[ValidationResult]:
    for x in ordered(domain):
        if x not in mapping:
            return ValidationResult(False, f"{name} not total", x)
    for x in ordered(mapping.keys()):
        if x not in domain:
            return ValidationResult(False, f"{name} defined outside its domain", x)
        value = mapping[x]
        inside = member(value, codomain) if member else value in codomain
        if not inside:
            return ValidationResult(False, f"{name} out of range", x)
    return None


def _subset(value, codomain) -> bool:
    return isinstance(value, frozenset) and value <= codomain


def _malformed_atom(obj: GraphObject) -> Optional[Element]:
    # string atoms are plain or opaque
    for sort in obj.sorts:
        for x in obj.ordered(sort):
            if isinstance(x, str) and not (is_atom_label(x) or x[:1] in ("[", "{")):
                return x
    return None


def _validate_object(obj: GraphObject) -> ValidationResult:
    if isinstance(obj, Quiver):
        checks = [
            ("source", obj.source, obj.edges, obj.vertices, None),
            ("target", obj.target, obj.edges, obj.vertices, None),
        ]
    elif isinstance(obj, SetSystemHypergraph):
        checks = [("endpoints", obj.endpoints, obj.edges, obj.vertices, _subset)]
    elif isinstance(obj, IncidenceHypergraph):
        checks = [
            ("port", obj.port, obj.incidences, obj.vertices, None),
            ("attachment", obj.attachment, obj.incidences, obj.edges, None),
        ]
    else:
        return ValidationResult(False, f"unknown object type {type(obj).__name__}")
    bad = _malformed_atom(obj)
    if bad is not None:
        return ValidationResult(False, "malformed label", bad)
    for name, mapping, domain, codomain, member in checks:
        failure = _check_function(name, mapping, domain, codomain, member)
        if failure:
            return failure
    return VALID


def _validate_morphism(f: Morphism) -> ValidationResult:
    if not isinstance(f.domain, f.object_class) or not isinstance(f.codomain, f.object_class):
        return ValidationResult(False, "domain or codomain of the wrong category")
    for side, obj in (("domain", f.domain), ("codomain", f.codomain)):
        report = _validate_object(obj)
        if not report:
            return ValidationResult(False, f"{side} invalid ({report.constraint})", report.element)
    for sort in f.sorts:
        failure = _check_function(
            f"{sort} map", f.component(sort), f.domain.elements(sort), f.codomain.elements(sort)
        )
        if failure:
            return failure

    vmap, emap = f.vertex_map, f.edge_map
    dom, cod = f.domain, f.codomain
    if isinstance(f, QuiverMorphism):
        for e in dom.ordered(EDGE):
            if vmap[dom.source[e]] != cod.source[emap[e]]:
                return ValidationResult(False, "source not preserved", e)
            if vmap[dom.target[e]] != cod.target[emap[e]]:
                return ValidationResult(False, "target not preserved", e)
    elif isinstance(f, HypergraphMorphism):
        for e in dom.ordered(EDGE):
            image = frozenset(vmap[v] for v in dom.endpoints[e])
            if image != cod.endpoints[emap[e]]:
                return ValidationResult(False, "direct-image condition violated", e)
    else:
        imap = f.incidence_map
        for i in dom.ordered(INCIDENCE):
            if vmap[dom.port[i]] != cod.port[imap[i]]:
                return ValidationResult(False, "port not preserved", i)
            if emap[dom.attachment[i]] != cod.attachment[imap[i]]:
                return ValidationResult(False, "attachment not preserved", i)
    return VALID


def _validate_orientation(orientation: Orientation) -> ValidationResult:
    carrier = orientation.carrier
    failure = _check_function("orientation", orientation.sign, carrier.incidences, frozenset((1, -1)))
    if failure:
        return failure
    return VALID


def validate(item: Any) -> ValidationResult:
    """
    Check every structural constraint of an object, morphism or orientation.

    Returns:
        VALID, or a falsy ValidationResult naming the first violated
        constraint and the offending element (in canonical label order).
    """
    if isinstance(item, _ObjectBase):
        return _validate_object(item)
    if isinstance(item, _MorphismBase):
        return _validate_morphism(item)
    if isinstance(item, Orientation):
        return _validate_orientation(item)
    return ValidationResult(False, f"cannot validate {type(item).__name__}")


def check(item: Any) -> Any:
    """
    Validate and return the item.

    Raises:
        ValidationError: If validation fails.
    """
    report = validate(item)
    if not report:
        raise ValidationError(report.constraint, label(report.element) if report.element is not None else None)
    return item


# =============================================================================
# Walk classification
# =============================================================================

class PathMapKind(str, Enum):
    """Kinds of maps out of the length-one incidence path."""
    BACKSTEP = "backstep"
    LOOP = "loop"
    ADJACENCY = "adjacency"


def classify_path_map(f: IncidenceMorphism) -> PathMapKind:
    """
    Classify a morphism from the length-one incidence path.

    A backstep reuses one incidence for both steps. Otherwise the map is
    incidence-monic; it is a loop when both end vertices coincide.

    Raises:
        MorphismMismatchError: If the domain is not the length-one incidence path.
    """
    from .generators import path_r

    if not isinstance(f, IncidenceMorphism) or f.domain != path_r(2):
        raise MorphismMismatchError("classify_path_map needs a morphism out of path_r(2)")
    if len(set(f.incidence_map.values())) < len(f.incidence_map):
        return PathMapKind.BACKSTEP
    if len(set(f.vertex_map.values())) < len(f.vertex_map):
        return PathMapKind.LOOP
    return PathMapKind.ADJACENCY


def is_incidence_monic(kind: PathMapKind) -> bool:
    """Loops and adjacencies are incidence-monic; backsteps are not."""
    return kind is not PathMapKind.BACKSTEP
