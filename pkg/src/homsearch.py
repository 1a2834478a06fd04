"""
Exhaustive homomorphism search.

A single backtracking engine serves all three categories. Each category
supplies a list of driving steps (incidences for incidence hypergraphs,
edges for quivers and set-systems) whose images force the images of the
attached vertices and edges; elements untouched by any driving step are
assigned last. Candidates are tried in canonical label order, so results
come out in the same order on every run.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from .core import (
    EDGE,
    INCIDENCE,
    VERTEX,
    GraphObject,
    IncidenceHypergraph,
    Morphism,
    Quiver,
    SetSystemHypergraph,
    make_morphism,
)
from .elements import Element, label
from .errors import AnchorError, HomCountOverflowError, InputError, MorphismMismatchError

logger = logging.getLogger(__name__)

INT64_MAX = 2**63 - 1

# Accepted values for the monic filter
MONIC_SORTS = {"incidence": INCIDENCE, "vertex": VERTEX, "edge": EDGE}

_UNSET = object()


@dataclass(frozen=True)
class AnchorConstraint:
    """Required images: (sort, domain element, codomain element) triples."""

    pairs: Tuple[Tuple[str, Element, Element], ...] = ()

    @classmethod
    def of(
        cls,
        vertices: Optional[Mapping] = None,
        edges: Optional[Mapping] = None,
        incidences: Optional[Mapping] = None,
    ) -> "AnchorConstraint":
        pairs = []
        for sort, mapping in ((VERTEX, vertices), (EDGE, edges), (INCIDENCE, incidences)):
            for x, y in (mapping or {}).items():
                pairs.append((sort, x, y))
        return cls(tuple(pairs))

    def by_sort(self) -> Dict[str, Dict[Element, Element]]:
        result: Dict[str, Dict[Element, Element]] = {}
        for sort, x, y in self.pairs:
            result.setdefault(sort, {})[x] = y
        return result

    def check(self, domain: GraphObject, codomain: GraphObject) -> None:
        """
        Raises:
            AnchorError: If an anchor names an unknown element or conflicts.
        """
        seen: Dict[Tuple[str, Element], Element] = {}
        for sort, x, y in self.pairs:
            if sort not in domain.sorts:
                raise AnchorError(f"{domain.category} has no sort {sort!r}")
            if x not in domain.elements(sort):
                raise AnchorError(f"Anchor source {label(x)} is not a {sort} of the domain")
            if y not in codomain.elements(sort):
                raise AnchorError(f"Anchor image {label(y)} is not a {sort} of the codomain")
            if seen.setdefault((sort, x), y) != y:
                raise AnchorError(f"Conflicting anchors for {label(x)}")

    def matches(self, f: Morphism) -> bool:
        """True if f sends every anchored element to its required image."""
        return all(f.component(sort)[x] == y for sort, x, y in self.pairs)

    def __bool__(self) -> bool:
        return bool(self.pairs)


NO_ANCHORS = AnchorConstraint()

Monic = Union[None, str, Iterable[str]]


def _monic_sorts(monic: Monic) -> FrozenSet[str]:
    if monic is None:
        return frozenset()
    names = [monic] if isinstance(monic, str) else list(monic)
    sorts = set()
    for name in names:
        if name in MONIC_SORTS:
            sorts.add(MONIC_SORTS[name])
        elif name in MONIC_SORTS.values():
            sorts.add(name)
        else:
            raise InputError(f"Unknown monic filter {name!r}")
    return frozenset(sorts)


# =============================================================================
# Backtracking engine
# =============================================================================

class _HomSearch:
    """
    Backtracking over driving steps, then free elements.

    Subclasses provide the driving steps, the set of elements they touch
    and the candidate assignments for each step.
    """

    def __init__(
        self,
        domain: GraphObject,
        codomain: GraphObject,
        anchors: AnchorConstraint = NO_ANCHORS,
        injective: FrozenSet[str] = frozenset(),
        compatible: Optional[Callable[[str, Element, Element], bool]] = None,
    ):
        self.domain = domain
        self.codomain = codomain
        self.anchors = anchors
        self.injective = injective
        self.compatible = compatible
        self.assign: Dict[str, Dict[Element, Element]] = {sort: {} for sort in domain.sorts}
        self.used: Dict[str, Counter] = {sort: Counter() for sort in injective}
        self.steps = self.driving_steps()
        touched = self.touched()
        self.free = [
            (sort, x)
            for sort in domain.sorts
            for x in domain.ordered(sort)
            if x not in touched.get(sort, ())
        ]

    # -- category hooks --------------------------------------------------------

    def driving_steps(self) -> List[Element]:
        raise NotImplementedError

    def touched(self) -> Dict[str, set]:
        raise NotImplementedError

    def options(self, x: Element) -> Iterator[List[Tuple[str, Element, Element]]]:
        raise NotImplementedError

    # -- engine ----------------------------------------------------------------

    def _apply(self, assignments) -> Optional[List[Tuple[str, Element]]]:
        added: List[Tuple[str, Element]] = []
        for sort, key, value in assignments:
            current = self.assign[sort].get(key, _UNSET)
            if current is not _UNSET:
                if current != value:
                    self._undo(added)
                    return None
                continue
            if self.compatible is not None and not self.compatible(sort, key, value):
                self._undo(added)
                return None
            if sort in self.injective:
                if self.used[sort][value]:
                    self._undo(added)
                    return None
                self.used[sort][value] += 1
            self.assign[sort][key] = value
            added.append((sort, key))
        return added

    def _undo(self, added: List[Tuple[str, Element]]) -> None:
        for sort, key in reversed(added):
            value = self.assign[sort].pop(key)
            if sort in self.injective:
                self.used[sort][value] -= 1

    def _free_options(self, sort: str, x: Element) -> Iterator[List[Tuple[str, Element, Element]]]:
        if x in self.assign[sort]:
            yield []
            return
        for y in self.codomain.ordered(sort):
            yield [(sort, x, y)]

    def _walk(self, depth: int, stop: int) -> Iterator[None]:
        if depth == stop:
            yield None
            return
        if depth < len(self.steps):
            choices = self.options(self.steps[depth])
        else:
            sort, x = self.free[depth - len(self.steps)]
            choices = self._free_options(sort, x)
        for assignments in choices:
            added = self._apply(assignments)
            if added is None:
                continue
            yield from self._walk(depth + 1, stop)
            self._undo(added)

    def _seed(self) -> bool:
        return self._apply(self.anchors.pairs) is not None

    def assignments(self) -> Iterator[Dict[str, Dict[Element, Element]]]:
        """Yield each complete assignment (live dicts; copy before keeping)."""
        if not self._seed():
            return
        for _ in self._walk(0, len(self.steps) + len(self.free)):
            yield self.assign

    def morphisms(self) -> Iterator[Morphism]:
        for assign in self.assignments():
            yield make_morphism(self.domain, self.codomain, assign)

    def count(self) -> int:
        """Number of homs; free elements contribute a product factor when unconstrained."""
        if not self._seed():
            return 0
        if self.injective or self.compatible is not None:
            total = 0
            for _ in self._walk(0, len(self.steps) + len(self.free)):
                total += 1
                if total > INT64_MAX:
                    raise HomCountOverflowError("Hom count exceeds 64 bits")
            return total

        driving = 0
        for _ in self._walk(0, len(self.steps)):
            driving += 1
        factor = 1
        for sort, x in self.free:
            if x not in self.assign[sort]:
                factor *= len(self.codomain.elements(sort))
        total = driving * factor
        if total > INT64_MAX:
            raise HomCountOverflowError(
                f"Hom count {driving} x {factor} exceeds 64 bits"
            )
        return total


class _IncidenceSearch(_HomSearch):
    """Incidences first; each incidence image forces its port and attachment."""

    def __init__(self, domain: IncidenceHypergraph, codomain: IncidenceHypergraph, *args, **kwargs):
        self.by_pair: Dict[Tuple[Element, Element], List[Element]] = {}
        self.by_port: Dict[Element, List[Element]] = {}
        self.by_attachment: Dict[Element, List[Element]] = {}
        for j in codomain.ordered(INCIDENCE):
            v, e = codomain.port[j], codomain.attachment[j]
            self.by_pair.setdefault((v, e), []).append(j)
            self.by_port.setdefault(v, []).append(j)
            self.by_attachment.setdefault(e, []).append(j)
        super().__init__(domain, codomain, *args, **kwargs)

    def driving_steps(self) -> List[Element]:
        return self.domain.ordered(INCIDENCE)

    def touched(self) -> Dict[str, set]:
        return {
            VERTEX: set(self.domain.port.values()),
            EDGE: set(self.domain.attachment.values()),
            INCIDENCE: set(self.domain.incidences),
        }

    def options(self, i: Element) -> Iterator[List[Tuple[str, Element, Element]]]:
        dom, cod = self.domain, self.codomain
        v = self.assign[VERTEX].get(dom.port[i])
        e = self.assign[EDGE].get(dom.attachment[i])
        fixed = self.assign[INCIDENCE].get(i)
        if fixed is not None:
            candidates = [fixed]
        elif v is not None and e is not None:
            candidates = self.by_pair.get((v, e), [])
        elif v is not None:
            candidates = self.by_port.get(v, [])
        elif e is not None:
            candidates = self.by_attachment.get(e, [])
        else:
            candidates = cod.ordered(INCIDENCE)
        for j in candidates:
            yield [
                (INCIDENCE, i, j),
                (VERTEX, dom.port[i], cod.port[j]),
                (EDGE, dom.attachment[i], cod.attachment[j]),
            ]


class _QuiverSearch(_HomSearch):
    """Edges first; each edge image forces its source and target."""

    def __init__(self, domain: Quiver, codomain: Quiver, *args, **kwargs):
        self.by_ends: Dict[Tuple[Element, Element], List[Element]] = {}
        self.by_source: Dict[Element, List[Element]] = {}
        self.by_target: Dict[Element, List[Element]] = {}
        for f in codomain.ordered(EDGE):
            s, t = codomain.source[f], codomain.target[f]
            self.by_ends.setdefault((s, t), []).append(f)
            self.by_source.setdefault(s, []).append(f)
            self.by_target.setdefault(t, []).append(f)
        super().__init__(domain, codomain, *args, **kwargs)

    def driving_steps(self) -> List[Element]:
        return self.domain.ordered(EDGE)

    def touched(self) -> Dict[str, set]:
        return {
            VERTEX: set(self.domain.source.values()) | set(self.domain.target.values()),
            EDGE: set(self.domain.edges),
        }

    def options(self, e: Element) -> Iterator[List[Tuple[str, Element, Element]]]:
        dom, cod = self.domain, self.codomain
        s = self.assign[VERTEX].get(dom.source[e])
        t = self.assign[VERTEX].get(dom.target[e])
        fixed = self.assign[EDGE].get(e)
        if fixed is not None:
            candidates = [fixed]
        elif s is not None and t is not None:
            candidates = self.by_ends.get((s, t), [])
        elif s is not None:
            candidates = self.by_source.get(s, [])
        elif t is not None:
            candidates = self.by_target.get(t, [])
        else:
            candidates = cod.ordered(EDGE)
        for f in candidates:
            yield [
                (EDGE, e, f),
                (VERTEX, dom.source[e], cod.source[f]),
                (VERTEX, dom.target[e], cod.target[f]),
            ]


class _SetSystemSearch(_HomSearch):
    """Edges first; endpoints are spread over the image edge so the direct image matches."""

    def driving_steps(self) -> List[Element]:
        return self.domain.ordered(EDGE)

    def touched(self) -> Dict[str, set]:
        members = set()
        for vs in self.domain.endpoints.values():
            members |= vs
        return {VERTEX: members, EDGE: set(self.domain.edges)}

    def options(self, e: Element) -> Iterator[List[Tuple[str, Element, Element]]]:
        dom, cod = self.domain, self.codomain
        members = sorted(dom.endpoints[e], key=label)
        vmap = self.assign[VERTEX]
        images = {vmap[v] for v in members if v in vmap}
        unassigned = [v for v in members if v not in vmap]
        fixed = self.assign[EDGE].get(e)
        candidates = [fixed] if fixed is not None else cod.ordered(EDGE)
        for f in candidates:
            target = cod.endpoints[f]
            if not images <= target or len(target) > len(members):
                continue
            if not unassigned:
                if images == target:
                    yield [(EDGE, e, f)]
                continue
            choices = sorted(target, key=label)
            for combo in itertools.product(choices, repeat=len(unassigned)):
                if images.union(combo) == target:
                    yield [(EDGE, e, f)] + [(VERTEX, v, w) for v, w in zip(unassigned, combo)]


_SEARCHES = {
    IncidenceHypergraph: _IncidenceSearch,
    Quiver: _QuiverSearch,
    SetSystemHypergraph: _SetSystemSearch,
}


def _search(
    domain: GraphObject,
    codomain: GraphObject,
    anchors: Optional[AnchorConstraint] = None,
    monic: Monic = None,
    compatible: Optional[Callable[[str, Element, Element], bool]] = None,
) -> _HomSearch:
    if type(domain) is not type(codomain):
        raise MorphismMismatchError(
            f"Cannot search homs from a {domain.category} to a {codomain.category}"
        )
    anchors = anchors or NO_ANCHORS
    anchors.check(domain, codomain)
    cls = _SEARCHES[type(domain)]
    return cls(domain, codomain, anchors, _monic_sorts(monic), compatible)


# =============================================================================
# Public API
# =============================================================================

def canonical_key(f: Morphism) -> Tuple[str, ...]:
    """Image labels of the domain elements, sort by sort in label order."""
    return tuple(
        label(f.component(sort)[x]) for sort in f.sorts for x in f.domain.ordered(sort)
    )


def iter_homs(
    domain: GraphObject,
    codomain: GraphObject,
    anchors: Optional[AnchorConstraint] = None,
    monic: Monic = None,
) -> Iterator[Morphism]:
    """
    Lazily yield every morphism domain -> codomain in search order:
    incidences (or edges) first, isolated vertices last.

    Args:
        domain: Source object.
        codomain: Target object of the same category.
        anchors: Required images for some domain elements.
        monic: Restrict to maps injective on "incidence", "vertex" or "edge".

    Raises:
        AnchorError: If an anchor references an unknown element.
        MorphismMismatchError: If the objects belong to different categories.
    """
    return _search(domain, codomain, anchors, monic).morphisms()


def enumerate_homs(
    domain: GraphObject,
    codomain: GraphObject,
    anchors: Optional[AnchorConstraint] = None,
    monic: Monic = None,
) -> List[Morphism]:
    """
    Every morphism domain -> codomain satisfying the anchors, sorted
    lexicographically by image labels with domain elements taken sort by sort
    in label order.
    """
    result = sorted(iter_homs(domain, codomain, anchors, monic), key=canonical_key)
    logger.debug(
        f"Enumerated {len(result)} homs ({domain.describe()}) -> ({codomain.describe()})"
    )
    return result


def count_homs(
    domain: GraphObject,
    codomain: GraphObject,
    anchors: Optional[AnchorConstraint] = None,
    monic: Monic = None,
) -> int:
    """
    Number of morphisms without building them.

    Raises:
        HomCountOverflowError: If the count does not fit in 64 bits.
    """
    return _search(domain, codomain, anchors, monic).count()


@lru_cache(maxsize=512)
def hom_set(domain: GraphObject, codomain: GraphObject) -> Tuple[Morphism, ...]:
    """Cached unanchored hom-set, used by the exponential constructions."""
    return tuple(enumerate_homs(domain, codomain))


# =============================================================================
# Isomorphism
# =============================================================================

def degree_signature(obj: GraphObject, sort: str, x: Element) -> Tuple:
    """Local invariant preserved by isomorphisms, used for pruning."""
    if isinstance(obj, IncidenceHypergraph):
        if sort == VERTEX:
            return (_incidence_degrees(obj)[0][x],)
        if sort == EDGE:
            return (_incidence_degrees(obj)[1][x],)
        vdeg, edeg = _incidence_degrees(obj)
        return (vdeg[obj.port[x]], edeg[obj.attachment[x]])
    if isinstance(obj, Quiver):
        if sort == VERTEX:
            out = sum(1 for s in obj.source.values() if s == x)
            into = sum(1 for t in obj.target.values() if t == x)
            return (out, into)
        return (obj.source[x] == obj.target[x],)
    if sort == VERTEX:
        return (sum(1 for vs in obj.endpoints.values() if x in vs),)
    return (len(obj.endpoints[x]),)


@lru_cache(maxsize=256)
def _incidence_degrees(obj: IncidenceHypergraph) -> Tuple[Counter, Counter]:
    return Counter(obj.port.values()), Counter(obj.attachment.values())


@lru_cache(maxsize=256)
def _signature_table(obj: GraphObject) -> Dict[str, Dict[Element, Tuple]]:
    return {
        sort: {x: degree_signature(obj, sort, x) for x in obj.elements(sort)}
        for sort in obj.sorts
    }


@dataclass(frozen=True)
class IsomorphismResult:
    """Outcome of is_isomorphic; truthy when an isomorphism exists."""

    found: bool
    witness: Optional[Morphism] = None

    def __bool__(self) -> bool:
        return self.found


def is_isomorphic(a: GraphObject, b: GraphObject) -> IsomorphismResult:
    """
    Search for an isomorphism a -> b.

    Prunes on sort cardinalities and degree multisets, then runs an
    injective hom search restricted to degree-compatible assignments.
    """
    if type(a) is not type(b):
        return IsomorphismResult(False)
    if a.sizes() != b.sizes():
        return IsomorphismResult(False)
    left, right = _signature_table(a), _signature_table(b)
    for sort in a.sorts:
        if Counter(left[sort].values()) != Counter(right[sort].values()):
            return IsomorphismResult(False)

    def compatible(sort: str, x: Element, y: Element) -> bool:
        return left[sort][x] == right[sort][y]

    search = _search(a, b, None, a.sorts, compatible)
    witness = next(search.morphisms(), None)
    return IsomorphismResult(witness is not None, witness)
