"""
Box products, the incidence dual and the Laplacian product.

Product vertices of the box products are plain pairs; edges and
incidences are tagged (1, x, w) for the left factor moving and (2, v, y)
for the right factor moving. The Laplacian product tags vertices {1, 4},
edges {2, 3} and incidences {1, 2, 3, 4}.

Every construction validates its output; a failure is an InternalError.
"""

import logging
from typing import Callable, Dict, Tuple

from .core import (
    EDGE,
    INCIDENCE,
    VERTEX,
    GraphObject,
    HypergraphMorphism,
    IncidenceHypergraph,
    IncidenceMorphism,
    Morphism,
    Quiver,
    QuiverMorphism,
    SetSystemHypergraph,
    make_morphism,
    validate,
)
from .elements import Element, Pair, Tagged
from .errors import InternalError, MorphismMismatchError
from .generators import incidence_unit_r

logger = logging.getLogger(__name__)

# (sort of product element, tag) -> (sort of left coordinate, sort of right coordinate)
LAPLACIAN_SORTS: Dict[str, Dict[int, Tuple[str, str]]] = {
    VERTEX: {1: (VERTEX, VERTEX), 4: (EDGE, EDGE)},
    EDGE: {2: (EDGE, VERTEX), 3: (VERTEX, EDGE)},
    INCIDENCE: {1: (INCIDENCE, VERTEX), 2: (INCIDENCE, EDGE), 3: (EDGE, INCIDENCE), 4: (VERTEX, INCIDENCE)},
}

# (left sort, right sort) -> (tag, sort of the Laplacian product element)
LAPLACIAN_TAGS: Dict[Tuple[str, str], Tuple[int, str]] = {
    coords: (tag, sort)
    for sort, table in LAPLACIAN_SORTS.items()
    for tag, coords in table.items()
}

# Box products: tag 1 moves the left factor, tag 2 the right factor
BOX_SORTS: Dict[str, Dict[int, Tuple[str, str]]] = {
    EDGE: {1: (EDGE, VERTEX), 2: (VERTEX, EDGE)},
    INCIDENCE: {1: (INCIDENCE, VERTEX), 2: (VERTEX, INCIDENCE)},
}


def checked(item, what: str):
    """Validate a constructed object or morphism; failure is a library bug."""
    report = validate(item)
    if not report:
        raise InternalError(f"{what} produced an invalid result: {report.describe()}")
    return item


def _require_same(f: Morphism, g: Morphism, cls: type) -> None:
    if not isinstance(f, cls) or not isinstance(g, cls):
        raise MorphismMismatchError(
            f"Expected two {cls.__name__}s, got {type(f).__name__} and {type(g).__name__}"
        )


# =============================================================================
# Quiver box product
# =============================================================================

def box_q(q: Quiver, p: Quiver) -> Quiver:
    """Box product of quivers: a copy of each factor over every vertex of the other."""
    vertices = {Pair(v, w) for v in q.vertices for w in p.vertices}
    source, target = {}, {}
    for e in q.edges:
        for w in p.vertices:
            edge = Tagged(1, e, w)
            source[edge] = Pair(q.source[e], w)
            target[edge] = Pair(q.target[e], w)
    for v in q.vertices:
        for f in p.edges:
            edge = Tagged(2, v, f)
            source[edge] = Pair(v, p.source[f])
            target[edge] = Pair(v, p.target[f])
    result = Quiver(vertices, source.keys(), source, target)
    return checked(result, "box_q")


def _box_vertex_edge_maps(f: Morphism, g: Morphism) -> Dict[str, Dict]:
    fv, gv = f.vertex_map, g.vertex_map
    vertex_map = {Pair(v, w): Pair(fv[v], gv[w]) for v in f.domain.vertices for w in g.domain.vertices}
    edge_map = {}
    for e in f.domain.edges:
        for w in g.domain.vertices:
            edge_map[Tagged(1, e, w)] = Tagged(1, f.edge_map[e], gv[w])
    for v in f.domain.vertices:
        for e in g.domain.edges:
            edge_map[Tagged(2, v, e)] = Tagged(2, fv[v], g.edge_map[e])
    return {VERTEX: vertex_map, EDGE: edge_map}


def box_q_mor(f: QuiverMorphism, g: QuiverMorphism) -> QuiverMorphism:
    """Action of the quiver box product on morphisms, componentwise."""
    _require_same(f, g, QuiverMorphism)
    result = make_morphism(
        box_q(f.domain, g.domain), box_q(f.codomain, g.codomain), _box_vertex_edge_maps(f, g)
    )
    return checked(result, "box_q_mor")


# =============================================================================
# Set-system box product
# =============================================================================

def box_h(g: SetSystemHypergraph, h: SetSystemHypergraph) -> SetSystemHypergraph:
    """Box product of set-system hypergraphs; preserves the multigraph property."""
    vertices = {Pair(v, w) for v in g.vertices for w in h.vertices}
    endpoints = {}
    for e in g.edges:
        for w in h.vertices:
            endpoints[Tagged(1, e, w)] = frozenset(Pair(x, w) for x in g.endpoints[e])
    for v in g.vertices:
        for f in h.edges:
            endpoints[Tagged(2, v, f)] = frozenset(Pair(v, y) for y in h.endpoints[f])
    result = SetSystemHypergraph(vertices, endpoints.keys(), endpoints)
    return checked(result, "box_h")


def box_h_mor(f: HypergraphMorphism, g: HypergraphMorphism) -> HypergraphMorphism:
    _require_same(f, g, HypergraphMorphism)
    result = make_morphism(
        box_h(f.domain, g.domain), box_h(f.codomain, g.codomain), _box_vertex_edge_maps(f, g)
    )
    return checked(result, "box_h_mor")


# =============================================================================
# Incidence box product
# =============================================================================

def box_r(g: IncidenceHypergraph, h: IncidenceHypergraph) -> IncidenceHypergraph:
    """
    Box product of incidence hypergraphs.

    Incidence (1, i, w) has port (ς(i), w) and attachment (1, ω(i), w);
    incidence (2, v, j) has port (v, ς(j)) and attachment (2, v, ω(j)).
    """
    vertices = {Pair(v, w) for v in g.vertices for w in h.vertices}
    edges = {Tagged(1, e, w) for e in g.edges for w in h.vertices}
    edges |= {Tagged(2, v, f) for v in g.vertices for f in h.edges}
    port, attachment = {}, {}
    for i in g.incidences:
        for w in h.vertices:
            inc = Tagged(1, i, w)
            port[inc] = Pair(g.port[i], w)
            attachment[inc] = Tagged(1, g.attachment[i], w)
    for v in g.vertices:
        for j in h.incidences:
            inc = Tagged(2, v, j)
            port[inc] = Pair(v, h.port[j])
            attachment[inc] = Tagged(2, v, h.attachment[j])
    result = IncidenceHypergraph(vertices, edges, port.keys(), port, attachment)
    return checked(result, "box_r")


def box_r_mor(f: IncidenceMorphism, g: IncidenceMorphism) -> IncidenceMorphism:
    _require_same(f, g, IncidenceMorphism)
    maps = _box_vertex_edge_maps(f, g)
    incidence_map = {}
    for i in f.domain.incidences:
        for w in g.domain.vertices:
            incidence_map[Tagged(1, i, w)] = Tagged(1, f.incidence_map[i], g.vertex_map[w])
    for v in f.domain.vertices:
        for j in g.domain.incidences:
            incidence_map[Tagged(2, v, j)] = Tagged(2, f.vertex_map[v], g.incidence_map[j])
    maps[INCIDENCE] = incidence_map
    result = make_morphism(box_r(f.domain, g.domain), box_r(f.codomain, g.codomain), maps)
    return checked(result, "box_r_mor")


# =============================================================================
# Incidence dual
# =============================================================================

def dual(g: IncidenceHypergraph) -> IncidenceHypergraph:
    """Swap vertices with edges and port with attachment; dual(dual(G)) == G."""
    if not isinstance(g, IncidenceHypergraph):
        raise MorphismMismatchError(f"The incidence dual needs an incidence hypergraph, got a {g.category}")
    return IncidenceHypergraph(
        vertices=g.edges,
        edges=g.vertices,
        incidences=g.incidences,
        port=g.attachment,
        attachment=g.port,
    )


def dual_mor(f: IncidenceMorphism) -> IncidenceMorphism:
    if not isinstance(f, IncidenceMorphism):
        raise MorphismMismatchError("dual_mor needs an incidence morphism")
    return IncidenceMorphism(
        domain=dual(f.domain),
        codomain=dual(f.codomain),
        vertex_map=f.edge_map,
        edge_map=f.vertex_map,
        incidence_map=f.incidence_map,
    )


# =============================================================================
# Laplacian product
# =============================================================================

def laplacian_product(g: IncidenceHypergraph, h: IncidenceHypergraph) -> IncidenceHypergraph:
    """
    Laplacian product G ■ H.

    Vertices: (1, v, w) and (4, e, f). Edges: (2, e, w) and (3, v, f).
    Incidences (1, i, w), (2, i, f), (3, e, j), (4, v, j) with

        port (1,x,y)=(1,ςx,y)  (2,x,y)=(4,ωx,y)  (3,x,y)=(4,x,ωy)  (4,x,y)=(1,x,ςy)
        att  (1,x,y)=(2,ωx,y)  (2,x,y)=(3,ςx,y)  (3,x,y)=(2,x,ςy)  (4,x,y)=(3,x,ωy)
    """
    vertices = {Tagged(1, v, w) for v in g.vertices for w in h.vertices}
    vertices |= {Tagged(4, e, f) for e in g.edges for f in h.edges}
    edges = {Tagged(2, e, w) for e in g.edges for w in h.vertices}
    edges |= {Tagged(3, v, f) for v in g.vertices for f in h.edges}
    port, attachment = {}, {}
    for i in g.incidences:
        for w in h.vertices:
            inc = Tagged(1, i, w)
            port[inc] = Tagged(1, g.port[i], w)
            attachment[inc] = Tagged(2, g.attachment[i], w)
        for f in h.edges:
            inc = Tagged(2, i, f)
            port[inc] = Tagged(4, g.attachment[i], f)
            attachment[inc] = Tagged(3, g.port[i], f)
    for j in h.incidences:
        for e in g.edges:
            inc = Tagged(3, e, j)
            port[inc] = Tagged(4, e, h.attachment[j])
            attachment[inc] = Tagged(2, e, h.port[j])
        for v in g.vertices:
            inc = Tagged(4, v, j)
            port[inc] = Tagged(1, v, h.port[j])
            attachment[inc] = Tagged(3, v, h.attachment[j])
    result = IncidenceHypergraph(vertices, edges, port.keys(), port, attachment)
    logger.debug(f"Laplacian product: {result.describe()}")
    return checked(result, "laplacian_product")


def laplacian_mor(f: IncidenceMorphism, g: IncidenceMorphism) -> IncidenceMorphism:
    """Action of the Laplacian product on morphisms: each coordinate mapped by its sort."""
    _require_same(f, g, IncidenceMorphism)
    maps = {}
    for sort, table in LAPLACIAN_SORTS.items():
        component = {}
        for tag, (left_sort, right_sort) in table.items():
            left_map, right_map = f.component(left_sort), g.component(right_sort)
            for x, x_image in left_map.items():
                for y, y_image in right_map.items():
                    component[Tagged(tag, x, y)] = Tagged(tag, x_image, y_image)
        maps[sort] = component
    result = make_morphism(
        laplacian_product(f.domain, g.domain), laplacian_product(f.codomain, g.codomain), maps
    )
    return checked(result, "laplacian_mor")


def incidence_prism(g: IncidenceHypergraph) -> IncidenceHypergraph:
    """G ■ I⋄({1}): a copy of G and of its dual joined by rung incidences."""
    return laplacian_product(g, incidence_unit_r())


def prism_inclusion(g: IncidenceHypergraph) -> IncidenceMorphism:
    """Inclusion of G into its prism: v -> (1,v,v0), e -> (2,e,v0), i -> (1,i,v0)."""
    maps = {
        VERTEX: {v: Tagged(1, v, "v0") for v in g.vertices},
        EDGE: {e: Tagged(2, e, "v0") for e in g.edges},
        INCIDENCE: {i: Tagged(1, i, "v0") for i in g.incidences},
    }
    return checked(make_morphism(g, incidence_prism(g), maps), "prism_inclusion")


def prism_dual_inclusion(g: IncidenceHypergraph) -> IncidenceMorphism:
    """Inclusion of the dual into the prism: e -> (4,e,e0), v -> (3,v,e0), i -> (2,i,e0)."""
    maps = {
        VERTEX: {e: Tagged(4, e, "e0") for e in g.edges},
        EDGE: {v: Tagged(3, v, "e0") for v in g.vertices},
        INCIDENCE: {i: Tagged(2, i, "e0") for i in g.incidences},
    }
    return checked(make_morphism(dual(g), incidence_prism(g), maps), "prism_dual_inclusion")


# =============================================================================
# Dispatch
# =============================================================================

PRODUCTS: Dict[str, Callable[[GraphObject, GraphObject], GraphObject]] = {
    "box-q": box_q,
    "box-h": box_h,
    "box-m": box_h,
    "box-r": box_r,
    "laplacian": laplacian_product,
}

PRODUCT_MORPHISMS: Dict[str, Callable[[Morphism, Morphism], Morphism]] = {
    "box-q": box_q_mor,
    "box-h": box_h_mor,
    "box-m": box_h_mor,
    "box-r": box_r_mor,
    "laplacian": laplacian_mor,
}

PRODUCT_CATEGORIES = {
    "box-q": Quiver,
    "box-h": SetSystemHypergraph,
    "box-m": SetSystemHypergraph,
    "box-r": IncidenceHypergraph,
    "laplacian": IncidenceHypergraph,
}


def product(kind: str, a: GraphObject, b: GraphObject) -> GraphObject:
    """
    Product of two objects by kind name.

    Raises:
        MorphismMismatchError: If the objects do not belong to the kind's category,
            or "box-m" is given objects that are not multigraphs.
    """
    if kind not in PRODUCTS:
        raise MorphismMismatchError(f"Unknown product kind {kind!r}")
    expected = PRODUCT_CATEGORIES[kind]
    if not isinstance(a, expected) or not isinstance(b, expected):
        raise MorphismMismatchError(
            f"Product {kind} needs two {expected.category} objects, got {a.category} and {b.category}"
        )
    if kind == "box-m" and not (a.is_multigraph and b.is_multigraph):
        raise MorphismMismatchError("Product box-m needs multigraphs")
    return PRODUCTS[kind](a, b)


def product_mor(kind: str, f: Morphism, g: Morphism) -> Morphism:
    if kind not in PRODUCT_MORPHISMS:
        raise MorphismMismatchError(f"Unknown product kind {kind!r}")
    return PRODUCT_MORPHISMS[kind](f, g)
