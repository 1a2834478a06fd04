"""
Functors between the categories and their monoidal comparison maps.

U undirects quivers, D⃗ turns a multigraph into its associated digraph,
N and Del move between multigraphs and set-system hypergraphs, 𝕀 forms
incidences from a set system and Υ⋄ draws an incidence hypergraph as its
bipartite incidence digraph. Comparison maps (ψ, Φ, Ψ and their unit
versions) are explicit relabelings checked to be isomorphisms.
"""

import logging

from .core import (
    EDGE,
    INCIDENCE,
    VERTEX,
    HypergraphMorphism,
    IncidenceHypergraph,
    IncidenceMorphism,
    Morphism,
    Quiver,
    QuiverMorphism,
    SetSystemHypergraph,
    compose,
    make_morphism,
)
from .elements import Arc, Inj, Pair, Tagged
from .errors import InputError, MorphismMismatchError
from .generators import vertex_unit_h, vertex_unit_q, vertex_unit_r
from .products import box_h, box_h_mor, box_q, box_r, checked, laplacian_product

logger = logging.getLogger(__name__)


def _expect(item, cls: type, what: str) -> None:
    if not isinstance(item, cls):
        raise MorphismMismatchError(f"{what} expects a {cls.__name__}, got {type(item).__name__}")


# =============================================================================
# U: quivers -> multigraphs
# =============================================================================

def undirect(q: Quiver) -> SetSystemHypergraph:
    """Forget directions: endpoints(e) = {source(e), target(e)}."""
    _expect(q, Quiver, "undirect")
    endpoints = {e: frozenset((q.source[e], q.target[e])) for e in q.edges}
    return SetSystemHypergraph(q.vertices, q.edges, endpoints)


def undirect_mor(f: QuiverMorphism) -> HypergraphMorphism:
    _expect(f, QuiverMorphism, "undirect_mor")
    return make_morphism(
        undirect(f.domain), undirect(f.codomain), {VERTEX: f.vertex_map, EDGE: f.edge_map}
    )


# =============================================================================
# D⃗: multigraphs -> quivers
# =============================================================================

def _orderings(endpoints):
    members = list(endpoints)
    if len(members) == 1:
        return [(members[0], members[0])]
    x, y = members
    return [(x, y), (y, x)]


def associated_digraph(g: SetSystemHypergraph) -> Quiver:
    """
    Arcs (e, x, y) for every ordering of the endpoints of e: two opposed
    arcs per proper edge, one arc per loop.

    Raises:
        InputError: If g is not a multigraph.
    """
    _expect(g, SetSystemHypergraph, "associated_digraph")
    if not g.is_multigraph:
        raise InputError("Associated digraph needs a multigraph")
    arcs = [Arc(e, x, y) for e in g.edges for x, y in _orderings(g.endpoints[e])]
    return Quiver(
        g.vertices,
        arcs,
        {arc: arc.tail for arc in arcs},
        {arc: arc.head for arc in arcs},
    )


def associated_digraph_mor(f: HypergraphMorphism) -> QuiverMorphism:
    _expect(f, HypergraphMorphism, "associated_digraph_mor")
    domain, codomain = associated_digraph(f.domain), associated_digraph(f.codomain)
    vmap = f.vertex_map
    edge_map = {arc: Arc(f.edge_map[arc.edge], vmap[arc.tail], vmap[arc.head]) for arc in domain.edges}
    return checked(make_morphism(domain, codomain, {VERTEX: vmap, EDGE: edge_map}), "associated_digraph_mor")


def digraph_unit(q: Quiver) -> QuiverMorphism:
    """θ⋄_Q: Q -> D⃗U(Q), e -> (e, source(e), target(e))."""
    _expect(q, Quiver, "digraph_unit")
    edge_map = {e: Arc(e, q.source[e], q.target[e]) for e in q.edges}
    vertex_map = {v: v for v in q.vertices}
    return checked(
        make_morphism(q, associated_digraph(undirect(q)), {VERTEX: vertex_map, EDGE: edge_map}),
        "digraph_unit",
    )


def undirect_counit(g: SetSystemHypergraph) -> HypergraphMorphism:
    """θ_G: U D⃗(G) -> G, (e, x, y) -> e."""
    domain = undirect(associated_digraph(g))
    edge_map = {arc: arc.edge for arc in domain.edges}
    vertex_map = {v: v for v in g.vertices}
    return checked(make_morphism(domain, g, {VERTEX: vertex_map, EDGE: edge_map}), "undirect_counit")


def psi_digraph(g: SetSystemHypergraph, h: SetSystemHypergraph) -> QuiverMorphism:
    """
    ψ_{G,H}: D⃗(G) □⃗ D⃗(H) -> D⃗(G □ H).

    (1, (e,v,z), w) -> ((1,e,w), (v,w), (z,w)) and
    (2, v, (f,w,u)) -> ((2,v,f), (v,w), (v,u)); identity on vertices.
    """
    domain = box_q(associated_digraph(g), associated_digraph(h))
    codomain = associated_digraph(box_h(g, h))
    edge_map = {}
    for edge in domain.edges:
        if edge.tag == 1:
            arc, w = edge.left, edge.right
            edge_map[edge] = Arc(Tagged(1, arc.edge, w), Pair(arc.tail, w), Pair(arc.head, w))
        else:
            v, arc = edge.left, edge.right
            edge_map[edge] = Arc(Tagged(2, v, arc.edge), Pair(v, arc.tail), Pair(v, arc.head))
    vertex_map = {v: v for v in domain.vertices}
    return checked(make_morphism(domain, codomain, {VERTEX: vertex_map, EDGE: edge_map}), "psi_digraph")


def psi_digraph_composite(g: SetSystemHypergraph, h: SetSystemHypergraph) -> QuiverMorphism:
    """ψ_{G,H} assembled as D⃗(θ_G □ θ_H) ∘ θ⋄ on D⃗(G) □⃗ D⃗(H)."""
    unit = digraph_unit(box_q(associated_digraph(g), associated_digraph(h)))
    counits = box_h_mor(undirect_counit(g), undirect_counit(h))
    return compose(associated_digraph_mor(counits), unit)


def psi_digraph_unit() -> QuiverMorphism:
    """ψ•: V⃗⋄({1}) -> D⃗(V⋄({1}))."""
    return checked(
        make_morphism(vertex_unit_q(), associated_digraph(vertex_unit_h()), {VERTEX: {"v0": "v0"}}),
        "psi_digraph_unit",
    )


# =============================================================================
# N and Del
# =============================================================================

def inclusion_n(g: SetSystemHypergraph) -> SetSystemHypergraph:
    """N: a multigraph viewed as a set-system hypergraph (same data)."""
    _expect(g, SetSystemHypergraph, "inclusion_n")
    if not g.is_multigraph:
        raise InputError("N applies to multigraphs only")
    return g


def delete(h: SetSystemHypergraph) -> SetSystemHypergraph:
    """Del: drop every edge whose endpoint set does not have size 1 or 2."""
    _expect(h, SetSystemHypergraph, "delete")
    kept = {e: vs for e, vs in h.endpoints.items() if len(vs) in (1, 2)}
    return SetSystemHypergraph(h.vertices, kept.keys(), kept)


def delete_mor(f: HypergraphMorphism) -> HypergraphMorphism:
    _expect(f, HypergraphMorphism, "delete_mor")
    domain = delete(f.domain)
    edge_map = {e: f.edge_map[e] for e in domain.edges}
    return checked(
        make_morphism(domain, delete(f.codomain), {VERTEX: f.vertex_map, EDGE: edge_map}), "delete_mor"
    )


def del_inclusion(h: SetSystemHypergraph) -> HypergraphMorphism:
    """N Del(H) -> H, identity on the surviving elements."""
    domain = delete(h)
    return checked(
        make_morphism(
            domain, h,
            {VERTEX: {v: v for v in domain.vertices}, EDGE: {e: e for e in domain.edges}},
        ),
        "del_inclusion",
    )


# =============================================================================
# 𝕀: set-system hypergraphs -> incidence hypergraphs
# =============================================================================

def incidence_forming(h: SetSystemHypergraph) -> IncidenceHypergraph:
    """Incidences (v, e) for every endpoint v of every edge e."""
    _expect(h, SetSystemHypergraph, "incidence_forming")
    incidences = [Pair(v, e) for e in h.edges for v in h.endpoints[e]]
    return IncidenceHypergraph(
        h.vertices,
        h.edges,
        incidences,
        {i: i.left for i in incidences},
        {i: i.right for i in incidences},
    )


def incidence_forming_mor(f: HypergraphMorphism) -> IncidenceMorphism:
    _expect(f, HypergraphMorphism, "incidence_forming_mor")
    domain = incidence_forming(f.domain)
    incidence_map = {i: Pair(f.vertex_map[i.left], f.edge_map[i.right]) for i in domain.incidences}
    return checked(
        make_morphism(
            domain, incidence_forming(f.codomain),
            {VERTEX: f.vertex_map, EDGE: f.edge_map, INCIDENCE: incidence_map},
        ),
        "incidence_forming_mor",
    )


def phi_incidence(g: SetSystemHypergraph, h: SetSystemHypergraph) -> IncidenceMorphism:
    """
    Φ_{G,H}: 𝕀(G) □̌ 𝕀(H) -> 𝕀(G □ H).

    (1, (v,e), w) -> ((v,w), (1,e,w)) and (2, v, (w,f)) -> ((v,w), (2,v,f));
    identity on vertices and edges.
    """
    domain = box_r(incidence_forming(g), incidence_forming(h))
    codomain = incidence_forming(box_h(g, h))
    incidence_map = {}
    for inc in domain.incidences:
        if inc.tag == 1:
            (v, e), w = (inc.left.left, inc.left.right), inc.right
            incidence_map[inc] = Pair(Pair(v, w), Tagged(1, e, w))
        else:
            v, (w, f) = inc.left, (inc.right.left, inc.right.right)
            incidence_map[inc] = Pair(Pair(v, w), Tagged(2, v, f))
    maps = {
        VERTEX: {v: v for v in domain.vertices},
        EDGE: {e: e for e in domain.edges},
        INCIDENCE: incidence_map,
    }
    return checked(make_morphism(domain, codomain, maps), "phi_incidence")


# =============================================================================
# Υ⋄ and UΥ⋄
# =============================================================================

def bipartite_incidence(g: IncidenceHypergraph) -> Quiver:
    """Υ⋄: vertices (1, v) and (2, e); one arc (1, ς(i)) -> (2, ω(i)) per incidence."""
    _expect(g, IncidenceHypergraph, "bipartite_incidence")
    vertices = {Inj(1, v) for v in g.vertices} | {Inj(2, e) for e in g.edges}
    return Quiver(
        vertices,
        g.incidences,
        {i: Inj(1, g.port[i]) for i in g.incidences},
        {i: Inj(2, g.attachment[i]) for i in g.incidences},
    )


def bipartite_incidence_mor(f: IncidenceMorphism) -> QuiverMorphism:
    _expect(f, IncidenceMorphism, "bipartite_incidence_mor")
    vertex_map = {Inj(1, v): Inj(1, w) for v, w in f.vertex_map.items()}
    vertex_map.update({Inj(2, e): Inj(2, x) for e, x in f.edge_map.items()})
    return checked(
        make_morphism(
            bipartite_incidence(f.domain), bipartite_incidence(f.codomain),
            {VERTEX: vertex_map, EDGE: f.incidence_map},
        ),
        "bipartite_incidence_mor",
    )


def u_bipartite(g: IncidenceHypergraph) -> SetSystemHypergraph:
    """UΥ⋄: the undirected bipartite incidence graph."""
    return undirect(bipartite_incidence(g))


def u_bipartite_mor(f: IncidenceMorphism) -> HypergraphMorphism:
    return undirect_mor(bipartite_incidence_mor(f))


# Vertex tags of UΥ⋄(G ■ H) indexed by the injection tags of the two factors
_PSI_VERTEX = {(1, 1): (1, 1), (2, 1): (2, 2), (1, 2): (2, 3), (2, 2): (1, 4)}


def psi_bipartite(g: IncidenceHypergraph, h: IncidenceHypergraph) -> HypergraphMorphism:
    """
    Ψ_{G,H}: UΥ⋄(G) □ UΥ⋄(H) -> UΥ⋄(G ■ H).

    Vertices ((a,x),(b,y)) go to (c, (t,x,y)) for the injection c and
    product tag t fixed by (a, b). Edges: (1,i,(1,w)) -> (1,i,w),
    (1,i,(2,f)) -> (2,i,f), (2,(1,v),j) -> (4,v,j), (2,(2,e),j) -> (3,e,j).
    """
    domain = box_h(u_bipartite(g), u_bipartite(h))
    codomain = u_bipartite(laplacian_product(g, h))
    vertex_map = {}
    for pair in domain.vertices:
        side, tag = _PSI_VERTEX[(pair.left.tag, pair.right.tag)]
        vertex_map[pair] = Inj(side, Tagged(tag, pair.left.value, pair.right.value))
    edge_map = {}
    for edge in domain.edges:
        if edge.tag == 1:
            tag = 1 if edge.right.tag == 1 else 2
            edge_map[edge] = Tagged(tag, edge.left, edge.right.value)
        else:
            tag = 4 if edge.left.tag == 1 else 3
            edge_map[edge] = Tagged(tag, edge.left.value, edge.right)
    return checked(make_morphism(domain, codomain, {VERTEX: vertex_map, EDGE: edge_map}), "psi_bipartite")


def psi_bipartite_unit() -> HypergraphMorphism:
    """Ψ•: V⋄({1}) -> UΥ⋄(V̌⋄({1})), v0 -> (1, v0)."""
    return checked(
        make_morphism(vertex_unit_h(), u_bipartite(vertex_unit_r()), {VERTEX: {"v0": Inj(1, "v0")}}),
        "psi_bipartite_unit",
    )


FUNCTORS = {
    "U": undirect,
    "D": associated_digraph,
    "N": inclusion_n,
    "Del": delete,
    "I": incidence_forming,
    "UpsilonDiamond": bipartite_incidence,
    "UUpsilonDiamond": u_bipartite,
}

FUNCTOR_MORPHISMS = {
    "U": undirect_mor,
    "D": associated_digraph_mor,
    "N": lambda f: f,
    "Del": delete_mor,
    "I": incidence_forming_mor,
    "UpsilonDiamond": bipartite_incidence_mor,
    "UUpsilonDiamond": u_bipartite_mor,
}


def apply_functor(name: str, obj):
    """
    Apply a functor by name to an object.

    Raises:
        InputError: Unknown functor name or an object of the wrong category.
    """
    if name not in FUNCTORS:
        raise InputError(f"Unknown functor {name!r}")
    return FUNCTORS[name](obj)


def apply_functor_mor(name: str, f: Morphism) -> Morphism:
    if name not in FUNCTOR_MORPHISMS:
        raise InputError(f"Unknown functor {name!r}")
    return FUNCTOR_MORPHISMS[name](f)
