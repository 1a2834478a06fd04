"""
Box exponentials and the Laplacian exponential.

Each exponential [G, H] is built by enumerating homomorphisms (and, for
some edge sets, plain functions). Carrier elements are the defining
morphisms or functions themselves, so an element's label is the canonical
serialization of what it stands for. Each exponential carries its
evaluation morphism and implements curry/uncurry for its adjunction.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, FrozenSet, List, Optional

from .config import get_config
from .core import (
    EDGE,
    INCIDENCE,
    VERTEX,
    GraphObject,
    IncidenceHypergraph,
    Morphism,
    Quiver,
    SetSystemHypergraph,
    compose,
    compose_all,
    identity,
    inverse,
    make_morphism,
)
from .elements import FrozenMap, Pair, Tagged, label
from .errors import MorphismMismatchError, SizeGuardError
from .functors import del_inclusion, delete
from .generators import (
    edge_unit_q,
    incidence_unit_r,
    representing_morphism,
    yoneda_attachment,
    yoneda_port,
    yoneda_source,
    yoneda_target,
)
from .homsearch import hom_set
from .products import (
    box_h,
    box_h_mor,
    box_q,
    box_q_mor,
    box_r,
    box_r_mor,
    checked,
    dual,
    laplacian_mor,
    laplacian_product,
)
from .structure_maps import (
    box_right_unitor,
    laplacian_right_unitor,
    right_anti_unitor,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BetaEdge:
    """Edge (A, g) of a set-system exponential: a set of homs and an edge colouring of V(G)."""

    members: FrozenSet[Morphism]
    colouring: FrozenMap

    def label(self) -> str:
        names = ",".join(sorted(label(m) for m in self.members))
        return f"[A{{{names}}}|g{self.colouring.label()}]"


@dataclass(frozen=True, eq=False)
class ExponentialObject:
    """
    Exponential [G, H] of one kind together with its evaluation morphism.

    The carrier's elements are morphisms (vertices, and edges/incidences
    where the construction uses homs), functions (FrozenMap) or BetaEdges.
    """

    kind: str
    left: GraphObject
    right: GraphObject
    carrier: GraphObject
    evaluation: Morphism
    _curry: Callable = field(repr=False, default=None)
    _uncurry: Callable = field(repr=False, default=None)

    def index(self, sort: str) -> Dict[str, Any]:
        """Bijection from element labels to the defining morphism or function."""
        return {label(x): x for x in self.carrier.elements(sort)}

    @property
    def vertex_index(self) -> Dict[str, Any]:
        return self.index(VERTEX)

    @property
    def edge_index(self) -> Dict[str, Any]:
        return self.index(EDGE)

    @property
    def incidence_index(self) -> Dict[str, Any]:
        return self.index(INCIDENCE)

    def curry(self, phi: Morphism, k: GraphObject) -> Morphism:
        """Transpose φ: G ⊠ K -> H into K -> [G, H]."""
        return self._curry(self, phi, k)

    def uncurry(self, psi: Morphism) -> Morphism:
        """Transpose ψ: K -> [G, H] into G ⊠ K -> H."""
        return self._uncurry(self, psi)


def _require(obj: GraphObject, cls: type, what: str) -> None:
    if not isinstance(obj, cls):
        raise MorphismMismatchError(f"{what} must be a {cls.category}, got a {obj.category}")


def _check_transposable(exp: ExponentialObject, phi: Morphism, product: GraphObject) -> None:
    if phi.domain != product:
        raise MorphismMismatchError(
            f"Morphism domain is not the {exp.kind} product with the exponent"
        )
    if phi.codomain != exp.right:
        raise MorphismMismatchError("Morphism codomain is not the exponential base")


def _check_into(exp: ExponentialObject, psi: Morphism) -> None:
    if psi.codomain != exp.carrier:
        raise MorphismMismatchError("Morphism does not land in the exponential")


def _transpose(exp: ExponentialObject, k: GraphObject, maps: Dict[str, Dict]) -> Morphism:
    return checked(make_morphism(k, exp.carrier, maps), f"curry ({exp.kind})")


def _log_built(exp: ExponentialObject) -> ExponentialObject:
    logger.debug(
        f"Built {exp.kind} exponential ({exp.left.describe()}) -> ({exp.right.describe()}): "
        f"{exp.carrier.describe()}"
    )
    return exp


# =============================================================================
# Quiver exponential [Q1, Q2]_B
# =============================================================================

def exp_box_q(q1: Quiver, q2: Quiver) -> ExponentialObject:
    """
    Vertices are homs Q1 -> Q2, edges are homs Q1 □ E⃗⋄({1}) -> Q2; an edge's
    source and target are found by precomposing with Q1 □ Y(s) ∘ r⁻¹ and
    Q1 □ Y(t) ∘ r⁻¹.
    """
    _require(q1, Quiver, "Exponent")
    _require(q2, Quiver, "Base")
    unit_inverse = inverse(box_right_unitor("q", q1))
    to_tail = compose(box_q_mor(identity(q1), yoneda_source()), unit_inverse)
    to_head = compose(box_q_mor(identity(q1), yoneda_target()), unit_inverse)

    vertices = hom_set(q1, q2)
    edges = hom_set(box_q(q1, edge_unit_q()), q2)
    source = {psi: compose(psi, to_tail) for psi in edges}
    target = {psi: compose(psi, to_head) for psi in edges}
    carrier = checked(Quiver(vertices, edges, source, target), "exp_box_q")

    vertex_map, edge_map = {}, {}
    for v in q1.vertices:
        for phi in vertices:
            vertex_map[Pair(v, phi)] = phi.vertex_map[v]
    for e in q1.edges:
        for phi in vertices:
            edge_map[Tagged(1, e, phi)] = phi.edge_map[e]
    for v in q1.vertices:
        for psi in edges:
            edge_map[Tagged(2, v, psi)] = psi.edge_map[Tagged(2, v, "e0")]
    evaluation = checked(
        make_morphism(box_q(q1, carrier), q2, {VERTEX: vertex_map, EDGE: edge_map}), "bev"
    )
    return _log_built(ExponentialObject("box-q", q1, q2, carrier, evaluation, _curry_q, _uncurry_q))


def _curry_q(exp: ExponentialObject, phi: Morphism, k: Quiver) -> Morphism:
    g = exp.left
    _check_transposable(exp, phi, box_q(g, k))
    unit_inverse = inverse(box_right_unitor("q", g))
    vertex_map = {
        w: compose_all(phi, box_q_mor(identity(g), representing_morphism(k, VERTEX, w)), unit_inverse)
        for w in k.vertices
    }
    edge_map = {
        f: compose(phi, box_q_mor(identity(g), representing_morphism(k, EDGE, f)))
        for f in k.edges
    }
    return _transpose(exp, k, {VERTEX: vertex_map, EDGE: edge_map})


def _uncurry_q(exp: ExponentialObject, psi: Morphism) -> Morphism:
    _check_into(exp, psi)
    return compose(exp.evaluation, box_q_mor(identity(exp.left), psi))


# =============================================================================
# Set-system exponential [G, H]_β
# =============================================================================

def exp_box_h(g: SetSystemHypergraph, h: SetSystemHypergraph, size_guard: Optional[int] = None) -> ExponentialObject:
    """
    Vertices are homs G -> H. Edges are pairs (A, g) with A a set of homs
    and g: V(G) -> E(H) such that the endpoints of g(v) are exactly
    {φ(v) : φ in A}; the endpoints of (A, g) are A.

    Raises:
        SizeGuardError: If there are more homs than the size guard allows.
    """
    _require(g, SetSystemHypergraph, "Exponent")
    _require(h, SetSystemHypergraph, "Base")
    guard = size_guard if size_guard is not None else get_config().size_guard
    homs = list(hom_set(g, h))
    if len(homs) > guard:
        raise SizeGuardError(
            f"Set-system exponential needs subsets of {len(homs)} homs; size guard is {guard}"
        )

    by_endpoints: Dict[FrozenSet, List] = {}
    for f in h.ordered(EDGE):
        by_endpoints.setdefault(h.endpoints[f], []).append(f)
    g_vertices = g.ordered(VERTEX)

    edges = []
    for size in range(len(homs) + 1):
        for members in itertools.combinations(homs, size):
            images = [frozenset(phi.vertex_map[v] for phi in members) for v in g_vertices]
            choices = [by_endpoints.get(image, []) for image in images]
            for colours in itertools.product(*choices):
                edges.append(BetaEdge(frozenset(members), FrozenMap(zip(g_vertices, colours))))
    endpoints = {edge: edge.members for edge in edges}
    carrier = checked(SetSystemHypergraph(homs, edges, endpoints), "exp_box_h")

    vertex_map, edge_map = {}, {}
    for v in g.vertices:
        for phi in homs:
            vertex_map[Pair(v, phi)] = phi.vertex_map[v]
    for e in g.edges:
        for phi in homs:
            edge_map[Tagged(1, e, phi)] = phi.edge_map[e]
    for v in g.vertices:
        for edge in edges:
            edge_map[Tagged(2, v, edge)] = edge.colouring[v]
    evaluation = checked(
        make_morphism(box_h(g, carrier), h, {VERTEX: vertex_map, EDGE: edge_map}), "beta ev"
    )
    return _log_built(ExponentialObject("box-h", g, h, carrier, evaluation, _curry_h, _uncurry_h))


def _curry_h_maps(exp: ExponentialObject, phi: Morphism, k: SetSystemHypergraph) -> Dict[str, Dict]:
    g = exp.left
    _check_transposable(exp, phi, box_h(g, k))
    unit_inverse = inverse(box_right_unitor("h", g))
    vertex_map = {
        w: compose_all(phi, box_h_mor(identity(g), representing_morphism(k, VERTEX, w)), unit_inverse)
        for w in k.vertices
    }
    edge_map = {}
    for f in k.edges:
        members = frozenset(vertex_map[w] for w in k.endpoints[f])
        colouring = FrozenMap({v: phi.edge_map[Tagged(2, v, f)] for v in g.vertices})
        edge_map[f] = BetaEdge(members, colouring)
    return {VERTEX: vertex_map, EDGE: edge_map}


def _curry_h(exp: ExponentialObject, phi: Morphism, k: SetSystemHypergraph) -> Morphism:
    return _transpose(exp, k, _curry_h_maps(exp, phi, k))


def _uncurry_h(exp: ExponentialObject, psi: Morphism) -> Morphism:
    _check_into(exp, psi)
    return compose(exp.evaluation, box_h_mor(identity(exp.left), psi))


# =============================================================================
# Multigraph exponential Del [G, H]_β
# =============================================================================

def exp_box_m(g: SetSystemHypergraph, h: SetSystemHypergraph, size_guard: Optional[int] = None) -> ExponentialObject:
    """
    Multigraph exponential: the set-system exponential with every edge of
    size other than 1 or 2 deleted. Evaluation restricts the set-system
    evaluation along the deletion inclusion.
    """
    if not (g.is_multigraph and h.is_multigraph):
        raise MorphismMismatchError("Multigraph exponential needs multigraphs")
    full = exp_box_h(g, h, size_guard)
    carrier = delete(full.carrier)
    evaluation = compose(full.evaluation, box_h_mor(identity(g), del_inclusion(full.carrier)))
    return _log_built(ExponentialObject("box-m", g, h, carrier, evaluation, _curry_m, _uncurry_m))


def _curry_m(exp: ExponentialObject, phi: Morphism, k: SetSystemHypergraph) -> Morphism:
    if not k.is_multigraph:
        raise MorphismMismatchError("Multigraph curry needs a multigraph exponent")
    return _transpose(exp, k, _curry_h_maps(exp, phi, k))


def _uncurry_m(exp: ExponentialObject, psi: Morphism) -> Morphism:
    _check_into(exp, psi)
    return compose(exp.evaluation, box_h_mor(identity(exp.left), psi))


# =============================================================================
# Incidence box exponential [G, H]_V
# =============================================================================

def exp_box_r(g: IncidenceHypergraph, h: IncidenceHypergraph) -> ExponentialObject:
    """
    Vertices are homs G -> H, edges are all functions V(G) -> E(H),
    incidences are homs G □̌ I⋄({1}) -> H. The port of an incidence ψ is
    ψ ∘ (G □̌ Y(y)) ∘ ř⁻¹ and its attachment is v -> E(ψ)(2, v, e0).
    """
    _require(g, IncidenceHypergraph, "Exponent")
    _require(h, IncidenceHypergraph, "Base")
    to_port = compose(box_r_mor(identity(g), yoneda_port()), inverse(box_right_unitor("r", g)))

    vertices = hom_set(g, h)
    g_vertices = g.ordered(VERTEX)
    edges = [
        FrozenMap(zip(g_vertices, colours))
        for colours in itertools.product(h.ordered(EDGE), repeat=len(g_vertices))
    ]
    incidences = hom_set(box_r(g, incidence_unit_r()), h)
    port = {psi: compose(psi, to_port) for psi in incidences}
    attachment = {
        psi: FrozenMap({v: psi.edge_map[Tagged(2, v, "e0")] for v in g.vertices})
        for psi in incidences
    }
    carrier = checked(IncidenceHypergraph(vertices, edges, incidences, port, attachment), "exp_box_r")

    vertex_map, edge_map, incidence_map = {}, {}, {}
    for v in g.vertices:
        for phi in vertices:
            vertex_map[Pair(v, phi)] = phi.vertex_map[v]
        for colouring in edges:
            edge_map[Tagged(2, v, colouring)] = colouring[v]
        for psi in incidences:
            incidence_map[Tagged(2, v, psi)] = psi.incidence_map[Tagged(2, v, "i0")]
    for phi in vertices:
        for e in g.edges:
            edge_map[Tagged(1, e, phi)] = phi.edge_map[e]
        for i in g.incidences:
            incidence_map[Tagged(1, i, phi)] = phi.incidence_map[i]
    evaluation = checked(
        make_morphism(
            box_r(g, carrier), h, {VERTEX: vertex_map, EDGE: edge_map, INCIDENCE: incidence_map}
        ),
        "vev",
    )
    return _log_built(ExponentialObject("box-r", g, h, carrier, evaluation, _curry_r, _uncurry_r))


def _curry_r(exp: ExponentialObject, phi: Morphism, k: IncidenceHypergraph) -> Morphism:
    g = exp.left
    _check_transposable(exp, phi, box_r(g, k))
    unit_inverse = inverse(box_right_unitor("r", g))
    vertex_map = {
        w: compose_all(phi, box_r_mor(identity(g), representing_morphism(k, VERTEX, w)), unit_inverse)
        for w in k.vertices
    }
    edge_map = {
        f: FrozenMap({v: phi.edge_map[Tagged(2, v, f)] for v in g.vertices})
        for f in k.edges
    }
    incidence_map = {
        j: compose(phi, box_r_mor(identity(g), representing_morphism(k, INCIDENCE, j)))
        for j in k.incidences
    }
    return _transpose(exp, k, {VERTEX: vertex_map, EDGE: edge_map, INCIDENCE: incidence_map})


def _uncurry_r(exp: ExponentialObject, psi: Morphism) -> Morphism:
    _check_into(exp, psi)
    return compose(exp.evaluation, box_r_mor(identity(exp.left), psi))


# =============================================================================
# Laplacian exponential [G, H]_L
# =============================================================================

def exp_laplacian(g: IncidenceHypergraph, h: IncidenceHypergraph) -> ExponentialObject:
    """
    Vertices are homs G -> H, edges are homs G# -> H and incidences are
    homs from the prism G ■ I⋄({1}) to H.

    The port of ψ is ψ ∘ (G ■ Y(y)) ∘ ρ̌⁻¹ and its attachment is
    ψ ∘ (G ■ Y(z)) ∘ ρ̂⁻¹, using the anti-unitor for the dual copy.
    """
    _require(g, IncidenceHypergraph, "Exponent")
    _require(h, IncidenceHypergraph, "Base")
    to_port = compose(laplacian_mor(identity(g), yoneda_port()), inverse(laplacian_right_unitor(g)))
    to_attachment = compose(
        laplacian_mor(identity(g), yoneda_attachment()), inverse(right_anti_unitor(g))
    )

    vertices = hom_set(g, h)
    edges = hom_set(dual(g), h)
    incidences = hom_set(laplacian_product(g, incidence_unit_r()), h)
    port = {psi: compose(psi, to_port) for psi in incidences}
    attachment = {psi: compose(psi, to_attachment) for psi in incidences}
    carrier = checked(IncidenceHypergraph(vertices, edges, incidences, port, attachment), "exp_laplacian")

    vertex_map, edge_map, incidence_map = {}, {}, {}
    for phi in vertices:
        for v in g.vertices:
            vertex_map[Tagged(1, v, phi)] = phi.vertex_map[v]
        for e in g.edges:
            edge_map[Tagged(2, e, phi)] = phi.edge_map[e]
        for i in g.incidences:
            incidence_map[Tagged(1, i, phi)] = phi.incidence_map[i]
    for psi in edges:
        for e in g.edges:
            vertex_map[Tagged(4, e, psi)] = psi.vertex_map[e]
        for v in g.vertices:
            edge_map[Tagged(3, v, psi)] = psi.edge_map[v]
        for i in g.incidences:
            incidence_map[Tagged(2, i, psi)] = psi.incidence_map[i]
    for rung in incidences:
        for e in g.edges:
            incidence_map[Tagged(3, e, rung)] = rung.incidence_map[Tagged(3, e, "i0")]
        for v in g.vertices:
            incidence_map[Tagged(4, v, rung)] = rung.incidence_map[Tagged(4, v, "i0")]
    evaluation = checked(
        make_morphism(
            laplacian_product(g, carrier), h,
            {VERTEX: vertex_map, EDGE: edge_map, INCIDENCE: incidence_map},
        ),
        "cev",
    )
    return _log_built(ExponentialObject("laplacian", g, h, carrier, evaluation, _curry_l, _uncurry_l))


def _curry_l(exp: ExponentialObject, phi: Morphism, k: IncidenceHypergraph) -> Morphism:
    g = exp.left
    _check_transposable(exp, phi, laplacian_product(g, k))
    unit_inverse = inverse(laplacian_right_unitor(g))
    anti_inverse = inverse(right_anti_unitor(g))
    vertex_map = {
        v: compose_all(phi, laplacian_mor(identity(g), representing_morphism(k, VERTEX, v)), unit_inverse)
        for v in k.vertices
    }
    edge_map = {
        e: compose_all(phi, laplacian_mor(identity(g), representing_morphism(k, EDGE, e)), anti_inverse)
        for e in k.edges
    }
    incidence_map = {
        i: compose(phi, laplacian_mor(identity(g), representing_morphism(k, INCIDENCE, i)))
        for i in k.incidences
    }
    return _transpose(exp, k, {VERTEX: vertex_map, EDGE: edge_map, INCIDENCE: incidence_map})


def _uncurry_l(exp: ExponentialObject, psi: Morphism) -> Morphism:
    _check_into(exp, psi)
    return compose(exp.evaluation, laplacian_mor(identity(exp.left), psi))


# =============================================================================
# Dispatch
# =============================================================================

EXPONENTIALS: Dict[str, Callable[..., ExponentialObject]] = {
    "box-q": exp_box_q,
    "box-h": exp_box_h,
    "box-m": exp_box_m,
    "box-r": exp_box_r,
    "box-v": exp_box_r,
    "laplacian": exp_laplacian,
}

# Product kind whose adjunction each exponential realizes
EXPONENTIAL_PRODUCTS = {
    "box-q": "box-q",
    "box-h": "box-h",
    "box-m": "box-m",
    "box-r": "box-r",
    "box-v": "box-r",
    "laplacian": "laplacian",
}


def exponential(kind: str, g: GraphObject, h: GraphObject) -> ExponentialObject:
    """
    Build an exponential by kind name ("box-v" is an alias of "box-r").

    Raises:
        MorphismMismatchError: Unknown kind or objects of the wrong category.
    """
    if kind not in EXPONENTIALS:
        raise MorphismMismatchError(f"Unknown exponential kind {kind!r}")
    return EXPONENTIALS[kind](g, h)


def curry(exp: ExponentialObject, phi: Morphism, k: GraphObject) -> Morphism:
    return exp.curry(phi, k)


def uncurry(exp: ExponentialObject, psi: Morphism) -> Morphism:
    return exp.uncurry(psi)
