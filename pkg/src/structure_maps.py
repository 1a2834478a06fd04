"""
Structure maps of the monoidal products.

Unitors, commutators and associators for the three box products and the
Laplacian product, the anti-unitors that turn G ■ Ě⋄({1}) into the dual,
and the composite isomorphisms relating the dual of a Laplacian product
to the products with a dual factor. Every map is an explicit relabeling
returned as a validated morphism.
"""

import logging
from typing import Callable, Dict, Tuple

from .core import (
    EDGE,
    INCIDENCE,
    VERTEX,
    GraphObject,
    IncidenceHypergraph,
    Morphism,
    Quiver,
    SetSystemHypergraph,
    compose_all,
    identity,
    inverse,
    make_morphism,
)
from .elements import Element, Pair, Tagged
from .errors import InternalError, MorphismMismatchError
from .generators import edge_unit_r, vertex_unit_h, vertex_unit_q, vertex_unit_r
from .products import (
    LAPLACIAN_SORTS,
    LAPLACIAN_TAGS,
    box_h,
    box_q,
    box_r,
    checked,
    dual,
    laplacian_mor,
    laplacian_product,
)

logger = logging.getLogger(__name__)

Relabel = Callable[[str, Element], Element]


def _relabel(domain: GraphObject, codomain: GraphObject, fn: Relabel, name: str) -> Morphism:
    maps = {sort: {x: fn(sort, x) for x in domain.elements(sort)} for sort in domain.sorts}
    return checked(make_morphism(domain, codomain, maps), name)


# =============================================================================
# Box products (quiver, set-system, incidence share element shapes)
# =============================================================================

_BOX = {
    "q": (box_q, vertex_unit_q, Quiver),
    "h": (box_h, vertex_unit_h, SetSystemHypergraph),
    "r": (box_r, vertex_unit_r, IncidenceHypergraph),
}


def _box(kind: str, obj: GraphObject):
    build, unit, cls = _BOX[kind]
    if not isinstance(obj, cls):
        raise MorphismMismatchError(f"Expected a {cls.category}, got a {obj.category}")
    return build, unit


def box_right_unitor(kind: str, g: GraphObject) -> Morphism:
    """G □ V⋄({1}) -> G: (v, v0) -> v and (1, x, v0) -> x."""
    build, unit = _box(kind, g)

    def fn(sort, x):
        return x.left

    return _relabel(build(g, unit()), g, fn, f"right unitor ({kind})")


def box_left_unitor(kind: str, g: GraphObject) -> Morphism:
    """V⋄({1}) □ G -> G: (v0, v) -> v and (2, v0, x) -> x."""
    build, unit = _box(kind, g)

    def fn(sort, x):
        return x.right

    return _relabel(build(unit(), g), g, fn, f"left unitor ({kind})")


def box_commutator(kind: str, g: GraphObject, h: GraphObject) -> Morphism:
    """G □ H -> H □ G: (v, w) -> (w, v) and (n, x, y) -> (3-n, y, x)."""
    build, _ = _box(kind, g)
    _box(kind, h)

    def fn(sort, x):
        if isinstance(x, Pair):
            return Pair(x.right, x.left)
        return Tagged(3 - x.tag, x.right, x.left)

    return _relabel(build(g, h), build(h, g), fn, f"commutator ({kind})")


def box_associator(kind: str, g: GraphObject, h: GraphObject, k: GraphObject) -> Morphism:
    """
    (G □ H) □ K -> G □ (H □ K).

    Vertices ((u,v),w) -> (u,(v,w)); edges and incidences
    (1,(1,x,v),w) -> (1,x,(v,w)), (1,(2,u,y),w) -> (2,u,(1,y,w)),
    (2,(u,v),z) -> (2,u,(2,v,z)).
    """
    build, _ = _box(kind, g)
    _box(kind, h)
    _box(kind, k)

    def fn(sort, x):
        if isinstance(x, Pair):
            return Pair(x.left.left, Pair(x.left.right, x.right))
        if x.tag == 1:
            inner = x.left
            if inner.tag == 1:
                return Tagged(1, inner.left, Pair(inner.right, x.right))
            return Tagged(2, inner.left, Tagged(1, inner.right, x.right))
        return Tagged(2, x.left.left, Tagged(2, x.left.right, x.right))

    return _relabel(build(build(g, h), k), build(g, build(h, k)), fn, f"associator ({kind})")


# =============================================================================
# Laplacian product
# =============================================================================

def _require_incidence(*objects: GraphObject) -> None:
    for obj in objects:
        if not isinstance(obj, IncidenceHypergraph):
            raise MorphismMismatchError(f"Expected an incidence hypergraph, got a {obj.category}")


def laplacian_right_unitor(g: IncidenceHypergraph) -> Morphism:
    """ρ̌: G ■ V̌⋄({1}) -> G: (1,v,v0) -> v, (2,e,v0) -> e, (1,i,v0) -> i."""
    _require_incidence(g)
    return _relabel(laplacian_product(g, vertex_unit_r()), g, lambda s, x: x.left, "rho")


def laplacian_left_unitor(g: IncidenceHypergraph) -> Morphism:
    """λ̌: V̌⋄({1}) ■ G -> G: (1,v0,v) -> v, (3,v0,e) -> e, (4,v0,i) -> i."""
    _require_incidence(g)
    return _relabel(laplacian_product(vertex_unit_r(), g), g, lambda s, x: x.right, "lambda")


def laplacian_commutator(g: IncidenceHypergraph, h: IncidenceHypergraph) -> Morphism:
    """γ̌: G ■ H -> H ■ G: vertices (n,x,y) -> (n,y,x); edges and incidences (n,x,y) -> (5-n,y,x)."""
    _require_incidence(g, h)

    def fn(sort, x):
        tag = x.tag if sort == VERTEX else 5 - x.tag
        return Tagged(tag, x.right, x.left)

    return _relabel(laplacian_product(g, h), laplacian_product(h, g), fn, "gamma")


def laplacian_associator(g: IncidenceHypergraph, h: IncidenceHypergraph, k: IncidenceHypergraph) -> Morphism:
    """
    α̌: (G ■ H) ■ K -> G ■ (H ■ K).

    Each element (n, (m, a, b), c) is regrouped as (t, a, (u, b, c)) where the
    tags t and u are recomputed from the sorts of a, b and c.
    """
    _require_incidence(g, h, k)

    def fn(sort, x):
        inner_sort, c_sort = LAPLACIAN_SORTS[sort][x.tag]
        a_sort, b_sort = LAPLACIAN_SORTS[inner_sort][x.left.tag]
        b_tag, bc_sort = LAPLACIAN_TAGS[(b_sort, c_sort)]
        a_tag, result_sort = LAPLACIAN_TAGS[(a_sort, bc_sort)]
        if result_sort != sort:
            raise InternalError(f"Associator changed sort of {x}")
        return Tagged(a_tag, x.left.left, Tagged(b_tag, x.left.right, x.right))

    domain = laplacian_product(laplacian_product(g, h), k)
    codomain = laplacian_product(g, laplacian_product(h, k))
    return _relabel(domain, codomain, fn, "alpha")


def right_anti_unitor(g: IncidenceHypergraph) -> Morphism:
    """ρ̂: G ■ Ě⋄({1}) -> G#: (4,e,e0) -> e, (3,v,e0) -> v, (2,i,e0) -> i."""
    _require_incidence(g)
    return _relabel(laplacian_product(g, edge_unit_r()), dual(g), lambda s, x: x.left, "rho_hat")


def left_anti_unitor(g: IncidenceHypergraph) -> Morphism:
    """λ̂: Ě⋄({1}) ■ G -> G#: (4,e0,e) -> e, (2,e0,v) -> v, (3,e0,i) -> i."""
    _require_incidence(g)
    return _relabel(laplacian_product(edge_unit_r(), g), dual(g), lambda s, x: x.right, "lambda_hat")


# =============================================================================
# Duality composites
# =============================================================================

# Tag changes taking the dual of G ■ H onto G# ■ H and onto G ■ H#
_DUAL_LEFT_TAGS = {VERTEX: {2: 1, 3: 4}, EDGE: {1: 2, 4: 3}, INCIDENCE: {1: 1, 2: 2, 3: 4, 4: 3}}
_DUAL_RIGHT_TAGS = {VERTEX: {2: 4, 3: 1}, EDGE: {1: 3, 4: 2}, INCIDENCE: {1: 2, 2: 1, 3: 3, 4: 4}}


def dual_to_left(g: IncidenceHypergraph, h: IncidenceHypergraph) -> Morphism:
    """Direct relabeling (G ■ H)# -> G# ■ H."""
    _require_incidence(g, h)

    def fn(sort, x):
        return Tagged(_DUAL_LEFT_TAGS[sort][x.tag], x.left, x.right)

    return _relabel(dual(laplacian_product(g, h)), laplacian_product(dual(g), h), fn, "dual_to_left")


def dual_to_right(g: IncidenceHypergraph, h: IncidenceHypergraph) -> Morphism:
    """Direct relabeling (G ■ H)# -> G ■ H#."""
    _require_incidence(g, h)

    def fn(sort, x):
        return Tagged(_DUAL_RIGHT_TAGS[sort][x.tag], x.left, x.right)

    return _relabel(dual(laplacian_product(g, h)), laplacian_product(g, dual(h)), fn, "dual_to_right")


def triforce(g: IncidenceHypergraph, h: IncidenceHypergraph) -> Dict[str, Morphism]:
    """
    Composite isomorphisms between (G ■ H)#, G# ■ H and G ■ H#.

    Returns:
        Dict with
        "to_right": (G■ρ̂_H) ∘ α̌_{G,H,Ě} ∘ ρ̂_{G■H}⁻¹ : (G ■ H)# -> G ■ H#,
        "to_left":  (λ̂_G■H) ∘ α̌_{Ě,G,H}⁻¹ ∘ λ̂_{G■H}⁻¹ : (G ■ H)# -> G# ■ H,
        "left_to_right": to_right ∘ to_left⁻¹ : G# ■ H -> G ■ H#.
    """
    _require_incidence(g, h)
    gh = laplacian_product(g, h)
    loose = edge_unit_r()
    to_right = compose_all(
        laplacian_mor(identity(g), right_anti_unitor(h)),
        laplacian_associator(g, h, loose),
        inverse(right_anti_unitor(gh)),
    )
    to_left = compose_all(
        laplacian_mor(left_anti_unitor(g), identity(h)),
        inverse(laplacian_associator(loose, g, h)),
        inverse(left_anti_unitor(gh)),
    )
    left_to_right = compose_all(to_right, inverse(to_left))
    return {"to_right": to_right, "to_left": to_left, "left_to_right": left_to_right}


# =============================================================================
# Dispatch
# =============================================================================

def _kinded(fn, kind):
    return lambda *objects: fn(kind, *objects)


STRUCTURE_MAPS: Dict[str, Tuple[int, Callable[..., Morphism]]] = {
    "r_q": (1, _kinded(box_right_unitor, "q")),
    "l_q": (1, _kinded(box_left_unitor, "q")),
    "c_q": (2, _kinded(box_commutator, "q")),
    "a_q": (3, _kinded(box_associator, "q")),
    "r_h": (1, _kinded(box_right_unitor, "h")),
    "l_h": (1, _kinded(box_left_unitor, "h")),
    "c_h": (2, _kinded(box_commutator, "h")),
    "a_h": (3, _kinded(box_associator, "h")),
    "r_r": (1, _kinded(box_right_unitor, "r")),
    "l_r": (1, _kinded(box_left_unitor, "r")),
    "c_r": (2, _kinded(box_commutator, "r")),
    "a_r": (3, _kinded(box_associator, "r")),
    "rho": (1, laplacian_right_unitor),
    "lambda": (1, laplacian_left_unitor),
    "gamma": (2, laplacian_commutator),
    "alpha": (3, laplacian_associator),
    "rho_hat": (1, right_anti_unitor),
    "lambda_hat": (1, left_anti_unitor),
}


def structure_map(name: str, *objects: GraphObject) -> Morphism:
    """
    Named structure map applied to objects.

    Raises:
        MorphismMismatchError: Unknown name, wrong arity or wrong category.
    """
    if name not in STRUCTURE_MAPS:
        raise MorphismMismatchError(f"Unknown structure map {name!r}")
    arity, build = STRUCTURE_MAPS[name]
    if len(objects) != arity:
        raise MorphismMismatchError(f"Structure map {name} takes {arity} objects, got {len(objects)}")
    return build(*objects)
