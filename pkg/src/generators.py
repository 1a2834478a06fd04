"""
Standard generator objects: unit objects, paths, cycles and n-edges.

Labels follow fixed schemes ("v0", "e0", "i0", ...) so every construction
built from generators is deterministic.
"""

from typing import Callable, Dict, Optional, Tuple

from .core import (
    EDGE,
    INCIDENCE,
    VERTEX,
    GraphObject,
    IncidenceHypergraph,
    IncidenceMorphism,
    Morphism,
    Quiver,
    SetSystemHypergraph,
    make_morphism,
)
from .elements import Element, label
from .errors import InputError


def _v(n: int) -> str:
    return f"v{n}"


def _e(n: int) -> str:
    return f"e{n}"


def _i(n: int) -> str:
    return f"i{n}"


def _require(value: int, minimum: int, what: str) -> None:
    if value is None or value < minimum:
        raise InputError(f"{what} must be at least {minimum}, got {value}")


# =============================================================================
# Unit objects and empty objects
# =============================================================================

def empty_q() -> Quiver:
    return Quiver()


def empty_h() -> SetSystemHypergraph:
    return SetSystemHypergraph()


def empty_r() -> IncidenceHypergraph:
    return IncidenceHypergraph()


def vertex_unit_q() -> Quiver:
    """Isolated vertex quiver."""
    return Quiver(vertices={"v0"})


def edge_unit_q() -> Quiver:
    """Single arc v0 -> v1 (the directed path of length one)."""
    return Quiver(vertices={"v0", "v1"}, edges={"e0"}, source={"e0": "v0"}, target={"e0": "v1"})


def vertex_unit_h() -> SetSystemHypergraph:
    return SetSystemHypergraph(vertices={"v0"})


def vertex_unit_r() -> IncidenceHypergraph:
    """Isolated vertex, the unit of both incidence products."""
    return IncidenceHypergraph(vertices={"v0"})


def edge_unit_r() -> IncidenceHypergraph:
    """Loose edge with no incidences."""
    return IncidenceHypergraph(edges={"e0"})


def incidence_unit_r() -> IncidenceHypergraph:
    """Single incidence joining one vertex to one edge; also the terminal object."""
    return IncidenceHypergraph(
        vertices={"v0"},
        edges={"e0"},
        incidences={"i0"},
        port={"i0": "v0"},
        attachment={"i0": "e0"},
    )


# =============================================================================
# Paths, cycles, n-edges
# =============================================================================

def path_q(n: int) -> Quiver:
    """Directed path v0 -> v1 -> ... -> vn."""
    _require(n, 0, "Path length")
    edges = [_e(j) for j in range(n)]
    return Quiver(
        vertices={_v(j) for j in range(n + 1)},
        edges=edges,
        source={_e(j): _v(j) for j in range(n)},
        target={_e(j): _v(j + 1) for j in range(n)},
    )


def cycle_q(n: int) -> Quiver:
    """Directed cycle on n vertices (n=1 is a single loop)."""
    _require(n, 1, "Cycle length")
    return Quiver(
        vertices={_v(j) for j in range(n)},
        edges={_e(j) for j in range(n)},
        source={_e(j): _v(j) for j in range(n)},
        target={_e(j): _v((j + 1) % n) for j in range(n)},
    )


def path_h(n: int) -> SetSystemHypergraph:
    """Graph path with n edges."""
    _require(n, 0, "Path length")
    return SetSystemHypergraph(
        vertices={_v(j) for j in range(n + 1)},
        edges={_e(j) for j in range(n)},
        endpoints={_e(j): {_v(j), _v(j + 1)} for j in range(n)},
    )


def cycle_h(n: int) -> SetSystemHypergraph:
    """Graph cycle with n edges (n=1 a loop, n=2 a parallel pair)."""
    _require(n, 1, "Cycle length")
    return SetSystemHypergraph(
        vertices={_v(j) for j in range(n)},
        edges={_e(j) for j in range(n)},
        endpoints={_e(j): {_v(j), _v((j + 1) % n)} for j in range(n)},
    )


def n_edge_h(n: int) -> SetSystemHypergraph:
    """Single edge with n endpoints."""
    _require(n, 0, "Edge size")
    vertices = {_v(j) for j in range(n)}
    return SetSystemHypergraph(vertices=vertices, edges={"e0"}, endpoints={"e0": vertices})


def n_edge_r(n: int) -> IncidenceHypergraph:
    """Single edge with n incidences, one per vertex."""
    _require(n, 0, "Edge size")
    return IncidenceHypergraph(
        vertices={_v(j) for j in range(n)},
        edges={"e0"},
        incidences={_i(j) for j in range(n)},
        port={_i(j): _v(j) for j in range(n)},
        attachment={_i(j): "e0" for j in range(n)},
    )


def _alternating(j: int) -> str:
    # position j of the sequence v0, e0, v1, e1, ...
    return _v(j // 2) if j % 2 == 0 else _e(j // 2)


def _join(incidences: Dict[str, Tuple[str, str]]) -> IncidenceHypergraph:
    vertices, edges, port, attachment = set(), set(), {}, {}
    for name, (a, b) in incidences.items():
        vertex, edge = (a, b) if a.startswith("v") else (b, a)
        vertices.add(vertex)
        edges.add(edge)
        port[name] = vertex
        attachment[name] = edge
    return IncidenceHypergraph(vertices, edges, set(incidences), port, attachment)


def path_r(k: int) -> IncidenceHypergraph:
    """
    Incidence path with k incidences (half-length k/2).

    The alternating sequence v0, e0, v1, e1, ... has k+1 elements; incidence
    i_j joins positions j and j+1. path_r(0) is a single vertex.
    """
    _require(k, 0, "Path length")
    if k == 0:
        return vertex_unit_r()
    return _join({_i(j): (_alternating(j), _alternating(j + 1)) for j in range(k)})


def path_ends(k: int) -> Tuple[str, str]:
    """Tail and head labels of path_r(k); the head is an edge when k is odd."""
    _require(k, 0, "Path length")
    return _alternating(0), _alternating(k)


def cycle_r(k: int) -> IncidenceHypergraph:
    """Incidence cycle with k incidences; k must be even and positive."""
    _require(k, 2, "Cycle length")
    if k % 2:
        raise InputError(f"Incidence cycles need an even number of incidences, got {k}")
    return _join({_i(j): (_alternating(j), _alternating((j + 1) % k)) for j in range(k)})


GENERATORS: Dict[str, Callable[..., GraphObject]] = {
    "empty_q": empty_q,
    "empty_h": empty_h,
    "empty_r": empty_r,
    "vertex_unit_q": vertex_unit_q,
    "edge_unit_q": edge_unit_q,
    "vertex_unit_h": vertex_unit_h,
    "vertex_unit_r": vertex_unit_r,
    "edge_unit_r": edge_unit_r,
    "incidence_unit_r": incidence_unit_r,
    "path_q": path_q,
    "cycle_q": cycle_q,
    "path_h": path_h,
    "cycle_h": cycle_h,
    "path_r": path_r,
    "cycle_r": cycle_r,
    "n_edge_h": n_edge_h,
    "n_edge_r": n_edge_r,
}

# Generators that take a size parameter
PARAMETRIZED = {"path_q", "cycle_q", "path_h", "cycle_h", "path_r", "cycle_r", "n_edge_h", "n_edge_r"}


def generator(kind: str, parameter: Optional[int] = None) -> GraphObject:
    """
    Build a named generator.

    Args:
        kind: One of GENERATORS.
        parameter: Size parameter for paths, cycles and n-edges.

    Raises:
        InputError: Unknown kind, missing parameter or negative length.
    """
    if kind not in GENERATORS:
        raise InputError(f"Unknown generator {kind!r}")
    if kind in PARAMETRIZED:
        if parameter is None:
            raise InputError(f"Generator {kind!r} needs a parameter")
        return GENERATORS[kind](parameter)
    return GENERATORS[kind]()


# =============================================================================
# Representing morphisms
# =============================================================================

def representing_morphism(obj: GraphObject, sort: str, x: Element) -> Morphism:
    """
    The unique morphism from the generator of a sort that picks x.

    For a quiver edge this is the arc E⃗⋄({1}) -> Q sending e0 to x; for an
    incidence it is I⋄({1}) -> G sending i0 to x together with its port
    and attachment.

    Raises:
        InputError: If x is not an element of that sort.
    """
    if x not in obj.elements(sort):
        raise InputError(f"{label(x)} is not a {sort} of the object")
    if isinstance(obj, Quiver):
        if sort == VERTEX:
            return make_morphism(vertex_unit_q(), obj, {VERTEX: {"v0": x}})
        return make_morphism(
            edge_unit_q(), obj,
            {VERTEX: {"v0": obj.source[x], "v1": obj.target[x]}, EDGE: {"e0": x}},
        )
    if isinstance(obj, SetSystemHypergraph):
        if sort == VERTEX:
            return make_morphism(vertex_unit_h(), obj, {VERTEX: {"v0": x}})
        members = obj.endpoints[x]
        source = n_edge_h(len(members))
        names = sorted(source.vertices, key=lambda v: int(v[1:]))
        return make_morphism(
            source, obj,
            {VERTEX: dict(zip(names, sorted(members, key=label))), EDGE: {"e0": x}},
        )
    if sort == VERTEX:
        return make_morphism(vertex_unit_r(), obj, {VERTEX: {"v0": x}})
    if sort == EDGE:
        return make_morphism(edge_unit_r(), obj, {EDGE: {"e0": x}})
    return make_morphism(
        incidence_unit_r(), obj,
        {VERTEX: {"v0": obj.port[x]}, EDGE: {"e0": obj.attachment[x]}, INCIDENCE: {"i0": x}},
    )


def yoneda_source() -> Morphism:
    """Y(s): V⃗⋄({1}) -> E⃗⋄({1}) picking the tail."""
    return representing_morphism(edge_unit_q(), VERTEX, "v0")


def yoneda_target() -> Morphism:
    """Y(t): V⃗⋄({1}) -> E⃗⋄({1}) picking the head."""
    return representing_morphism(edge_unit_q(), VERTEX, "v1")


def yoneda_port() -> IncidenceMorphism:
    """Y(y): V̌⋄({1}) -> I⋄({1}) picking the only vertex."""
    return representing_morphism(incidence_unit_r(), VERTEX, "v0")


def yoneda_attachment() -> IncidenceMorphism:
    """Y(z): Ě⋄({1}) -> I⋄({1}) picking the only edge."""
    return representing_morphism(incidence_unit_r(), EDGE, "e0")
