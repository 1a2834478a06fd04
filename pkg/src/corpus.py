"""
Seeded random objects and the worked-example incidence hypergraphs.

All randomness flows through numpy Generators created from an explicit
seed, so the same seed always yields the same corpus.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from .config import get_config
from .core import (
    GraphObject,
    IncidenceHypergraph,
    Orientation,
    Quiver,
    SetSystemHypergraph,
)
from .errors import InputError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusBounds:
    """Upper bounds on the sizes of random objects."""
    max_vertices: int = 6
    max_edges: int = 6
    max_incidences: int = 12

    @classmethod
    def from_config(cls) -> "CorpusBounds":
        config = get_config()
        return cls(config.corpus_max_vertices, config.corpus_max_edges, config.corpus_max_incidences)


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    """Generator for the given seed (the configured default seed when None)."""
    return np.random.default_rng(get_config().default_seed if seed is None else seed)


def _draw(rng: np.random.Generator, low: int, high: int) -> int:
    return int(rng.integers(low, high + 1))


def _names(prefix: str, count: int) -> List[str]:
    return [f"{prefix}{n}" for n in range(1, count + 1)]


def _pick(rng: np.random.Generator, items: Sequence[str]) -> str:
    return items[_draw(rng, 0, len(items) - 1)]


# =============================================================================
# Random objects
# =============================================================================

def random_incidence_hypergraph(rng: np.random.Generator, bounds: Optional[CorpusBounds] = None) -> IncidenceHypergraph:
    bounds = bounds or CorpusBounds.from_config()
    vertices = _names("v", _draw(rng, 1, bounds.max_vertices))
    edges = _names("e", _draw(rng, 0, bounds.max_edges))
    incidences = _names("i", _draw(rng, 0, bounds.max_incidences) if edges else 0)
    port = {i: _pick(rng, vertices) for i in incidences}
    attachment = {i: _pick(rng, edges) for i in incidences}
    return IncidenceHypergraph(vertices, edges, incidences, port, attachment)


def random_quiver(rng: np.random.Generator, bounds: Optional[CorpusBounds] = None) -> Quiver:
    bounds = bounds or CorpusBounds.from_config()
    vertices = _names("v", _draw(rng, 1, bounds.max_vertices))
    edges = _names("e", _draw(rng, 0, bounds.max_edges))
    source = {e: _pick(rng, vertices) for e in edges}
    target = {e: _pick(rng, vertices) for e in edges}
    return Quiver(vertices, edges, source, target)


def random_hypergraph(
    rng: np.random.Generator,
    bounds: Optional[CorpusBounds] = None,
    min_edge_size: int = 0,
    max_edge_size: int = 3,
) -> SetSystemHypergraph:
    """Random set system; endpoint sets have between min_edge_size and max_edge_size vertices."""
    bounds = bounds or CorpusBounds.from_config()
    vertices = _names("v", _draw(rng, max(1, min_edge_size), bounds.max_vertices))
    edges = _names("e", _draw(rng, 0, bounds.max_edges))
    endpoints = {}
    for e in edges:
        size = _draw(rng, min_edge_size, min(max_edge_size, len(vertices)))
        chosen = rng.choice(len(vertices), size=size, replace=False)
        endpoints[e] = frozenset(vertices[int(n)] for n in sorted(chosen))
    return SetSystemHypergraph(vertices, edges, endpoints)


def random_multigraph(rng: np.random.Generator, bounds: Optional[CorpusBounds] = None) -> SetSystemHypergraph:
    """Random multigraph: every edge has one (a loop) or two endpoints."""
    return random_hypergraph(rng, bounds, min_edge_size=1, max_edge_size=2)


def random_orientation(rng: np.random.Generator, g: IncidenceHypergraph) -> Orientation:
    return Orientation(g, {i: int(rng.choice((-1, 1))) for i in g.ordered("incidence")})


RANDOM_OBJECTS: Dict[str, Callable[..., GraphObject]] = {
    "incidence": random_incidence_hypergraph,
    "quiver": random_quiver,
    "hypergraph": random_hypergraph,
    "multigraph": random_multigraph,
}


def corpus(
    kind: str,
    size: Optional[int] = None,
    seed: Optional[int] = None,
    bounds: Optional[CorpusBounds] = None,
) -> List[GraphObject]:
    """
    A reproducible list of random objects.

    Args:
        kind: "incidence", "quiver", "hypergraph" or "multigraph".
        size: Number of objects (configured corpus size when None).
        seed: Random seed (configured default when None).
        bounds: Size bounds (configured bounds when None).

    Raises:
        InputError: Unknown kind.
    """
    if kind not in RANDOM_OBJECTS:
        raise InputError(f"Unknown corpus kind {kind!r}")
    size = get_config().corpus_size if size is None else size
    rng = make_rng(seed)
    bounds = bounds or CorpusBounds.from_config()
    objects = [RANDOM_OBJECTS[kind](rng, bounds) for _ in range(size)]
    logger.debug(f"Generated {len(objects)} random {kind} objects (seed={seed})")
    return objects


# =============================================================================
# Worked examples
# =============================================================================

def from_incidence_counts(rows: Sequence[Sequence[int]]) -> IncidenceHypergraph:
    """
    Incidence hypergraph whose all-plus incidence matrix is the given
    non-negative integer matrix. Vertices v1.., edges e1.., incidences
    i1.. numbered row by row.
    """
    vertices = _names("v", len(rows))
    edges = _names("e", len(rows[0]) if rows else 0)
    port, attachment = {}, {}
    for v, row in zip(vertices, rows):
        if len(row) != len(edges):
            raise InputError("Incidence count rows must have equal length")
        for e, count in zip(edges, row):
            if count < 0:
                raise InputError("Incidence counts must be non-negative")
            for _ in range(count):
                i = f"i{len(port) + 1}"
                port[i] = v
                attachment[i] = e
    return IncidenceHypergraph(vertices, edges, port.keys(), port, attachment)


FOUR_VERTEX_COUNTS = (
    (1, 0, 0, 1, 1),
    (1, 1, 0, 0, 0),
    (0, 1, 1, 0, 1),
    (0, 0, 1, 1, 0),
)

DOUBLED_INCIDENCE_COUNTS = (
    (1, 2),
    (1, 1),
    (1, 0),
)


def four_vertex() -> IncidenceHypergraph:
    """Four vertices, five edges, ten incidences, no parallel incidences."""
    return from_incidence_counts(FOUR_VERTEX_COUNTS)


def doubled_incidence() -> IncidenceHypergraph:
    """Three vertices, two edges, six incidences; v1 meets e2 twice."""
    return from_incidence_counts(DOUBLED_INCIDENCE_COUNTS)
