"""
Verification suites behind the `verify` command.

coherence   monoidal laws of the four box products and the Laplacian
            product, anti-unitors, duality composites, the monoidal
            comparison maps of the functors and their naturality over
            enumerated homs, functor identity and composition laws
adjunction  hom-set bijections, curry/uncurry round trips and unique
            factorization for every exponential; U ⊣ D⃗ triangle identities
weakwalk    matrix / weak-walk correspondence on oriented hypergraphs
census      sort counts of the Laplacian exponential of incidence paths

Suites take explicit objects when given and otherwise draw a seeded random
corpus, so a run is reproducible from its seed.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import partial
from typing import Callable, Dict, List, Optional, Sequence

from .config import get_config
from .core import (
    GraphObject,
    IncidenceHypergraph,
    Morphism,
    Quiver,
    SetSystemHypergraph,
    compose,
    compose_all,
    identity,
    is_isomorphism,
)
from .corpus import CorpusBounds, corpus, make_rng, random_orientation
from .errors import InputError
from .exponentials import exponential
from .functors import (
    FUNCTOR_MORPHISMS,
    FUNCTORS,
    associated_digraph,
    associated_digraph_mor,
    bipartite_incidence,
    delete,
    digraph_unit,
    incidence_forming_mor,
    phi_incidence,
    psi_bipartite,
    psi_bipartite_unit,
    psi_digraph,
    psi_digraph_composite,
    psi_digraph_unit,
    u_bipartite,
    u_bipartite_mor,
    undirect,
    undirect_counit,
    undirect_mor,
)
from .generators import (
    edge_unit_r,
    incidence_unit_r,
    path_h,
    path_r,
    vertex_unit_h,
    vertex_unit_q,
    vertex_unit_r,
)
from .homsearch import count_homs, enumerate_homs, is_isomorphic
from .products import (
    box_h,
    box_h_mor,
    box_q,
    box_q_mor,
    box_r,
    box_r_mor,
    dual,
    laplacian_mor,
    laplacian_product,
    product,
)
from .reports import SuiteReport
from .spectral import laplacian_exponential_census, oriented, verify_weak_walk_theorem
from .structure_maps import (
    box_associator,
    box_commutator,
    box_left_unitor,
    box_right_unitor,
    dual_to_left,
    dual_to_right,
    laplacian_associator,
    laplacian_commutator,
    laplacian_left_unitor,
    laplacian_right_unitor,
    left_anti_unitor,
    right_anti_unitor,
    triforce,
)

logger = logging.getLogger(__name__)

SUITES = ("coherence", "adjunction", "weakwalk", "census")

# Random objects for the law checks stay tiny: products of four of them are built
COHERENCE_BOUNDS = CorpusBounds(max_vertices=2, max_edges=2, max_incidences=2)
ADJUNCTION_BOUNDS = CorpusBounds(max_vertices=2, max_edges=2, max_incidences=2)


@dataclass(frozen=True)
class MonoidalStructure:
    """A symmetric monoidal product with its unit and structure maps."""

    name: str
    corpus_kind: str
    product: Callable[[GraphObject, GraphObject], GraphObject]
    product_mor: Callable[[Morphism, Morphism], Morphism]
    unit: Callable[[], GraphObject]
    right_unitor: Callable[[GraphObject], Morphism]
    left_unitor: Callable[[GraphObject], Morphism]
    commutator: Callable[[GraphObject, GraphObject], Morphism]
    associator: Callable[[GraphObject, GraphObject, GraphObject], Morphism]


def _box_structure(name: str, corpus_kind: str, kind: str, build, build_mor, unit) -> MonoidalStructure:
    return MonoidalStructure(
        name, corpus_kind, build, build_mor, unit,
        partial(box_right_unitor, kind),
        partial(box_left_unitor, kind),
        partial(box_commutator, kind),
        partial(box_associator, kind),
    )


STRUCTURES: List[MonoidalStructure] = [
    _box_structure("box-q", "quiver", "q", box_q, box_q_mor, vertex_unit_q),
    _box_structure("box-h", "hypergraph", "h", box_h, box_h_mor, vertex_unit_h),
    _box_structure("box-m", "multigraph", "h", box_h, box_h_mor, vertex_unit_h),
    _box_structure("box-r", "incidence", "r", box_r, box_r_mor, vertex_unit_r),
    MonoidalStructure(
        "laplacian", "incidence", laplacian_product, laplacian_mor, vertex_unit_r,
        laplacian_right_unitor, laplacian_left_unitor, laplacian_commutator, laplacian_associator,
    ),
]

# Exponential kind -> corpus kind of its objects
ADJUNCTIONS = {
    "box-q": "quiver",
    "box-h": "hypergraph",
    "box-m": "multigraph",
    "box-r": "incidence",
    "laplacian": "incidence",
}

_CATEGORY_KINDS = {
    Quiver: ("quiver",),
    SetSystemHypergraph: ("hypergraph", "multigraph"),
    IncidenceHypergraph: ("incidence",),
}


def _fits(obj: GraphObject, corpus_kind: str) -> bool:
    if corpus_kind not in _CATEGORY_KINDS[type(obj)]:
        return False
    return corpus_kind != "multigraph" or obj.is_multigraph


def _samples(
    objects: Sequence[GraphObject],
    corpus_kind: str,
    arity: int,
    count: int,
    seed: int,
    bounds: CorpusBounds,
) -> List[tuple]:
    """Tuples of objects for a law: from the given objects when any fit, else random."""
    chosen = [obj for obj in objects if _fits(obj, corpus_kind)]
    if chosen:
        return list(itertools.islice(itertools.product(chosen, repeat=arity), count))
    pool = corpus(corpus_kind, size=count * arity, seed=seed, bounds=bounds)
    return [tuple(pool[n * arity:(n + 1) * arity]) for n in range(count)]


def _check(report: SuiteReport, name: str, condition: Callable[[], bool]) -> None:
    ok = bool(condition())
    if not ok:
        logger.warning(f"{report.suite}: {name} failed")
    report.add(name, ok)


# =============================================================================
# Coherence
# =============================================================================

def _monoidal_laws(report: SuiteReport, s: MonoidalStructure, n: int, g, h, k, m) -> None:
    tag = f"{s.name} #{n}"
    idm = identity

    def triangle():
        left = compose(s.product_mor(idm(g), s.left_unitor(h)), s.associator(g, s.unit(), h))
        return left == s.product_mor(s.right_unitor(g), idm(h))

    def pentagon():
        left = compose(s.associator(g, h, s.product(k, m)), s.associator(s.product(g, h), k, m))
        right = compose_all(
            s.product_mor(idm(g), s.associator(h, k, m)),
            s.associator(g, s.product(h, k), m),
            s.product_mor(s.associator(g, h, k), idm(m)),
        )
        return left == right

    def hexagon():
        left = compose_all(s.associator(h, k, g), s.commutator(g, s.product(h, k)), s.associator(g, h, k))
        right = compose_all(
            s.product_mor(idm(h), s.commutator(g, k)),
            s.associator(h, g, k),
            s.product_mor(s.commutator(g, h), idm(k)),
        )
        return left == right

    def symmetry():
        return compose(s.commutator(h, g), s.commutator(g, h)) == idm(s.product(g, h))

    _check(report, f"{tag}: triangle", triangle)
    _check(report, f"{tag}: pentagon", pentagon)
    _check(report, f"{tag}: hexagon", hexagon)
    _check(report, f"{tag}: symmetry", symmetry)
    if s.corpus_kind == "multigraph":
        _check(report, f"{tag}: product of multigraphs is a multigraph", lambda: s.product(g, h).is_multigraph)


def _duality_laws(report: SuiteReport, n: int, g: IncidenceHypergraph, h: IncidenceHypergraph) -> None:
    tag = f"duality #{n}"
    loose = edge_unit_r()
    _check(report, f"{tag}: dual is an involution", lambda: dual(dual(g)) == g)
    _check(report, f"{tag}: anti-unitor triangle", lambda: compose(
        left_anti_unitor(g), laplacian_commutator(g, loose)) == right_anti_unitor(g))
    maps = triforce(g, h)
    _check(report, f"{tag}: dual moves to the right factor", lambda: maps["to_right"] == dual_to_right(g, h))
    _check(report, f"{tag}: dual moves to the left factor", lambda: maps["to_left"] == dual_to_left(g, h))
    _check(report, f"{tag}: duality composites are isomorphisms",
           lambda: all(is_isomorphism(f) for f in maps.values()))


def _functor_laws(report: SuiteReport, samples: Dict[str, List[tuple]]) -> None:
    for n, (q, p) in enumerate(samples["quiver"]):
        _check(report, f"U #{n}: strict monoidal", lambda: undirect(box_q(q, p)) == box_h(undirect(q), undirect(p)))
    _check(report, "U: preserves the unit", lambda: undirect(vertex_unit_q()) == vertex_unit_h())
    for n, (g, h) in enumerate(samples["hypergraph"]):
        _check(report, f"Del #{n}: strict monoidal", lambda: delete(box_h(g, h)) == box_h(delete(g), delete(h)))
        _check(report, f"Phi #{n}: isomorphism", lambda: is_isomorphism(phi_incidence(g, h)))
    for n, (g, h) in enumerate(samples["multigraph"]):
        _check(report, f"N #{n}: strict monoidal", lambda: product("box-m", g, h) == box_h(g, h))
        _check(report, f"psi #{n}: explicit map is an isomorphism", lambda: is_isomorphism(psi_digraph(g, h)))
        _check(report, f"psi #{n}: agrees with the unit/counit composite",
               lambda: psi_digraph(g, h) == psi_digraph_composite(g, h))
    for n, (g, h) in enumerate(samples["incidence"]):
        _check(report, f"Psi #{n}: isomorphism", lambda: is_isomorphism(psi_bipartite(g, h)))
    _check(report, "psi unit: isomorphism", lambda: is_isomorphism(psi_digraph_unit()))
    _check(report, "Psi unit: isomorphism", lambda: is_isomorphism(psi_bipartite_unit()))
    for k in range(1, 7):
        _check(report, f"bipartite graph of path_r({k}) is path_h({k})",
               lambda: bool(is_isomorphic(u_bipartite(path_r(k)), path_h(k))))
    one = incidence_unit_r()
    _check(report, "bipartite digraph does not carry the Laplacian product",
           lambda: not is_isomorphic(
               bipartite_incidence(laplacian_product(one, one)),
               box_q(bipartite_incidence(one), bipartite_incidence(one)),
           ))
    _check(report, "undirected bipartite graph carries the Laplacian product",
           lambda: bool(is_isomorphic(
               u_bipartite(laplacian_product(one, one)),
               box_h(u_bipartite(one), u_bipartite(one)),
           )))


# Functors checked for identities and composition, by the sample kind they act on
FUNCTOR_KINDS = {
    "quiver": ("U",),
    "multigraph": ("D", "N"),
    "hypergraph": ("Del", "I"),
    "incidence": ("UpsilonDiamond", "UUpsilonDiamond"),
}

# Homs taken from each enumerated hom-set by the functor and naturality laws
LAW_HOMS = 4


def _homs(g: GraphObject, h: GraphObject) -> List[Morphism]:
    return enumerate_homs(g, h)[:LAW_HOMS]


def _composable(g: GraphObject, h: GraphObject) -> List[tuple]:
    """Pairs (f, k) with k ∘ f defined: g -> h -> g and endomorphisms of g."""
    pairs = list(itertools.product(_homs(g, h), _homs(h, g)))
    pairs += itertools.product(_homs(g, g), _homs(g, g))
    return pairs


def _square_pairs(g: GraphObject, h: GraphObject) -> List[tuple]:
    """Pairs (f, k) with f out of g and k out of h: swapped factors and endomorphisms."""
    pairs = list(itertools.product(_homs(g, h), _homs(h, g)))
    pairs += itertools.product(_homs(g, g), _homs(h, h))
    return pairs


def _functor_identity_composition(report: SuiteReport, samples: Dict[str, List[tuple]]) -> None:
    for kind, names in FUNCTOR_KINDS.items():
        for n, (g, h) in enumerate(samples[kind]):
            pairs = _composable(g, h)
            for name in names:
                on_obj, on_mor = FUNCTORS[name], FUNCTOR_MORPHISMS[name]
                _check(report, f"{name} #{n}: preserves identities",
                       lambda: all(on_mor(identity(x)) == identity(on_obj(x)) for x in (g, h)))
                _check(report, f"{name} #{n}: preserves composition over {len(pairs)} pairs",
                       lambda: all(on_mor(compose(k, f)) == compose(on_mor(k), on_mor(f)) for f, k in pairs))


def _naturality_laws(report: SuiteReport, samples: Dict[str, List[tuple]]) -> None:
    for n, (g, h) in enumerate(samples["incidence"]):
        pairs = _square_pairs(g, h)
        _check(report, f"Psi #{n}: natural over {len(pairs)} pairs", lambda: all(
            compose(u_bipartite_mor(laplacian_mor(f, k)), psi_bipartite(g, h))
            == compose(psi_bipartite(f.codomain, k.codomain), box_h_mor(u_bipartite_mor(f), u_bipartite_mor(k)))
            for f, k in pairs
        ))
    for n, (g, h) in enumerate(samples["hypergraph"]):
        pairs = _square_pairs(g, h)
        _check(report, f"Phi #{n}: natural over {len(pairs)} pairs", lambda: all(
            compose(incidence_forming_mor(box_h_mor(f, k)), phi_incidence(g, h))
            == compose(
                phi_incidence(f.codomain, k.codomain),
                box_r_mor(incidence_forming_mor(f), incidence_forming_mor(k)),
            )
            for f, k in pairs
        ))
    for n, (g, h) in enumerate(samples["multigraph"]):
        pairs = _square_pairs(g, h)
        _check(report, f"psi #{n}: natural over {len(pairs)} pairs", lambda: all(
            compose(associated_digraph_mor(box_h_mor(f, k)), psi_digraph(g, h))
            == compose(
                psi_digraph(f.codomain, k.codomain),
                box_q_mor(associated_digraph_mor(f), associated_digraph_mor(k)),
            )
            for f, k in pairs
        ))


def coherence_suite(objects: Sequence[GraphObject] = (), seed: Optional[int] = None, size: Optional[int] = None) -> SuiteReport:
    """Monoidal, duality and functor coherence checks."""
    seed = get_config().default_seed if seed is None else seed
    size = get_config().corpus_size if size is None else size
    report = SuiteReport("coherence")
    for s in STRUCTURES:
        for n, (g, h, k, m) in enumerate(_samples(objects, s.corpus_kind, 4, size, seed, COHERENCE_BOUNDS)):
            _monoidal_laws(report, s, n, g, h, k, m)
    for n, (g, h) in enumerate(_samples(objects, "incidence", 2, size, seed, COHERENCE_BOUNDS)):
        _duality_laws(report, n, g, h)
    samples = {
        kind: _samples(objects, kind, 2, size, seed, COHERENCE_BOUNDS)
        for kind in ("quiver", "hypergraph", "multigraph", "incidence")
    }
    _functor_laws(report, samples)
    _functor_identity_composition(report, samples)
    _naturality_laws(report, samples)
    logger.info(report.summary())
    return report


# =============================================================================
# Adjunctions
# =============================================================================

def _adjunction_laws(report: SuiteReport, kind: str, n: int, g, k, h) -> None:
    tag = f"{kind} #{n}"
    exp = exponential(kind, g, h)
    domain = product(kind, g, k)
    forward = enumerate_homs(domain, h)
    backward = enumerate_homs(k, exp.carrier)

    _check(report, f"{tag}: hom-sets have equal size", lambda: len(forward) == count_homs(k, exp.carrier))
    _check(report, f"{tag}: uncurry(curry(phi)) = phi",
           lambda: all(exp.uncurry(exp.curry(phi, k)) == phi for phi in forward))
    _check(report, f"{tag}: curry(uncurry(psi)) = psi",
           lambda: all(exp.curry(exp.uncurry(psi), k) == psi for psi in backward))

    def unique_factorization():
        hits: Dict[Morphism, int] = {phi: 0 for phi in forward}
        for psi in backward:
            phi = exp.uncurry(psi)
            if phi not in hits:
                return False
            hits[phi] += 1
        return all(count == 1 for count in hits.values())

    _check(report, f"{tag}: every map factors uniquely through evaluation", unique_factorization)
    _check(report, f"{tag}: evaluation is the transpose of the identity",
           lambda: exp.uncurry(identity(exp.carrier)) == exp.evaluation)


def _undirect_triangles(report: SuiteReport, n: int, q: Quiver, g: SetSystemHypergraph) -> None:
    _check(report, f"U-D #{n}: D(counit) after unit is the identity", lambda: compose(
        associated_digraph_mor(undirect_counit(g)), digraph_unit(associated_digraph(g))
    ) == identity(associated_digraph(g)))
    _check(report, f"U-D #{n}: counit after U(unit) is the identity", lambda: compose(
        undirect_counit(undirect(q)), undirect_mor(digraph_unit(q))
    ) == identity(undirect(q)))


def adjunction_suite(objects: Sequence[GraphObject] = (), seed: Optional[int] = None, size: Optional[int] = None) -> SuiteReport:
    """Closedness of every product and the undirect adjunction."""
    seed = get_config().default_seed if seed is None else seed
    size = get_config().corpus_size if size is None else size
    report = SuiteReport("adjunction")
    for kind, corpus_kind in ADJUNCTIONS.items():
        for n, (g, k, h) in enumerate(_samples(objects, corpus_kind, 3, size, seed, ADJUNCTION_BOUNDS)):
            _adjunction_laws(report, kind, n, g, k, h)
    quivers = _samples(objects, "quiver", 1, size, seed, ADJUNCTION_BOUNDS)
    graphs = _samples(objects, "multigraph", 1, size, seed, ADJUNCTION_BOUNDS)
    for n, ((q,), (g,)) in enumerate(zip(quivers, graphs)):
        _undirect_triangles(report, n, q, g)
    logger.info(report.summary())
    return report


# =============================================================================
# Spectral suites
# =============================================================================

def weakwalk_suite(
    objects: Sequence = (),
    seed: Optional[int] = None,
    size: Optional[int] = None,
    k_max: Optional[int] = None,
) -> SuiteReport:
    """
    Weak-walk correspondence on the given oriented hypergraphs, or on a
    random corpus with random orientations.
    """
    config = get_config()
    seed = config.default_seed if seed is None else seed
    size = config.weakwalk_size if size is None else size
    k_max = config.default_kmax if k_max is None else k_max
    targets = [oriented(obj) for obj in objects if not isinstance(obj, (Quiver, SetSystemHypergraph))]
    if not targets:
        rng = make_rng(seed)
        for g in corpus("incidence", size=size, seed=seed):
            targets.append(oriented(g, random_orientation(rng, g)))
    report = SuiteReport("weakwalk")
    for n, og in enumerate(targets):
        sub = verify_weak_walk_theorem(og, k_max)
        for check in sub.checks:
            report.add(f"#{n}: {check.name}", check.ok, check.detail)
        for note in sub.notes:
            report.note(f"#{n}: {note}")
    logger.info(report.summary())
    return report


def census_suite(objects: Sequence = (), k_max: Optional[int] = None, seed: Optional[int] = None, size: Optional[int] = None) -> SuiteReport:
    """Laplacian-exponential census for k = 1..k_max on each incidence hypergraph."""
    config = get_config()
    seed = config.default_seed if seed is None else seed
    size = config.corpus_size if size is None else size
    k_max = config.default_kmax if k_max is None else k_max
    targets = [oriented(obj).carrier for obj in objects if not isinstance(obj, (Quiver, SetSystemHypergraph))]
    if not targets:
        targets = corpus("incidence", size=size, seed=seed, bounds=COHERENCE_BOUNDS)
    report = SuiteReport("census")
    for n, g in enumerate(targets):
        for k in range(1, k_max + 1):
            sub = laplacian_exponential_census(g, k)
            for check in sub.checks:
                report.add(f"#{n} k={k}: {check.name}", check.ok, check.detail)
            report.notes.extend(f"#{n}: {note}" for note in sub.notes)
    logger.info(report.summary())
    return report


def run_suite(
    name: str,
    objects: Sequence = (),
    seed: Optional[int] = None,
    k_max: Optional[int] = None,
    size: Optional[int] = None,
) -> SuiteReport:
    """
    Run a suite by name.

    Raises:
        InputError: Unknown suite name.
    """
    if name == "coherence":
        return coherence_suite(objects, seed, size)
    if name == "adjunction":
        return adjunction_suite(objects, seed, size)
    if name == "weakwalk":
        return weakwalk_suite(objects, seed, size, k_max)
    if name == "census":
        return census_suite(objects, k_max, seed, size)
    raise InputError(f"Unknown suite {name!r}; choose from {', '.join(SUITES)}")
