"""
Tests for hom enumeration, counting and isomorphism search.

Usage:
    pytest tests/test_homsearch.py -v
"""

import pytest

from src.core import IncidenceHypergraph, Quiver, validate
from src.errors import AnchorError, HomCountOverflowError, MorphismMismatchError
from src.functors import u_bipartite
from src.generators import (
    cycle_h,
    cycle_q,
    edge_unit_q,
    edge_unit_r,
    n_edge_h,
    path_h,
    path_q,
    path_r,
    vertex_unit_r,
)
from src.homsearch import (
    AnchorConstraint,
    canonical_key,
    count_homs,
    enumerate_homs,
    is_isomorphic,
    iter_homs,
)
from src.products import dual


class TestCountHoms:
    """Hom counts against hand-computed values."""

    @pytest.mark.parametrize("domain,expected", [
        (vertex_unit_r(), 4),
        (edge_unit_r(), 5),
        (path_r(1), 10),
        # every edge of the example has two incidences: 5 * 2 * 2
        (path_r(2), 20),
    ])
    def test_into_four_vertex(self, g_four, domain, expected):
        assert count_homs(domain, g_four) == expected

    @pytest.mark.parametrize("domain,codomain,expected", [
        (edge_unit_q(), cycle_q(2), 2),
        (path_q(2), cycle_q(2), 2),
        (cycle_q(2), cycle_q(1), 1),
        (cycle_q(3), cycle_q(2), 0),
        (path_h(1), cycle_h(2), 4),
        (path_h(1), path_h(1), 2),
        # surjective vertex maps of three endpoints onto two
        (n_edge_h(3), path_h(1), 6),
        (path_h(1), n_edge_h(3), 0),
    ])
    def test_quivers_and_set_systems(self, domain, codomain, expected):
        assert count_homs(domain, codomain) == expected

    def test_count_matches_enumeration(self, g_doubled):
        for k in range(4):
            assert count_homs(path_r(k), g_doubled) == len(enumerate_homs(path_r(k), g_doubled))

    def test_enumerated_homs_are_valid_and_distinct(self, g_doubled):
        homs = enumerate_homs(path_r(3), g_doubled)
        assert all(validate(f) for f in homs)
        assert len(set(homs)) == len(homs)

    def test_enumeration_order_is_stable(self, g_four):
        first = [f.label() for f in iter_homs(path_r(2), g_four)]
        second = [f.label() for f in iter_homs(path_r(2), g_four)]
        assert first == second

    def test_empty_domain_has_one_hom(self, g_four):
        assert count_homs(IncidenceHypergraph(), g_four) == 1

    def test_overflow_is_reported(self):
        many = IncidenceHypergraph(vertices=[f"v{n}" for n in range(64)])
        two = IncidenceHypergraph(vertices={"a", "b"})
        with pytest.raises(HomCountOverflowError):
            count_homs(many, two)


class TestEnumerationOrder:
    """enumerate_homs returns the hom set sorted by image labels."""

    def test_sorted_by_domain_then_image_labels(self, g_doubled):
        homs = enumerate_homs(path_r(1), g_doubled)
        keys = [canonical_key(f) for f in homs]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys) == 6
        # vertices come first in the key
        assert homs[0].vertex_map["v0"] == "v1"

    def test_same_members_as_search_order(self, g_four):
        assert set(enumerate_homs(path_r(2), g_four)) == set(iter_homs(path_r(2), g_four))

    def test_quiver_order(self):
        homs = enumerate_homs(edge_unit_q(), cycle_q(2))
        assert [f.vertex_map["v0"] for f in homs] == ["v0", "v1"]


class TestAnchorsAndFilters:
    """Anchored and injective searches."""

    def test_backsteps_at_a_vertex(self, g_four):
        anchors = AnchorConstraint.of(vertices={"v0": "v1", "v1": "v1"})
        assert count_homs(path_r(2), g_four, anchors) == 3

    def test_anchor_on_incidence(self, g_four):
        anchors = AnchorConstraint.of(incidences={"i0": "i1"})
        homs = enumerate_homs(path_r(2), g_four, anchors)
        assert len(homs) == 2
        assert all(f.incidence_map["i0"] == "i1" for f in homs)

    def test_incidence_monic(self, g_four):
        assert count_homs(path_r(2), g_four, monic="incidence") == 10

    def test_vertex_monic_on_quivers(self):
        assert count_homs(path_q(1), cycle_q(1)) == 1
        assert count_homs(path_q(1), cycle_q(1), monic="vertex") == 0

    @pytest.mark.parametrize("anchors", [
        AnchorConstraint.of(vertices={"v9": "v1"}),
        AnchorConstraint.of(vertices={"v0": "v9"}),
        AnchorConstraint((("vertex", "v0", "v1"), ("vertex", "v0", "v2"))),
    ])
    def test_bad_anchors(self, g_four, anchors):
        with pytest.raises(AnchorError):
            count_homs(path_r(2), g_four, anchors)

    def test_categories_must_match(self, g_four):
        with pytest.raises(MorphismMismatchError):
            count_homs(path_q(1), g_four)


class TestIsomorphism:
    """Isomorphism search with degree pruning."""

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
    def test_bipartite_graph_of_incidence_path(self, k):
        result = is_isomorphic(u_bipartite(path_r(k)), path_h(k))
        assert result
        assert validate(result.witness)

    def test_different_sizes(self):
        assert not is_isomorphic(cycle_h(2), path_h(2))
        assert not is_isomorphic(dual(path_r(2)), path_r(2))

    def test_same_sizes_different_shape(self):
        fork = Quiver({"a", "b", "c"}, {"x", "y"}, {"x": "a", "y": "a"}, {"x": "b", "y": "c"})
        assert not is_isomorphic(path_q(2), fork)

    def test_dual_of_dual(self, g_doubled):
        assert is_isomorphic(dual(dual(g_doubled)), g_doubled)
