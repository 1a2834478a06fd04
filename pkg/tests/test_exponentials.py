"""
Tests for the box exponentials and the Laplacian exponential.

Usage:
    pytest tests/test_exponentials.py -v
"""

from collections import Counter

import pytest

from src.core import identity, validate
from src.elements import label
from src.errors import MorphismMismatchError, SizeGuardError
from src.exponentials import (
    BetaEdge,
    curry,
    exp_box_h,
    exp_box_m,
    exp_box_q,
    exp_box_r,
    exp_laplacian,
    exponential,
    uncurry,
)
from src.functors import delete
from src.generators import (
    cycle_h,
    cycle_q,
    edge_unit_q,
    incidence_unit_r,
    n_edge_h,
    path_h,
    path_q,
    path_r,
    vertex_unit_r,
)
from src.homsearch import count_homs, enumerate_homs
from src.products import product


def assert_adjunction(exp, k):
    """Hom-set bijection and round trips for one exponent K."""
    forward = enumerate_homs(product(exp_product(exp.kind), exp.left, k), exp.right)
    backward = enumerate_homs(k, exp.carrier)
    assert len(forward) == len(backward)
    for phi in forward:
        assert exp.uncurry(exp.curry(phi, k)) == phi
    for psi in backward:
        assert exp.curry(exp.uncurry(psi), k) == psi


def exp_product(kind: str) -> str:
    return "box-r" if kind == "box-v" else kind


class TestQuiverExponential:
    """[Q1, Q2]_B."""

    def test_arrow_into_two_cycle(self):
        exp = exp_box_q(path_q(1), cycle_q(2))
        assert exp.carrier.describe() == "2 vertices, 2 edges"
        assert validate(exp.evaluation)

    def test_vertex_exponent_is_base(self):
        exp = exp_box_q(path_q(0), cycle_q(3))
        assert exp.carrier.sizes() == cycle_q(3).sizes()

    @pytest.mark.parametrize("k", [path_q(0), path_q(1), edge_unit_q(), cycle_q(1)])
    def test_adjunction(self, k):
        assert_adjunction(exp_box_q(path_q(1), cycle_q(2)), k)


class TestSetSystemExponential:
    """[G, H]_β and its multigraph restriction."""

    def test_edge_into_parallel_pair(self):
        exp = exp_box_h(path_h(1), cycle_h(2))
        assert exp.carrier.describe() == "4 vertices, 36 edges"
        sizes = Counter(len(vs) for vs in exp.carrier.endpoints.values())
        assert sizes == {2: 16, 3: 16, 4: 4}

    def test_multigraph_exponential_keeps_small_edges(self):
        exp = exp_box_m(path_h(1), cycle_h(2))
        assert exp.carrier.describe() == "4 vertices, 16 edges"
        assert exp.carrier == delete(exp_box_h(path_h(1), cycle_h(2)).carrier)
        assert exp.carrier.is_multigraph

    def test_edge_endpoints_are_members(self):
        exp = exp_box_h(path_h(1), cycle_h(2))
        for edge, members in exp.carrier.endpoints.items():
            assert isinstance(edge, BetaEdge)
            assert members == edge.members

    def test_size_guard(self):
        with pytest.raises(SizeGuardError):
            exp_box_h(path_h(0), n_edge_h(5), size_guard=4)

    def test_multigraph_exponential_needs_multigraphs(self):
        with pytest.raises(MorphismMismatchError):
            exp_box_m(n_edge_h(3), cycle_h(2))

    @pytest.mark.parametrize("k", [path_h(0), path_h(1), cycle_h(1), n_edge_h(3)])
    def test_adjunction(self, k):
        assert_adjunction(exp_box_h(path_h(1), cycle_h(2)), k)

    @pytest.mark.parametrize("k", [path_h(0), path_h(1), cycle_h(1)])
    def test_multigraph_adjunction(self, k):
        assert_adjunction(exp_box_m(path_h(1), cycle_h(2)), k)


class TestIncidenceBoxExponential:
    """[G, H]_V: edges are all functions V(G) -> E(H)."""

    def test_sizes(self, g_doubled):
        exp = exp_box_r(path_r(1), g_doubled)
        # one vertex in the exponent: every edge of the base is a function
        assert len(exp.carrier.vertices) == count_homs(path_r(1), g_doubled)
        assert len(exp.carrier.edges) == 2

    def test_alias(self, p_one):
        assert exponential("box-v", path_r(1), p_one).carrier == exponential("box-r", path_r(1), p_one).carrier

    @pytest.mark.parametrize("k", [vertex_unit_r(), path_r(1), path_r(2)])
    def test_adjunction(self, p_one, k):
        assert_adjunction(exp_box_r(path_r(1), p_one), k)


class TestLaplacianExponential:
    """[G, H]_L and the census of incidence-path exponentials."""

    def test_half_path_into_four_vertex(self, g_four):
        exp = exp_laplacian(path_r(1), g_four)
        assert exp.carrier.describe().startswith("10 vertices, 10 edges")

    def test_half_path_into_doubled_incidence(self, g_doubled):
        exp = exp_laplacian(path_r(1), g_doubled)
        assert exp.carrier.describe().startswith("6 vertices, 6 edges")
        assert len(exp.carrier.incidences) == count_homs(
            product("laplacian", path_r(1), incidence_unit_r()), g_doubled
        )

    def test_vertex_exponent(self, g_doubled):
        exp = exp_laplacian(vertex_unit_r(), g_doubled)
        assert exp.carrier.sizes()[:2] == (3, 2)

    @pytest.mark.parametrize("k", [vertex_unit_r(), path_r(1), path_r(2)])
    def test_adjunction(self, k):
        assert_adjunction(exp_laplacian(path_r(1), path_r(2)), k)

    def test_evaluation_is_uncurried_identity(self, p_one):
        exp = exp_laplacian(path_r(1), p_one)
        assert uncurry(exp, identity(exp.carrier)) == exp.evaluation


class TestCarrierIndex:
    """Labels of carrier elements resolve to what they stand for."""

    def test_index_is_bijective(self, p_one):
        exp = exp_laplacian(path_r(1), p_one)
        index = exp.vertex_index
        assert len(index) == len(exp.carrier.vertices)
        for text, phi in index.items():
            assert label(phi) == text
            assert phi.domain == path_r(1)

    def test_unknown_kind(self, p_one):
        with pytest.raises(MorphismMismatchError):
            exponential("box-z", p_one, p_one)

    def test_curry_rejects_wrong_domain(self, p_one):
        exp = exp_laplacian(path_r(1), p_one)
        with pytest.raises(MorphismMismatchError):
            curry(exp, identity(p_one), p_one)
