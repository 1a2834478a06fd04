"""
Tests for the box products, the incidence dual and the Laplacian product.

Usage:
    pytest tests/test_products.py -v
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core import compose, identity, validate
from src.corpus import CorpusBounds, corpus
from src.elements import Pair, Tagged
from src.errors import MorphismMismatchError
from src.generators import (
    cycle_h,
    edge_unit_r,
    incidence_unit_r,
    n_edge_h,
    path_q,
    path_r,
    vertex_unit_r,
)
from src.homsearch import enumerate_homs
from src.products import (
    box_h,
    box_q,
    box_r,
    box_r_mor,
    dual,
    dual_mor,
    incidence_prism,
    laplacian_mor,
    laplacian_product,
    prism_dual_inclusion,
    prism_inclusion,
    product,
)

SMALL = CorpusBounds(max_vertices=3, max_edges=3, max_incidences=4)


def box_r_sizes(g, h):
    (v1, e1, i1), (v2, e2, i2) = g.sizes(), h.sizes()
    return v1 * v2, e1 * v2 + v1 * e2, i1 * v2 + v1 * i2


def laplacian_sizes(g, h):
    (v1, e1, i1), (v2, e2, i2) = g.sizes(), h.sizes()
    return v1 * v2 + e1 * e2, e1 * v2 + v1 * e2, i1 * v2 + i1 * e2 + e1 * i2 + v1 * i2


class TestBoxProducts:
    """Element counts and structure of the box products."""

    def test_quiver_square(self):
        square = box_q(path_q(1), path_q(1))
        assert square.sizes() == (4, 4)
        assert square.source[Tagged(1, "e0", "v0")] == Pair("v0", "v0")
        assert square.target[Tagged(2, "v0", "e0")] == Pair("v0", "v1")

    def test_set_system_product_keeps_edge_sizes(self):
        product_graph = box_h(n_edge_h(3), cycle_h(2))
        sizes = sorted(len(vs) for vs in product_graph.endpoints.values())
        # three copies of each 2-edge over the 3-edge's vertices, two copies of the 3-edge
        assert sizes == [2] * 6 + [3] * 2

    @pytest.mark.parametrize("g,h", [
        (path_r(2), path_r(3)),
        (edge_unit_r(), path_r(2)),
        (incidence_unit_r(), incidence_unit_r()),
    ])
    def test_incidence_box_sizes(self, g, h):
        assert box_r(g, h).sizes() == box_r_sizes(g, h)

    def test_unit_is_neutral_in_size(self, g_doubled):
        assert box_r(g_doubled, vertex_unit_r()).sizes() == g_doubled.sizes()

    def test_box_m_requires_multigraphs(self):
        with pytest.raises(MorphismMismatchError):
            product("box-m", n_edge_h(3), cycle_h(2))
        assert product("box-m", cycle_h(2), cycle_h(1)).is_multigraph

    def test_product_checks_category(self):
        with pytest.raises(MorphismMismatchError):
            product("box-r", path_q(1), path_r(1))
        with pytest.raises(MorphismMismatchError):
            product("box-x", path_r(1), path_r(1))


class TestDual:
    """The incidence dual swaps vertices and edges."""

    def test_involution(self, g_four):
        assert dual(dual(g_four)) == g_four

    def test_sizes_swap(self, g_doubled):
        assert dual(g_doubled).sizes() == (2, 3, 6)

    def test_dual_of_morphism(self, g_four):
        f = enumerate_homs(path_r(2), g_four)[3]
        df = dual_mor(f)
        assert validate(df)
        assert dual_mor(df) == f

    def test_dual_rejects_other_categories(self):
        with pytest.raises(MorphismMismatchError):
            dual(cycle_h(2))


class TestLaplacianProduct:
    """G ■ H element counts and the prism."""

    def test_half_path_squared(self, p_half):
        # two vertices, two edges, four incidences
        assert laplacian_product(p_half, p_half).sizes() == (2, 2, 4)

    @pytest.mark.parametrize("g,h", [
        (path_r(2), path_r(1)),
        (path_r(3), edge_unit_r()),
        (vertex_unit_r(), path_r(4)),
    ])
    def test_sizes(self, g, h):
        assert laplacian_product(g, h).sizes() == laplacian_sizes(g, h)

    def test_loose_edge_turns_product_into_dual(self, g_doubled):
        assert laplacian_product(g_doubled, edge_unit_r()).sizes() == dual(g_doubled).sizes()

    def test_port_and_attachment_formulas(self, p_half):
        g = laplacian_product(p_half, p_half)
        assert g.port[Tagged(1, "i0", "v0")] == Tagged(1, "v0", "v0")
        assert g.attachment[Tagged(1, "i0", "v0")] == Tagged(2, "e0", "v0")
        assert g.port[Tagged(2, "i0", "e0")] == Tagged(4, "e0", "e0")
        assert g.attachment[Tagged(2, "i0", "e0")] == Tagged(3, "v0", "e0")
        assert g.port[Tagged(3, "e0", "i0")] == Tagged(4, "e0", "e0")
        assert g.attachment[Tagged(3, "e0", "i0")] == Tagged(2, "e0", "v0")
        assert g.port[Tagged(4, "v0", "i0")] == Tagged(1, "v0", "v0")
        assert g.attachment[Tagged(4, "v0", "i0")] == Tagged(3, "v0", "e0")

    def test_prism_contains_graph_and_dual(self, g_doubled):
        prism = incidence_prism(g_doubled)
        assert prism.sizes() == (3 + 2, 2 + 3, 6 + 6 + 2 + 3)
        assert validate(prism_inclusion(g_doubled))
        assert validate(prism_dual_inclusion(g_doubled))


class TestFunctoriality:
    """Products act on morphisms compatibly with composition."""

    def test_box_r_preserves_identities(self, p_one, p_half):
        assert box_r_mor(identity(p_one), identity(p_half)) == identity(box_r(p_one, p_half))

    def test_laplacian_preserves_composition(self, g_doubled):
        f1 = enumerate_homs(path_r(1), path_r(2))[0]
        f2 = enumerate_homs(path_r(2), g_doubled)[4]
        g1 = identity(path_r(1))
        left = laplacian_mor(compose(f2, f1), compose(g1, g1))
        right = compose(laplacian_mor(f2, g1), laplacian_mor(f1, g1))
        assert left == right


class TestProductProperties:
    """Size formulas on random incidence hypergraphs."""

    @settings(max_examples=20, deadline=None, derandomize=True)
    @given(seed=st.integers(min_value=0, max_value=10_000))
    def test_random_sizes(self, seed):
        g, h = corpus("incidence", size=2, seed=seed, bounds=SMALL)
        assert box_r(g, h).sizes() == box_r_sizes(g, h)
        assert laplacian_product(g, h).sizes() == laplacian_sizes(g, h)
        assert dual(laplacian_product(g, h)).sizes() == laplacian_product(dual(g), h).sizes()
