"""
Tests for Graphviz DOT export.

Output is checked structurally (graph kind, one line per incidence or arc,
stable text) and byte-for-byte against the golden drawings in
tests/fixtures/dot, whose objects are committed under tests/fixtures/objects.

Usage:
    pytest tests/test_dot.py -v
"""

import json
from pathlib import Path

import pytest

from src.corpus import four_vertex
from src.documents import parse, serialize
from src.dot_export import to_dot, to_graph, write_dot
from src.exponentials import exp_box_h, exp_box_q, exp_box_r, exp_laplacian
from src.functors import associated_digraph, u_bipartite
from src.generators import (
    cycle_h,
    cycle_q,
    edge_unit_q,
    edge_unit_r,
    incidence_unit_r,
    n_edge_h,
    n_edge_r,
    path_h,
    path_q,
    path_r,
)
from src.products import box_h, box_q, box_r, dual, laplacian_product

FIXTURES_DIR = Path(__file__).parent / "fixtures"
OBJECTS_DIR = FIXTURES_DIR / "objects"
DOT_DIR = FIXTURES_DIR / "dot"

# Drawn objects: golden name -> builder
DRAWINGS = {
    "quiver_square": lambda: box_q(edge_unit_q(), edge_unit_q()),
    "quiver_exponential": lambda: exp_box_q(edge_unit_q(), cycle_q(2)).carrier,
    "hyperedge_box": lambda: box_h(n_edge_h(2), n_edge_h(3)),
    "set_system_exponential": lambda: exp_box_h(path_h(1), cycle_h(2)).carrier,
    "incidence_hyperedge_box": lambda: box_r(n_edge_r(2), n_edge_r(3)),
    "incidence_exponential": lambda: exp_box_r(incidence_unit_r(), path_r(2)).carrier,
    "path_dual": lambda: dual(path_r(2)),
    "incidence_path_square": lambda: box_r(path_r(2), path_r(2)),
    "bipartite_path_square": lambda: u_bipartite(box_r(path_r(2), path_r(2))),
    "laplacian_path_square": lambda: laplacian_product(path_r(2), path_r(2)),
    "laplacian_path_half": lambda: laplacian_product(path_r(2), path_r(1)),
    "bipartite_laplacian_square": lambda: u_bipartite(laplacian_product(path_r(2), path_r(2))),
    "laplacian_exponential": lambda: exp_laplacian(incidence_unit_r(), path_r(2)).carrier,
    "graph_box": lambda: box_h(path_h(1), path_h(1)),
    "triangle_prism": lambda: box_h(cycle_h(3), path_h(1)),
    "ladder": lambda: box_h(path_h(2), path_h(1)),
    "four_vertex": four_vertex,
    "four_vertex_dual": lambda: dual(four_vertex()),
    "four_vertex_bipartite": lambda: u_bipartite(four_vertex()),
}


class TestIncidenceDot:
    """Incidence hypergraphs as bipartite drawings."""

    def test_one_line_per_incidence(self, g_four):
        source = to_dot(g_four)
        assert source.startswith("graph G {")
        assert source.count(" -- ") == 10

    def test_parallel_incidences_are_drawn_twice(self, g_doubled):
        assert to_dot(g_doubled).count(" -- ") == 6

    def test_every_element_is_a_node(self, g_four):
        graph = to_graph(g_four)
        source = graph.source
        for n in range(4 + 5):
            assert f"n{n} " in source
        assert "label=v1" in source

    def test_loose_edge(self):
        source = to_dot(edge_unit_r())
        assert " -- " not in source
        assert "label=e0" in source

    def test_custom_name(self, g_doubled):
        assert to_dot(g_doubled, "example").startswith("graph example {")


class TestOtherCategories:
    """Quivers and set-system hypergraphs."""

    def test_quiver_arcs(self):
        source = to_dot(cycle_q(2))
        assert source.startswith("digraph Q {")
        assert source.count(" -> ") == 2

    def test_product_labels_are_quoted(self):
        source = to_dot(box_q(path_q(1), path_q(1)))
        assert source.count(" -> ") == 4
        assert 'label="(v0,v0)"' in source

    def test_hyperedge_joins_its_endpoints(self):
        source = to_dot(n_edge_h(3))
        assert source.startswith("graph H {")
        assert source.count(" -- ") == 3


class TestOutput:
    """Deterministic text and file output."""

    def test_deterministic(self, g_four):
        assert to_dot(g_four) == to_dot(g_four)

    def test_write_dot(self, g_doubled, tmp_path):
        path = write_dot(g_doubled, tmp_path / "g_doubled.dot")
        assert path.read_text(encoding="utf-8") == to_dot(g_doubled)


class TestGoldenDrawings:
    """Constructed objects against their committed documents and drawings."""

    @pytest.mark.parametrize("name", sorted(DRAWINGS))
    def test_matches_golden(self, name):
        golden = (DOT_DIR / f"{name}.dot").read_text(encoding="utf-8")
        assert to_dot(DRAWINGS[name]()) == golden

    @pytest.mark.parametrize("name", sorted(DRAWINGS))
    def test_matches_document(self, name):
        with open(OBJECTS_DIR / f"{name}.json", encoding="utf-8") as f:
            expected = json.load(f)
        assert serialize(DRAWINGS[name]()) == expected

    @pytest.mark.parametrize("name", sorted(DRAWINGS))
    def test_document_draws_the_same(self, name):
        golden = (DOT_DIR / f"{name}.dot").read_text(encoding="utf-8")
        assert to_dot(parse(OBJECTS_DIR / f"{name}.json").obj) == golden

    def test_arc_labels_are_quoted_text(self):
        source = to_dot(associated_digraph(path_h(1)))
        assert 'n0 -> n1 [label="<e0,v0,v1>"]' in source
        assert 'n1 -> n0 [label="<e0,v1,v0>"]' in source
