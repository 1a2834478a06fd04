"""
Tests for elements, objects, morphisms, validation and generators.

Usage:
    pytest tests/test_core.py -v
"""

import pytest

from src.core import (
    IncidenceHypergraph,
    PathMapKind,
    Quiver,
    SetSystemHypergraph,
    check,
    classify_path_map,
    compose,
    identity,
    inverse,
    is_isomorphism,
    make_morphism,
    validate,
)
from src.elements import Arc, FrozenMap, Inj, Pair, Tagged, label, parse_label
from src.errors import InputError, MorphismMismatchError, ValidationError
from src.generators import (
    cycle_h,
    cycle_q,
    cycle_r,
    edge_unit_r,
    generator,
    incidence_unit_r,
    n_edge_h,
    path_ends,
    path_q,
    path_r,
    representing_morphism,
    vertex_unit_r,
)
from src.homsearch import enumerate_homs


class TestLabels:
    """Canonical labels of composite elements."""

    @pytest.mark.parametrize("element,expected", [
        ("v0", "v0"),
        (Pair("v", "w"), "(v,w)"),
        (Tagged(1, "e", "w"), "1:e:w"),
        (Tagged(2, Tagged(1, "a", "b"), "c"), "2:(1:a:b):c"),
        (Tagged(4, Pair("x", "y"), "z"), "4:(x,y):z"),
        (Inj(2, "e"), "2:e"),
        (Arc("e", "x", "y"), "<e,x,y>"),
        (Pair(Inj(1, "v"), Inj(2, "e")), "(1:v,2:e)"),
        (7, "#7"),
        (Tagged(1, -3, "a"), "1:#-3:a"),
    ])
    def test_label(self, element, expected):
        assert label(element) == expected

    @pytest.mark.parametrize("element", [
        "v0",
        Pair("v", "w"),
        Tagged(1, "e", "w"),
        Tagged(2, Tagged(1, "a", "b"), Pair("c", "d")),
        Inj(1, "v3"),
        Arc(Tagged(1, "e", "w"), Pair("x", "w"), Pair("y", "w")),
        Pair(Inj(1, "v"), Inj(2, "e")),
        12,
        Pair(0, Tagged(2, "e", -1)),
    ])
    def test_parse_rebuilds_element(self, element):
        assert parse_label(label(element)) == element

    @pytest.mark.parametrize("text", ["a:b", "12", "[V{v0->v1}]", "{v0->e1}", "x)"])
    def test_unstructured_text_stays_opaque(self, text):
        assert parse_label(text) == text
        assert label(parse_label(text)) == text

    def test_numbers_and_strings_differ(self):
        assert label(1) != label("1")
        assert parse_label("1") == "1"
        assert parse_label("#1") == 1

    def test_empty_label_rejected(self):
        with pytest.raises(ValueError):
            parse_label("")

    def test_frozen_map_label_is_sorted(self):
        m = FrozenMap({"v1": "e2", "v0": "e1"})
        assert m.label() == "{v0->e1,v1->e2}"
        assert hash(m) == hash(FrozenMap({"v0": "e1", "v1": "e2"}))


class TestObjects:
    """Construction, equality and validation of objects."""

    def test_equal_objects_hash_equal(self):
        a = Quiver({"a", "b"}, {"x"}, {"x": "a"}, {"x": "b"})
        b = Quiver(["b", "a"], ["x"], {"x": "a"}, {"x": "b"})
        assert a == b
        assert hash(a) == hash(b)

    def test_categories_differ(self):
        assert vertex_unit_r() != SetSystemHypergraph({"v0"})

    def test_describe(self, g_four):
        assert g_four.describe() == "4 vertices, 5 edges, 10 incidences"
        assert incidence_unit_r().describe() == "1 vertex, 1 edge, 1 incidence"

    def test_empty_objects_are_valid(self):
        assert validate(IncidenceHypergraph())
        assert validate(Quiver())
        assert validate(SetSystemHypergraph())

    def test_loose_edge_is_valid(self):
        assert validate(edge_unit_r())

    def test_opaque_labels_are_valid(self):
        assert validate(IncidenceHypergraph({"[V{v0->v1}]", "{v0->e1}"}))

    @pytest.mark.parametrize("obj,constraint,element", [
        (
            IncidenceHypergraph({"v0"}, {"e0"}, {"i0"}, {"i0": "v0"}, {"i0": "e9"}),
            "attachment out of range", "i0",
        ),
        (
            IncidenceHypergraph({"v0"}, {"e0"}, {"i0"}, {}, {"i0": "e0"}),
            "port not total", "i0",
        ),
        (
            Quiver({"v0"}, {"e0"}, {"e0": "v0"}, {"e0": "v7"}),
            "target out of range", "e0",
        ),
        (
            SetSystemHypergraph({"v0"}, {"e0"}, {"e0": {"v0", "v1"}}),
            "endpoints out of range", "e0",
        ),
        (
            Quiver({"v0"}, set(), {"e5": "v0"}, {}),
            "source defined outside its domain", "e5",
        ),
        (IncidenceHypergraph({"v0", "1:v0:e0"}), "malformed label", "1:v0:e0"),
        (Quiver({"#1"}), "malformed label", "#1"),
    ])
    def test_validation_reports_first_violation(self, obj, constraint, element):
        report = validate(obj)
        assert not report
        assert report.constraint == constraint
        assert report.element == element

    def test_check_raises_validation_error(self):
        bad = IncidenceHypergraph({"v0"}, {"e0"}, {"i0"}, {"i0": "v0"}, {"i0": "e9"})
        with pytest.raises(ValidationError) as excinfo:
            check(bad)
        assert excinfo.value.constraint == "attachment out of range"

    def test_multigraph_property(self):
        assert cycle_h(2).is_multigraph
        assert cycle_h(1).is_multigraph
        assert not n_edge_h(3).is_multigraph
        assert not n_edge_h(0).is_multigraph


class TestMorphisms:
    """Composition, identities and inverses."""

    def test_identity_is_neutral(self, p_one):
        f = enumerate_homs(path_r(1), p_one)[0]
        assert compose(identity(p_one), f) == f
        assert compose(f, identity(path_r(1))) == f

    def test_composition_is_associative(self, g_four):
        f = enumerate_homs(path_r(1), path_r(2))[1]
        g = enumerate_homs(path_r(2), path_r(3))[2]
        h = enumerate_homs(path_r(3), g_four)[5]
        assert compose(h, compose(g, f)) == compose(compose(h, g), f)

    def test_compose_rejects_mismatched_objects(self, g_four):
        f = enumerate_homs(path_r(1), g_four)[0]
        with pytest.raises(MorphismMismatchError):
            compose(f, f)

    def test_make_morphism_rejects_mixed_categories(self):
        with pytest.raises(MorphismMismatchError):
            make_morphism(vertex_unit_r(), cycle_q(1), {})

    def test_port_violation_detected(self, p_one):
        f = make_morphism(
            path_r(1), p_one,
            {"vertex": {"v0": "v1"}, "edge": {"e0": "e0"}, "incidence": {"i0": "i0"}},
        )
        report = validate(f)
        assert not report
        assert report.constraint == "port not preserved"

    def test_inverse_of_relabeling(self):
        a = Quiver({"a", "b"}, {"x"}, {"x": "a"}, {"x": "b"})
        f = make_morphism(path_q(1), a, {"vertex": {"v0": "a", "v1": "b"}, "edge": {"e0": "x"}})
        assert is_isomorphism(f)
        assert compose(inverse(f), f) == identity(path_q(1))

    def test_inverse_requires_bijection(self):
        f = make_morphism(path_q(1), cycle_q(1), {"vertex": {"v0": "v0", "v1": "v0"}, "edge": {"e0": "e0"}})
        assert validate(f)
        with pytest.raises(MorphismMismatchError):
            inverse(f)

    def test_missing_a_sort_is_not_an_isomorphism(self):
        source = IncidenceHypergraph({"v0"}, {"e0"})
        assert is_isomorphism(identity(source))
        f = make_morphism(source, incidence_unit_r(), {"vertex": {"v0": "v0"}, "edge": {"e0": "e0"}})
        assert validate(f)
        assert not is_isomorphism(f)

    def test_morphism_label_lists_every_sort(self):
        f = representing_morphism(path_r(2), "incidence", "i1")
        assert f.label() == "[V{v0->v1}|E{e0->e0}|I{i0->i1}]"


class TestClassifyPathMap:
    """Backsteps, loops and adjacencies out of the length-one incidence path."""

    def test_kinds_on_a_single_edge(self, p_one):
        kinds = [classify_path_map(f) for f in enumerate_homs(path_r(2), p_one)]
        assert kinds.count(PathMapKind.BACKSTEP) == 2
        assert kinds.count(PathMapKind.ADJACENCY) == 2
        assert PathMapKind.LOOP not in kinds

    def test_parallel_incidences_give_loops(self, g_doubled):
        kinds = [classify_path_map(f) for f in enumerate_homs(path_r(2), g_doubled)]
        # v1 meets e2 twice: two ordered loops
        assert kinds.count(PathMapKind.LOOP) == 2
        assert kinds.count(PathMapKind.BACKSTEP) == 6

    def test_requires_path_domain(self, g_four):
        f = enumerate_homs(path_r(1), g_four)[0]
        with pytest.raises(MorphismMismatchError):
            classify_path_map(f)


class TestGenerators:
    """Sizes and label schemes of the standard generators."""

    @pytest.mark.parametrize("k,sizes", [
        (0, (1, 0, 0)),
        (1, (1, 1, 1)),
        (2, (2, 1, 2)),
        (3, (2, 2, 3)),
        (6, (4, 3, 6)),
    ])
    def test_path_r_sizes(self, k, sizes):
        assert path_r(k).sizes() == sizes

    @pytest.mark.parametrize("k,ends", [(0, ("v0", "v0")), (1, ("v0", "e0")), (2, ("v0", "v1")), (5, ("v0", "e2"))])
    def test_path_ends(self, k, ends):
        assert path_ends(k) == ends

    def test_path_r_incidences_follow_sequence(self):
        g = path_r(3)
        assert (g.port["i0"], g.attachment["i0"]) == ("v0", "e0")
        assert (g.port["i1"], g.attachment["i1"]) == ("v1", "e0")
        assert (g.port["i2"], g.attachment["i2"]) == ("v1", "e1")

    def test_cycles(self):
        assert cycle_r(4).sizes() == (2, 2, 4)
        assert cycle_q(3).sizes() == (3, 3)
        assert cycle_q(1).source["e0"] == cycle_q(1).target["e0"] == "v0"

    @pytest.mark.parametrize("call", [
        lambda: cycle_r(3),
        lambda: path_q(-1),
        lambda: cycle_h(0),
        lambda: generator("nope"),
        lambda: generator("path_r"),
    ])
    def test_bad_parameters(self, call):
        with pytest.raises(InputError):
            call()

    def test_generator_by_name(self):
        assert generator("path_r", 2) == path_r(2)
        assert generator("incidence_unit_r") == incidence_unit_r()

    def test_representing_morphism_for_set_system_edge(self):
        f = representing_morphism(cycle_h(2), "edge", "e1")
        assert f.domain == n_edge_h(2)
        assert validate(f)

    def test_representing_morphism_rejects_unknown_element(self, g_four):
        with pytest.raises(InputError):
            representing_morphism(g_four, "vertex", "v9")
