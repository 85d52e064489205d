"""Wire formats: JSON round trips, monomial syntax, graph6 decoding."""

import pytest

from srideals import (
    GF2,
    DomainError,
    Graph,
    Monomial,
    MonomialIdeal,
    betti_table,
    facet_ideal,
    relation_trees,
)
from srideals.serialization import (
    betti_to_json,
    complex_from_json,
    complex_to_json,
    graph_from_graph6,
    graph_from_json,
    graph_to_json,
    ideal_from_json,
    ideal_to_json,
    load_json,
    monomial_from_str,
    monomial_to_str,
    relation_tree_from_json,
    relation_tree_to_json,
)


class TestJsonBasics:
    def test_malformed_json_reports_position(self):
        with pytest.raises(DomainError, match=r"line 1, column"):
            load_json("{bad json")

    def test_complex_round_trip(self, worked_example):
        assert complex_from_json(complex_to_json(worked_example)) == worked_example

    def test_complex_requires_keys(self):
        with pytest.raises(DomainError, match="ambient"):
            complex_from_json({"facets": [[1]]})

    def test_complex_minimalize_flag(self):
        obj = {"ambient": 3, "facets": [[1], [1, 2]]}
        with pytest.raises(DomainError):
            complex_from_json(obj)
        assert complex_from_json(obj, minimalize=True).facets == ((1, 2),)

    def test_graph_round_trip(self):
        g = Graph(4, [(1, 2), (3, 4)])
        assert graph_from_json(graph_to_json(g)) == g


class TestMonomialSyntax:
    def test_parse_squarefree(self):
        assert monomial_from_str("x4*x5*x6", 6) == Monomial((0, 0, 0, 1, 1, 1))

    def test_parse_powers_and_spaces(self):
        assert monomial_from_str("x1^2 * x3", 3) == Monomial((2, 0, 1))

    def test_repeated_factor_accumulates(self):
        assert monomial_from_str("x1*x1", 2) == Monomial((2, 0))

    def test_round_trip(self):
        for mono in (Monomial((2, 0, 1)), Monomial((3, 2, 1)), Monomial((1, 1, 1))):
            assert monomial_from_str(monomial_to_str(mono), 3) == mono

    def test_degree_zero_prints_as_one(self):
        assert monomial_to_str(Monomial((0, 0))) == "1"

    def test_bad_factor_rejected(self):
        with pytest.raises(DomainError, match="cannot parse"):
            monomial_from_str("y1", 2)

    def test_variable_out_of_range(self):
        with pytest.raises(DomainError, match="out of range"):
            monomial_from_str("x3", 2)


class TestIdealJson:
    def test_string_and_vector_generators(self):
        obj = {"vars": 3, "generators": ["x1*x2", [0, 1, 1]]}
        ideal = ideal_from_json(obj)
        assert ideal == MonomialIdeal(
            3, [Monomial((1, 1, 0)), Monomial((0, 1, 1))]
        )

    def test_input_is_minimalized(self):
        obj = {"vars": 2, "generators": [[1, 0], [1, 1]]}
        assert ideal_from_json(obj).generators == (Monomial((1, 0)),)

    def test_round_trip_both_styles(self, worked_example):
        ideal = facet_ideal(worked_example)
        assert ideal_from_json(ideal_to_json(ideal)) == ideal
        assert ideal_from_json(ideal_to_json(ideal, pretty=True)) == ideal

    def test_zero_ideal_round_trip(self):
        assert ideal_from_json({"vars": 2, "generators": []}).is_zero

    def test_wrong_vector_length_rejected(self):
        with pytest.raises(DomainError, match="length"):
            ideal_from_json({"vars": 2, "generators": [[1, 0, 0]]})


class TestGraph6:
    def test_two_vertices_with_edge(self):
        # 'A' encodes n=2; '_' encodes the single bit 1 (63 + 0b100000)
        assert graph_from_graph6("A_") == Graph(2, [(1, 2)])

    def test_two_vertices_without_edge(self):
        assert graph_from_graph6("A?") == Graph(2, [])

    def test_header_prefix_accepted(self):
        assert graph_from_graph6(">>graph6<<A_") == Graph(2, [(1, 2)])

    def test_five_vertex_complete_graph(self):
        # K5: n=5 ('D'), ten 1-bits packed into two characters
        g = graph_from_graph6("D~{")
        assert g.n == 5
        assert len(g.edges) == 10

    def test_bad_character_rejected(self):
        with pytest.raises(DomainError):
            graph_from_graph6("A\x1f")

    def test_truncated_string_rejected(self):
        with pytest.raises(DomainError, match="too short"):
            graph_from_graph6("D")


class TestBettiAndTreeJson:
    def test_betti_json_fields(self):
        ideal = MonomialIdeal(2, [Monomial((1, 0)), Monomial((0, 1))])
        obj = betti_to_json(betti_table(ideal, GF2), ideal.generator_degrees)
        assert obj["projdim"] == 1
        assert obj["reg"] == 1
        assert obj["linear"] is True
        assert {"i": 1, "multidegree": [1, 1], "rank": 1} in obj["entries"]

    def test_relation_tree_round_trip(self, worked_example):
        for tree in relation_trees(worked_example):
            obj = relation_tree_to_json(tree)
            assert obj["t"] == 4
            assert all(1 <= i < j <= 4 for i, j in obj["edges"])
            assert relation_tree_from_json(obj) == tree
