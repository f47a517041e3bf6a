"""Data model: canonical form, switching, degrees, generators, text format."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import K2_NEG, SQUARE_ONE_NEG
from strategies import graphs_with_switchings, signed_graphs
from sgmyc.core import (
    canonicalize,
    degrees,
    dumps,
    generate,
    incident_edges,
    is_all_negative,
    is_all_positive,
    is_connected,
    is_triangle_free,
    load,
    loads,
    switch,
    validate_switching,
)
from sgmyc.errors import (
    DuplicateEdgeError,
    EdgeListFormatError,
    InvalidParamsError,
    LengthMismatchError,
    LoopEdgeError,
    VertexOutOfRangeError,
)


class TestCanonicalize:
    def test_sorts_and_orients(self):
        g = canonicalize(4, [(3, 2, 1), (4, 1, 1), (2, 1, -1), (4, 3, 1)])
        assert g.edges == ((1, 2, -1), (1, 4, 1), (2, 3, 1), (3, 4, 1))
        assert g == SQUARE_ONE_NEG

    def test_counts(self):
        assert SQUARE_ONE_NEG.p == 4
        assert SQUARE_ONE_NEG.q == 4
        assert SQUARE_ONE_NEG.positive_count == 3
        assert SQUARE_ONE_NEG.negative_count == 1

    def test_sign_lookup_both_orders(self):
        assert SQUARE_ONE_NEG.sign(1, 2) == -1
        assert SQUARE_ONE_NEG.sign(2, 1) == -1
        assert SQUARE_ONE_NEG.sign(1, 3) == 0
        assert SQUARE_ONE_NEG.has_edge(4, 3)
        assert not SQUARE_ONE_NEG.has_edge(2, 4)

    def test_empty_graph(self):
        g = canonicalize(0, [])
        assert g.p == 0 and g.q == 0

    def test_loop_rejected(self):
        with pytest.raises(LoopEdgeError):
            canonicalize(3, [(2, 2, 1)])

    def test_duplicate_rejected_either_orientation(self):
        with pytest.raises(DuplicateEdgeError):
            canonicalize(3, [(1, 2, 1), (2, 1, -1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(VertexOutOfRangeError):
            canonicalize(3, [(1, 4, 1)])
        with pytest.raises(VertexOutOfRangeError):
            canonicalize(3, [(0, 2, 1)])

    def test_bad_sign_rejected(self):
        with pytest.raises(InvalidParamsError):
            canonicalize(3, [(1, 2, 2)])

    @given(signed_graphs(max_p=6), st.randoms(use_true_random=False))
    def test_input_order_irrelevant(self, g, rng):
        shuffled = list(g.edges)
        rng.shuffle(shuffled)
        flipped = [(v, u, s) for u, v, s in shuffled]
        assert canonicalize(g.p, flipped) == g


class TestSwitching:
    def test_example(self):
        got = switch(SQUARE_ONE_NEG, (-1, 1, 1, 1))
        assert got.edges == ((1, 2, 1), (1, 4, -1), (2, 3, 1), (3, 4, 1))

    def test_identity(self):
        assert switch(SQUARE_ONE_NEG, (1, 1, 1, 1)) == SQUARE_ONE_NEG

    def test_length_checked(self):
        with pytest.raises(LengthMismatchError):
            switch(SQUARE_ONE_NEG, (1, 1, 1))

    def test_entries_checked(self):
        with pytest.raises(InvalidParamsError):
            switch(SQUARE_ONE_NEG, (1, 0, 1, 1))
        with pytest.raises(InvalidParamsError):
            validate_switching(SQUARE_ONE_NEG, (1, 2, 1, 1))

    @given(graphs_with_switchings(max_p=7))
    def test_involution(self, gz):
        g, zeta = gz
        assert switch(switch(g, zeta), zeta) == g

    @given(graphs_with_switchings(max_p=7), st.data())
    def test_composition_is_pointwise_product(self, gz, data):
        g, z1 = gz
        z2 = tuple(data.draw(st.sampled_from((1, -1))) for _ in range(g.p))
        prod = tuple(a * b for a, b in zip(z1, z2))
        assert switch(switch(g, z1), z2) == switch(g, prod)

    @given(graphs_with_switchings(max_p=7))
    def test_negated_switching_acts_identically(self, gz):
        g, zeta = gz
        assert switch(g, tuple(-z for z in zeta)) == switch(g, zeta)


class TestDegrees:
    def test_rows(self):
        rep = degrees(SQUARE_ONE_NEG)
        assert rep.row(1) == (2, 1, 1, 0)
        assert rep.row(2) == (2, 1, 1, 0)
        assert rep.row(3) == (2, 2, 0, 2)
        assert rep.net_degree == (0, 0, 2, 2)

    def test_isolated_vertex(self):
        rep = degrees(canonicalize(3, [(1, 2, -1)]))
        assert rep.row(3) == (0, 0, 0, 0)

    @given(signed_graphs(max_p=8))
    def test_identities(self, g):
        rep = degrees(g)
        assert sum(rep.degree) == 2 * g.q
        assert sum(rep.positive) == 2 * g.positive_count
        assert sum(rep.negative) == 2 * g.negative_count
        for i in range(g.p):
            assert rep.degree[i] == rep.positive[i] + rep.negative[i]
            assert rep.net_degree[i] == rep.positive[i] - rep.negative[i]

    @given(signed_graphs(max_p=7))
    def test_incident_edges_agree(self, g):
        inc = incident_edges(g)
        rep = degrees(g)
        for v in range(1, g.p + 1):
            assert len(inc[v]) == rep.degree[v - 1]


class TestPredicates:
    def test_all_positive_negative(self):
        assert is_all_positive(canonicalize(2, [(1, 2, 1)]))
        assert not is_all_positive(K2_NEG)
        assert is_all_negative(K2_NEG)
        # vacuous on the edgeless graph
        assert is_all_positive(canonicalize(3, []))
        assert is_all_negative(canonicalize(3, []))

    def test_connectivity(self):
        assert is_connected(SQUARE_ONE_NEG)
        assert not is_connected(canonicalize(4, [(1, 2, 1), (3, 4, 1)]))
        assert is_connected(canonicalize(1, []))
        assert not is_connected(canonicalize(2, []))

    def test_triangle_free(self):
        assert is_triangle_free(SQUARE_ONE_NEG)
        assert not is_triangle_free(canonicalize(3, [(1, 2, 1), (1, 3, 1), (2, 3, -1)]))


class TestGenerate:
    def test_cycle_pattern(self):
        g = generate("cycle", {"length": 4, "pattern": "-+++"})
        assert g == SQUARE_ONE_NEG

    def test_path(self):
        g = generate("path", {"length": 3, "pattern": "-+"})
        assert g.edges == ((1, 2, -1), (2, 3, 1))
        assert generate("path", {"length": 1}).q == 0

    def test_complete_all_negative(self):
        g = generate("complete", {"order": 4})
        assert g.q == 6 and is_all_negative(g)

    def test_random_is_seed_deterministic(self):
        a = generate("random", {"order": 7, "edge_prob": 0.4}, seed=11)
        b = generate("random", {"order": 7, "edge_prob": 0.4}, seed=11)
        c = generate("random", {"order": 7, "edge_prob": 0.4}, seed=12)
        assert a == b
        assert a != c
        assert is_connected(a)

    def test_random_default_seed_is_zero(self):
        assert generate("random", {"order": 6}) == generate("random", {"order": 6}, seed=0)

    def test_bad_params(self):
        with pytest.raises(InvalidParamsError):
            generate("cycle", {"length": 2})
        with pytest.raises(InvalidParamsError):
            generate("path", {"length": 0})
        with pytest.raises(InvalidParamsError):
            generate("cycle", {"length": 3, "pattern": "+-"})
        with pytest.raises(InvalidParamsError):
            generate("cycle", {"length": 3, "pattern": "+x-"})
        with pytest.raises(InvalidParamsError):
            generate("random", {"order": 3, "edge_prob": 1.5})
        with pytest.raises(InvalidParamsError):
            generate("random", {"order": 3, "bogus": 1})
        with pytest.raises(InvalidParamsError):
            generate("nonesuch", {})

    @settings(max_examples=25)
    @given(st.integers(min_value=1, max_value=9), st.integers(min_value=0, max_value=50))
    def test_random_always_connected(self, p, seed):
        g = generate("random", {"order": p, "edge_prob": 0.5}, seed=seed)
        assert g.p == p and is_connected(g)


class TestTextFormat:
    def test_dumps_bytes(self):
        assert dumps(K2_NEG) == "2 1\n1 2 -1\n"
        assert dumps(SQUARE_ONE_NEG) == "4 4\n1 2 -1\n1 4 +1\n2 3 +1\n3 4 +1\n"

    def test_loads_skips_comments_and_blanks(self):
        text = "# a graph\n\n2 1\n# edge below\n1 2 -1\n"
        assert loads(text) == K2_NEG

    def test_load_file_roundtrip(self, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text(dumps(SQUARE_ONE_NEG))
        assert load(str(path)) == SQUARE_ONE_NEG

    def test_malformed_header(self):
        with pytest.raises(EdgeListFormatError):
            loads("2\n")
        with pytest.raises(EdgeListFormatError):
            loads("a b\n")

    def test_edge_count_mismatch(self):
        with pytest.raises(EdgeListFormatError):
            loads("2 2\n1 2 -1\n")

    def test_malformed_edge_line(self):
        with pytest.raises(EdgeListFormatError):
            loads("2 1\n1 2\n")
        with pytest.raises(EdgeListFormatError):
            loads("2 1\n1 2 minus\n")

    def test_bad_sign_value(self):
        with pytest.raises(EdgeListFormatError):
            loads("2 1\n1 2 3\n")

    @given(signed_graphs(max_p=8))
    def test_roundtrip(self, g):
        assert loads(dumps(g)) == g

    def test_random_corpus_roundtrip(self):
        rng = random.Random(5)
        for _ in range(20):
            p = rng.randint(1, 10)
            g = generate("random", {"order": p}, seed=rng.randint(0, 999))
            assert loads(dumps(g)) == g
