"""Graph representation, graph6 codec, invariants, canonical forms."""

import random

import pytest

from factorlab.graphs import (
    CapabilityError,
    Graph,
    Graph6Error,
    bits,
    canonical_form,
    canonical_graph,
    complete_graph,
    connected_components,
    cycle_graph,
    empty_graph,
    independence_number,
    is_connected,
    mask_of,
    maximal_independent_sets,
    parse_graph6,
    path_graph,
    star_graph,
    to_graph6,
)
from oracles import (
    brute_alpha,
    brute_canonical_class,
    g6_decode_independent,
    g6_encode_independent,
    random_graph,
)


class TestGraphType:
    def test_rejects_loops(self):
        with pytest.raises(ValueError, match="loop"):
            Graph(2, (0b01, 0b10))
        with pytest.raises(ValueError, match="loop"):
            Graph.from_edges(3, [(1, 1)])

    def test_rejects_asymmetry(self):
        with pytest.raises(ValueError, match="asymmetric"):
            Graph(2, (0b10, 0b00))

    def test_rejects_out_of_range_bits(self):
        with pytest.raises(ValueError):
            Graph(2, (0b100, 0b000))
        with pytest.raises(ValueError, match="out of range"):
            Graph.from_edges(2, [(0, 5)])

    def test_degree_bounds(self, c5):
        assert [c5.degree(v) for v in range(5)] == [2] * 5
        with pytest.raises(ValueError):
            c5.degree(7)

    def test_edges_sorted(self, k4):
        assert k4.edges() == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]

    def test_edge_mutation_returns_new_graph(self, c5):
        g = c5.without_edge(0, 1)
        assert not g.has_edge(0, 1) and c5.has_edge(0, 1)
        assert g.with_edge(0, 1) == c5
        with pytest.raises(ValueError):
            c5.without_edge(0, 2)


class TestDegrees:
    def test_c5(self, c5):
        assert c5.max_degree() == 2
        assert c5.max_degree_vertices() == 0b11111

    def test_star_center(self, k13):
        assert k13.max_degree() == 3
        assert k13.max_degree_vertices() == 0b0001

    def test_empty(self):
        assert empty_graph(4).max_degree() == 0


class TestGraph6:
    def test_hand_encoded_fixtures(self):
        # cross-checked against the independent string-bits codec
        assert to_graph6(Graph.from_edges(2, [(0, 1)])) == "A_"
        assert to_graph6(empty_graph(0)) == "?"
        assert to_graph6(empty_graph(3)) == "B?"
        assert g6_decode_independent("A_") == (2, {(0, 1)})
        assert g6_decode_independent("B?") == (3, set())

    def test_c5_round_trip(self, c5):
        assert parse_graph6(to_graph6(c5)) == c5

    def test_round_trip_random(self):
        rng = random.Random(20)
        for _ in range(300):
            n = rng.randrange(0, 65)
            g = random_graph(rng, n, rng.choice([0.1, 0.5, 0.9]))
            s = to_graph6(g)
            assert parse_graph6(s) == g
            assert to_graph6(parse_graph6(s)) == s
            n2, edges2 = g6_decode_independent(s)
            assert n2 == n and edges2 == set(g.edges())
            assert g6_encode_independent(n, set(g.edges())) == s

    def test_optional_header_and_newline(self, c5):
        s = to_graph6(c5)
        assert parse_graph6(">>graph6<<" + s) == c5
        assert parse_graph6(s + "\n") == c5

    def test_extended_size_form(self):
        g = random_graph(random.Random(3), 64, 0.5)
        s = to_graph6(g)
        assert s.startswith("~")
        assert parse_graph6(s) == g

    def test_errors_name_byte_offset(self):
        with pytest.raises(Graph6Error, match="garbage") as err:
            parse_graph6("A_??")
        assert err.value.offset == 2
        with pytest.raises(Graph6Error, match="range") as err:
            parse_graph6("A_!")
        assert err.value.offset == 2
        with pytest.raises(Graph6Error) as err:
            parse_graph6("B\x1c")
        assert err.value.offset == 1
        with pytest.raises(Graph6Error):
            parse_graph6("")
        with pytest.raises(Graph6Error, match="header"):
            parse_graph6(">>sparse6<<A_")
        with pytest.raises(Graph6Error, match="truncated"):
            parse_graph6("D")
        with pytest.raises(Graph6Error, match="padding"):
            parse_graph6("B~")  # n=3 with nonzero pad bits
        with pytest.raises(Graph6Error, match="cap"):
            parse_graph6("~?@@" + "?" * 347)  # n=65
        with pytest.raises(CapabilityError):
            to_graph6(empty_graph(65))


class TestConnectivity:
    def test_c5_single_component(self, c5):
        assert connected_components(c5) == [0b11111]
        assert is_connected(c5)

    def test_two_disjoint_edges(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert connected_components(g) == [0b0011, 0b1100]
        assert not is_connected(g)

    def test_empty_graph_singletons(self):
        assert connected_components(empty_graph(3)) == [1, 2, 4]


class TestIndependenceNumber:
    def test_named(self, c5, k5, petersen):
        assert independence_number(c5)[0] == 2
        assert independence_number(k5)[0] == 1
        # Petersen: frozen after brute force over all 2^10 subsets
        assert brute_alpha(petersen) == 4
        assert independence_number(petersen)[0] == 4

    def test_witness_is_independent(self, petersen):
        size, witness = independence_number(petersen)
        assert witness.bit_count() == size
        assert petersen.is_independent(witness)

    def test_matches_brute_force(self):
        rng = random.Random(21)
        for _ in range(120):
            g = random_graph(rng, rng.randrange(0, 13), rng.choice([0.2, 0.5, 0.8]))
            assert independence_number(g)[0] == brute_alpha(g)

    def test_matches_brute_force_n16(self):
        rng = random.Random(22)
        for _ in range(3):
            g = random_graph(rng, 16, 0.4)
            assert independence_number(g)[0] == brute_alpha(g)


class TestMaximalIndependentSets:
    def test_c5(self, c5):
        sets = maximal_independent_sets(c5)
        assert len(sets) == 5
        for m in sets:
            assert c5.is_independent(m)
            grow = [v for v in range(5) if not m >> v & 1 and not c5.adj[v] & m]
            assert not grow

    def test_matches_subset_scan(self):
        rng = random.Random(23)
        for _ in range(60):
            g = random_graph(rng, rng.randrange(1, 9), 0.4)
            expect = set()
            for m in range(1 << g.n):
                if not g.is_independent(m):
                    continue
                if any(not m >> v & 1 and not g.adj[v] & m for v in range(g.n)):
                    continue
                expect.add(m)
            assert set(maximal_independent_sets(g)) == expect


class TestCanonicalForm:
    def test_relabelled_cycle(self, c5):
        assert canonical_form(c5.relabel([0, 2, 4, 1, 3])) == canonical_form(c5)

    def test_distinguishes_p4_from_star(self):
        assert canonical_form(path_graph(4)) != canonical_form(star_graph(3))

    def test_invariance_random_relabellings(self):
        rng = random.Random(24)
        for _ in range(1000):
            n = rng.randrange(1, 9)
            g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_form(g) == canonical_form(g.relabel(perm))

    def test_exact_against_permutation_classes(self):
        # equal canonical forms iff same brute-force isomorphism class
        rng = random.Random(25)
        seen: dict[tuple, bytes] = {}
        for _ in range(400)  :
            g = random_graph(rng, rng.randrange(1, 7), 0.5)
            key = brute_canonical_class(g)
            form = canonical_form(g)
            if key in seen:
                assert seen[key] == form
            else:
                seen[key] = form
        forms = list(seen.values())
        assert len(set(forms)) == len(forms)

    def test_connected_classes_on_5_vertices(self):
        # brute force over all 2^10 edge subsets, classes via permutations
        classes = set()
        all_edges = [(u, v) for u in range(5) for v in range(u + 1, 5)]
        for mask in range(1 << 10):
            g = Graph.from_edges(5, [e for i, e in enumerate(all_edges) if mask >> i & 1])
            if is_connected(g):
                classes.add(canonical_form(g))
        assert len(classes) == 21

    def test_canonical_graph_is_isomorphic_representative(self, petersen):
        rep = canonical_graph(petersen)
        assert canonical_form(rep) == canonical_form(petersen)
        assert to_graph6(rep).encode("ascii") == canonical_form(petersen)

    def test_decodes_back(self, k4):
        assert parse_graph6(canonical_form(k4).decode("ascii")).edge_count() == 6


class TestPackedCanonKeys:
    def test_matches_reference_canonical_form(self):
        from factorlab._canon64 import canon_key, key_to_graph

        rng = random.Random(26)
        for _ in range(500)  :
            n = rng.randrange(0, 11)
            g = random_graph(rng, n, rng.choice([0.15, 0.4, 0.7, 0.9]))
            key = canon_key(n, g.adj)
            assert to_graph6(key_to_graph(n, key)).encode("ascii") == canonical_form(g)

    def test_named_hard_cases(self, petersen):
        from factorlab._canon64 import canon_key, key_to_graph

        for g in (complete_graph(9), empty_graph(9), cycle_graph(9),
                  petersen, star_graph(8)):
            key = canon_key(g.n, g.adj)
            assert to_graph6(key_to_graph(g.n, key)).encode("ascii") == canonical_form(g)


def test_bits_and_mask_roundtrip():
    assert list(bits(0b10110)) == [1, 2, 4]
    assert mask_of([1, 2, 4]) == 0b10110
    assert list(bits(0)) == []
