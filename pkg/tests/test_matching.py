"""Bipartite and general matching, Hall violators, saturation procedures."""

import itertools
import random

import pytest

from factorlab.graphs import Graph, bits, cycle_graph
from factorlab.matching import (
    BipartiteGraph,
    Matching,
    degree_dominant_matching,
    degree_one_reduction,
    hall_violator,
    max_bipartite_matching,
    max_matching_general,
)
from oracles import brute_max_matching, random_graph


def random_bipartite(rng, a, b, p) -> BipartiteGraph:
    edges = [(u, a + v) for u in range(a) for v in range(b) if rng.random() < p]
    return BipartiteGraph.from_edges(range(a), range(a, a + b), edges)


def bipartite_c6() -> BipartiteGraph:
    # C6 with its natural bipartition {0,2,4} / {1,3,5}
    c6 = cycle_graph(6)
    return BipartiteGraph(6, 0b010101, 0b101010, c6.adj)


class TestBipartiteGraphType:
    def test_rejects_overlapping_sides(self):
        with pytest.raises(ValueError, match="overlap"):
            BipartiteGraph(2, 0b11, 0b01, (0, 0))

    def test_rejects_same_side_edge(self):
        with pytest.raises(ValueError):
            BipartiteGraph.from_edges([0, 1], [2], [(0, 1)])

    def test_rejects_outsider_edges(self):
        with pytest.raises(ValueError, match="leaves the right side"):
            BipartiteGraph(3, 0b001, 0b010, (0b100, 0, 0b001))
        with pytest.raises(ValueError, match="leaves the left side"):
            BipartiteGraph(3, 0b001, 0b010, (0, 0b100, 0b010))
        with pytest.raises(ValueError, match="outside both sides"):
            BipartiteGraph(3, 0b001, 0b010, (0, 0, 0b001))


class TestMatchingType:
    def test_rejects_shared_vertex(self):
        with pytest.raises(ValueError, match="share"):
            Matching(frozenset({(0, 1), (1, 2)}))

    def test_normalisation(self):
        m = Matching.of([(3, 1), (2, 4)])
        assert m.edges == frozenset({(1, 3), (2, 4)})
        assert m.partner(3) == 1 and m.partner(0) is None
        assert m.saturates(0b11010)
        assert not m.saturates(0b00001)


class TestMaxBipartiteMatching:
    def test_k33_perfect(self, k33):
        h = BipartiteGraph(6, 0b000111, 0b111000, k33.adj)
        assert len(max_bipartite_matching(h)) == 3

    def test_star_is_one(self):
        h = BipartiteGraph.from_edges([0], [1, 2, 3], [(0, 1), (0, 2), (0, 3)])
        assert len(max_bipartite_matching(h)) == 1

    def test_c6_perfect(self):
        # frozen after brute force over all edge subsets
        assert brute_max_matching(cycle_graph(6)) == 3
        assert len(max_bipartite_matching(bipartite_c6())) == 3

    def test_matches_brute_force(self):
        rng = random.Random(30)
        for _ in range(250):
            a = rng.randrange(1, 7)
            b = rng.randrange(1, 13 - a)
            h = random_bipartite(rng, a, b, rng.choice([0.2, 0.5, 0.8]))
            g = Graph(h.n, h.adj)
            assert len(max_bipartite_matching(h)) == brute_max_matching(g)


class TestHallViolator:
    def test_two_rights_one_left(self):
        h = BipartiteGraph.from_edges([0], [1, 2], [(0, 1), (0, 2)])
        assert hall_violator(h) == 0b110

    def test_none_on_k33(self, k33):
        h = BipartiteGraph(6, 0b000111, 0b111000, k33.adj)
        assert hall_violator(h) is None

    def test_minimum_cardinality_witness(self):
        # right = {3,4,5}, left = {0,1}: 3-0, 4-0, 5-1 -> A={3,4}, |N(A)|=1
        h = BipartiteGraph.from_edges([0, 1], [3, 4, 5], [(0, 3), (0, 4), (1, 5)])
        violator = hall_violator(h)
        assert violator == 0b011000
        # enumerate all violating subsets: none smaller, this one lex-least
        rights = [3, 4, 5]
        violating = []
        for r in range(1, 4):
            for combo in itertools.combinations(rights, r):
                nbhd = 0
                for v in combo:
                    nbhd |= h.adj[v]
                if nbhd.bit_count() < len(combo):
                    violating.append(sum(1 << v for v in combo))
        assert min(v.bit_count() for v in violating) == 2
        assert violator == min(v for v in violating if v.bit_count() == 2)

    def test_duality_with_saturation(self):
        rng = random.Random(31)
        for _ in range(300):
            a = rng.randrange(1, 7)
            b = rng.randrange(1, 13 - a)
            h = random_bipartite(rng, a, b, 0.4)
            saturated = max_bipartite_matching(h).saturates(h.right)
            assert (hall_violator(h) is None) == saturated


class TestDegreeDominantMatching:
    def test_single_edge(self):
        h = BipartiteGraph.from_edges([0], [1], [(0, 1)])
        assert degree_dominant_matching(h).saturates(0b10)

    def test_c6_perfect(self):
        m = degree_dominant_matching(bipartite_c6())
        assert m.saturates(0b101010)

    def test_rejects_isolated_right_vertex(self):
        h = BipartiteGraph(3, 0b001, 0b110, (0b010, 0b001, 0))
        with pytest.raises(ValueError, match="isolated"):
            degree_dominant_matching(h)

    def test_rejects_degree_violation(self):
        h = BipartiteGraph.from_edges([0], [1, 2], [(0, 1), (0, 2)])
        with pytest.raises(ValueError, match="dominance"):
            degree_dominant_matching(h)

    def test_saturation_on_filtered_random_instances(self):
        # the guarantee itself: saturation always holds under the precondition
        rng = random.Random(32)
        accepted = 0
        while accepted < 200:
            a = rng.randrange(1, 6)
            b = rng.randrange(1, 6)
            h = random_bipartite(rng, a, b, rng.choice([0.4, 0.6, 0.9]))
            if any(not h.adj[y] for y in bits(h.right)):
                continue
            if any(h.degree(y) < h.degree(x)
                   for x in bits(h.left) for y in bits(h.adj[x])):
                continue
            assert degree_dominant_matching(h).saturates(h.right)
            accepted += 1


class TestDegreeOneReduction:
    def test_all_left_degree_one(self):
        h = BipartiteGraph.from_edges([0, 1], [2, 3], [(0, 2), (1, 3)])
        reduced, forced = degree_one_reduction(h)
        assert reduced.left == 0 and reduced.right == 0
        assert forced.saturates(0b1100)

    def test_no_degree_one_left(self, k33):
        h = BipartiteGraph(6, 0b000111, 0b111000, k33.adj)
        reduced, forced = degree_one_reduction(h)
        assert reduced == h and len(forced) == 0

    def test_partial_reduction(self):
        # 0 has degree 1 into 3; 1 and 2 see both right vertices
        h = BipartiteGraph.from_edges(
            [0, 1, 2], [3, 4], [(0, 3), (1, 3), (1, 4), (2, 3), (2, 4)])
        reduced, forced = degree_one_reduction(h)
        assert forced.edges == frozenset({(0, 3)})
        assert reduced.left == 0b110 and reduced.right == 0b10000
        # composing: a matching saturating the reduced right extends to all
        rest = max_bipartite_matching(reduced)
        assert rest.saturates(reduced.right)
        combined = Matching(forced.edges | rest.edges)
        assert combined.saturates(h.right)

    def test_composition_property_random(self):
        rng = random.Random(33)
        for _ in range(200):
            a = rng.randrange(1, 6)
            b = rng.randrange(1, 6)
            h = random_bipartite(rng, a, b, 0.5)
            reduced, forced = degree_one_reduction(h)
            rest = max_bipartite_matching(reduced)
            if rest.saturates(reduced.right):
                combined = Matching(forced.edges | rest.edges)
                assert combined.saturates(h.right & (reduced.right | forced.vertex_mask()))


class TestGeneralMatching:
    def test_named(self, c5, k4, petersen):
        assert len(max_matching_general(c5)) == 2
        assert len(max_matching_general(k4)) == 2
        # Petersen: frozen after brute force on its 15 edges
        assert brute_max_matching(petersen) == 5
        m = max_matching_general(petersen)
        assert len(m) == 5 and m.saturates(petersen.vertex_mask)

    def test_matches_brute_force(self):
        rng = random.Random(34)
        for _ in range(300):
            g = random_graph(rng, rng.randrange(0, 11), rng.choice([0.2, 0.4, 0.7]))
            m = max_matching_general(g)
            assert len(m) == brute_max_matching(g)

    def test_deterministic(self, petersen):
        assert max_matching_general(petersen) == max_matching_general(petersen)
