"""Cycle enumeration, modular census, and the borrowed existence checks."""

from __future__ import annotations

import random

import pytest

from modk.cycles import CycleSeq, census_mod, check_chen_saito, enumerate_cycles, find_admissible_paths
from modk.errors import ContractViolation
from modk.graphs import Edge, Graph

from conftest import oracle_cycle_count, oracle_cycle_lengths, random_graph, random_permutation


class TestCycleSeq:
    def test_canonical_under_rotation_reflection(self):
        base = CycleSeq.from_vertices((0, 1, 2, 3))
        assert CycleSeq.from_vertices((2, 3, 0, 1)) == base
        assert CycleSeq.from_vertices((3, 2, 1, 0)) == base
        assert CycleSeq.from_vertices((1, 0, 3, 2)) == base

    def test_too_short(self):
        with pytest.raises(ContractViolation):
            CycleSeq.from_vertices((0, 1))

    def test_repeat_rejected(self):
        with pytest.raises(ContractViolation):
            CycleSeq.from_vertices((0, 1, 0, 2))

    def test_edges_close_the_loop(self):
        cyc = CycleSeq.from_vertices((0, 1, 2))
        assert set(cyc.edges()) == {Edge(0, 1), Edge(1, 2), Edge(0, 2)}


class TestEnumerateCycles:
    def test_k4_has_seven(self, k4):
        cycles = enumerate_cycles(k4)
        assert len(cycles) == 7
        assert sorted(len(c) for c in cycles) == [3, 3, 3, 3, 4, 4, 4]

    def test_c5_single(self, c5):
        cycles = enumerate_cycles(c5)
        assert cycles == [CycleSeq.from_vertices((0, 1, 2, 3, 4))]

    def test_tree_empty(self):
        tree = Graph.from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
        assert enumerate_cycles(tree) == []

    def test_max_len(self, k4):
        assert len(enumerate_cycles(k4, max_len=3)) == 4

    def test_cycles_are_valid_and_canonical(self):
        rng = random.Random(17)
        for _ in range(40):
            g = random_graph(rng, rng.randint(3, 7), rng.random())
            for cyc in enumerate_cycles(g):
                assert cyc.is_cycle_of(g)
                assert len(set(cyc.vertices)) == len(cyc.vertices)
                assert CycleSeq.from_vertices(cyc.vertices) == cyc

    def test_count_matches_subset_oracle(self):
        rng = random.Random(19)
        for _ in range(60):
            g = random_graph(rng, rng.randint(0, 7), rng.random())
            assert len(enumerate_cycles(g)) == oracle_cycle_count(g)

    def test_lengths_match_oracle(self):
        rng = random.Random(23)
        for _ in range(25):
            g = random_graph(rng, rng.randint(3, 7), 0.5)
            assert sorted(len(c) for c in enumerate_cycles(g)) == oracle_cycle_lengths(g)


class TestCensusMod:
    def test_k4_mod3(self, k4):
        census = census_mod(k4, 3, 0)
        assert census.counts == (4, 3, 0)
        assert census.vertex_incidence == (3, 3, 3, 3)
        assert all(v == 2 for v in census.edge_incidence.values())

    def test_k5_mod4(self, k5):
        census = census_mod(k5, 4, 0)
        assert census.counts[0] == 15
        assert census.counts[1] == 12

    def test_c5_mod3(self, c5):
        assert census_mod(c5, 3, 0).counts == (0, 0, 1)

    def test_counts_sum_to_total(self, petersen):
        census = census_mod(petersen, 3, 0)
        assert sum(census.counts) == census.total

    def test_incidence_consistency(self, w5):
        census = census_mod(w5, 3, 0)
        in_class = [c for c in census.cycles if len(c) % 3 == 0]
        assert sum(census.vertex_incidence) == sum(len(c) for c in in_class)
        assert sum(census.edge_incidence.values()) == sum(len(c) for c in in_class)

    def test_relabel_invariant(self):
        rng = random.Random(29)
        for _ in range(25):
            g = random_graph(rng, rng.randint(3, 7), 0.5)
            census = census_mod(g, 3, 0)
            h = g.relabel(random_permutation(rng, g.n))
            assert census_mod(h, 3, 0).counts == census.counts

    def test_cap_drops_cycles_keeps_counts(self, k4):
        census = census_mod(k4, 3, 0, store_cap=2)
        assert census.cycles is None
        assert census.counts == (4, 3, 0)
        with pytest.raises(ContractViolation):
            census.cycles_with_residue(0)

    def test_bad_modulus(self, k4):
        with pytest.raises(ContractViolation):
            census_mod(k4, 1, 0)
        with pytest.raises(ContractViolation):
            census_mod(k4, 3, 3)


class TestChenSaito:
    def test_k4_triangle(self, k4):
        witness = check_chen_saito(k4)
        assert witness is not None and len(witness) == 3

    def test_two_low_degree_vertices_rejected(self, k4):
        with pytest.raises(ContractViolation):
            check_chen_saito(k4.without_edge(0, 1))

    def test_petersen(self, petersen):
        witness = check_chen_saito(petersen)
        assert witness is not None
        assert len(witness) in (6, 9)
        assert witness.is_cycle_of(petersen)


class TestAdmissiblePaths:
    def test_k4_pair(self, k4):
        paths = find_admissible_paths(k4, 0, 1, 2)
        assert paths is not None
        assert sorted(len(p) - 1 for p in paths) == [2, 3]
        for p in paths:
            assert p[0] == 0 and p[-1] == 1
            assert all(k4.has_edge(p[i], p[i + 1]) for i in range(len(p) - 1))

    def test_c5_adjacent_pair_has_none(self, c5):
        assert find_admissible_paths(c5, 0, 1, 2) is None

    def test_k5_three_paths(self, k5):
        paths = find_admissible_paths(k5, 0, 1, 3)
        assert paths is not None
        assert sorted(len(p) - 1 for p in paths) == [2, 3, 4]

    def test_single_path(self, c5):
        paths = find_admissible_paths(c5, 0, 2, 1)
        assert paths is not None and len(paths) == 1
        assert len(paths[0]) - 1 == 2

    def test_same_endpoints_rejected(self, k4):
        with pytest.raises(ContractViolation):
            find_admissible_paths(k4, 1, 1, 2)
