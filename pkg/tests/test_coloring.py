"""Coloring search, chromatic number, and criticality."""

from __future__ import annotations

import random

import pytest

from modk.coloring import Coloring, chromatic_number, find_coloring, is_critical, is_proper
from modk.errors import ContractViolation
from modk.graphs import Graph, structural_predicates

from conftest import oracle_chromatic, oracle_colorable, random_graph


class TestIsProper:
    def test_c4_alternating(self):
        g = Graph.cycle_graph(4)
        assert is_proper(g, Coloring((1, 2, 1, 2), 2))

    def test_k3_repeat(self):
        g = Graph.complete(3)
        assert not is_proper(g, Coloring((1, 2, 2), 3))

    def test_k4_rainbow(self, k4):
        assert is_proper(k4, Coloring((1, 2, 3, 4), 4))

    def test_length_mismatch(self, k4):
        with pytest.raises(ContractViolation):
            is_proper(k4, Coloring((1, 2), 4))


class TestFindColoring:
    def test_c5_three_colors(self, c5):
        c = find_coloring(c5, 3)
        assert c is not None and is_proper(c5, c)

    def test_k4_three_colors_impossible(self, k4):
        assert find_coloring(k4, 3) is None

    def test_forced_prescription(self):
        g = Graph.complete(4).without_vertex_edges(3)  # K3 plus isolated 3
        c = find_coloring(g, 3, [(0, 1), (1, 2), (2, 3)])
        assert c is not None
        assert c.colors[:3] == (1, 2, 3)

    def test_prescription_respected(self):
        rng = random.Random(9)
        for _ in range(40):
            g = random_graph(rng, rng.randint(2, 7), 0.4)
            k = chromatic_number(g) + 1
            v = rng.randrange(g.n)
            color = rng.randint(1, k)
            c = find_coloring(g, k, [(v, color)])
            if c is not None:
                assert c.colors[v] == color
                assert is_proper(g, c)

    def test_conflicting_prescription_is_none(self, k4):
        assert find_coloring(k4, 4, [(0, 1), (1, 1)]) is None

    def test_malformed_prescription_raises(self, k4):
        with pytest.raises(ContractViolation):
            find_coloring(k4, 3, [(0, 7)])
        with pytest.raises(ContractViolation):
            find_coloring(k4, 3, [(0, 1), (0, 2)])


class TestChromaticNumber:
    def test_k4(self, k4):
        assert chromatic_number(k4) == 4

    def test_c5(self, c5):
        assert chromatic_number(c5) == 3

    def test_grotzsch(self, grotzsch):
        assert chromatic_number(grotzsch) == 4
        # independent confirmation that no 3-coloring exists
        assert not oracle_colorable(grotzsch, 3)

    def test_empty_graph_rejected(self):
        with pytest.raises(ContractViolation):
            chromatic_number(Graph.empty(0))

    def test_matches_bruteforce(self):
        rng = random.Random(13)
        for _ in range(80):
            g = random_graph(rng, rng.randint(1, 7), rng.random())
            assert chromatic_number(g) == oracle_chromatic(g)


class TestIsCritical:
    def test_k4(self, k4):
        assert is_critical(k4, 4)

    def test_c5(self, c5):
        assert is_critical(c5, 3)

    def test_pendant_breaks_criticality(self, k4):
        g = k4.add_vertex({0})
        assert not is_critical(g, 4)

    def test_w5(self, w5):
        assert is_critical(w5, 4)

    def test_grotzsch(self, grotzsch):
        assert is_critical(grotzsch, 4)

    def test_critical_implies_structure(self, k4, c5, w5, grotzsch):
        for g, q in [(k4, 4), (c5, 3), (w5, 4), (grotzsch, 4)]:
            assert is_critical(g, q)
            s = structural_predicates(g)
            assert s.min_degree >= q - 1
            assert s.two_connected
