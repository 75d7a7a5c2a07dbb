"""Graph representation, structural predicates, and graph6 round-trips."""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import pytest

from modk.errors import ContractViolation, Graph6Error, UnsupportedSizeError
from modk.graphs import Edge, Graph, parse_graph6, structural_predicates, write_graph6

from conftest import oracle_two_connected, random_graph


class TestEdge:
    def test_normalized(self):
        assert Edge(3, 1) == Edge(1, 3)
        assert Edge(1, 3).u == 1
        assert Edge(1, 3).v == 3

    def test_loop_rejected(self):
        with pytest.raises(ContractViolation):
            Edge(2, 2)


class TestGraph:
    def test_counts(self, k4):
        assert k4.n == 4
        assert k4.m == 6
        assert k4.degrees() == [3, 3, 3, 3]

    def test_symmetry_enforced(self):
        with pytest.raises(ContractViolation):
            Graph(2, (0b10, 0b00))

    def test_loop_enforced(self):
        with pytest.raises(ContractViolation):
            Graph(1, (0b1,))

    def test_edge_ops(self, c5):
        g = c5.without_edge(0, 1)
        assert g.m == 4
        assert g.with_edge(0, 1) == c5
        with pytest.raises(ContractViolation):
            c5.without_edge(0, 2)

    def test_vertex_ops(self, k4):
        g = k4.without_vertex_edges(3)
        assert g.n == 4
        assert g.degree(3) == 0
        assert g.m == 3
        h = k4.delete_vertex(0)
        assert h == Graph.complete(3)
        j = Graph.complete(3).add_vertex({0, 1, 2})
        assert j == k4

    def test_relabel_roundtrip(self, w5):
        rng = random.Random(1)
        perm = list(range(w5.n))
        rng.shuffle(perm)
        inverse = [0] * w5.n
        for old, new in enumerate(perm):
            inverse[new] = old
        assert w5.relabel(perm).relabel(inverse) == w5


class TestStructuralPredicates:
    def test_k4(self, k4):
        s = structural_predicates(k4)
        assert (s.min_degree, s.max_degree) == (3, 3)
        assert s.connected and s.two_connected and s.is_complete

    def test_c5(self, c5):
        s = structural_predicates(c5)
        assert (s.min_degree, s.max_degree) == (2, 2)
        assert s.connected and s.two_connected and not s.is_complete

    def test_two_disjoint_triangles(self, two_triangles):
        s = structural_predicates(two_triangles)
        assert (s.min_degree, s.max_degree) == (2, 2)
        assert not s.connected and not s.two_connected and not s.is_complete

    def test_tiny(self):
        assert structural_predicates(Graph.empty(0)).connected is False
        assert structural_predicates(Graph.empty(1)).connected is True
        assert structural_predicates(Graph.empty(1)).two_connected is False

    def test_two_connected_matches_bruteforce(self):
        rng = random.Random(42)
        for _ in range(80):
            g = random_graph(rng, rng.randint(1, 7), rng.random())
            assert structural_predicates(g).two_connected == oracle_two_connected(g)


class TestGraph6:
    def test_k4_is_ctilde(self, k4):
        assert write_graph6(k4) == "C~"
        assert parse_graph6("C~") == k4

    def test_single_edge(self):
        g = parse_graph6("A_")
        assert g.n == 2 and g.edges() == [Edge(0, 1)]

    def test_empty_five(self):
        g = parse_graph6("D??")
        assert g.n == 5 and g.m == 0

    def test_one_vertex(self):
        assert write_graph6(Graph.empty(1)) == "@"
        assert parse_graph6("@") == Graph.empty(1)

    def test_c5_roundtrip(self, c5):
        line = write_graph6(c5)
        assert parse_graph6(line) == c5

    def test_header_prefix_stripped(self, k4):
        assert parse_graph6(">>graph6<<C~") == k4

    def test_malformed_header(self):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6("\x1c??")
        assert exc.value.offset == 0

    def test_multibyte_header_unsupported(self):
        with pytest.raises(Graph6Error):
            parse_graph6("~??")

    def test_truncated(self):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6("D?")
        assert "truncated" in str(exc.value)

    def test_trailing_garbage(self):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6("C~~")
        assert "trailing" in str(exc.value)
        assert exc.value.offset == 2

    def test_nonzero_padding(self):
        # K3 needs 3 bits; set a padding bit: 111 101 -> 61+63=124 '|'
        with pytest.raises(Graph6Error) as exc:
            parse_graph6("B|")
        assert "padding" in str(exc.value)

    def test_empty_record(self):
        with pytest.raises(Graph6Error):
            parse_graph6("")

    def test_too_large_to_write(self):
        with pytest.raises(UnsupportedSizeError):
            write_graph6(Graph.empty(63))

    def test_roundtrip_all_graphs_up_to_5(self):
        for n in range(6):
            pairs = list(combinations(range(n), 2))
            for bits in range(1 << len(pairs)):
                g = Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1])
                assert parse_graph6(write_graph6(g)) == g

    def test_roundtrip_random_graphs(self):
        rng = random.Random(7)
        for _ in range(150):
            g = random_graph(rng, rng.randint(0, 7), rng.random())
            assert parse_graph6(write_graph6(g)) == g

    def test_agrees_with_networkx(self):
        rng = random.Random(11)
        for _ in range(60):
            g = random_graph(rng, rng.randint(1, 12), rng.random())
            line = write_graph6(g)
            h = nx.from_graph6_bytes(line.encode("ascii"))
            assert set(h.nodes) == set(range(g.n))
            assert {tuple(sorted(e)) for e in h.edges} == {(e.u, e.v) for e in g.edges()}
            # and the reverse direction: networkx encodes, we decode
            line2 = nx.to_graph6_bytes(h, header=False).decode("ascii").strip()
            assert parse_graph6(line2) == g
