"""Shared fixtures: named graphs, random graphs, and brute-force oracles.

The oracles here are deliberately naive and independent of the package's
own algorithms; they exist to pin expected values the direct way.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

import pytest

from modk.graphs import Graph


# -- named graphs ----------------------------------------------------------


@pytest.fixture
def k4() -> Graph:
    return Graph.complete(4)


@pytest.fixture
def k5() -> Graph:
    return Graph.complete(5)


@pytest.fixture
def c5() -> Graph:
    return Graph.cycle_graph(5)


@pytest.fixture
def w5() -> Graph:
    """5-wheel: a 5-cycle plus a dominating hub."""
    edges = [(i, (i + 1) % 5) for i in range(5)] + [(i, 5) for i in range(5)]
    return Graph.from_edges(6, edges)


@pytest.fixture
def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, edges)


@pytest.fixture
def grotzsch() -> Graph:
    """Mycielskian of the 5-cycle: 11 vertices, triangle-free."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for i in range(5):
        edges.append((5 + i, (i + 1) % 5))
        edges.append((5 + i, (i - 1) % 5))
    edges += [(5 + i, 10) for i in range(5)]
    return Graph.from_edges(11, edges)


@pytest.fixture
def two_triangles() -> Graph:
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


# -- random graphs ---------------------------------------------------------


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_permutation(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


# -- brute-force oracles ---------------------------------------------------


def oracle_cycle_count(g: Graph, max_len: int | None = None) -> int:
    """Count cycles by testing Hamiltonicity of every vertex subset."""
    count = 0
    top = g.n if max_len is None else min(g.n, max_len)
    for size in range(3, top + 1):
        for subset in combinations(range(g.n), size):
            first = subset[0]
            rest = subset[1:]
            for order in permutations(rest):
                if order[0] > order[-1]:
                    continue  # one orientation per cycle
                seq = (first,) + order
                if all(
                    g.has_edge(seq[i], seq[(i + 1) % size]) for i in range(size)
                ):
                    count += 1
    return count


def oracle_cycle_lengths(g: Graph) -> list[int]:
    """Multiset of cycle lengths by the subset-Hamiltonicity oracle."""
    lengths = []
    for size in range(3, g.n + 1):
        for subset in combinations(range(g.n), size):
            first = subset[0]
            for order in permutations(subset[1:]):
                if order[0] > order[-1]:
                    continue
                seq = (first,) + order
                if all(
                    g.has_edge(seq[i], seq[(i + 1) % size]) for i in range(size)
                ):
                    lengths.append(size)
    return sorted(lengths)


def oracle_chromatic(g: Graph) -> int:
    """Least k admitting a proper coloring, by exhausting k^n assignments."""
    if g.m == 0:
        return 1
    edges = [(e.u, e.v) for e in g.edges()]
    for k in range(2, g.n + 1):
        for assignment in product(range(k), repeat=g.n):
            if all(assignment[u] != assignment[v] for u, v in edges):
                return k
    return g.n


def oracle_colorable(g: Graph, k: int) -> bool:
    edges = [(e.u, e.v) for e in g.edges()]
    return any(
        all(assignment[u] != assignment[v] for u, v in edges)
        for assignment in product(range(k), repeat=g.n)
    )


def oracle_two_connected(g: Graph) -> bool:
    """Connected, n >= 3, and still connected after any vertex deletion."""

    def connected(vertices: list[int], edges: list[tuple[int, int]]) -> bool:
        if not vertices:
            return False
        adj = {v: set() for v in vertices}
        for u, v in edges:
            if u in adj and v in adj:
                adj[u].add(v)
                adj[v].add(u)
        seen = {vertices[0]}
        stack = [vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(vertices)

    vertices = list(range(g.n))
    edges = [(e.u, e.v) for e in g.edges()]
    if g.n < 3 or not connected(vertices, edges):
        return False
    for v in vertices:
        rest = [w for w in vertices if w != v]
        kept = [(a, b) for a, b in edges if a != v and b != v]
        if not connected(rest, kept):
            return False
    return True
