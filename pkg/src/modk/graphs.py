"""Immutable bitset-backed simple graphs plus graph6 serialization.

Vertices are dense integers 0..n-1.  Adjacency is stored as a tuple of int
bitmasks, ``adj[u]`` having bit ``v`` set iff uv is an edge.  Graph values
are immutable after construction, hashable, and safe to share across
threads; every operation here is a pure function of its inputs.

The interchange format is graph6 (one graph per ASCII line).  Only the
single-byte size header is supported, which caps n at 62; that is far
beyond the order of anything this package sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ContractViolation, Graph6Error, UnsupportedSizeError

MAX_VERTICES = 62


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Edge(tuple):
    """An undirected edge, stored with u < v."""

    __slots__ = ()

    def __new__(cls, u: int, v: int):
        if u == v:
            raise ContractViolation(f"loop edge ({u},{v}) not allowed")
        if u < 0 or v < 0:
            raise ContractViolation(f"negative vertex id in edge ({u},{v})")
        if u > v:
            u, v = v, u
        return super().__new__(cls, (u, v))

    @property
    def u(self) -> int:
        return self[0]

    @property
    def v(self) -> int:
        return self[1]

    def __repr__(self) -> str:
        return f"Edge({self[0]}, {self[1]})"


class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise ContractViolation("vertex count must be nonnegative")
        if n > MAX_VERTICES:
            raise UnsupportedSizeError(f"n={n} exceeds supported maximum {MAX_VERTICES}")
        adj = tuple(adj)
        if len(adj) != n:
            raise ContractViolation(f"adjacency length {len(adj)} != n={n}")
        full = (1 << n) - 1
        for u, row in enumerate(adj):
            if row & ~full:
                raise ContractViolation(f"adjacency of {u} references vertices >= n")
            if (row >> u) & 1:
                raise ContractViolation(f"loop at vertex {u}")
            for v in iter_bits(row):
                if not (adj[v] >> u) & 1:
                    raise ContractViolation(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = adj

    @classmethod
    def _unchecked(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # internal fast path: adj must already be a valid tuple
        g = object.__new__(cls)
        g.n = n
        g.adj = adj
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise ContractViolation(f"edge ({a},{b}) out of range for n={n}")
            if a == b:
                raise ContractViolation(f"loop edge ({a},{b}) not allowed")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls._unchecked(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls._unchecked(n, tuple(full ^ (1 << u) for u in range(n)))

    @classmethod
    def cycle_graph(cls, n: int) -> "Graph":
        if n < 3:
            raise ContractViolation("cycle graph needs n >= 3")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path_graph(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    # -- queries ---------------------------------------------------------

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, u: int) -> Iterator[int]:
        return iter_bits(self.adj[u])

    def edges(self) -> list[Edge]:
        out = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                out.append(Edge(u, u + 1 + v))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived graphs --------------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        e = Edge(u, v)
        if e.v >= self.n:
            raise ContractViolation(f"edge {e} out of range")
        rows = list(self.adj)
        rows[e.u] |= 1 << e.v
        rows[e.v] |= 1 << e.u
        return Graph._unchecked(self.n, tuple(rows))

    def without_edge(self, u: int, v: int) -> "Graph":
        e = Edge(u, v)
        if not self.has_edge(e.u, e.v):
            raise ContractViolation(f"edge {e} not present")
        rows = list(self.adj)
        rows[e.u] &= ~(1 << e.v)
        rows[e.v] &= ~(1 << e.u)
        return Graph._unchecked(self.n, tuple(rows))

    def without_vertex_edges(self, v: int) -> "Graph":
        """Drop every edge at v, keeping the vertex in place.

        The standard stand-in for "G - v" when vertex ids must stay stable.
        """
        if not 0 <= v < self.n:
            raise ContractViolation(f"vertex {v} out of range")
        bit = 1 << v
        rows = tuple(0 if u == v else row & ~bit for u, row in enumerate(self.adj))
        return Graph._unchecked(self.n, rows)

    def add_vertex(self, neighbors: Iterable[int] | int = 0) -> "Graph":
        """Return the graph extended by vertex n joined to the given set."""
        mask = neighbors if isinstance(neighbors, int) else sum(1 << w for w in set(neighbors))
        if mask >> self.n:
            raise ContractViolation("new vertex neighborhood out of range")
        bit = 1 << self.n
        rows = [row | bit if (mask >> u) & 1 else row for u, row in enumerate(self.adj)]
        rows.append(mask)
        return Graph._unchecked(self.n + 1, tuple(rows))

    def delete_vertex(self, v: int) -> "Graph":
        """Remove v and relabel vertices above it down by one."""
        if not 0 <= v < self.n:
            raise ContractViolation(f"vertex {v} out of range")
        low = (1 << v) - 1
        rows = []
        for u, row in enumerate(self.adj):
            if u == v:
                continue
            rows.append((row & low) | ((row >> (v + 1)) << v))
        return Graph._unchecked(self.n - 1, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Apply the vertex permutation perm (perm[old] = new)."""
        if sorted(perm) != list(range(self.n)):
            raise ContractViolation("relabeling is not a permutation of 0..n-1")
        rows = [0] * self.n
        for u, row in enumerate(self.adj):
            nu = perm[u]
            acc = 0
            for v in iter_bits(row):
                acc |= 1 << perm[v]
            rows[nu] = acc
        return Graph._unchecked(self.n, tuple(rows))


# -- connectivity and structure -----------------------------------------


def _component_mask(adj: Sequence[int], start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u] & allowed
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    full = (1 << g.n) - 1
    return _component_mask(g.adj, 0, full) == full


@dataclass(frozen=True)
class StructuralSummary:
    min_degree: int
    max_degree: int
    connected: bool
    two_connected: bool
    is_complete: bool


def structural_predicates(g: Graph) -> StructuralSummary:
    """Degree extremes, connectivity, 2-connectivity, completeness."""
    if g.n == 0:
        return StructuralSummary(0, 0, False, False, True)
    degs = g.degrees()
    connected = is_connected(g)
    two_connected = connected and g.n >= 3
    if two_connected:
        full = (1 << g.n) - 1
        for v in range(g.n):
            allowed = full & ~(1 << v)
            start = 0 if v != 0 else 1
            if _component_mask(g.adj, start, allowed) != allowed:
                two_connected = False
                break
    complete = g.m == g.n * (g.n - 1) // 2
    return StructuralSummary(min(degs), max(degs), connected, two_connected, complete)


# -- graph6 serialization ------------------------------------------------


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 record (single-byte header, n <= 62).

    Byte offsets in error messages are relative to the start of the
    record, after the optional ``>>graph6<<`` prefix.
    """
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 record", 0)
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise Graph6Error("non-ASCII byte in graph6 record", 0) from None
    head = data[0]
    if head == 126:
        raise Graph6Error("multi-byte size header (n > 62) not supported", 0)
    if not 63 <= head <= 125:
        raise Graph6Error(f"malformed header byte {head}", 0)
    n = head - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) < nbytes:
        raise Graph6Error("truncated bit field", len(data))
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage after bit field", 1 + nbytes)
    rows = [0] * n
    idx = 0
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for off, byte in enumerate(body):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"invalid body byte {byte}", 1 + off)
        group = byte - 63
        for k in range(5, -1, -1):
            bit = (group >> k) & 1
            if idx < nbits:
                if bit:
                    i, j = pairs[idx]
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            elif bit:
                raise Graph6Error("nonzero padding bit", 1 + off)
            idx += 1
    return Graph._unchecked(n, tuple(rows))


def write_graph6(g: Graph) -> str:
    """Encode a graph as a single graph6 record (no trailing newline)."""
    if g.n > MAX_VERTICES:
        raise UnsupportedSizeError(f"n={g.n} exceeds graph6 single-byte range")
    out = [chr(g.n + 63)]
    group = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            group = (group << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(group + 63))
                group = 0
                nbits = 0
    if nbits:
        group <<= 6 - nbits
        out.append(chr(group + 63))
    return "".join(out)
