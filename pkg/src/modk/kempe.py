"""Color-shift digraphs and the constructive cycle-extraction procedures.

Given a proper coloring and a cyclic permutation sigma of some of the
colors, the sigma-subdigraph has an arc u -> v exactly when uv is an edge
and sigma advances u's color to v's color.  Shifting every color in a
reachability-closed vertex set along sigma preserves properness, and every
directed cycle in the digraph has length divisible by sigma's order.
Those two facts drive all four extraction procedures below, which
constructively produce cycles of prescribed length residues in edge- and
vertex-critical graphs.

All operations are pure and deterministic: directed path searches are
breadth-first with lexicographic tie-breaking, and permutation
enumeration fixes one representative per inverse pair.
"""

from __future__ import annotations

from itertools import combinations, permutations
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from .coloring import Coloring, find_coloring, is_colorable, is_critical, is_proper
from .cycles import CycleSeq
from .errors import ContractViolation, TheoremViolation
from .graphs import Edge, Graph, iter_bits


class CyclicPerm:
    """A cyclic permutation of r distinct colors, stored min-first.

    ring[j] maps to ring[j+1], wrapping around.  Two rings equal up to
    rotation compare equal because construction normalizes the rotation.
    """

    __slots__ = ("ring", "_next", "_prev")

    def __init__(self, ring: Sequence[int]):
        ring = tuple(ring)
        if len(ring) < 2:
            raise ContractViolation("a cyclic permutation needs at least 2 colors")
        if len(set(ring)) != len(ring):
            raise ContractViolation(f"repeated color in ring {ring}")
        if any(c < 1 for c in ring):
            raise ContractViolation("colors are positive integers")
        pivot = ring.index(min(ring))
        ring = ring[pivot:] + ring[:pivot]
        self.ring = ring
        self._next = {c: ring[(j + 1) % len(ring)] for j, c in enumerate(ring)}
        self._prev = {c: ring[j - 1] for j, c in enumerate(ring)}

    @property
    def r(self) -> int:
        return len(self.ring)

    def apply(self, color: int) -> int:
        if color not in self._next:
            raise ContractViolation(f"color {color} not on the ring {self.ring}")
        return self._next[color]

    def predecessor(self, color: int) -> int:
        if color not in self._prev:
            raise ContractViolation(f"color {color} not on the ring {self.ring}")
        return self._prev[color]

    def inverse(self) -> "CyclicPerm":
        return CyclicPerm(tuple(reversed(self.ring)))

    def __contains__(self, color: int) -> bool:
        return color in self._next

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclicPerm) and self.ring == other.ring

    def __hash__(self) -> int:
        return hash(self.ring)

    def __repr__(self) -> str:
        return f"CyclicPerm{self.ring}"


def cyclic_perms(
    colors: Iterable[int],
    r: int,
    must_contain: int | None = None,
    one_per_inverse_pair: bool = False,
) -> Iterator[CyclicPerm]:
    """Enumerate cyclic r-permutations of the given colors, sorted rings.

    With one_per_inverse_pair, exactly one of {sigma, sigma inverse} is
    produced, chosen so the ring successor of the smallest color is
    smaller than its ring predecessor.
    """
    pool = sorted(set(colors))
    if r < 2 or r > len(pool):
        raise ContractViolation(f"r={r} outside 2..{len(pool)}")
    for combo in combinations(pool, r):
        if must_contain is not None and must_contain not in combo:
            continue
        first = combo[0]
        for rest in permutations(combo[1:]):
            if one_per_inverse_pair and r > 2 and rest[0] > rest[-1]:
                continue
            yield CyclicPerm((first,) + rest)


class SigmaDigraph:
    """Directed graph induced by (graph, coloring, cyclic permutation)."""

    __slots__ = ("base", "coloring", "sigma", "out")

    def __init__(self, base: Graph, coloring: Coloring, sigma: CyclicPerm, out: tuple[int, ...]):
        self.base = base
        self.coloring = coloring
        self.sigma = sigma
        self.out = out

    @property
    def n(self) -> int:
        return self.base.n

    def out_neighbors(self, u: int) -> Iterator[int]:
        return iter_bits(self.out[u])

    def has_arc(self, u: int, v: int) -> bool:
        return bool((self.out[u] >> v) & 1)

    def arc_count(self) -> int:
        return sum(row.bit_count() for row in self.out)

    def in_sets(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for u, row in enumerate(self.out):
            for v in iter_bits(row):
                rows[v] |= 1 << u
        return tuple(rows)

    def __repr__(self) -> str:
        return f"SigmaDigraph(n={self.n}, arcs={self.arc_count()}, sigma={self.sigma.ring})"


def build_sigma_subdigraph(g: Graph, c: Coloring, sigma: CyclicPerm) -> SigmaDigraph:
    """Arcs u -> v for every edge uv with sigma(color(u)) = color(v)."""
    if not is_proper(g, c):
        raise ContractViolation("coloring is not proper for the graph")
    if any(col > c.k for col in sigma.ring):
        raise ContractViolation(f"ring {sigma.ring} uses colors above k={c.k}")
    class_mask = {col: c.color_class_mask(col) for col in sigma.ring}
    rows = []
    for u, row in enumerate(g.adj):
        cu = c.colors[u]
        rows.append(row & class_mask[sigma.apply(cu)] if cu in sigma else 0)
    return SigmaDigraph(g, c, sigma, tuple(rows))


def accessible_set(d: SigmaDigraph, v: int) -> frozenset[int]:
    """Vertices reachable from v by directed paths, v included."""
    if not 0 <= v < d.n:
        raise ContractViolation(f"vertex {v} out of range")
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= d.out[u]
        frontier = nxt & ~seen
        seen |= frontier
    return frozenset(iter_bits(seen))


def kempe_shift(c: Coloring, sigma: CyclicPerm, region: Iterable[int]) -> Coloring:
    """Advance the color of every region vertex one step along sigma.

    When the region is reachability-closed in the sigma-subdigraph of a
    proper coloring, the result is again proper.
    """
    cols = list(c.colors)
    for v in region:
        if cols[v] not in sigma:
            raise ContractViolation(f"vertex {v} colored {cols[v]}, outside ring {sigma.ring}")
        cols[v] = sigma.apply(cols[v])
    return Coloring(tuple(cols), c.k)


def decompose_closed_walk(d: SigmaDigraph, walk: Sequence[int]) -> list[tuple[int, ...]]:
    """Split a closed directed walk into arc-disjoint directed cycles.

    Stack-based scan: whenever the walk revisits a vertex still on the
    stack, the segment since its last occurrence pops off as one cycle.
    The cycles' arc multisets partition the walk's arc multiset, and every
    walk vertex lands on at least one cycle.
    """
    if len(walk) == 0:
        raise ContractViolation("walk is empty")
    if walk[0] != walk[-1]:
        raise ContractViolation("walk is not closed")
    for i in range(len(walk) - 1):
        if not d.has_arc(walk[i], walk[i + 1]):
            raise ContractViolation(f"step {walk[i]}->{walk[i + 1]} is not an arc")
    stack = [walk[0]]
    pos = {walk[0]: 0}
    cycles: list[tuple[int, ...]] = []
    for w in walk[1:]:
        if w in pos:
            start = pos[w]
            cycles.append(tuple(stack[start:]))
            for x in stack[start + 1:]:
                del pos[x]
            del stack[start + 1:]
        else:
            stack.append(w)
            pos[w] = len(stack) - 1
    return cycles


def directed_cycles(d: SigmaDigraph, max_len: int | None = None) -> list[tuple[int, ...]]:
    """All elementary directed circuits, each once, rotated min-first."""
    out = d.out
    res: list[tuple[int, ...]] = []
    for s in range(d.n):
        higher = ~((1 << (s + 1)) - 1)
        path = [s]
        visited = 1 << s

        def walk(u: int) -> None:
            nonlocal visited
            if (out[u] >> s) & 1 and len(path) >= 2:
                res.append(tuple(path))
            if max_len is not None and len(path) >= max_len:
                return
            for w in iter_bits(out[u] & higher & ~visited):
                path.append(w)
                visited |= 1 << w
                walk(w)
                path.pop()
                visited &= ~(1 << w)

        walk(s)
    return res


# -- deterministic shortest directed paths -------------------------------


def _bfs_dist(sets: tuple[int, ...], n: int, sources: int) -> list[int]:
    dist = [-1] * n
    for s in iter_bits(sources):
        dist[s] = 0
    frontier = sources
    seen = sources
    step = 0
    while frontier:
        step += 1
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= sets[u]
        frontier = nxt & ~seen
        seen |= frontier
        for w in iter_bits(frontier):
            dist[w] = step
    return dist


def _shortest_path(d: SigmaDigraph, src: int, dst: int) -> tuple[int, ...] | None:
    """Lexicographically least shortest directed src..dst path, or None."""
    dist_f = _bfs_dist(d.out, d.n, 1 << src)
    if dist_f[dst] < 0:
        return None
    dist_b = _bfs_dist(d.in_sets(), d.n, 1 << dst)
    total = dist_f[dst]
    path = [src]
    cur = src
    while cur != dst:
        step = dist_f[cur] + 1
        cur = min(
            w
            for w in iter_bits(d.out[cur])
            if dist_f[w] == step and dist_b[w] == total - step
        )
        path.append(cur)
    return tuple(path)


def _shortest_path_to_set(d: SigmaDigraph, src: int, targets: int) -> tuple[int, ...] | None:
    """Lex-least shortest directed path from src to any target vertex."""
    dist_f = _bfs_dist(d.out, d.n, 1 << src)
    reach = [dist_f[t] for t in iter_bits(targets) if dist_f[t] >= 0]
    if not reach:
        return None
    total = min(reach)
    dist_b = _bfs_dist(d.in_sets(), d.n, targets)
    path = [src]
    cur = src
    while not (targets >> cur) & 1:
        step = dist_f[cur] + 1
        cur = min(
            w
            for w in iter_bits(d.out[cur])
            if dist_f[w] == step and dist_b[w] == total - step
        )
        path.append(cur)
    return tuple(path)


# -- construction: cycles of length 0 mod r from an edge-critical pair ----


def extract_zero_mod_r(g: Graph, e: Edge, r: int, k: int) -> set[CycleSeq]:
    """Build cycles of length 0 mod r in g - e when chi drops at e.

    Requires chi(g) = k+1 and chi(g-e) = k.  For each cyclic
    r-permutation through the color shared by e's endpoints (one per
    inverse pair), directed paths between the endpoints exist in the
    shift digraph; their concatenation decomposes into directed cycles,
    one of which passes the endpoint and has length divisible by r.
    Produces at least (k-1)(k-2)...(k-r+1)/2 distinct cycles.
    """
    e = Edge(e[0], e[1])
    if not (3 <= r <= k):
        raise ContractViolation(f"need 3 <= r <= k, got r={r}, k={k}")
    if not g.has_edge(e.u, e.v):
        raise ContractViolation(f"edge {e} not in graph")
    if is_colorable(g, k):
        raise ContractViolation(f"graph is {k}-colorable, expected chromatic number {k + 1}")
    if not is_colorable(g, k + 1):
        raise ContractViolation(f"graph is not {k + 1}-colorable, expected chromatic number {k + 1}")
    h = g.without_edge(e.u, e.v)
    phi = find_coloring(h, k)
    if phi is None:
        raise ContractViolation(f"deleting {e} does not make the graph {k}-colorable")
    x, y = e.u, e.v
    if phi[x] != phi[y]:
        raise TheoremViolation("endpoints of the critical edge received distinct colors")
    bound = prod(k - i for i in range(1, r)) // 2
    found: set[CycleSeq] = set()
    for sigma in cyclic_perms(range(1, k + 1), r, must_contain=phi[x], one_per_inverse_pair=True):
        d = build_sigma_subdigraph(h, phi, sigma)
        p = _shortest_path(d, x, y)
        q = _shortest_path(d, y, x)
        if p is None or q is None:
            raise TheoremViolation(
                f"missing directed path between endpoints for sigma={sigma.ring}; "
                "the color-shift argument guarantees one"
            )
        walk = p + q[1:]
        through_x = next((cyc for cyc in decompose_closed_walk(d, walk) if x in cyc), None)
        if through_x is None:
            raise TheoremViolation("walk decomposition lost the start vertex")
        cs = CycleSeq.from_vertices(through_x)
        if cs.length % r:
            raise TheoremViolation(f"constructed cycle has length {cs.length}, not 0 mod {r}")
        found.add(cs)
    if len(found) < bound:
        raise TheoremViolation(f"only {len(found)} cycles constructed, bound is {bound}")
    return found


# -- construction: color-indexed paths around a degree-k vertex -----------


def _validate_pivot_setup(g: Graph, v: int, c: Coloring, k: int) -> dict[int, int]:
    """Shared hypothesis checks; returns the color -> neighbor map."""
    if not 0 <= v < g.n:
        raise ContractViolation(f"vertex {v} out of range")
    if c.k != k:
        raise ContractViolation(f"coloring has k={c.k}, expected {k}")
    if g.degree(v) != k:
        raise ContractViolation(f"vertex {v} has degree {g.degree(v)}, expected {k}")
    if min(g.degrees()) != k:
        raise ContractViolation(f"minimum degree is {min(g.degrees())}, expected exactly {k}")
    if not is_proper(g.without_vertex_edges(v), c):
        raise ContractViolation("coloring is not proper away from the pivot vertex")
    v_of = {c.colors[w]: w for w in g.neighbors(v)}
    if sorted(v_of) != list(range(1, k + 1)):
        raise ContractViolation("pivot neighbors must carry colors 1..k exactly once")
    if not is_critical(g, k + 1):
        raise ContractViolation(f"graph is not {k + 1}-critical")
    return v_of


def _sigma_paths(
    g: Graph, v: int, c: Coloring, sigma: CyclicPerm, v_of: dict[int, int]
) -> dict[int, tuple[int, ...]]:
    """For each ring color i, a directed path from the neighbor colored i
    to the neighbor colored sigma^{-1}(i), avoiding the pivot."""
    paths: dict[int, tuple[int, ...]] = {}
    for i in sigma.ring:
        vi = v_of[i]
        gi = g.without_edge(v, vi)
        phi_i = c.with_color(v, i)
        d = build_sigma_subdigraph(gi, phi_i, sigma)
        q = _shortest_path(d, vi, v)
        if q is None:
            raise TheoremViolation(
                f"no directed path from neighbor colored {i} back to the pivot; "
                "the recoloring argument guarantees one"
            )
        r_path = q[:-1]
        if r_path[-1] != v_of[sigma.predecessor(i)]:
            raise TheoremViolation("path into the pivot arrived from the wrong color class")
        paths[i] = r_path
    return paths


def lemma_paths(g: Graph, v: int, c: Coloring, sigma: CyclicPerm) -> dict[int, tuple[int, ...]]:
    """Directed color-to-predecessor-color paths around a degree-k vertex.

    g must be (k+1)-critical with minimum degree exactly k, v a degree-k
    vertex, and c a proper coloring away from v giving v's neighbors the
    colors 1..k.  For every color i on sigma's ring the returned path runs
    from the neighbor colored i to the neighbor colored sigma^{-1}(i)
    inside the sigma-subdigraph that ignores v.
    """
    k = c.k
    v_of = _validate_pivot_setup(g, v, c, k)
    if not (3 <= sigma.r <= k):
        raise ContractViolation(f"need a cyclic r-permutation with 3 <= r <= {k}")
    if any(col > k for col in sigma.ring):
        raise ContractViolation(f"ring {sigma.ring} uses colors above k={k}")
    return _sigma_paths(g, v, c, sigma, v_of)


def neighbor_prescribed_coloring(g: Graph, v: int, k: int) -> Coloring | None:
    """Proper k-coloring ignoring v's edges, i-th smallest neighbor colored i+1."""
    nbrs = sorted(g.neighbors(v))
    prescription = [(w, j + 1) for j, w in enumerate(nbrs)]
    return find_coloring(g.without_vertex_edges(v), k, prescription)


# -- construction: injection from short complete-graph cycles -------------


def build_injection_f(g: Graph, v: int, c: Coloring, k: int) -> dict[CycleSeq, CycleSeq]:
    """Injectively map each short cycle of K_{k+1} to a cycle of g.

    Domain: cycles of K_{k+1} (vertex j standing for color j+1) of length
    at most k.  Images have length divisible by the domain cycle's length,
    and the image passes the pivot v exactly when the domain cycle uses
    the extra color k+1.  Injectivity is checked at runtime and a failure
    aborts loudly.
    """
    from .cycles import enumerate_cycles

    v_of = _validate_pivot_setup(g, v, c, k)
    domain = enumerate_cycles(Graph.complete(k + 1), max_len=k)
    mapping: dict[CycleSeq, CycleSeq] = {}
    for dom in domain:
        ring_colors = tuple(u + 1 for u in dom.vertices)
        if (k + 1) not in ring_colors:
            sigma = CyclicPerm(ring_colors)
            paths = _sigma_paths(g, v, c, sigma, v_of)
            i0 = sigma.ring[0]
            walk = list(paths[i0])
            j = sigma.predecessor(i0)
            while j != i0:
                walk.extend(paths[j][1:])
                j = sigma.predecessor(j)
            d = build_sigma_subdigraph(g.without_vertex_edges(v), c, sigma)
            chosen = decompose_closed_walk(d, walk)[0]
        else:
            i = min(set(range(1, k + 1)) - set(ring_colors))
            sigma2 = CyclicPerm(tuple(i if col == k + 1 else col for col in ring_colors))
            paths = _sigma_paths(g, v, c, sigma2, v_of)
            gi = g.without_edge(v, v_of[i])
            phi_i = c.with_color(v, i)
            d = build_sigma_subdigraph(gi, phi_i, sigma2)
            walk = [v] + list(paths[sigma2.apply(i)]) + list(paths[i][1:]) + [v]
            chosen = next(
                (cyc for cyc in decompose_closed_walk(d, walk) if v in cyc), None
            )
            if chosen is None:
                raise TheoremViolation("no decomposition cycle passes the pivot")
        img = CycleSeq.from_vertices(chosen)
        if img.length % dom.length:
            raise TheoremViolation(
                f"image length {img.length} not divisible by domain length {dom.length}"
            )
        mapping[dom] = img
    if len(set(mapping.values())) != len(mapping):
        raise TheoremViolation("cycle images collide; the mapping must be injective")
    return mapping


# -- construction: cycles of length 1 mod k through any vertex ------------


def extract_one_mod_k(g: Graph, v: int, k: int) -> set[CycleSeq]:
    """Build at least k!/2 distinct cycles of length 1 mod k through v.

    g must be (k+1)-critical.  A proper k-coloring away from v leaves
    every color on v's neighborhood; for each color i and each cyclic
    permutation of all k colors (one per duplicate pair), a shortest
    directed path from v back into the color-i neighbors closes into a
    cycle of length 1 mod k.
    """
    if k < 3:
        raise ContractViolation("construction needs k >= 3")
    if not 0 <= v < g.n:
        raise ContractViolation(f"vertex {v} out of range")
    if not is_critical(g, k + 1):
        raise ContractViolation(f"graph is not {k + 1}-critical")
    c = find_coloring(g.without_vertex_edges(v), k)
    if c is None:
        raise TheoremViolation("a critical graph minus a vertex must be k-colorable")
    n_mask = {i: 0 for i in range(1, k + 1)}
    for w in g.neighbors(v):
        n_mask[c.colors[w]] |= 1 << w
    for i, mask in n_mask.items():
        if mask == 0:
            raise TheoremViolation(
                f"no neighbor of {v} has color {i}; recoloring v would {k}-color the graph"
            )
    found: set[CycleSeq] = set()
    reps = 0
    for rest in permutations(range(2, k + 1)):
        sigma = CyclicPerm((1,) + rest)
        inv_ring = sigma.inverse().ring
        for i in range(1, k + 1):
            if (sigma.ring, i) > (inv_ring, sigma.apply(i)):
                continue  # the inverse pair produces the same underlying cycle
            reps += 1
            rows = list(g.adj)
            rows[v] &= ~n_mask[i]
            for w in iter_bits(n_mask[i]):
                rows[w] &= ~(1 << v)
            gi = Graph._unchecked(g.n, tuple(rows))
            phi_i = c.with_color(v, i)
            d = build_sigma_subdigraph(gi, phi_i, sigma)
            path = _shortest_path_to_set(d, v, n_mask[i])
            if path is None:
                raise TheoremViolation(
                    f"no directed path from {v} into color class {i}; "
                    "shifting the accessible set would properly color the graph"
                )
            if (len(path) - 1) % k:
                raise TheoremViolation("path between same-colored endpoints must have length 0 mod k")
            cyc = CycleSeq.from_vertices(path)
            found.add(cyc)
    bound = factorial(k) // 2
    if reps != bound:
        raise TheoremViolation(f"enumerated {reps} permutation classes, expected {bound}")
    if len(found) < bound:
        raise TheoremViolation(f"only {len(found)} distinct cycles, bound is {bound}")
    return found
