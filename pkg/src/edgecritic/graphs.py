"""Simple undirected graphs: construction, vertex splitting, small-graph utilities."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

Edge = tuple[int, int]


class GraphError(ValueError):
    """Malformed graph, edge, or split specification."""


def edge_key(u: int, v: int) -> Edge:
    """Normalize an edge to (low, high) vertex order."""
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertex ids 0..n-1.

    Equality and hashing consider (n, edges) only; adj is derived.
    """

    n: int
    edges: frozenset[Edge]
    adj: tuple[frozenset[int], ...] = field(compare=False, repr=False)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edges

    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(a) for a in self.adj))

    def vertices(self) -> range:
        return range(self.n)

    def delete_edge(self, u: int, v: int) -> Graph:
        e = edge_key(u, v)
        if e not in self.edges:
            raise GraphError(f"edge {e} not in graph")
        return make_graph(self.n, self.edges - {e})

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def is_regular(self) -> bool:
        degs = {len(a) for a in self.adj}
        return len(degs) <= 1

    def triangle_mask(self) -> int:
        """Upper-triangle adjacency bitmask, pairs (i, j) with i < j in lex order."""
        mask = 0
        for pos, (i, j) in enumerate(_upper_pairs(self.n)):
            if j in self.adj[i]:
                mask |= 1 << pos
        return mask


def make_graph(n: int, edges) -> Graph:
    """Build a Graph, validating vertex range and simplicity."""
    if n < 0:
        raise GraphError(f"negative order {n}")
    norm = set()
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
        norm.add(edge_key(u, v))
    adj = [set() for _ in range(n)]
    for u, v in norm:
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, frozenset(norm), tuple(frozenset(a) for a in adj))


def graph_from_mask(n: int, mask: int) -> Graph:
    """Inverse of Graph.triangle_mask for a fixed order n."""
    edges = [pair for pos, pair in enumerate(_upper_pairs(n)) if mask >> pos & 1]
    return make_graph(n, edges)


@lru_cache(maxsize=None)
def _upper_pairs(n: int) -> tuple[Edge, ...]:
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


# ---------------------------------------------------------------------------
# splitting


@dataclass(frozen=True)
class SplitSpec:
    """A bipartition of one vertex's neighborhood; both parts must be nonempty."""

    vertex: int
    part_a: frozenset[int]
    part_b: frozenset[int]


def split_spec(vertex: int, part_a, part_b) -> SplitSpec:
    return SplitSpec(vertex, frozenset(part_a), frozenset(part_b))


def validate_split(graph: Graph, spec: SplitSpec) -> None:
    v = spec.vertex
    if not 0 <= v < graph.n:
        raise GraphError(f"split vertex {v} out of range")
    if not spec.part_a or not spec.part_b:
        raise GraphError("both split parts must be nonempty")
    if spec.part_a & spec.part_b:
        raise GraphError(f"split parts overlap: {sorted(spec.part_a & spec.part_b)}")
    if spec.part_a | spec.part_b != graph.neighbors(v):
        raise GraphError("split parts must partition the neighborhood exactly")


def vertex_split(graph: Graph, spec: SplitSpec) -> Graph:
    """Replace spec.vertex by two adjacent vertices whose neighborhoods are the parts.

    The first half keeps the original vertex id; the second half gets id n.
    The result has one more vertex and exactly one more edge.
    """
    validate_split(graph, spec)
    v = spec.vertex
    twin = graph.n
    edges = []
    for u, w in graph.edges:
        if v not in (u, w):
            edges.append((u, w))
            continue
        other = w if u == v else u
        edges.append((v, other) if other in spec.part_a else (twin, other))
    edges.append((v, twin))
    return make_graph(graph.n + 1, edges)


def is_overfull(graph: Graph) -> bool:
    """More edges than the maximum degree times floor(n/2) can carry."""
    if not graph.edges:
        return False
    return graph.edge_count() > graph.max_degree() * (graph.n // 2)


def distance(graph: Graph, source: int, targets) -> int | None:
    """BFS distance from source to the nearest vertex of targets; None if unreachable."""
    tset = set(targets)
    if not tset:
        raise GraphError("target set must be nonempty")
    for t in tset:
        if not 0 <= t < graph.n:
            raise GraphError(f"target vertex {t} out of range")
    if not 0 <= source < graph.n:
        raise GraphError(f"source vertex {source} out of range")
    if source in tset:
        return 0
    seen = {source}
    frontier = [source]
    dist = 0
    while frontier:
        dist += 1
        nxt = []
        for v in frontier:
            for w in graph.adj[v]:
                if w in seen:
                    continue
                if w in tset:
                    return dist
                seen.add(w)
                nxt.append(w)
        frontier = nxt
    return None


# ---------------------------------------------------------------------------
# builders


def complete(k: int) -> Graph:
    return make_graph(k, itertools.combinations(range(k), 2))


def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {k}")
    return make_graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_bipartite(a: int, b: int) -> Graph:
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return make_graph(10, edges)


def petersen_minus_vertex() -> Graph:
    """Petersen graph with its last vertex removed: 9 vertices, 12 edges."""
    p = petersen()
    return make_graph(9, [e for e in p.edges if 9 not in e])


def prism() -> Graph:
    """Two triangles joined by a perfect matching."""
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    return make_graph(6, edges)


def cube() -> Graph:
    """The 3-dimensional hypercube on 8 vertices."""
    edges = [(u, u ^ bit) for u in range(8) for bit in (1, 2, 4) if u < u ^ bit]
    return make_graph(8, edges)


def complete_minus_matching(k: int) -> Graph:
    """Complete graph on an even number of vertices minus a perfect matching."""
    if k % 2:
        raise GraphError(f"complete_minus_matching needs even order, got {k}")
    removed = {(2 * i, 2 * i + 1) for i in range(k // 2)}
    return make_graph(k, set(itertools.combinations(range(k), 2)) - removed)


# ---------------------------------------------------------------------------
# canonical forms (exact, all permutations; intended for n <= 8)

_CANON_LIMIT = 8


@lru_cache(maxsize=None)
def _perm_arrays(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64)


@lru_cache(maxsize=None)
def _triu_index(n: int):
    rows, cols = np.triu_indices(n, k=1)
    weights = (np.int64(1) << np.arange(len(rows), dtype=np.int64))
    return rows, cols, weights


def _all_permuted_masks(graph: Graph) -> np.ndarray:
    n = graph.n
    a = np.zeros((n, n), dtype=bool)
    for u, v in graph.edges:
        a[u, v] = a[v, u] = True
    perms = _perm_arrays(n)
    rows, cols, weights = _triu_index(n)
    permuted = a[perms[:, :, None], perms[:, None, :]]
    bits = permuted[:, rows, cols]
    return bits @ weights


def canonical_mask(graph: Graph) -> int:
    """Minimum upper-triangle bitmask over all vertex relabelings."""
    if graph.n > _CANON_LIMIT:
        raise GraphError(f"canonical form limited to order {_CANON_LIMIT}, got {graph.n}")
    if graph.n <= 1:
        return 0
    return int(_all_permuted_masks(graph).min())


def canonical_graph(graph: Graph) -> Graph:
    """Canonically relabeled copy: the lexicographically least adjacency mask."""
    return graph_from_mask(graph.n, canonical_mask(graph))


def automorphisms(graph: Graph) -> list[tuple[int, ...]]:
    """All adjacency-preserving relabelings, identity included."""
    if graph.n > _CANON_LIMIT:
        raise GraphError(f"automorphisms limited to order {_CANON_LIMIT}, got {graph.n}")
    if graph.n <= 1:
        return [tuple(range(graph.n))]
    masks = _all_permuted_masks(graph)
    own = graph.triangle_mask()
    perms = _perm_arrays(graph.n)
    return [tuple(int(x) for x in perms[i]) for i in np.nonzero(masks == own)[0]]
