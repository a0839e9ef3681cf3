"""Exact chromatic-index decisions plus a constructive max-degree+1 coloring.

The decision search is exhaustive backtracking over a static edge order
(decreasing endpoint degree sum). Candidate colors are bitmask intersections
of endpoint availability; a color class is never allowed past floor(n/2)
edges, which refutes overfull hosts at the root. When deciding or finding,
color symmetry is broken by introducing at most one fresh color per step;
enumeration mode disables that and yields every proper coloring.
"""

from __future__ import annotations

import time

from .coloring import PartialEdgeColoring
from .graphs import Edge, Graph, GraphError, edge_key


class SearchBudgetExceeded(Exception):
    """The time budget ran out before the search reached a verdict."""


class _Budget:
    __slots__ = ("deadline", "ticks")

    def __init__(self, budget_ms):
        self.deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0
        self.ticks = 0

    def tick(self):
        if self.deadline is None:
            return
        self.ticks += 1
        if self.ticks % 512 == 0 and time.monotonic() > self.deadline:
            raise SearchBudgetExceeded("time budget exceeded")


def _search_order(graph: Graph, hole: Edge | None) -> list[Edge]:
    edges = [e for e in graph.edges if e != hole]
    edges.sort(key=lambda e: (-(graph.degree(e[0]) + graph.degree(e[1])), e))
    return edges


def _solve(graph: Graph, k: int, hole: Edge | None, budget: _Budget, enumerate_all: bool):
    """Yield full assignments (edge -> color) extending the hole, exhaustively."""
    if hole is not None and hole not in graph.edges:
        raise GraphError(f"hole edge {hole} not in graph")
    edges = _search_order(graph, hole)
    m = len(edges)
    cap = graph.n // 2
    if k * cap < m:
        return
    if any(graph.degree(v) - (hole is not None and v in hole) > k for v in range(graph.n)):
        return
    avail = [(1 << (k + 1)) - 2 for _ in range(graph.n)]
    class_size = [0] * (k + 1)
    chosen = [0] * m
    incident_later = [[] for _ in range(m)]
    for i, (u, v) in enumerate(edges):
        for j in range(i + 1, m):
            if edges[j][0] in (u, v) or edges[j][1] in (u, v):
                incident_later[i].append(j)

    def rec(i, used_max):
        budget.tick()
        if i == m:
            yield dict(zip(edges, chosen))
            return
        u, v = edges[i]
        cand = avail[u] & avail[v]
        if not enumerate_all:
            cand &= (1 << (min(k, used_max + 1) + 1)) - 1
        while cand:
            low = cand & -cand
            cand ^= low
            c = low.bit_length() - 1
            if class_size[c] == cap:
                continue
            avail[u] ^= low
            avail[v] ^= low
            class_size[c] += 1
            chosen[i] = c
            ok = True
            for j in incident_later[i]:
                a, b = edges[j]
                if not avail[a] & avail[b]:
                    ok = False
                    break
            if ok:
                yield from rec(i + 1, max(used_max, c))
            avail[u] |= low
            avail[v] |= low
            class_size[c] -= 1

    yield from rec(0, 0)


def find_coloring(graph: Graph, k: int, hole: Edge | None = None,
                  budget_ms: float | None = None) -> PartialEdgeColoring | None:
    """A proper k-coloring of the host minus the hole edge, or None if none exists."""
    hole = edge_key(*hole) if hole is not None else None
    budget = _Budget(budget_ms)
    for assign in _solve(graph, k, hole, budget, enumerate_all=False):
        return PartialEdgeColoring(graph, k, assign, hole)
    return None


def enumerate_colorings(graph: Graph, k: int, hole: Edge | None = None,
                        budget_ms: float | None = None):
    """Every proper k-coloring of the host minus the hole, deterministic order."""
    hole = edge_key(*hole) if hole is not None else None
    budget = _Budget(budget_ms)
    for assign in _solve(graph, k, hole, budget, enumerate_all=True):
        yield PartialEdgeColoring(graph, k, assign, hole)


def find_delta_coloring(graph: Graph, budget_ms: float | None = None) -> PartialEdgeColoring | None:
    """A proper coloring with exactly max-degree colors, or None."""
    return find_coloring(graph, graph.max_degree(), budget_ms=budget_ms)


def chromatic_index(graph: Graph, budget_ms: float | None = None) -> int:
    if not graph.edges:
        return 0
    delta = graph.max_degree()
    return delta if find_delta_coloring(graph, budget_ms) is not None else delta + 1


def classify(graph: Graph, budget_ms: float | None = None) -> int:
    """1 when the chromatic index equals the maximum degree, else 2."""
    if not graph.edges:
        raise GraphError("classification needs at least one edge")
    return 1 if chromatic_index(graph, budget_ms) == graph.max_degree() else 2


_CLASS_CACHE: dict[Graph, int] = {}


def classify_cached(graph: Graph, budget_ms: float | None = None) -> int:
    got = _CLASS_CACHE.get(graph)
    if got is None:
        got = classify(graph, budget_ms)
        _CLASS_CACHE[graph] = got
    return got


def is_critical_edge(graph: Graph, u: int, v: int, budget_ms: float | None = None) -> bool:
    """True when deleting the edge lowers the chromatic index."""
    e = edge_key(u, v)
    if not graph.has_edge(*e):
        raise GraphError(f"({u}, {v}) is not an edge")
    if classify_cached(graph, budget_ms) == 2:
        # for a class 2 host: critical iff the rest is max-degree-colorable
        return find_coloring(graph, graph.max_degree(), hole=e, budget_ms=budget_ms) is not None
    return chromatic_index(graph.delete_edge(*e), budget_ms) < chromatic_index(graph, budget_ms)


def critical_edge_report(graph: Graph, budget_ms: float | None = None) -> tuple[bool, list[Edge]]:
    """(is the graph edge-critical, list of its critical edges).

    Edge-critical means connected, class 2, and every edge critical.
    """
    crit = [e for e in graph.sorted_edges() if is_critical_edge(graph, *e, budget_ms=budget_ms)]
    ok = (bool(graph.edges) and graph.is_connected()
          and classify_cached(graph, budget_ms) == 2 and len(crit) == graph.edge_count())
    return ok, crit


# ---------------------------------------------------------------------------
# constructive coloring with one spare color


def vizing_color(graph: Graph) -> PartialEdgeColoring:
    """A proper edge coloring using at most max-degree+1 colors.

    Edges are inserted one at a time. Each insertion builds a maximal fan at
    one endpoint; either some fan vertex shares a missing color with the
    center (rotate and color), or a two-color path inversion frees the fan
    tail's color at the center, after which a valid fan prefix is rotated.
    """
    k = graph.max_degree() + 1
    if not graph.edges:
        return PartialEdgeColoring(graph, k, {})
    full = (1 << (k + 1)) - 2
    slot: list[dict[int, int]] = [dict() for _ in range(graph.n)]
    col: dict[Edge, int] = {}

    def missing(v):
        m = full
        for c in slot[v]:
            m &= ~(1 << c)
        return m

    def set_color(u, v, c):
        col[edge_key(u, v)] = c
        slot[u][c] = v
        slot[v][c] = u

    def clear_color(u, v):
        c = col.pop(edge_key(u, v))
        del slot[u][c]
        del slot[v][c]
        return c

    def insert(u, v0):
        fan = [v0]
        in_fan = {v0}
        mu = missing(u)
        while True:
            last = fan[-1]
            ml = missing(last)
            common = mu & ml
            if common:
                rotate(u, fan, len(fan) - 1)
                c = (common & -common).bit_length() - 1
                set_color(u, fan[-1], c)
                return
            ext = None
            rest = ml
            while rest:
                low = rest & -rest
                rest ^= low
                c = low.bit_length() - 1
                w = slot[u].get(c)
                if w is not None and w not in in_fan:
                    ext = w
                    break
            if ext is None:
                break
            fan.append(ext)
            in_fan.add(ext)
        c = (mu & -mu).bit_length() - 1
        md = missing(fan[-1])
        d = (md & -md).bit_length() - 1
        # collect the (c, d) path leaving u via its d edge, then flip it
        path = []
        v, want = u, d
        while True:
            w = slot[v].get(want)
            if w is None:
                break
            path.append((v, w))
            v, want = w, c if want == d else d
        # clear the whole path before rewriting: adjacent path edges pass
        # through a shared color mid-flip, and interleaved clears would drop
        # live slot entries
        flipped = [(vv, ww, clear_color(vv, ww)) for vv, ww in path]
        for vv, ww, cur in flipped:
            set_color(vv, ww, c if cur == d else d)
        # d is now missing at u; find a fan prefix that still accepts it
        target = 1 << d
        for i, t in enumerate(fan):
            if i > 0:
                fc = col[edge_key(u, fan[i])]
                if not missing(fan[i - 1]) & (1 << fc):
                    break
            if missing(t) & target:
                rotate(u, fan, i)
                set_color(u, fan[i], d)
                return
        raise AssertionError("fan recoloring failed to land a color")

    def rotate(u, fan, upto):
        for j in range(1, upto + 1):
            cj = clear_color(u, fan[j])
            set_color(u, fan[j - 1], cj)

    for u, v in sorted(graph.edges):
        insert(u, v)
    return PartialEdgeColoring(graph, k, col)
