"""Fan-style structures anchored at an uncolored edge, and their validators."""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import ColoringError, PartialEdgeColoring
from .graphs import Graph, edge_key


@dataclass(frozen=True)
class Multifan:
    """Center vertex plus leaf sequence s_1..s_p; (center, s_1) is the hole.

    Each later spoke's color must be missing at an earlier leaf.
    """

    center: int
    leaves: tuple[int, ...]

    def vertex_set(self) -> tuple[int, ...]:
        return (self.center, *self.leaves)


@dataclass(frozen=True)
class KiersteadPath:
    """Path v_0..v_p whose first edge is the hole; each later edge's color is
    missing at a strictly earlier vertex."""

    vertices: tuple[int, ...]


@dataclass(frozen=True)
class ShortKite:
    """Four-cycle apex-rim1-hub-rim2 plus two pendant edges at the hub.

    Six distinct vertices; edges: (apex, rim1), (rim1, hub), (hub, rim2),
    (rim2, apex), (hub, tail1), (hub, tail2).
    """

    apex: int
    rim1: int
    rim2: int
    hub: int
    tail1: int
    tail2: int

    def vertex_set(self) -> tuple[int, ...]:
        return (self.apex, self.rim1, self.rim2, self.hub, self.tail1, self.tail2)

    def edge_set(self) -> tuple[tuple[int, int], ...]:
        return (
            edge_key(self.apex, self.rim1),
            edge_key(self.rim1, self.hub),
            edge_key(self.hub, self.rim2),
            edge_key(self.rim2, self.apex),
            edge_key(self.hub, self.tail1),
            edge_key(self.hub, self.tail2),
        )


@dataclass(frozen=True)
class FullDeficiencyPair:
    """Adjacent vertices whose degrees sum to max-degree + 2."""

    u: int
    v: int


# ---------------------------------------------------------------------------
# validators (each returns a reason string, or None when valid)


def multifan_violation(coloring: PartialEdgeColoring, fan: Multifan) -> str | None:
    g = coloring.graph
    r = fan.center
    leaves = fan.leaves
    if coloring.uncolored is None:
        return "no uncolored edge"
    if not leaves:
        return "empty leaf sequence"
    if len(set(leaves)) != len(leaves) or r in leaves:
        return "vertices repeat"
    if edge_key(r, leaves[0]) != coloring.uncolored:
        return "first spoke is not the uncolored edge"
    union = 0
    for i, s in enumerate(leaves):
        if not g.has_edge(r, s):
            return f"missing spoke ({r}, {s})"
        if i > 0:
            c = coloring.color_of(r, s)
            if c == 0:
                return f"spoke ({r}, {s}) uncolored"
            if not union & (1 << c):
                return f"color {c} of spoke ({r}, {s}) not missing at any earlier leaf"
        union |= coloring.missing_mask(s)
    return None


def is_multifan(coloring: PartialEdgeColoring, fan: Multifan) -> bool:
    return multifan_violation(coloring, fan) is None


def kierstead_violation(coloring: PartialEdgeColoring, path: KiersteadPath) -> str | None:
    g = coloring.graph
    vs = path.vertices
    if coloring.uncolored is None:
        return "no uncolored edge"
    if len(vs) < 2:
        return "too short"
    if len(set(vs)) != len(vs):
        return "vertices repeat"
    if edge_key(vs[0], vs[1]) != coloring.uncolored:
        return "first edge is not the uncolored edge"
    union = 0
    for i in range(len(vs) - 1):
        a, b = vs[i], vs[i + 1]
        if not g.has_edge(a, b):
            return f"missing edge ({a}, {b})"
        union |= coloring.missing_mask(a)
        if i >= 1:
            c = coloring.color_of(a, b)
            if c == 0:
                return f"edge ({a}, {b}) uncolored"
            if not union & (1 << c):
                return f"color {c} of edge ({a}, {b}) not missing at any earlier vertex"
    return None


def is_kierstead_path(coloring: PartialEdgeColoring, path: KiersteadPath) -> bool:
    return kierstead_violation(coloring, path) is None


def kite_violation(graph: Graph, kite: ShortKite) -> str | None:
    vs = kite.vertex_set()
    if len(set(vs)) != 6:
        return "vertices repeat"
    for u, v in kite.edge_set():
        if not graph.has_edge(u, v):
            return f"missing edge ({u}, {v})"
    return None


def kite_in_graph(graph: Graph, kite: ShortKite) -> bool:
    return kite_violation(graph, kite) is None


# ---------------------------------------------------------------------------
# builders and enumerators


def build_maximal_multifan(coloring: PartialEdgeColoring, center: int) -> Multifan:
    """Greedy maximal multifan at one endpoint of the hole.

    Scans candidate spokes by ascending leaf id and admits the first whose
    color is missing somewhere in the current fan, restarting until stable.
    """
    if coloring.uncolored is None:
        raise ColoringError("no uncolored edge to anchor a multifan")
    if center not in coloring.uncolored:
        raise ColoringError(f"vertex {center} is not an endpoint of the uncolored edge")
    a, b = coloring.uncolored
    first = b if center == a else a
    leaves = [first]
    chosen = {first, center}
    union = coloring.missing_mask(first)
    grew = True
    while grew:
        grew = False
        for w in sorted(coloring.graph.neighbors(center)):
            if w in chosen:
                continue
            c = coloring.color_of(center, w)
            if c and union & (1 << c):
                leaves.append(w)
                chosen.add(w)
                union |= coloring.missing_mask(w)
                grew = True
                break
    return Multifan(center, tuple(leaves))


def enumerate_kierstead_paths(coloring: PartialEdgeColoring) -> list[KiersteadPath]:
    """All four-vertex Kierstead paths starting with the hole, both orientations."""
    if coloring.uncolored is None:
        raise ColoringError("no uncolored edge to anchor a Kierstead path")
    g = coloring.graph
    a, b = coloring.uncolored
    out = []
    for v0, v1 in ((a, b), (b, a)):
        m0 = coloring.missing_mask(v0)
        for v2 in sorted(g.neighbors(v1)):
            if v2 in (v0, v1):
                continue
            c12 = coloring.color_of(v1, v2)
            if not (c12 and m0 & (1 << c12)):
                continue
            m01 = m0 | coloring.missing_mask(v1)
            for v3 in sorted(g.neighbors(v2)):
                if v3 in (v0, v1, v2):
                    continue
                c23 = coloring.color_of(v2, v3)
                if c23 and m01 & (1 << c23):
                    out.append(KiersteadPath((v0, v1, v2, v3)))
    return out


def find_short_kites(graph: Graph) -> list[ShortKite]:
    """All labeled short-kite occurrences, ascending by role tuple."""
    out = []
    for hub in range(graph.n):
        nbrs = sorted(graph.neighbors(hub))
        for rim1 in nbrs:
            for rim2 in nbrs:
                if rim2 == rim1:
                    continue
                commons = graph.neighbors(rim1) & graph.neighbors(rim2)
                for apex in sorted(commons):
                    if apex == hub:
                        continue
                    rest = [w for w in nbrs if w not in (apex, rim1, rim2)]
                    for tail1 in rest:
                        for tail2 in rest:
                            if tail2 != tail1:
                                out.append(ShortKite(apex, rim1, rim2, hub, tail1, tail2))
    return out


def find_full_deficiency_pairs(graph: Graph) -> list[FullDeficiencyPair]:
    """Adjacent pairs with degree sum max-degree + 2, ascending edge order."""
    target = graph.max_degree() + 2
    return [FullDeficiencyPair(u, v) for u, v in graph.sorted_edges()
            if graph.degree(u) + graph.degree(v) == target]
