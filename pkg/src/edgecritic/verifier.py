"""Desk-scale verification sweeps over vertex splits of regular class-1 bases.

A sweep plans every (base graph, split vertex, neighborhood bipartition)
instance up to symmetry, then checks each split graph for overfullness,
class 2, and criticality of every edge. Records stream to a JSON-lines log
in plan order; reruns are byte-identical and interrupted runs resume.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .coloring import (
    ColoringError,
    PartialEdgeColoring,
    coloring_from_text,
    elementary_violation,
)
from .graph6 import emit_graph6, parse_graph6
from .graphs import (
    Graph,
    GraphError,
    SplitSpec,
    automorphisms,
    is_overfull,
    petersen_minus_vertex,
    split_spec,
    vertex_split,
)
from .enumeration import enumerate_regular_graphs
from .records import RecordError, VerificationRecord, read_records
from .solver import (
    SearchBudgetExceeded,
    classify,
    classify_cached,
    enumerate_colorings,
    find_coloring,
    find_delta_coloring,
)
from .structures import enumerate_kierstead_paths, kierstead_violation

SPLIT_LEMMA = "split-delta-critical"

# solver cross-checks the inherited-coloring certificate on every tenth instance
CONFIRM_STRIDE = 10


@dataclass(frozen=True)
class SweepConfig:
    """What to sweep.

    mode "theorem" keeps bases with 4*degree >= 3*order; mode "conjecture"
    keeps 3*degree > order (the threshold read on the base's order); mode
    "custom" keeps exactly the degrees listed. Bases of order 10 are gated
    behind long_haul and exist only in the theorem range.
    """

    m_max: int = 8
    mode: str = "theorem"
    degrees: tuple[int, ...] | None = None
    budget_ms: float | None = 60000.0
    jobs: int = 1
    long_haul: bool = False

    def degree_wanted(self, m: int, d: int) -> bool:
        if self.mode == "theorem":
            return 4 * d >= 3 * m
        if self.mode == "conjecture":
            return 3 * d > m
        return self.degrees is not None and d in self.degrees

    def validate(self) -> None:
        if self.mode not in ("theorem", "conjecture", "custom"):
            raise GraphError(f"unknown sweep mode {self.mode!r}")
        if self.mode == "custom" and not self.degrees:
            raise GraphError("custom mode needs an explicit degree tuple")
        if self.m_max < 4 or self.m_max % 2:
            raise GraphError("base order cap must be an even number >= 4")
        if self.m_max > 10:
            raise GraphError("base orders above 10 are not supported")
        if self.m_max > 8 and not self.long_haul:
            raise GraphError("order-10 bases are hours of work; set long_haul")
        if self.m_max > 8 and self.mode != "theorem":
            raise GraphError("order-10 bases exist only in the theorem range")


@dataclass(frozen=True)
class SplitInstance:
    instance_id: str
    base_graph6: str
    base_coloring_text: str
    vertex: int
    part_a: tuple[int, ...]
    part_b: tuple[int, ...]
    budget_ms: float | None
    solver_confirm: bool


def _normalize_parts(nbrs: frozenset[int], a, b) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Unordered partition -> canonical order: first part holds the least neighbor."""
    a, b = frozenset(a), frozenset(b)
    if min(nbrs) in b:
        a, b = b, a
    return tuple(sorted(a)), tuple(sorted(b))


def _split_orbits(base: Graph) -> list[tuple[int, tuple[int, ...], tuple[int, ...]]]:
    """All (vertex, partition) choices up to base automorphisms, sorted."""
    auts = automorphisms(base) if base.n <= 8 else [tuple(range(base.n))]
    seen: set[tuple] = set()
    reps = []
    for v in range(base.n):
        nbrs = sorted(base.neighbors(v))
        if len(nbrs) < 2:
            continue
        rest = nbrs[1:]
        # fixing nbrs[0] in part A kills the (A,B)/(B,A) double count
        for pick in range(1 << len(rest)):
            a = [nbrs[0]] + [w for i, w in enumerate(rest) if pick >> i & 1]
            b = [w for i, w in enumerate(rest) if not pick >> i & 1]
            if not b:
                continue
            key = (v, tuple(a), tuple(b))
            if key in seen:
                continue
            orbit = set()
            for p in auts:
                pv = p[v]
                pa, pb = _normalize_parts(base.neighbors(pv),
                                          (p[w] for w in a), (p[w] for w in b))
                orbit.add((pv, pa, pb))
            seen |= orbit
            reps.append(min(orbit))
    return sorted(reps)


def _instance_id(base_g6: str, v: int, a: tuple[int, ...], b: tuple[int, ...]) -> str:
    return (f"{base_g6} v={v}"
            f" A={','.join(map(str, a))}"
            f" B={','.join(map(str, b))}")


def plan_instances(config: SweepConfig) -> list[SplitInstance]:
    """Deterministic work list: every split of every base in range, deduped."""
    config.validate()
    plan: list[SplitInstance] = []
    counter = 0
    for m in range(4, config.m_max + 1, 2):
        degrees = [d for d in range(2, m) if config.degree_wanted(m, d)]
        if m > 8:
            degrees = [d for d in degrees if d >= m - 2]
        for d in degrees:
            if (m * d) % 2:
                continue
            for base in enumerate_regular_graphs(m, d):
                if not base.is_connected():
                    continue
                if classify_cached(base, config.budget_ms) != 1:
                    continue
                phi = find_delta_coloring(base, config.budget_ms)
                if phi is None:  # unreachable: class 1 just certified
                    continue
                g6 = emit_graph6(base)
                text = phi.to_text()
                for v, a, b in _split_orbits(base):
                    plan.append(SplitInstance(
                        instance_id=_instance_id(g6, v, a, b),
                        base_graph6=g6,
                        base_coloring_text=text,
                        vertex=v,
                        part_a=a,
                        part_b=b,
                        budget_ms=config.budget_ms,
                        solver_confirm=counter % CONFIRM_STRIDE == 0,
                    ))
                    counter += 1
    return plan


# ---------------------------------------------------------------------------
# per-instance work


def inherit_split_coloring(base_coloring: PartialEdgeColoring,
                           spec: SplitSpec) -> PartialEdgeColoring:
    """Carry a full coloring of the base over the split; the new edge is the hole.

    This certifies the split edge critical without any search: the result is a
    proper max-degree coloring of the split graph minus its new edge.
    """
    if not base_coloring.is_full():
        raise ColoringError("base coloring must be full")
    base = base_coloring.graph
    split = vertex_split(base, spec)
    v, twin = spec.vertex, base.n
    assign = {}
    for (p, q), c in base_coloring.colored_items():
        if p == v:
            p = v if q in spec.part_a else twin
        if q == v:
            q = v if p in spec.part_a else twin
        assign[(p, q) if p < q else (q, p)] = c
    return PartialEdgeColoring(split, base_coloring.k, assign, (v, twin))


def check_split_instance(inst: SplitInstance) -> VerificationRecord:
    """Overfull + class 2 + every edge critical, for one split instance."""
    base = parse_graph6(inst.base_graph6)
    phi = coloring_from_text(base, inst.base_coloring_text)
    spec = split_spec(inst.vertex, inst.part_a, inst.part_b)
    g = vertex_split(base, spec)
    delta = g.max_degree()
    # the carried base coloring certifies class 1 on its own
    hyp = {"base_class1": phi.is_full() and phi.k == base.max_degree(),
           "base_connected": base.is_connected(),
           "base_regular": base.is_regular()}
    split_edge = (inst.vertex, base.n)

    def fail(check: str, **extra) -> VerificationRecord:
        witness = {"check": check, "graph6": emit_graph6(g)}
        witness.update(extra)
        return VerificationRecord(SPLIT_LEMMA, inst.instance_id, hyp, False, witness)

    if not is_overfull(g):
        return fail("overfull")
    inherited = inherit_split_coloring(phi, spec)
    if sorted(inherited.missing(inst.vertex) | inherited.missing(base.n)) != list(
            range(1, delta + 1)) or inherited.missing(inst.vertex) & inherited.missing(base.n):
        return fail("inherited-missing-partition")
    try:
        if classify(g, inst.budget_ms) != 2:
            return fail("class2")
        if inst.solver_confirm:
            if find_coloring(g, delta, hole=split_edge, budget_ms=inst.budget_ms) is None:
                return fail("solver-disagrees-on-split-edge")
        for e in g.sorted_edges():
            if e == split_edge:
                continue  # certified by the inherited coloring
            if find_coloring(g, delta, hole=e, budget_ms=inst.budget_ms) is None:
                return fail("edge-critical", edge=list(e))
    except SearchBudgetExceeded:
        return VerificationRecord(SPLIT_LEMMA, inst.instance_id, hyp, None)
    return VerificationRecord(SPLIT_LEMMA, inst.instance_id, hyp, True)


# ---------------------------------------------------------------------------
# sweep driver


def _validate_resume(log_path: str, plan: list[SplitInstance]) -> int:
    """Existing log must be a prefix of the plan; returns how many are done."""
    done = 0
    for rec in read_records(log_path):
        if done >= len(plan):
            raise RecordError(f"{log_path}: more records than planned instances")
        want = plan[done]
        if rec.lemma != SPLIT_LEMMA or rec.instance_id != want.instance_id:
            raise RecordError(
                f"{log_path}: record {done + 1} is {rec.instance_id!r}, "
                f"plan says {want.instance_id!r}")
        done += 1
    return done


def run_sweep(config: SweepConfig, log_path: str | None = None,
              resume: bool = False) -> list[VerificationRecord]:
    """Execute the plan, optionally streaming records to a JSON-lines log."""
    plan = plan_instances(config)
    records: list[VerificationRecord] = []
    start = 0
    if log_path and resume and os.path.exists(log_path):
        start = _validate_resume(log_path, plan)
        records.extend(read_records(log_path))
    todo = plan[start:]
    sink = open(log_path, "a" if start else "w", encoding="ascii") if log_path else None
    try:
        if config.jobs > 1 and len(todo) > 1:
            with ProcessPoolExecutor(max_workers=config.jobs) as pool:
                stream = pool.map(check_split_instance, todo, chunksize=1)
                for rec in stream:
                    records.append(rec)
                    if sink:
                        sink.write(rec.to_json_line() + "\n")
                        sink.flush()
        else:
            for inst in todo:
                rec = check_split_instance(inst)
                records.append(rec)
                if sink:
                    sink.write(rec.to_json_line() + "\n")
                    sink.flush()
    finally:
        if sink:
            sink.close()
    return records


def verify_theorem1(m_max: int = 8, budget_ms: float | None = 60000.0,
                    jobs: int = 1, long_haul: bool = False,
                    log_path: str | None = None,
                    resume: bool = False) -> list[VerificationRecord]:
    config = SweepConfig(m_max=m_max, mode="theorem", budget_ms=budget_ms,
                         jobs=jobs, long_haul=long_haul)
    return run_sweep(config, log_path, resume)


def sweep_conjecture_range(m_max: int = 8, budget_ms: float | None = 60000.0,
                           jobs: int = 1, degrees: tuple[int, ...] | None = None,
                           log_path: str | None = None,
                           resume: bool = False) -> list[VerificationRecord]:
    mode = "custom" if degrees else "conjecture"
    config = SweepConfig(m_max=m_max, mode=mode, degrees=degrees,
                         budget_ms=budget_ms, jobs=jobs)
    return run_sweep(config, log_path, resume)


# ---------------------------------------------------------------------------
# the published counterexample hunt


def reproduce_nonelementary_path(budget_ms: float | None = None) -> VerificationRecord:
    """Search the 9-vertex Petersen remnant for a four-vertex structured path
    whose vertex set shares a missing color.

    Scans edges in ascending order and colorings in solver order; the first
    hit is re-validated independently and returned with a full witness.
    """
    name = "nonelementary-kierstead-witness"
    host = petersen_minus_vertex()
    delta = host.max_degree()
    hyp = {"host_class2": classify_cached(host, budget_ms) == 2}
    iid = f"{emit_graph6(host)} exhaustive"
    if not all(hyp.values()):
        return VerificationRecord(name, iid, hyp, None)
    try:
        for e in host.sorted_edges():
            for phi in enumerate_colorings(host, delta, hole=e, budget_ms=budget_ms):
                for path in enumerate_kierstead_paths(phi):
                    shared = elementary_violation(phi, path.vertices)
                    if shared is None:
                        continue
                    # independent re-validation before reporting
                    if kierstead_violation(phi, path) is not None:
                        continue
                    v1, v2 = path.vertices[1], path.vertices[2]
                    witness = {
                        "edge": list(e),
                        "coloring": phi.to_text(),
                        "path": list(path.vertices),
                        "shared_color": shared[2],
                        "shared_between": [shared[0], shared[1]],
                        "inner_degrees": [host.degree(v1), host.degree(v2)],
                    }
                    return VerificationRecord(name, iid, hyp, True, witness)
    except SearchBudgetExceeded:
        return VerificationRecord(name, iid, hyp, None)
    return VerificationRecord(name, iid, hyp, False)
