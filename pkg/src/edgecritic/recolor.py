"""Recoloring scripts: small step vocabulary plus a validating executor.

Every step must leave a proper partial coloring; the executor raises at the
first step whose precondition fails, reporting the step index and reason.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import (
    ColoringError,
    PartialEdgeColoring,
    color_uncolored,
    kempe_swap,
    ray_swap,
    recolor_edge,
    slide_uncolored,
    subchain_swap,
)
from .graphs import Edge, edge_key


@dataclass(frozen=True)
class RecolorEdge:
    """Change one colored edge from `frm` to `to`."""

    edge: Edge
    frm: int
    to: int


@dataclass(frozen=True)
class ColorEdge:
    """Give the unique uncolored edge a color."""

    edge: Edge
    color: int


@dataclass(frozen=True)
class SlideUncolored:
    """Move the hole: give the current hole `new_hole`'s color, uncolor `new_hole`."""

    new_hole: Edge


@dataclass(frozen=True)
class SwapChainAt:
    """Swap the whole two-color chain through `vertex`."""

    vertex: int
    alpha: int
    beta: int


@dataclass(frozen=True)
class SwapSubchain:
    """Swap the segment of the chain between two of its vertices."""

    x: int
    y: int
    alpha: int
    beta: int


@dataclass(frozen=True)
class SwapRay:
    """Swap the chain segment leaving `x` along the edge toward `via`."""

    x: int
    via: int
    alpha: int
    beta: int


Step = RecolorEdge | ColorEdge | SlideUncolored | SwapChainAt | SwapSubchain | SwapRay


class ScriptStepError(ColoringError):
    def __init__(self, step_index: int, step: Step, reason: str):
        self.step_index = step_index
        self.step = step
        self.reason = reason
        super().__init__(f"step {step_index} ({type(step).__name__}): {reason}")


@dataclass(frozen=True)
class ScriptResult:
    final: PartialEdgeColoring
    trace: tuple[PartialEdgeColoring, ...]  # trace[0] is the input state


def apply_step(coloring: PartialEdgeColoring, step: Step) -> PartialEdgeColoring:
    if isinstance(step, RecolorEdge):
        u, v = step.edge
        have = coloring.color_of(u, v)
        if have != step.frm:
            raise ColoringError(
                f"edge ({u}, {v}) carries color {have}, expected {step.frm}")
        return recolor_edge(coloring, u, v, step.to)
    if isinstance(step, ColorEdge):
        if coloring.uncolored != edge_key(*step.edge):
            raise ColoringError(f"uncolored edge is {coloring.uncolored}, not {step.edge}")
        return color_uncolored(coloring, step.color)
    if isinstance(step, SlideUncolored):
        u, v = step.new_hole
        return slide_uncolored(coloring, coloring.color_of(u, v), step.new_hole)
    if isinstance(step, SwapChainAt):
        return kempe_swap(coloring, step.vertex, step.alpha, step.beta)
    if isinstance(step, SwapSubchain):
        return subchain_swap(coloring, step.x, step.y, step.alpha, step.beta)
    if isinstance(step, SwapRay):
        return ray_swap(coloring, step.x, step.via, step.alpha, step.beta)
    raise ColoringError(f"unknown step {step!r}")


def execute_script(coloring: PartialEdgeColoring,
                   steps: list[Step] | tuple[Step, ...]) -> ScriptResult:
    trace = [coloring]
    state = coloring
    for i, step in enumerate(steps):
        try:
            state = apply_step(state, step)
        except ColoringError as exc:
            raise ScriptStepError(i, step, str(exc)) from exc
        trace.append(state)
    return ScriptResult(state, tuple(trace))
