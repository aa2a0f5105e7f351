"""ASAP list scheduling and circuit cost metrics.

Two gates conflict iff they share a qubit; each gate costs one timestep
and concurrency is unlimited.  A gate is placed at one step past the
latest conflicting predecessor, so depth equals the longest path through
the qubit-conflict DAG.  Ties follow circuit order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuit import Circuit

__all__ = ["Schedule", "Metrics", "asap_schedule", "metrics"]


@dataclass(frozen=True)
class Schedule:
    """Gate indices grouped by timestep, in execution order."""

    timesteps: tuple[tuple[int, ...], ...]

    @property
    def depth(self) -> int:
        return len(self.timesteps)


@dataclass(frozen=True)
class Metrics:
    depth: int
    total_gates: int
    width: int
    max_concurrency: int
    mean_concurrency: float


def asap_schedule(circuit: Circuit) -> Schedule:
    """Greedy as-soon-as-possible placement.

    ``ready[q]`` is the first step at which wire q is free; a gate lands at
    the max over its operands and pushes all of them one step past itself.
    """
    ready = [0] * circuit.width
    steps: list[list[int]] = []
    for idx, g in enumerate(circuit.gates):
        t = 0
        for q in g.operands:
            if ready[q] > t:
                t = ready[q]
        if t == len(steps):
            steps.append([])
        steps[t].append(idx)
        nxt = t + 1
        for q in g.operands:
            ready[q] = nxt
    return Schedule(tuple(tuple(s) for s in steps))


def metrics(circuit: Circuit) -> Metrics:
    """Depth/width/concurrency summary of a circuit under ASAP scheduling."""
    sched = asap_schedule(circuit)
    total = len(circuit.gates)
    depth = sched.depth
    max_conc = max((len(s) for s in sched.timesteps), default=0)
    mean = total / depth if depth else 0.0
    return Metrics(
        depth=depth,
        total_gates=total,
        width=circuit.width,
        max_concurrency=max_conc,
        mean_concurrency=mean,
    )
