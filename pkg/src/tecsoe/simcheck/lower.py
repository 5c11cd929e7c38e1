"""Flatten call flows into per-task step lists under a given lock plan."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np


class Op(enum.IntEnum):
    ACQUIRE = 0
    ENTER = 1
    ACCESS = 2
    EXIT = 3
    RELEASE = 4


@dataclass(frozen=True)
class Step:
    op: Op
    target: str

    def __str__(self):
        return f"{self.op.name.capitalize()}({self.target})"


@dataclass(frozen=True)
class SimProgram:
    """Per-task step sequences; locks are named after the cell they protect."""

    tasks: tuple[str, ...]
    priorities: tuple[int, ...]
    steps: tuple[tuple[Step, ...], ...]
    cells: tuple[str, ...]
    vars_cells: frozenset
    locks: tuple[str, ...]

    def arrays(self):
        """Dense tables consumed by the exploration kernel.

        held[t, pc, l] / inside[t, pc, c] describe task t after executing its
        first pc steps; ops/args are padded with -1 past each task's end.
        """
        n_tasks = len(self.tasks)
        width = max((len(s) for s in self.steps), default=0)
        cell_ix = {c: i for i, c in enumerate(self.cells)}
        lock_ix = {l: i for i, l in enumerate(self.locks)}
        ops = np.full((n_tasks, max(width, 1)), -1, dtype=np.int64)
        args = np.full((n_tasks, max(width, 1)), -1, dtype=np.int64)
        lens = np.zeros(n_tasks, dtype=np.int64)
        held = np.zeros((n_tasks, width + 1, max(len(self.locks), 1)), dtype=np.bool_)
        inside = np.zeros((n_tasks, width + 1, max(len(self.cells), 1)), dtype=np.bool_)
        for t, steps in enumerate(self.steps):
            lens[t] = len(steps)
            cur_held = np.zeros(held.shape[2], dtype=np.bool_)
            cur_inside = np.zeros(inside.shape[2], dtype=np.int64)
            for pc, step in enumerate(steps):
                ops[t, pc] = int(step.op)
                if step.op in (Op.ACQUIRE, Op.RELEASE):
                    args[t, pc] = lock_ix[step.target]
                    cur_held[lock_ix[step.target]] = step.op is Op.ACQUIRE
                else:
                    c = cell_ix[step.target]
                    args[t, pc] = c
                    if step.op is Op.ENTER:
                        cur_inside[c] += 1
                    elif step.op is Op.EXIT:
                        cur_inside[c] -= 1
                held[t, pc + 1] = cur_held
                inside[t, pc + 1] = cur_inside > 0
        has_vars = np.array([c in self.vars_cells for c in self.cells] or [False], dtype=np.bool_)
        return ops, args, lens, held, inside, has_vars


def _lower_node(node, model, plan, out):
    locked = plan.kind(node.cell).locked
    if locked:
        out.append(Step(Op.ACQUIRE, node.cell))
    out.append(Step(Op.ENTER, node.cell))
    if model.cells[node.cell].has_vars:
        out.append(Step(Op.ACCESS, node.cell))
    for child in node.children:
        _lower_node(child, model, plan, out)
    out.append(Step(Op.EXIT, node.cell))
    if locked:
        out.append(Step(Op.RELEASE, node.cell))


def lower_to_sim(model, flows, plan) -> SimProgram:
    """Lower each task's flow tree; lock steps appear only around locked cells."""
    steps = []
    for task in flows.tasks:
        out = []
        for root in task.body:
            _lower_node(root, model, plan, out)
        steps.append(tuple(out))
    cells = tuple(sorted(model.cells))
    return SimProgram(
        tasks=tuple(t.name for t in flows.tasks),
        priorities=tuple(t.priority for t in flows.tasks),
        steps=tuple(steps),
        cells=cells,
        vars_cells=frozenset(c for c in cells if model.cells[c].has_vars),
        locks=tuple(plan.locked_cells()),
    )
