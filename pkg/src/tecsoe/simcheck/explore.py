"""Race, deadlock and lock-overhead reports over a lowered program."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .kernels import explore_kernel
from .lower import Op, SimProgram

DEFAULT_STATE_BOUND = 10**6


class BoundExceeded(Exception):
    def __init__(self, states_visited):
        self.states_visited = states_visited
        super().__init__(f"state bound exceeded after {states_visited} states")


@dataclass(frozen=True)
class Race:
    cell: str
    tasks: tuple[str, str]  # (task already inside, task entering)
    trace: tuple[tuple[str, object], ...]


@dataclass(frozen=True)
class Deadlock:
    cycle: tuple[str, ...]
    trace: tuple[tuple[str, object], ...]


@dataclass(frozen=True)
class OverheadReport:
    total: int
    per_cell: dict

    def __str__(self):
        cells = ", ".join(f"{c}x{n}" for c, n in sorted(self.per_cell.items()))
        return f"{self.total} acquire(s)" + (f" ({cells})" if cells else "")


@dataclass
class ExploreResult:
    states: int
    transitions: int
    interleavings: float
    inconclusive: bool
    races: list = field(default_factory=list)
    deadlocks: list = field(default_factory=list)
    overhead: OverheadReport | None = None

    @property
    def clean(self):
        return not (self.races or self.deadlocks or self.inconclusive)

    def render(self):
        lines = [
            f"states\t{self.states}",
            f"transitions\t{self.transitions}",
            f"interleavings\t{self.interleavings:.0f}",
            f"inconclusive\t{'yes' if self.inconclusive else 'no'}",
            f"races\t{len(self.races)}",
        ]
        for r in self.races:
            lines.append(f"race\t{r.cell}\t{r.tasks[0]},{r.tasks[1]}\t{format_trace(r.trace)}")
        lines.append(f"deadlocks\t{len(self.deadlocks)}")
        for d in self.deadlocks:
            lines.append(f"deadlock\t{'->'.join(d.cycle)}\t{format_trace(d.trace)}")
        if self.overhead is not None:
            lines.append(f"acquires\t{self.overhead.total}")
            for cell, n in sorted(self.overhead.per_cell.items()):
                lines.append(f"acquire\t{cell}\t{n}")
        return "\n".join(lines) + "\n"


def format_trace(trace):
    return " ".join(f"{task}:{step}" for task, step in trace)


def state_strides(program: SimProgram):
    strides = []
    acc = 1
    for steps in program.steps:
        strides.append(acc)
        acc *= len(steps) + 1
    if acc >= 2**62:
        raise ValueError(f"state space of {acc} pc vectors does not fit a 64-bit state code")
    return np.array(strides or [1], dtype=np.int64)


def _trace_to(state, parent, parent_task, program, counters=None):
    tasks = []
    while parent[state] >= 0:
        tasks.append(int(parent_task[state]))
        state = int(parent[state])
    tasks.reverse()
    pcs = [0] * len(program.tasks)
    trace = []
    for t in tasks:
        trace.append((program.tasks[t], program.steps[t][pcs[t]]))
        pcs[t] += 1
    return trace, pcs


def _waits_for_cycle(program, pcs):
    holders = {}
    for t, steps in enumerate(program.steps):
        held = set()
        for step in steps[: pcs[t]]:
            if step.op is Op.ACQUIRE:
                held.add(step.target)
            elif step.op is Op.RELEASE:
                held.discard(step.target)
        for lock in held:
            holders[lock] = t
    waits = {}
    for t, steps in enumerate(program.steps):
        if pcs[t] < len(steps) and steps[pcs[t]].op is Op.ACQUIRE:
            owner = holders.get(steps[pcs[t]].target)
            if owner is not None and owner != t:
                waits[t] = owner
    for start in sorted(waits):
        seen = []
        t = start
        while t in waits and t not in seen:
            seen.append(t)
            t = waits[t]
        if t in seen:
            return tuple(program.tasks[u] for u in seen[seen.index(t):])
    return tuple(program.tasks[t] for t in sorted(waits))


def explore(program: SimProgram, state_bound=DEFAULT_STATE_BOUND, backend=None, strict=False) -> ExploreResult:
    """Enumerate every interleaving of the program's tasks with blocking acquires.

    A race is a step where one task enters a vars-bearing cell while another
    task is still inside it. Hitting *state_bound* marks the result
    inconclusive, or raises BoundExceeded when *strict*.
    """
    if state_bound <= 0:
        raise ValueError("state_bound must be positive")
    ops, args, lens, held, inside, has_vars = program.arrays()
    out = explore_kernel(ops, args, lens, held, inside, has_vars,
                         state_strides(program), np.int64(state_bound), backend=backend)
    n_states, n_trans, paths, inconclusive, races, deadlocks, parent, parent_task = out
    if inconclusive and strict:
        raise BoundExceeded(int(n_states))

    race_reports = []
    for cell, inside_task, entering, state in races.tolist():
        trace, pcs = _trace_to(state, parent, parent_task, program)
        trace.append((program.tasks[entering], program.steps[entering][pcs[entering]]))
        race_reports.append(Race(program.cells[cell],
                                 (program.tasks[inside_task], program.tasks[entering]),
                                 tuple(trace)))
    deadlock_reports = []
    for state in deadlocks.tolist():
        trace, pcs = _trace_to(state, parent, parent_task, program)
        deadlock_reports.append(Deadlock(_waits_for_cycle(program, pcs), tuple(trace)))

    return ExploreResult(int(n_states), int(n_trans), float(paths), bool(inconclusive),
                         race_reports, deadlock_reports, count_lock_ops(program))


def count_lock_ops(program: SimProgram) -> OverheadReport:
    """Static count of Acquire steps, in total and per protected cell."""
    per_cell = Counter(step.target for steps in program.steps for step in steps if step.op is Op.ACQUIRE)
    return OverheadReport(sum(per_cell.values()), dict(sorted(per_cell.items())))


def compare_overhead(pass1: OverheadReport, pass2: OverheadReport):
    """Acquire-count deltas between the fully locked and optimized programs."""
    cells = sorted(set(pass1.per_cell) | set(pass2.per_cell))
    return {
        "pass1": pass1.total,
        "pass2": pass2.total,
        "removed": pass1.total - pass2.total,
        "per_cell": {c: (pass1.per_cell.get(c, 0), pass2.per_cell.get(c, 0)) for c in cells},
    }


class SimState:
    """Step-by-step executor used to replay witness traces."""

    def __init__(self, program: SimProgram):
        self.program = program
        self.pcs = {t: 0 for t in program.tasks}
        self.holder = {}
        self.inside = {t: Counter() for t in program.tasks}
        self.trace = []

    def next_step(self, task):
        t = self.program.tasks.index(task)
        steps = self.program.steps[t]
        return steps[self.pcs[task]] if self.pcs[task] < len(steps) else None

    def enabled(self, task):
        step = self.next_step(task)
        if step is None:
            return False
        if step.op is Op.ACQUIRE:
            return self.holder.get(step.target) in (None,)
        return True

    def racing_with(self, task):
        """Tasks already inside the cell that *task* is about to enter."""
        step = self.next_step(task)
        if step is None or step.op is not Op.ENTER or step.target not in self.program.vars_cells:
            return []
        return [u for u in self.program.tasks if u != task and self.inside[u][step.target] > 0]

    def step(self, task):
        if not self.enabled(task):
            raise RuntimeError(f"{task} cannot step from {self.pcs[task]}")
        step = self.next_step(task)
        if step.op is Op.ACQUIRE:
            self.holder[step.target] = task
        elif step.op is Op.RELEASE:
            assert self.holder.get(step.target) == task
            del self.holder[step.target]
        elif step.op is Op.ENTER:
            self.inside[task][step.target] += 1
        elif step.op is Op.EXIT:
            self.inside[task][step.target] -= 1
        self.pcs[task] += 1
        self.trace.append((task, step))
        return step

    def final(self):
        return all(self.next_step(t) is None for t in self.program.tasks)

    def deadlocked(self):
        return not self.final() and not any(self.enabled(t) for t in self.program.tasks)


def replay_race(program, race: Race) -> bool:
    """Re-execute a race witness; true iff its last step enters the cell while the other task is inside."""
    state = SimState(program)
    *prefix, (task, step) = race.trace
    for t, expected in prefix:
        if state.step(t) != expected:
            return False
    return (state.next_step(task) == step and step.target == race.cell
            and race.tasks[0] in state.racing_with(task))


def replay_deadlock(program, deadlock: Deadlock) -> bool:
    state = SimState(program)
    for t, expected in deadlock.trace:
        if state.step(t) != expected:
            return False
    return state.deadlocked()
