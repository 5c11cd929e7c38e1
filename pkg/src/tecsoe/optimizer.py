"""Lock placement: the fully locked first-pass plan and the call-flow optimized plan."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from types import MappingProxyType

from .callflow import compute_access_matrix


class LockType(enum.Enum):
    NONE = "none"
    SEMAPHORE = "semaphore"
    MUTEX = "mutex"


@dataclass(frozen=True)
class LockKind:
    type: LockType
    ceiling: int | None = None

    @property
    def locked(self):
        return self.type is not LockType.NONE

    def __str__(self):
        if self.type is LockType.MUTEX:
            return f"CeilingMutex({self.ceiling})"
        return "BinarySemaphore" if self.type is LockType.SEMAPHORE else "NoLock"


NO_LOCK = LockKind(LockType.NONE)
BINARY_SEMAPHORE = LockKind(LockType.SEMAPHORE)


def ceiling_mutex(ceiling):
    return LockKind(LockType.MUTEX, ceiling)


class Reason(enum.Enum):
    NO_VARS = "NoVars"
    SINGLE_TASK = "SingleTask"
    CHAIN_ELIDED = "ChainElided"
    REQUIRED = "Required"


@dataclass(frozen=True)
class CellLock:
    kind: LockKind
    reason: Reason
    head: str | None = None

    def __str__(self):
        if self.reason is Reason.CHAIN_ELIDED:
            return f"{self.kind}/{self.reason.value}({self.head})"
        return f"{self.kind}/{self.reason.value}"


class Dispatch(enum.Enum):
    FIELD_REMOVED = "FieldRemoved"
    DIRECT_HANDLE = "DirectHandle"
    DYNAMIC_DISPATCH = "DynamicDispatch"


@dataclass(frozen=True)
class DispatchMode:
    mode: Dispatch
    handle: LockType | None = None

    def __str__(self):
        if self.mode is Dispatch.DIRECT_HANDLE:
            return f"DirectHandle({self.handle.value})"
        return self.mode.value


FIELD_REMOVED = DispatchMode(Dispatch.FIELD_REMOVED)
DYNAMIC_DISPATCH = DispatchMode(Dispatch.DYNAMIC_DISPATCH)


def direct_handle(lock_type):
    return DispatchMode(Dispatch.DIRECT_HANDLE, lock_type)


@dataclass(frozen=True)
class LockPlan:
    per_cell: MappingProxyType
    per_celltype: MappingProxyType

    def kind(self, cell):
        return self.per_cell[cell].kind

    def locked_cells(self):
        return sorted(c for c, entry in self.per_cell.items() if entry.kind.locked)

    def report(self, model):
        """One tab-separated line per cell: cell, kind, reason, celltype mode."""
        lines = []
        for cell, entry in self.per_cell.items():
            ct = model.cells[cell].celltype
            reason = entry.reason.value
            if entry.reason is Reason.CHAIN_ELIDED:
                reason = f"{reason}({entry.head})"
            lines.append(f"{cell}\t{entry.kind}\t{reason}\t{ct}:{self.per_celltype[ct]}")
        return "\n".join(lines) + "\n"


def _plan(per_cell, model):
    per_cell = MappingProxyType(dict(sorted(per_cell.items())))
    return LockPlan(per_cell, classify_celltypes(model, per_cell))


def initial_plan(model, flows=None) -> LockPlan:
    """Pass-1 plan: every vars-bearing cell gets a ceiling mutex at the system's top priority."""
    ceiling = min((t.priority for t in flows.tasks), default=1) if flows is not None else 1
    per_cell = {}
    for name, cell in model.cells.items():
        if cell.has_vars:
            per_cell[name] = CellLock(ceiling_mutex(ceiling), Reason.REQUIRED)
        else:
            per_cell[name] = CellLock(NO_LOCK, Reason.NO_VARS)
    return _plan(per_cell, model)


def necessity(matrix, model) -> dict[str, bool]:
    """A cell needs exclusive control iff it has variables and two or more tasks reach it."""
    return {name: cell.has_vars and len(matrix.tasks_of(name)) >= 2
            for name, cell in model.cells.items()}


def select_kind(cell, tasks) -> LockKind:
    """Ceiling mutex for three or more tasks of differing priority, binary semaphore otherwise.

    *tasks* is any collection of TaskDef-like objects with a ``priority``.
    """
    tasks = list(tasks)
    assert len(tasks) >= 2, f"{cell}: lock kind requested for {len(tasks)} accessing task(s)"
    priorities = {t.priority for t in tasks}
    if len(tasks) >= 3 and len(priorities) >= 2:
        return ceiling_mutex(min(priorities))
    return BINARY_SEMAPHORE


def nesting_ancestors(flows):
    """Map each cell to one ancestor-cell tuple (outermost first) per invocation of it."""
    occurrences = {}

    def visit(node, ancestors):
        occurrences.setdefault(node.cell, []).append(ancestors)
        inner = ancestors + (node.cell,)
        for child in node.children:
            visit(child, inner)

    for task in flows.tasks:
        for root in task.body:
            visit(root, ())
    return occurrences


def elide_chains(model, flows, plan: LockPlan) -> LockPlan:
    """Drop the lock of any cell whose every invocation runs inside another locked cell.

    The outermost locked dominator keeps its lock and is recorded as the head.
    Locked dominators are taken from the incoming plan; the outermost one can
    never itself be dominated, so one sweep already is the fixed point.
    """
    locked = set(plan.locked_cells())
    occurrences = nesting_ancestors(flows)
    per_cell = dict(plan.per_cell)
    for cell in sorted(locked):
        chains = occurrences.get(cell)
        if not chains:
            continue
        common = set(chains[0]) & locked
        for chain in chains[1:]:
            common &= set(chain)
        common.discard(cell)
        if not common:
            continue
        head = next(c for c in chains[0] if c in common)
        per_cell[cell] = CellLock(NO_LOCK, Reason.CHAIN_ELIDED, head)

    matrix = None
    for cell, entry in per_cell.items():
        if entry.reason is Reason.CHAIN_ELIDED and entry.head is not None and cell in locked:
            assert per_cell[entry.head].kind.locked, f"chain head {entry.head} lost its lock"
            matrix = matrix or compute_access_matrix(model, flows)
            assert matrix.tasks_of(cell) <= matrix.tasks_of(entry.head)
    return _plan(per_cell, model)


def classify_celltypes(model, per_cell) -> MappingProxyType:
    """Choose how each celltype's lock field is represented from its cells' lock kinds."""
    if isinstance(per_cell, LockPlan):
        per_cell = per_cell.per_cell
    modes = {}
    for ct in model.celltypes:
        kinds = [per_cell[c].kind for c in model.cells_of(ct)]
        types = {k.type for k in kinds}
        if not kinds or types == {LockType.NONE}:
            modes[ct] = FIELD_REMOVED
        elif len(types) == 1:
            modes[ct] = direct_handle(types.pop())
        else:
            modes[ct] = DYNAMIC_DISPATCH
    return MappingProxyType(dict(sorted(modes.items())))


def optimize(model, flows) -> LockPlan:
    """Pass-2 plan: necessity, kind selection, chain elision, then celltype classification."""
    matrix = compute_access_matrix(model, flows)
    needed = necessity(matrix, model)
    tasks = {t.name: t for t in flows.tasks}
    per_cell = {}
    for name, cell in model.cells.items():
        if not cell.has_vars:
            per_cell[name] = CellLock(NO_LOCK, Reason.NO_VARS)
        elif not needed[name]:
            per_cell[name] = CellLock(NO_LOCK, Reason.SINGLE_TASK)
        else:
            accessing = [tasks[t] for t in sorted(matrix.tasks_of(name))]
            per_cell[name] = CellLock(select_kind(name, accessing), Reason.REQUIRED)
    return elide_chains(model, flows, _plan(per_cell, model))
