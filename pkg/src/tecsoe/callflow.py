"""Per-task call flows and the cell/task access matrix derived from them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from types import MappingProxyType

from .cdl.lexer import Span, tokenize
from .cdl.parser import TokenCursor
from .errors import FlowError, IllegalNesting, UnknownCellOrEntry

FLOW_KEYWORDS = frozenset({"task", "priority"})


@dataclass(frozen=True)
class FlowNode:
    cell: str
    entry: str
    function: str
    children: tuple["FlowNode", ...] = ()
    span: Span = field(default=None, compare=False, repr=False)

    @property
    def target(self):
        return (self.cell, self.entry, self.function)

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()


@dataclass(frozen=True)
class TaskDef:
    name: str
    priority: int
    body: tuple[FlowNode, ...] = ()
    span: Span = field(default=None, compare=False, repr=False)

    def nodes(self):
        for root in self.body:
            yield from root.walk()


@dataclass(frozen=True)
class CallFlowSet:
    tasks: tuple[TaskDef, ...]

    def task(self, name):
        return next(t for t in self.tasks if t.name == name)

    @property
    def priorities(self):
        return {t.name: t.priority for t in self.tasks}

    def node_count(self):
        return sum(1 for t in self.tasks for _ in t.nodes())


@dataclass(frozen=True)
class AccessMatrix:
    access: MappingProxyType
    invocation_count: MappingProxyType

    def tasks_of(self, cell):
        return self.access.get(cell, frozenset())


def _parse_invocation(cur):
    first = cur.expect("ident")
    cur.expect("dot")
    entry = cur.expect("ident").lexeme
    cur.expect("dot")
    func = cur.expect("ident").lexeme
    children = []
    if cur.accept("lbrace"):
        while not cur.at("rbrace"):
            if not cur.at("ident"):
                cur.fail({"ident", "rbrace"})
            children.append(_parse_invocation(cur))
        cur.expect("rbrace")
    cur.accept("semi")
    return FlowNode(first.lexeme, entry, func, tuple(children), span=cur.span_from(first))


def parse_flow_text(text):
    """Syntax-only parse of a flow file into unresolved TaskDefs."""
    cur = TokenCursor(text, tokenize(text, FLOW_KEYWORDS))
    tasks = []
    while cur.peek() is not None:
        first = cur.expect("kw", "task")
        name = cur.expect("ident").lexeme
        cur.expect("kw", "priority")
        prio_tok = cur.expect("int")
        cur.expect("lbrace")
        body = []
        while not cur.at("rbrace"):
            if not cur.at("ident"):
                cur.fail({"ident", "rbrace"})
            body.append(_parse_invocation(cur))
        cur.expect("rbrace")
        tasks.append(TaskDef(name, int(prio_tok.lexeme), tuple(body), span=cur.span_from(first)))
    return tasks


def _resolve(model, node, parent):
    cell = model.cells.get(node.cell)
    sig = model.entry_signature(node.cell, node.entry) if cell is not None else None
    if sig is None:
        raise UnknownCellOrEntry(node.target, node.span)
    if sig.function(node.function) is None:
        raise UnknownCellOrEntry(node.target, node.span, f" (signature {sig.name} has no function {node.function})")
    if parent is not None:
        joined = any(j.callee == (node.cell, node.entry) for j in model.joins_from(parent.cell))
        if not joined:
            raise IllegalNesting(parent.cell, f"{node.cell}.{node.entry}", node.span)
    for child in node.children:
        _resolve(model, child, node)


def parse_callflow(text: str, model) -> CallFlowSet:
    """Parse flow text and check every invocation against the component model."""
    tasks = parse_flow_text(text)
    if not tasks:
        raise FlowError("NoTasks", "flow file declares no tasks")
    seen = set()
    for task in tasks:
        if task.name in seen:
            raise FlowError("DuplicateTask", f"task {task.name!r} declared more than once", task.span)
        seen.add(task.name)
        if task.priority < 1:
            raise FlowError("BadPriority", f"task {task.name!r} has priority {task.priority}; must be >= 1", task.span)
        for root in task.body:
            _resolve(model, root, None)
    return CallFlowSet(tuple(tasks))


def compute_access_matrix(model, flows: CallFlowSet) -> AccessMatrix:
    counts = Counter()
    for task in flows.tasks:
        for node in task.nodes():
            counts[(node.cell, task.name)] += 1
    access = {name: set() for name in model.cells}
    for (cell, task), n in counts.items():
        if n > 0:
            access[cell].add(task)
    return AccessMatrix(
        MappingProxyType({c: frozenset(ts) for c, ts in sorted(access.items())}),
        MappingProxyType(dict(sorted(counts.items()))),
    )
