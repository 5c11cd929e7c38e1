"""Resolved component graph: cells with defaults applied and joins between ports."""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType

from .cdl.validate import ValidationReport
from .errors import MissingAttrValue, SignatureMismatch, UnboundCallPort, ValidationFailed


@dataclass(frozen=True)
class CellInstance:
    name: str
    celltype: str
    attr_values: MappingProxyType
    has_vars: bool


@dataclass(frozen=True, order=True)
class Join:
    caller: tuple[str, str]
    callee: tuple[str, str]
    signature: str

    def __str__(self):
        return f"{self.caller[0]}.{self.caller[1]} -> {self.callee[0]}.{self.callee[1]}"


@dataclass(frozen=True)
class ComponentModel:
    signatures: MappingProxyType
    celltypes: MappingProxyType
    cells: MappingProxyType
    joins: tuple[Join, ...]

    def cells_of(self, celltype):
        return sorted(c.name for c in self.cells.values() if c.celltype == celltype)

    def joins_from(self, cell):
        return [j for j in self.joins if j.caller[0] == cell]

    def entry_signature(self, cell, entry):
        ct = self.celltypes[self.cells[cell].celltype]
        port = next((p for p in ct.entries if p.name == entry), None)
        return None if port is None else self.signatures[port.signature]


def _frozen(mapping):
    return MappingProxyType(dict(sorted(mapping.items())))


def build_model(ast) -> ComponentModel:
    """Resolve a validated AST into a ComponentModel.

    Raises UnboundCallPort, MissingAttrValue or SignatureMismatch. Name-keyed
    content is sorted, so declaration order never shows through.
    """
    sigs = {s.name: s for s in ast.signatures}
    cts = {c.name: c for c in ast.celltypes}
    decls = {c.name: c for c in ast.cells}

    cells = {}
    joins = []
    for cell in sorted(ast.cells, key=lambda c: c.name):
        ct = cts[cell.celltype]
        inits = {i.name: i.value for i in cell.attr_inits}
        values = {}
        for attr in ct.attrs:
            if attr.name in inits:
                values[attr.name] = inits[attr.name]
            elif attr.default is not None:
                values[attr.name] = attr.default
            else:
                raise MissingAttrValue(cell.name, attr.name, cell.span)
        cells[cell.name] = CellInstance(cell.name, ct.name, _frozen(values), bool(ct.vars))

        bound = {b.call_port: b for b in cell.bindings}
        for port in ct.calls:
            b = bound.get(port.name)
            if b is None:
                raise UnboundCallPort(cell.name, port.name, cell.span)
            target_ct = cts[decls[b.target_cell].celltype]
            entry = next(p for p in target_ct.entries if p.name == b.target_entry)
            join = Join((cell.name, port.name), (b.target_cell, b.target_entry), port.signature)
            if entry.signature != port.signature:
                raise SignatureMismatch(join, b.span)
            joins.append(join)

    return ComponentModel(_frozen(sigs), _frozen(cts), _frozen(cells), tuple(sorted(joins)))


def find_cycle(model: ComponentModel):
    """Return one directed cycle of cell names in the join graph, or None."""
    succ = {name: sorted({j.callee[0] for j in model.joins_from(name)}) for name in model.cells}
    WHITE, GREY, BLACK = 0, 1, 2
    color = dict.fromkeys(succ, WHITE)
    for root in succ:
        if color[root] != WHITE:
            continue
        path = [root]
        stack = [iter(succ[root])]
        color[root] = GREY
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                color[path.pop()] = BLACK
                stack.pop()
            elif color[nxt] == GREY:
                return path[path.index(nxt):]
            elif color[nxt] == WHITE:
                color[nxt] = GREY
                path.append(nxt)
                stack.append(iter(succ[nxt]))
    return None


def check_acyclic(model: ComponentModel) -> ValidationReport:
    """Empty report iff the join graph is acyclic; otherwise one witness cycle."""
    report = ValidationReport()
    cycle = find_cycle(model)
    if cycle is not None:
        report.add("JoinCycle", " -> ".join(cycle + cycle[:1]))
    return report


def load_model(text):
    """Parse, validate and resolve CDL text.

    Raises ParseError/LexError for syntax, ValidationFailed for resolution
    problems and ModelError subclasses for wiring problems.
    """
    from .cdl import parse_cdl, validate_ast

    ast = parse_cdl(text)
    report = validate_ast(ast)
    if not report.ok:
        raise ValidationFailed(report)
    model = build_model(ast)
    cycles = check_acyclic(model)
    if not cycles.ok:
        raise ValidationFailed(cycles)
    return model
