"""Name resolution and type checks over a parsed CdlAst."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .ast import DIRECTIONS, SCALAR_TYPES

INT_RANGES = {
    "int8": (-(2**7), 2**7 - 1),
    "int16": (-(2**15), 2**15 - 1),
    "int32": (-(2**31), 2**31 - 1),
    "int64": (-(2**63), 2**63 - 1),
    "uint8": (0, 2**8 - 1),
    "uint16": (0, 2**16 - 1),
    "uint32": (0, 2**32 - 1),
    "uint64": (0, 2**64 - 1),
    "char": (-(2**7), 2**8 - 1),
}


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    span: object = None

    def __str__(self):
        where = f"{self.span}: " if self.span is not None else ""
        return f"{where}{self.kind}: {self.message}"


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    def add(self, kind, message, span=None):
        self.violations.append(Violation(kind, message, span))

    @property
    def ok(self):
        return not self.violations

    def kinds(self):
        return [v.kind for v in self.violations]

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def __str__(self):
        return "\n".join(str(v) for v in self.violations)


def literal_fits(type_name, value):
    """Whether a literal may initialize a member of the given scalar type."""
    if type_name == "bool":
        return isinstance(value, bool)
    if isinstance(value, bool):
        return False
    if type_name in ("float32", "float64"):
        return isinstance(value, (int, float))
    if isinstance(value, float):
        return False
    lo, hi = INT_RANGES[type_name]
    return lo <= value <= hi


def _duplicates(report, items, what, kind="DuplicateName"):
    counts = Counter(name for name, _ in items)
    seen = set()
    for name, span in items:
        if counts[name] > 1:
            if name in seen:
                report.add(kind, f"{what} {name!r} declared more than once", span)
            seen.add(name)


def validate_ast(ast) -> ValidationReport:
    """Collect every resolution and typing violation; an empty report means the AST resolves."""
    report = ValidationReport()

    _duplicates(report, [(d.name, d.span) for d in ast.declarations()], "top-level name")

    sigs = {s.name: s for s in ast.signatures}
    cts = {c.name: c for c in ast.celltypes}
    cell_names = {c.name: c for c in ast.cells}

    def check_type(t, span, allow_void=False):
        if t in SCALAR_TYPES or (allow_void and t == "void"):
            return True
        report.add("UnknownType", f"{t!r} is not a scalar type", span)
        return False

    for sig in ast.signatures:
        if not sig.functions:
            report.add("EmptySignature", f"signature {sig.name!r} declares no functions", sig.span)
        _duplicates(report, [(f.name, f.span) for f in sig.functions], f"function in {sig.name}")
        for f in sig.functions:
            check_type(f.return_type, f.span, allow_void=True)
            _duplicates(report, [(p.name, p.span) for p in f.params], f"parameter of {sig.name}.{f.name}")
            for p in f.params:
                check_type(p.type, p.span)
                if p.direction not in DIRECTIONS:
                    report.add("BadDirection", f"{p.direction!r}", p.span)

    for ct in ast.celltypes:
        members = [(p.name, p.span) for p in ct.entries + ct.calls]
        members += [(a.name, a.span) for a in ct.attrs] + [(v.name, v.span) for v in ct.vars]
        _duplicates(report, members, f"member of {ct.name}")
        for port in ct.entries + ct.calls:
            if port.signature not in sigs:
                report.add("UnknownSignature", f"port {ct.name}.{port.name} uses undeclared signature {port.signature!r}", port.span)
        for member in ct.attrs + ct.vars:
            if check_type(member.type, member.span) and member.default is not None:
                if not literal_fits(member.type, member.default):
                    report.add("TypeMismatch", f"{ct.name}.{member.name}: literal {member.default!r} does not fit {member.type}", member.span)

    for cell in ast.cells:
        ct = cts.get(cell.celltype)
        if ct is None:
            report.add("UnknownCelltype", f"cell {cell.name!r} instantiates undeclared celltype {cell.celltype!r}", cell.span)
            continue
        _duplicates(report, [(b.call_port, b.span) for b in cell.bindings], f"binding in {cell.name}", "DuplicateBinding")
        _duplicates(report, [(i.name, i.span) for i in cell.attr_inits], f"initializer in {cell.name}", "DuplicateInit")
        calls = {p.name: p for p in ct.calls}
        for b in cell.bindings:
            if b.call_port not in calls:
                report.add("UnknownCallPort", f"{ct.name} has no call port {b.call_port!r}", b.span)
                continue
            target = cell_names.get(b.target_cell)
            if target is None:
                report.add("UnknownCell", f"binding {cell.name}.{b.call_port} targets undeclared cell {b.target_cell!r}", b.span)
                continue
            target_ct = cts.get(target.celltype)
            if target_ct is not None and b.target_entry not in {p.name for p in target_ct.entries}:
                report.add("UnknownEntryPort", f"cell {b.target_cell!r} has no entry port {b.target_entry!r}", b.span)
        attrs = {a.name: a for a in ct.attrs}
        for init in cell.attr_inits:
            attr = attrs.get(init.name)
            if attr is None:
                report.add("UnknownAttr", f"{ct.name} has no attribute {init.name!r}", init.span)
            elif attr.type in SCALAR_TYPES and not literal_fits(attr.type, init.value):
                report.add("TypeMismatch", f"{cell.name}.{init.name}: literal {init.value!r} does not fit {attr.type}", init.span)
    return report
