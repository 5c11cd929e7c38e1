"""Language-neutral description of everything the emitters write."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..cdl.printer import format_literal
from ..optimizer import Dispatch, LockType

RUST_TYPES = {
    "int8": "i8", "int16": "i16", "int32": "i32", "int64": "i64",
    "uint8": "u8", "uint16": "u16", "uint32": "u32", "uint64": "u64",
    "bool": "bool", "float32": "f32", "float64": "f64", "char": "u8",
}

HANDLE_TYPES = {
    LockType.MUTEX: "TECSMutexRef",
    LockType.SEMAPHORE: "TECSSemaphoreRef",
}
DUMMY_HANDLE = "TECSDummyExCtrlRef"
DYN_HANDLE = "dyn LockManager + Sync"


def snake(name):
    name = re.sub(r"(?<=[A-Z])(?=[A-Z][a-z])", "_", name)
    return re.sub(r"(?<=[a-z0-9])(?=[A-Z])", "_", name).lower()


def camel(name):
    return name[:1].upper() + name[1:]


def upper(name):
    return snake(name).upper()


class NameTable:
    """Hands out identifiers unique within one namespace, suffixing on collision."""

    def __init__(self):
        self.taken = set()

    def claim(self, wanted):
        name = wanted
        n = 2
        while name in self.taken:
            name = f"{wanted}_{n}"
            n += 1
        self.taken.add(name)
        return name


@dataclass
class ParamGen:
    name: str
    rust_type: str
    direction: str


@dataclass
class FuncGen:
    name: str
    params: list
    ret: str | None


@dataclass
class EntryGen:
    port: str
    struct: str
    signature: str
    trait: str
    functions: list


@dataclass
class CallPortGen:
    port: str
    field: str
    generic: str
    trait: str


@dataclass
class MemberGen:
    name: str
    field: str
    rust_type: str
    value: str | None = None


@dataclass
class BindingGen:
    field: str
    target_cell: str
    target_entry: str
    target_static: str
    target_type: str = ""


@dataclass
class CellGen:
    name: str
    static: str
    var_static: str | None
    lock: "LockObject | None"
    entry_statics: dict
    attrs: list
    vars: list
    bindings: list
    struct_type: str = ""
    entry_types: dict = field(default_factory=dict)


@dataclass
class LockObject:
    cell: str
    static: str
    kind: str  # "mutex", "semaphore" or "dummy"
    handle_type: str
    kernel_id: str | None = None
    ceiling: int | None = None


@dataclass
class CelltypeGen:
    name: str
    struct: str
    module: str
    var_struct: str | None
    sync_struct: str | None
    guard: str
    mode: str  # "field_removed", "direct" or "dynamic"
    lock_field_type: str | None
    call_ports: list
    attrs: list
    vars: list
    entries: list
    cells: list = field(default_factory=list)

    @property
    def has_vars(self):
        return bool(self.vars)

    @property
    def has_lock_field(self):
        return self.mode != "field_removed"

    @property
    def generics(self):
        return ", ".join(f"{p.generic}: {p.trait}" for p in self.call_ports)

    @property
    def generic_args(self):
        return ", ".join(p.generic for p in self.call_ports)


@dataclass
class TaskGen:
    name: str
    kernel_id: str
    body: str
    priority: int


@dataclass
class SignatureGen:
    name: str
    trait: str
    functions: list


@dataclass
class GenerationModel:
    celltypes: list
    signatures: list
    locks: list
    tasks: list
    signatures_module: str = "tecs_signatures"
    instances_module: str = "tecs_instances"
    symbols: dict = field(default_factory=dict)  # generated identifier -> defining module

    def celltype(self, name):
        return next(c for c in self.celltypes if c.name == name)

    def cell(self, name):
        return next(cell for ct in self.celltypes for cell in ct.cells if cell.name == name)

    @property
    def kernel_locks(self):
        return [l for l in self.locks if l.kind != "dummy"]


def _functions(sig):
    funcs = []
    for f in sig.functions:
        params = []
        for p in f.params:
            base = RUST_TYPES[p.type]
            params.append(ParamGen(snake(p.name), base if p.direction == "in" else f"&mut {base}", p.direction))
        funcs.append(FuncGen(f.name, params, None if f.return_type == "void" else RUST_TYPES[f.return_type]))
    return funcs


def _rust_literal(type_name, value):
    if type_name in ("float32", "float64"):
        return format_literal(float(value))
    return format_literal(value)


def build_generation_model(model, plan, flows=None) -> GenerationModel:
    """Map each celltype and cell to emitted names and lock-field layout under *plan*."""
    types = NameTable()
    statics = NameTable()
    modules = NameTable()
    for reserved in ("TECSMutexRef", "TECSSemaphoreRef", "TECSDummyExCtrlRef", "LockManager", "UnsafeCell"):
        types.claim(reserved)
    modules.claim("tecs_signatures")
    modules.claim("tecs_instances")

    signatures = [SignatureGen(name, types.claim(camel(name)), _functions(sig))
                  for name, sig in model.signatures.items()]
    traits = {s.name: s.trait for s in signatures}

    celltypes = []
    locks = []
    entry_structs = {}
    for name, ct in model.celltypes.items():
        struct = types.claim(camel(name))
        mode = plan.per_celltype[name]
        if mode.mode is Dispatch.FIELD_REMOVED:
            mode_name, field_type = "field_removed", None
        elif mode.mode is Dispatch.DIRECT_HANDLE:
            mode_name, field_type = "direct", HANDLE_TYPES[mode.handle]
        else:
            mode_name, field_type = "dynamic", DYN_HANDLE
        entries = []
        for port in ct.entries:
            es = types.claim(f"{camel(port.name)}For{struct}")
            entry_structs[(name, port.name)] = es
            sig = model.signatures[port.signature]
            entries.append(EntryGen(port.name, es, port.signature, traits[port.signature], _functions(sig)))
        call_ports = [CallPortGen(p.name, snake(p.name), types.claim(f"{camel(p.name)}Port"), traits[p.signature])
                      for p in ct.calls]
        celltypes.append(CelltypeGen(
            name=name,
            struct=struct,
            module=modules.claim(snake(name)),
            var_struct=types.claim(f"{struct}Var") if ct.vars else None,
            sync_struct=types.claim(f"Sync{struct}Var") if ct.vars else None,
            guard=types.claim(f"{struct}LockGuard"),
            mode=mode_name,
            lock_field_type=field_type,
            call_ports=call_ports,
            attrs=[MemberGen(a.name, snake(a.name), RUST_TYPES[a.type]) for a in ct.attrs],
            vars=[MemberGen(v.name, snake(v.name), RUST_TYPES[v.type], _rust_literal(v.type, v.default))
                  for v in ct.vars],
            entries=entries,
        ))

    by_name = {c.name: c for c in celltypes}
    cell_statics = {}
    for cell_name in model.cells:
        cell_statics[cell_name] = statics.claim(upper(cell_name))
    entry_statics = {}
    for cell_name, cell in model.cells.items():
        ct = model.celltypes[cell.celltype]
        for port in ct.entries:
            entry_statics[(cell_name, port.name)] = statics.claim(f"{cell_statics[cell_name]}_{upper(port.name)}")

    for cell_name, cell in model.cells.items():
        ctg = by_name[cell.celltype]
        kind = plan.kind(cell_name)
        lock = None
        if kind.locked:
            prefix = "MTX" if kind.type is LockType.MUTEX else "SEM"
            lock = LockObject(cell_name, statics.claim(f"{cell_statics[cell_name]}_EX_CTRL"),
                              kind.type.value, HANDLE_TYPES[kind.type],
                              statics.claim(f"{prefix}_{cell_statics[cell_name]}"), kind.ceiling)
        elif ctg.mode == "dynamic":
            lock = LockObject(cell_name, statics.claim(f"{cell_statics[cell_name]}_EX_CTRL"), "dummy", DUMMY_HANDLE)
        if lock is not None:
            locks.append(lock)
        ct = model.celltypes[cell.celltype]
        bindings = []
        for port in ct.calls:
            j = next(j for j in model.joins_from(cell_name) if j.caller[1] == port.name)
            bindings.append(BindingGen(snake(port.name), j.callee[0], j.callee[1], entry_statics[j.callee]))
        ctg.cells.append(CellGen(
            name=cell_name,
            static=cell_statics[cell_name],
            var_static=statics.claim(f"{cell_statics[cell_name]}_VAR") if ct.vars else None,
            lock=lock,
            entry_statics={p.name: entry_statics[(cell_name, p.name)] for p in ct.entries},
            attrs=[MemberGen(a.name, snake(a.name), RUST_TYPES[a.type],
                             _rust_literal(a.type, cell.attr_values[a.name])) for a in ct.attrs],
            vars=ctg.vars,
            bindings=bindings,
        ))

    cells_by_name = {cell.name: cell for ct in celltypes for cell in ct.cells}

    def concrete(cell_name):
        cell = cells_by_name[cell_name]
        if not cell.struct_type:
            ctg = by_name[model.cells[cell_name].celltype]
            for b in cell.bindings:
                concrete(b.target_cell)
                b.target_type = cells_by_name[b.target_cell].entry_types[b.target_entry]
            args = ", ".join(b.target_type for b in cell.bindings)
            suffix = f"<{args}>" if args else ""
            cell.struct_type = ctg.struct + suffix
            cell.entry_types = {e.port: e.struct + suffix for e in ctg.entries}
        return cell.struct_type

    for name in sorted(cells_by_name):
        concrete(name)

    symbols = {}
    for sig in signatures:
        symbols[sig.trait] = "tecs_signatures"
    for ctg in celltypes:
        for ident in [ctg.struct, ctg.var_struct, ctg.sync_struct, ctg.guard] + [e.struct for e in ctg.entries]:
            if ident:
                symbols[ident] = ctg.module
        for cell in ctg.cells:
            for ident in [cell.static, cell.var_static, *cell.entry_statics.values()]:
                if ident:
                    symbols[ident] = ctg.module
    for lock in locks:
        symbols[lock.static] = "tecs_instances"

    tasks = []
    if flows is not None:
        ids = NameTable()
        for t in sorted(flows.tasks, key=lambda t: t.name):
            tasks.append(TaskGen(t.name, ids.claim(upper(t.name)), f"{snake(t.name)}_body", t.priority))

    locks.sort(key=lambda l: l.static)
    return GenerationModel(celltypes, signatures, locks, tasks, symbols=symbols)
