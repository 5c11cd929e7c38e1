"""Template-driven emission of scaffolding, user stubs and the RTOS configuration."""

from __future__ import annotations

import enum
import os
import re
from dataclasses import dataclass, field
from pathlib import Path

import jinja2

from ..errors import TemplateError
from .genmodel import snake

TEMPLATES_ENV = "TECSOE_TEMPLATES"
GENERATED_MARKER = "@generated by tecsoe; do not edit"
GEN_DIR = "gen"
USER_DIR = "src_user"
CONFIG_NAME = "system.cfg"
STACK_SIZE = "STACK_SIZE"

# identifiers the emitted code takes from outside the generated crate
EXTERNAL_CRATES = {
    "tecs_ex_ctrl": ("LockManager", "TECSDummyExCtrlRef", "TECSMutexRef", "TECSSemaphoreRef"),
    "core::cell": ("UnsafeCell",),
}
KERNEL_CFG_CRATE = "kernel_cfg"

_IDENT = re.compile(r"\b[A-Za-z_][A-Za-z0-9_]*\b")


class FileKind(enum.Enum):
    SCAFFOLDING = "scaffolding"
    USER_STUB = "user_stub"
    RTOS_CONFIG = "rtos_config"
    REPORT = "report"


@dataclass
class EmittedFileSet:
    files: dict = field(default_factory=dict)  # relative path -> text
    kinds: dict = field(default_factory=dict)  # relative path -> FileKind

    def add(self, path, text, kind):
        if path in self.files:
            raise ValueError(f"duplicate output path {path}")
        self.files[path] = text
        self.kinds[path] = kind

    def update(self, other):
        for path, text in other.files.items():
            self.add(path, text, other.kinds[path])
        return self

    def of_kind(self, kind):
        return {p: t for p, t in self.files.items() if self.kinds[p] is kind}

    def __len__(self):
        return len(self.files)

    def write(self, out_dir):
        out_dir = Path(out_dir)
        for path, text in sorted(self.files.items()):
            target = out_dir / path
            target.parent.mkdir(parents=True, exist_ok=True)
            if target.exists() and target.read_text(encoding="utf-8") == text:
                continue
            target.write_text(text, encoding="utf-8")


def template_environment(directory=None):
    directory = directory or os.environ.get(TEMPLATES_ENV)
    if directory:
        loader = jinja2.FileSystemLoader(directory)
    else:
        loader = jinja2.PackageLoader("tecsoe.codegen", "templates")
    return jinja2.Environment(
        loader=loader,
        undefined=jinja2.StrictUndefined,
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
        autoescape=False,
    )


def _render(env, name, **context):
    try:
        return env.get_template(name).render(**context)
    except jinja2.TemplateNotFound as exc:
        raise TemplateError(f"template {exc.name!r} not found") from exc
    except jinja2.UndefinedError as exc:
        raise TemplateError(f"{name}: missing placeholder: {exc.message}") from exc


def _tidy(text):
    # collapse blank-line runs left by conditional template sections
    text = re.sub(r"\n{3,}", "\n\n", text)
    return text.strip("\n") + "\n"


def import_block(gm, text, module, extra=()):
    """`use` lines for every foreign identifier that *text* mentions."""
    names = set(_IDENT.findall(text)) | set(extra)
    crate = {}
    for name in names:
        owner = gm.symbols.get(name)
        if owner is not None and owner != module:
            crate.setdefault(owner, set()).add(name)
    external = {c: sorted(n for n in names if n in members) for c, members in EXTERNAL_CRATES.items()}
    kernel_ids = sorted(n for n in names if n in {l.kernel_id for l in gm.kernel_locks})
    lines = []
    for crate_name, members in sorted(external.items()):
        if members:
            lines.append(f"use {crate_name}::{{{', '.join(members)}}};")
    if kernel_ids:
        lines.append(f"use {KERNEL_CFG_CRATE}::{{{', '.join(kernel_ids)}}};")
    for owner, members in sorted(crate.items()):
        lines.append(f"use crate::{owner}::{{{', '.join(sorted(members))}}};")
    return "\n".join(lines) + ("\n" if lines else "")


def _render_with_imports(env, gm, name, module, header, extra=(), **context):
    body = _render(env, name, header=header, imports="", **context)
    imports = import_block(gm, body, module, extra)
    return _tidy(_render(env, name, header=header, imports=imports, **context))


def emit_scaffolding(gm, templates=None) -> EmittedFileSet:
    """One file per celltype plus the signature-trait and lock-instance files."""
    env = templates or template_environment()
    header = f"// {GENERATED_MARKER}"
    out = EmittedFileSet()
    out.add(f"{GEN_DIR}/{gm.signatures_module}.rs",
            _tidy(_render(env, "signatures.rs.j2", header=header, signatures=gm.signatures)),
            FileKind.SCAFFOLDING)
    for ct in gm.celltypes:
        extra = ("LockManager",) if ct.has_lock_field else ()
        text = _render_with_imports(env, gm, "celltype.rs.j2", ct.module, header, extra, celltype=ct)
        out.add(f"{GEN_DIR}/{ct.module}.rs", text, FileKind.SCAFFOLDING)
    out.add(f"{GEN_DIR}/{gm.instances_module}.rs",
            _render_with_imports(env, gm, "instances.rs.j2", gm.instances_module, header, locks=gm.locks),
            FileKind.SCAFFOLDING)
    return out


def stub_path(ct, entry):
    return f"{USER_DIR}/{ct.module}_{snake(entry.port)}.rs"


def emit_user_stubs(gm, user_root=None, templates=None) -> EmittedFileSet:
    """Stubs for each (celltype, entry port); paths already present under *user_root* are skipped."""
    env = templates or template_environment()
    out = EmittedFileSet()
    for ct in gm.celltypes:
        for entry in ct.entries:
            path = stub_path(ct, entry)
            if user_root is not None and (Path(user_root) / path).exists():
                continue
            # stubs live outside the generated crate modules; import everything they name
            text = _render_with_imports(env, gm, "user_stub.rs.j2", None, "", celltype=ct, entry=entry)
            out.add(path, text, FileKind.USER_STUB)
    return out


def emit_rtos_config(gm, templates=None, stack_size=STACK_SIZE) -> EmittedFileSet:
    env = templates or template_environment()
    locks = sorted(gm.kernel_locks, key=lambda l: l.kernel_id)
    text = _render(env, "system.cfg.j2",
                   header=f"/* {GENERATED_MARKER} */",
                   tasks=sorted(gm.tasks, key=lambda t: t.name),
                   semaphores=[l for l in locks if l.kind == "semaphore"],
                   mutexes=[l for l in locks if l.kind == "mutex"],
                   stack_size=stack_size)
    out = EmittedFileSet()
    out.add(f"{GEN_DIR}/{CONFIG_NAME}", _tidy(text), FileKind.RTOS_CONFIG)
    return out


_DEFINED = re.compile(r"\b(?:struct|trait|static|enum|type|const|fn)\s+([A-Za-z_][A-Za-z0-9_]*)")
_USE = re.compile(r"^use\s+([A-Za-z0-9_:]+)::\{([^}]*)\};", re.M)
_GENERIC = re.compile(r"<([^<>]*)>")
_RUST_BUILTINS = frozenset({"Self", "Sync", "Drop", "Send"})


def undefined_identifiers(file_set: EmittedFileSet):
    """Capitalized identifiers used in emitted Rust files that nothing defines or imports.

    Crate-internal imports must name identifiers defined in the module they
    come from; anything imported from another crate counts as declared
    external by the file header.
    """
    rust = {p: t for p, t in file_set.files.items() if p.endswith(".rs")}
    defined_in = {}
    for path, text in rust.items():
        module = Path(path).stem
        defined_in[module] = set(_DEFINED.findall(text))
        for params in _GENERIC.findall(text):
            for part in params.split(","):
                name, sep, _ = part.partition(":")
                if sep:
                    defined_in[module].add(name.strip())
    problems = []
    for path, text in sorted(rust.items()):
        module = Path(path).stem
        visible = set(defined_in[module]) | _RUST_BUILTINS
        for source, members in _USE.findall(text):
            members = {m.strip() for m in members.split(",") if m.strip()}
            if source.startswith("crate::"):
                owner = source.split("::", 1)[1]
                for m in members - defined_in.get(owner, set()):
                    problems.append((path, m))
            visible |= members
        body = "\n".join(line for line in text.splitlines()
                         if not line.lstrip().startswith(("//", "///", "use ")))
        for name in sorted(set(_IDENT.findall(body))):
            if name[0].isupper() and name not in visible:
                problems.append((path, name))
    return problems
