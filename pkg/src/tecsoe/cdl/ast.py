"""Syntax tree for the CDL subset.

Spans are excluded from equality so two trees parsed from differently
formatted text compare equal when their declarations match.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .lexer import Span

SCALAR_TYPES = (
    "int8", "int16", "int32", "int64",
    "uint8", "uint16", "uint32", "uint64",
    "bool", "float32", "float64", "char",
)

DIRECTIONS = ("in", "out", "inout")

Literal = Union[int, float, bool]


def _span():
    return field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Param:
    name: str
    type: str
    direction: str = "in"
    span: Span = _span()


@dataclass(frozen=True)
class FuncDecl:
    name: str
    return_type: str
    params: tuple[Param, ...] = ()
    span: Span = _span()


@dataclass(frozen=True)
class SignatureDecl:
    name: str
    functions: tuple[FuncDecl, ...]
    span: Span = _span()

    def function(self, name):
        return next((f for f in self.functions if f.name == name), None)


@dataclass(frozen=True)
class PortDecl:
    name: str
    signature: str
    span: Span = _span()


@dataclass(frozen=True)
class AttrDecl:
    name: str
    type: str
    default: Literal | None = None
    span: Span = _span()


@dataclass(frozen=True)
class VarDecl:
    name: str
    type: str
    default: Literal
    span: Span = _span()


@dataclass(frozen=True)
class CelltypeDecl:
    name: str
    entries: tuple[PortDecl, ...] = ()
    calls: tuple[PortDecl, ...] = ()
    attrs: tuple[AttrDecl, ...] = ()
    vars: tuple[VarDecl, ...] = ()
    span: Span = _span()


@dataclass(frozen=True)
class Binding:
    call_port: str
    target_cell: str
    target_entry: str
    span: Span = _span()


@dataclass(frozen=True)
class AttrInit:
    name: str
    value: Literal
    span: Span = _span()


@dataclass(frozen=True)
class CellDecl:
    celltype: str
    name: str
    bindings: tuple[Binding, ...] = ()
    attr_inits: tuple[AttrInit, ...] = ()
    span: Span = _span()


@dataclass(frozen=True)
class CdlAst:
    signatures: tuple[SignatureDecl, ...] = ()
    celltypes: tuple[CelltypeDecl, ...] = ()
    cells: tuple[CellDecl, ...] = ()
    # textual order across all three kinds, as (kind, index) pairs
    order: tuple[tuple[str, int], ...] = field(default=(), compare=False, repr=False)

    def declarations(self):
        """Yield top-level declarations in source order."""
        pools = {"signature": self.signatures, "celltype": self.celltypes, "cell": self.cells}
        if self.order:
            for kind, i in self.order:
                yield pools[kind][i]
        else:
            yield from self.signatures
            yield from self.celltypes
            yield from self.cells
