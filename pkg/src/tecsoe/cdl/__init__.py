from .ast import (
    AttrDecl, AttrInit, Binding, CdlAst, CellDecl, CelltypeDecl, FuncDecl,
    Param, PortDecl, SignatureDecl, VarDecl, SCALAR_TYPES,
)
from .lexer import Span, Token, tokenize
from .parser import parse_cdl
from .printer import pretty_print
from .validate import ValidationReport, Violation, validate_ast

__all__ = [
    "AttrDecl", "AttrInit", "Binding", "CdlAst", "CellDecl", "CelltypeDecl",
    "FuncDecl", "Param", "PortDecl", "SignatureDecl", "VarDecl", "SCALAR_TYPES",
    "Span", "Token", "tokenize", "parse_cdl", "pretty_print",
    "ValidationReport", "Violation", "validate_ast",
]
