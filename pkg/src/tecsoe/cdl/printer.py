"""Canonical text rendering of a CdlAst (inverse of parse_cdl up to formatting)."""

from __future__ import annotations


def format_literal(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        text = repr(value)
        if "." not in text:
            mantissa, _, exponent = text.partition("e")
            text = f"{mantissa}.0e{exponent}" if exponent else f"{mantissa}.0"
        return text
    return str(value)


def _function(f):
    params = ", ".join(f"{p.direction} {p.type} {p.name}" for p in f.params) or "void"
    return f"    {f.return_type} {f.name}({params});"


def pretty_print(ast) -> str:
    out = []
    for decl in ast.declarations():
        kind = type(decl).__name__
        if kind == "SignatureDecl":
            out.append(f"signature {decl.name} {{")
            out.extend(_function(f) for f in decl.functions)
            out.append("};")
        elif kind == "CelltypeDecl":
            out.append(f"celltype {decl.name} {{")
            out.extend(f"    entry {p.signature} {p.name};" for p in decl.entries)
            out.extend(f"    call {p.signature} {p.name};" for p in decl.calls)
            if decl.attrs:
                out.append("    attr {")
                for a in decl.attrs:
                    init = "" if a.default is None else f" = {format_literal(a.default)}"
                    out.append(f"        {a.type} {a.name}{init};")
                out.append("    };")
            if decl.vars:
                out.append("    var {")
                out.extend(f"        {v.type} {v.name} = {format_literal(v.default)};" for v in decl.vars)
                out.append("    };")
            out.append("};")
        else:
            out.append(f"cell {decl.celltype} {decl.name} {{")
            out.extend(f"    {b.call_port} = {b.target_cell}.{b.target_entry};" for b in decl.bindings)
            out.extend(f"    {i.name} = {format_literal(i.value)};" for i in decl.attr_inits)
            out.append("};")
        out.append("")
    return "\n".join(out)
