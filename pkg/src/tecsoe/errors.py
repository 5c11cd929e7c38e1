"""Exception types shared across the compiler stages."""

from __future__ import annotations


class TecsoeError(Exception):
    """Base class for every diagnostic the compiler can raise."""


class LexError(TecsoeError):
    def __init__(self, span, message="unrecognized input"):
        self.span = span
        super().__init__(f"{span}: {message}")


class ParseError(TecsoeError):
    def __init__(self, span, expected, found=None):
        self.span = span
        self.expected = frozenset(expected)
        self.found = found
        want = ", ".join(sorted(self.expected))
        got = f", found {found!r}" if found is not None else ""
        super().__init__(f"{span}: expected one of {{{want}}}{got}")


class ValidationFailed(TecsoeError):
    """Carries a non-empty ValidationReport."""

    def __init__(self, report):
        self.report = report
        super().__init__(str(report))


class ModelError(TecsoeError):
    """Raised by build_model when the AST cannot be turned into a wired system."""

    def __init__(self, kind, message, span=None):
        self.kind = kind
        self.span = span
        where = f"{span}: " if span is not None else ""
        super().__init__(f"{where}{kind}: {message}")


class UnboundCallPort(ModelError):
    def __init__(self, cell, port, span=None):
        self.cell, self.port = cell, port
        super().__init__("UnboundCallPort", f"call port {cell}.{port} is not bound", span)


class MissingAttrValue(ModelError):
    def __init__(self, cell, attr, span=None):
        self.cell, self.attr = cell, attr
        super().__init__("MissingAttrValue", f"attribute {cell}.{attr} has no default and no initializer", span)


class SignatureMismatch(ModelError):
    def __init__(self, join, span=None):
        self.join = join
        super().__init__("SignatureMismatch", f"join {join} connects ports of different signatures", span)


class FlowError(TecsoeError):
    def __init__(self, kind, message, span=None):
        self.kind = kind
        self.span = span
        where = f"{span}: " if span is not None else ""
        super().__init__(f"{where}{kind}: {message}")


class UnknownCellOrEntry(FlowError):
    def __init__(self, target, span=None, detail=""):
        self.target = target
        super().__init__("UnknownCellOrEntry", f"{'.'.join(target)} does not resolve{detail}", span)


class IllegalNesting(FlowError):
    def __init__(self, parent, child, span=None):
        self.parent, self.child = parent, child
        super().__init__("IllegalNesting", f"no join connects {parent} to {child}", span)


class TemplateError(TecsoeError):
    pass
