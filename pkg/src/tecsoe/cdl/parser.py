"""Recursive-descent parser for the CDL subset."""

from __future__ import annotations

from ..errors import ParseError
from .ast import (
    DIRECTIONS, AttrDecl, AttrInit, Binding, CdlAst, CellDecl, CelltypeDecl,
    FuncDecl, Param, PortDecl, SignatureDecl, VarDecl,
)
from .lexer import CDL_KEYWORDS, Span, Token, tokenize

LITERAL_KINDS = ("int", "float", "bool")


def literal_value(tok: Token):
    if tok.kind == "int":
        return int(tok.lexeme)
    if tok.kind == "float":
        return float(tok.lexeme)
    return tok.lexeme == "true"


class TokenCursor:
    """Token stream with one-token lookahead and span bookkeeping."""

    def __init__(self, text, tokens):
        self.tokens = tokens
        self.pos = 0
        end = len(text)
        line = text.count("\n") + 1
        col = end - (text.rfind("\n") + 1) + 1
        self.eof = Span(end, end, line, col)

    def peek(self, ahead=0):
        i = self.pos + ahead
        return self.tokens[i] if i < len(self.tokens) else None

    def at(self, kind, lexeme=None, ahead=0):
        tok = self.peek(ahead)
        return tok is not None and tok.kind == kind and (lexeme is None or tok.lexeme == lexeme)

    def fail(self, expected):
        tok = self.peek()
        if tok is None:
            raise ParseError(self.eof, expected, "end of input")
        raise ParseError(tok.span, expected, tok.lexeme)

    def expect(self, kind, lexeme=None):
        if not self.at(kind, lexeme):
            if kind == "semi" and self.pos > 0:
                # a missing terminator belongs to the line it should have ended
                prev = self.tokens[self.pos - 1].span
                at = Span(prev.end, prev.end, prev.line, prev.col + prev.end - prev.start)
                tok = self.peek()
                raise ParseError(at, {"semi"}, tok.lexeme if tok else "end of input")
            self.fail({lexeme if lexeme else kind})
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def accept(self, kind, lexeme=None):
        if self.at(kind, lexeme):
            return self.expect(kind, lexeme)
        return None

    def literal(self):
        tok = self.peek()
        if tok is None or tok.kind not in LITERAL_KINDS:
            self.fail(set(LITERAL_KINDS))
        self.pos += 1
        return literal_value(tok), tok

    def span_from(self, first: Token):
        last = self.tokens[self.pos - 1]
        return Span(first.span.start, last.span.end, first.span.line, first.span.col)


class CdlParser:
    def __init__(self, text):
        self.cur = TokenCursor(text, tokenize(text, CDL_KEYWORDS))

    def parse(self) -> CdlAst:
        sigs, cts, cells, order = [], [], [], []
        cur = self.cur
        while cur.peek() is not None:
            if cur.at("kw", "signature"):
                order.append(("signature", len(sigs)))
                sigs.append(self.signature())
            elif cur.at("kw", "celltype"):
                order.append(("celltype", len(cts)))
                cts.append(self.celltype())
            elif cur.at("kw", "cell"):
                order.append(("cell", len(cells)))
                cells.append(self.cell())
            else:
                cur.fail({"signature", "celltype", "cell"})
        return CdlAst(tuple(sigs), tuple(cts), tuple(cells), tuple(order))

    def type_name(self):
        tok = self.cur.accept("kw", "void") or self.cur.accept("ident")
        if tok is None:
            self.cur.fail({"ident", "void"})
        return tok

    def signature(self):
        cur = self.cur
        first = cur.expect("kw", "signature")
        name = cur.expect("ident").lexeme
        cur.expect("lbrace")
        funcs = []
        while not cur.at("rbrace"):
            if cur.peek() is None:
                cur.fail({"rbrace", "ident", "void"})
            funcs.append(self.function())
        cur.expect("rbrace")
        cur.expect("semi")
        return SignatureDecl(name, tuple(funcs), span=cur.span_from(first))

    def function(self):
        cur = self.cur
        rtype = self.type_name()
        name = cur.expect("ident").lexeme
        cur.expect("lparen")
        params = []
        if not cur.accept("kw", "void"):
            params.append(self.param())
            while cur.accept("comma"):
                params.append(self.param())
        cur.expect("rparen")
        cur.expect("semi")
        return FuncDecl(name, rtype.lexeme, tuple(params), span=cur.span_from(rtype))

    def param(self):
        cur = self.cur
        first = cur.peek()
        direction = "in"
        # a direction word is only a direction when two identifiers follow it
        if (cur.at("ident") and first.lexeme in DIRECTIONS
                and cur.at("ident", ahead=1) and cur.at("ident", ahead=2)):
            direction = cur.expect("ident").lexeme
        ptype = cur.expect("ident").lexeme
        name = cur.expect("ident").lexeme
        return Param(name, ptype, direction, span=cur.span_from(first))

    def celltype(self):
        cur = self.cur
        first = cur.expect("kw", "celltype")
        name = cur.expect("ident").lexeme
        cur.expect("lbrace")
        entries, calls, attrs, vars_ = [], [], [], []
        while not cur.at("rbrace"):
            tok = cur.peek()
            if cur.at("kw", "entry") or cur.at("kw", "call"):
                cur.pos += 1
                sig = cur.expect("ident").lexeme
                port = cur.expect("ident").lexeme
                cur.expect("semi")
                decl = PortDecl(port, sig, span=cur.span_from(tok))
                (entries if tok.lexeme == "entry" else calls).append(decl)
            elif cur.at("kw", "attr"):
                attrs.extend(self.member_block("attr"))
            elif cur.at("kw", "var"):
                vars_.extend(self.member_block("var"))
            else:
                cur.fail({"entry", "call", "attr", "var", "rbrace"})
        cur.expect("rbrace")
        cur.expect("semi")
        return CelltypeDecl(name, tuple(entries), tuple(calls), tuple(attrs), tuple(vars_),
                            span=cur.span_from(first))

    def member_block(self, keyword):
        cur = self.cur
        cur.expect("kw", keyword)
        cur.expect("lbrace")
        members = []
        while not cur.at("rbrace"):
            first = cur.peek()
            if first is None:
                cur.fail({"rbrace", "ident"})
            mtype = cur.expect("ident").lexeme
            name = cur.expect("ident").lexeme
            default = None
            if keyword == "var":
                cur.expect("eq")
                default, _ = cur.literal()
            elif cur.accept("eq"):
                default, _ = cur.literal()
            cur.expect("semi")
            cls = VarDecl if keyword == "var" else AttrDecl
            members.append(cls(name, mtype, default, span=cur.span_from(first)))
        cur.expect("rbrace")
        cur.expect("semi")
        return members

    def cell(self):
        cur = self.cur
        first = cur.expect("kw", "cell")
        celltype = cur.expect("ident").lexeme
        name = cur.expect("ident").lexeme
        cur.expect("lbrace")
        bindings, inits = [], []
        while not cur.at("rbrace"):
            lhs = cur.peek()
            if lhs is None:
                cur.fail({"rbrace", "ident"})
            cur.expect("ident")
            cur.expect("eq")
            if cur.at("ident"):
                target = cur.expect("ident").lexeme
                cur.expect("dot")
                entry = cur.expect("ident").lexeme
                cur.expect("semi")
                bindings.append(Binding(lhs.lexeme, target, entry, span=cur.span_from(lhs)))
            else:
                if cur.peek() is None or cur.peek().kind not in LITERAL_KINDS:
                    cur.fail({"ident", *LITERAL_KINDS})
                value, _ = cur.literal()
                cur.expect("semi")
                inits.append(AttrInit(lhs.lexeme, value, span=cur.span_from(lhs)))
        cur.expect("rbrace")
        cur.expect("semi")
        return CellDecl(celltype, name, tuple(bindings), tuple(inits), span=cur.span_from(first))


def parse_cdl(text: str) -> CdlAst:
    """Parse CDL source into a CdlAst, raising ParseError on the first syntax error."""
    return CdlParser(text).parse()
