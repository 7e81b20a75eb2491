"""Input grammar and canonical printer for systems, maps, and jet components.

Documents are line-oriented.  ``#`` starts a comment.  The first content
line declares variables (``vars z1 z2``, ``realvars x1 y1 x2 y2``,
``mapvars v t``, or ``params t1 t2``) and every following line is a
statement: ``eq <expr>``, ``map <expr>``, or ``jet <expr>``.  Expressions
are built from rational literals ``p/q``, the imaginary unit ``i``,
declared identifiers, ``conj(...)`` (zeta form only), ``exp(var)`` (jet
components only), and the operators ``+ - * ^`` with explicit
multiplication; ``^`` takes a non-negative integer literal.  Precedence is
``^`` over unary minus over ``*`` over binary ``+ -``.

The printer emits canonical polynomial text (terms descending in grevlex),
and parsing a printed document reproduces the document exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from holoclosure.arith import I as IMAG, gq
from holoclosure.poly import (
    Block,
    Polynomial,
    VariableContext,
    param_context,
    polynomial_to_text,
    real_context,
    zeta_context,
)

_ZETA_SWAP = {Block.ZETA: Block.ZETABAR}

_DECLARATIONS = ("vars", "realvars", "mapvars", "params")
_STATEMENTS = ("eq", "map", "jet")
_RESERVED = set(_DECLARATIONS) | set(_STATEMENTS) | {"i", "conj", "exp"}

KIND_SYSTEM_ZETA = "system-zeta"
KIND_SYSTEM_REAL = "system-real"
KIND_MAP = "map"
KIND_PARAMETRIZATION = "parametrization"
KIND_JETS = "jet-components"


class ParseError(Exception):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Token:
    kind: str  # "int" | "ident" | "op" | "end"
    text: str
    line: int
    col: int


def _tokenize(text: str, line: int) -> list:
    tokens = []
    k = 0
    while k < len(text):
        ch = text[k]
        if ch in " \t":
            k += 1
            continue
        col = k + 1
        if ch.isdigit():
            j = k
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[k:j], line, col))
            k = j
        elif ch.isalpha() or ch == "_":
            j = k
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[k:j], line, col))
            k = j
        elif ch in "+-*^()/,":
            tokens.append(Token("op", ch, line, col))
            k += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("end", "", line, len(text) + 1))
    return tokens


@dataclass
class _Env:
    context: VariableContext
    declared: tuple
    allow_i: bool
    allow_conj: bool
    allow_exp: bool
    i_error: str = "the imaginary unit is not allowed here"


class _ExprParser:
    def __init__(self, tokens: list, env: _Env):
        self.tokens = tokens
        self.pos = 0
        self.env = env

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, text: str) -> Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != text:
            raise ParseError(f"expected {text!r}", tok.line, tok.col)
        return self.advance()

    def parse(self) -> Polynomial:
        value = self._sum()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected trailing {tok.text!r}", tok.line, tok.col)
        return value

    def parse_until_comma(self) -> Polynomial:
        return self._sum()

    def _sum(self) -> Polynomial:
        value = self._product()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.advance()
                rhs = self._product()
                value = value + rhs if tok.text == "+" else value - rhs
            else:
                return value

    def _product(self) -> Polynomial:
        value = self._factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.advance()
                value = value * self._factor()
            else:
                return value

    def _factor(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return -self._factor()
        return self._power()

    def _power(self) -> Polynomial:
        base = self._primary()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.advance()
            etok = self.peek()
            if etok.kind != "int":
                raise ParseError(
                    "exponent must be a non-negative integer literal", etok.line, etok.col
                )
            self.advance()
            return base ** int(etok.text)
        return base

    def _rational(self) -> Fraction:
        tok = self.advance()
        value = Fraction(int(tok.text))
        nxt = self.peek()
        if nxt.kind == "op" and nxt.text == "/":
            self.advance()
            den = self.peek()
            if den.kind != "int":
                raise ParseError("malformed rational literal", den.line, den.col)
            self.advance()
            if int(den.text) == 0:
                raise ParseError("zero denominator", den.line, den.col)
            value = Fraction(int(tok.text), int(den.text))
        return value

    def _primary(self) -> Polynomial:
        env = self.env
        tok = self.peek()
        if tok.kind == "int":
            return Polynomial.constant(env.context, gq(self._rational()))
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            inner = self._sum()
            self.expect_op(")")
            return inner
        if tok.kind == "ident":
            name = tok.text
            if name == "i":
                if not env.allow_i:
                    raise ParseError(env.i_error, tok.line, tok.col)
                self.advance()
                return Polynomial.constant(env.context, IMAG)
            if name == "conj":
                if not env.allow_conj:
                    raise ParseError(
                        "conj(...) is only allowed in zeta-form systems", tok.line, tok.col
                    )
                self.advance()
                self.expect_op("(")
                inner = self._sum()
                self.expect_op(")")
                return inner.conjugate(_ZETA_SWAP)
            if name == "exp":
                if not env.allow_exp:
                    raise ParseError(
                        "exp(...) is only allowed in jet components", tok.line, tok.col
                    )
                self.advance()
                self.expect_op("(")
                vtok = self.peek()
                if vtok.kind != "ident" or vtok.text not in env.declared:
                    raise ParseError(
                        "exp(...) takes a declared parameter", vtok.line, vtok.col
                    )
                self.advance()
                self.expect_op(")")
                return Polynomial.variable(env.context, f"exp({vtok.text})")
            if name in env.declared:
                self.advance()
                return Polynomial.variable(env.context, name)
            raise ParseError(f"unknown identifier {name!r}", tok.line, tok.col)
        raise ParseError("expected an expression", tok.line, tok.col)


@dataclass(frozen=True)
class InputDocument:
    kind: str
    context: VariableContext
    declared: tuple
    statements: tuple  # (keyword, Polynomial) in source order

    @property
    def equations(self) -> tuple:
        return tuple(p for kw, p in self.statements if kw == "eq")

    @property
    def map_components(self) -> tuple:
        return tuple(p for kw, p in self.statements if kw == "map")

    @property
    def jet_components(self) -> tuple:
        return tuple(p for kw, p in self.statements if kw == "jet")


def _make_env(kind: str, context: VariableContext, declared: tuple) -> _Env:
    if kind == KIND_SYSTEM_ZETA:
        return _Env(context, declared, True, True, False)
    if kind == KIND_SYSTEM_REAL:
        return _Env(
            context, declared, False, False, False,
            i_error="the imaginary unit is not allowed in real-form input",
        )
    if kind in (KIND_MAP, KIND_PARAMETRIZATION):
        return _Env(context, declared, True, False, False)
    return _Env(
        context, declared, False, False, True,
        i_error="jet components must have rational coefficients",
    )


def parse(text: str) -> InputDocument:
    """Parse a full input document; diagnostics carry line and column."""
    decl_kw = None
    declared = None
    decl_pos = (1, 1)
    raw_statements = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        tokens = _tokenize(content, lineno)
        head = tokens[0]
        if head.kind != "ident":
            raise ParseError("expected a keyword", head.line, head.col)
        if head.text in _DECLARATIONS:
            if decl_kw is not None:
                raise ParseError("duplicate declaration", head.line, head.col)
            if raw_statements:
                raise ParseError("declaration must precede statements", head.line, head.col)
            names = []
            for tok in tokens[1:-1]:
                if tok.kind != "ident":
                    raise ParseError("expected a variable name", tok.line, tok.col)
                if tok.text in _RESERVED:
                    raise ParseError(f"reserved identifier {tok.text!r}", tok.line, tok.col)
                if tok.text in names:
                    raise ParseError(f"duplicate variable {tok.text!r}", tok.line, tok.col)
                names.append(tok.text)
            if not names:
                raise ParseError("empty declaration", head.line, head.col)
            decl_kw = head.text
            declared = tuple(names)
            decl_pos = (head.line, head.col)
        elif head.text in _STATEMENTS:
            if decl_kw is None:
                raise ParseError("statement before declaration", head.line, head.col)
            raw_statements.append((head.text, tokens[1:], head.line, head.col))
        else:
            raise ParseError(f"unknown keyword {head.text!r}", head.line, head.col)
    if decl_kw is None:
        raise ParseError("missing variable declaration", 1, 1)
    if not raw_statements:
        raise ParseError("document has no statements", decl_pos[0], decl_pos[1])

    used = {kw for kw, _, _, _ in raw_statements}
    if decl_kw == "vars":
        kind, allowed = KIND_SYSTEM_ZETA, {"eq"}
        context = zeta_context(declared)
    elif decl_kw == "realvars":
        if len(declared) % 2 != 0:
            raise ParseError(
                "realvars needs an even number of variables (x,y pairs)",
                decl_pos[0], decl_pos[1],
            )
        kind, allowed = KIND_SYSTEM_REAL, {"eq"}
        context = real_context(declared)
    elif decl_kw == "mapvars":
        kind, allowed = KIND_MAP, {"map", "eq"}
        context = param_context(declared)
    else:  # params
        if "jet" in used and "map" in used:
            raise ParseError(
                "a params document takes either map or jet statements, not both",
                decl_pos[0], decl_pos[1],
            )
        if "jet" in used:
            kind, allowed = KIND_JETS, {"jet"}
            context = VariableContext(
                declared + tuple(f"exp({v})" for v in declared),
                (Block.PARAM,) * len(declared) + (Block.EXP,) * len(declared),
            )
        else:
            kind, allowed = KIND_PARAMETRIZATION, {"map"}
            context = param_context(declared)

    env = _make_env(kind, context, declared)
    statements = []
    for kw, tokens, line, col in raw_statements:
        if kw not in allowed:
            raise ParseError(
                f"{kw!r} statement not allowed in a {kind} document", line, col
            )
        statements.append((kw, _ExprParser(tokens, env).parse()))
    if kind == KIND_MAP and not any(kw == "map" for kw, _ in statements):
        raise ParseError("a map document needs at least one map statement",
                         decl_pos[0], decl_pos[1])
    return InputDocument(kind, context, declared, tuple(statements))


_DECL_FOR_KIND = {
    KIND_SYSTEM_ZETA: "vars",
    KIND_SYSTEM_REAL: "realvars",
    KIND_MAP: "mapvars",
    KIND_PARAMETRIZATION: "params",
    KIND_JETS: "params",
}


def print_document(doc: InputDocument) -> str:
    """Canonical text form; parse(print_document(doc)) == doc."""
    lines = [f"{_DECL_FOR_KIND[doc.kind]} {' '.join(doc.declared)}"]
    for kw, poly in doc.statements:
        lines.append(f"{kw} {polynomial_to_text(poly)}")
    return "\n".join(lines) + "\n"


def parse_polynomial(text: str, context: VariableContext) -> Polynomial:
    """Parse one expression against an existing context (round-trip helper)."""
    blocks = set(context.blocks)
    declared = tuple(
        name
        for name, b in zip(context.names, context.blocks)
        if b in (Block.ZETA, Block.REAL, Block.PARAM, Block.Z, Block.W)
    )
    env = _Env(
        context,
        declared,
        allow_i=blocks != {Block.REAL},
        allow_conj=Block.ZETABAR in blocks,
        allow_exp=Block.EXP in blocks,
    )
    return _ExprParser(_tokenize(text, 1), env).parse()


def parse_point(text: str, n: int | None = None) -> tuple:
    """Comma-separated Gaussian rational coordinates, e.g. ``"1/2+i, 0"``."""
    empty = VariableContext((), ())
    env = _Env(empty, (), allow_i=True, allow_conj=False, allow_exp=False)
    parser = _ExprParser(_tokenize(text, 1), env)
    coords = []
    while True:
        value = parser.parse_until_comma()
        const = value.terms.get((), gq(0)) if value.terms else gq(0)
        coords.append(const)
        tok = parser.peek()
        if tok.kind == "end":
            break
        if tok.kind == "op" and tok.text == ",":
            parser.advance()
            continue
        raise ParseError(f"unexpected {tok.text!r} in point", tok.line, tok.col)
    if n is not None and len(coords) != n:
        raise ParseError(f"expected {n} coordinates, got {len(coords)}", 1, 1)
    return tuple(coords)
