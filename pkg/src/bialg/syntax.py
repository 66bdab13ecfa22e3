"""Concrete syntax for CCS processes, plus a small reader for arithmetic terms.

::

    process  = parallel , { "\\" , ident } ;
    parallel = sum , { "|" , sum } ;
    sum      = prefix , { "+" , prefix } ;
    prefix   = ident "!" "(" expr ")" "." prefix
             | ident "?" "(" ident ")" "." prefix
             | "rep" "(" process ")" | "0" | "(" process ")" ;
    expr     = mul , { "+" , mul } ;   mul = atom , { "*" , atom } ;
    atom     = nat | ident | "(" expr ")" ;

``--`` starts a comment that runs to the end of the line.  Channel names
and value variables live in separate namespaces.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

from bialg.core import Term
from bialg.lang import ccs
from bialg.lang.razor import amb
from bialg.lang.stream import add, val


class CcsSyntaxError(ValueError):
    def __init__(self, line: int, column: int, expected, found: str):
        self.line, self.column = line, column
        self.expected = tuple(sorted(expected))
        self.found = found
        super().__init__(
            f"{line}:{column}: expected {' or '.join(self.expected)}, found {found}"
        )


class UnboundVariable(NameError):
    def __init__(self, name: str, line: int, column: int):
        super().__init__(f"{line}:{column}: unbound variable {name!r}")
        self.name, self.line, self.column = name, line, column


# -- lexing ----------------------------------------------------------------

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+|--[^\n]*)"
    r"|(?P<ident>[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<nat>[0-9]+)"
    r"|(?P<sym>[!?().|+*\\])"
)


@dataclass(frozen=True, slots=True)
class Token:
    kind: str  # "ident", "nat", a symbol character, or "eof"
    text: str
    line: int
    column: int

    def describe(self) -> str:
        return "end of input" if self.kind == "eof" else repr(self.text)


def tokenize(src: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise CcsSyntaxError(line, pos - line_start + 1, {"a token"}, repr(src[pos]))
        kind = m.lastgroup
        text = m.group()
        if kind != "ws":
            tokens.append(Token(text if kind == "sym" else kind, text, line, pos - line_start + 1))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            line_start = pos + text.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


# -- surface syntax --------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Span:
    line: int
    column: int
    end_line: int
    end_column: int


@dataclass(frozen=True)
class ELit:
    value: int
    span: Span


@dataclass(frozen=True)
class EVar:
    name: str
    span: Span


@dataclass(frozen=True)
class EAdd:
    left: "Expr"
    right: "Expr"
    span: Span


@dataclass(frozen=True)
class EMul:
    left: "Expr"
    right: "Expr"
    span: Span


Expr = Union[ELit, EVar, EAdd, EMul]


@dataclass(frozen=True)
class PNil:
    span: Span


@dataclass(frozen=True)
class PSend:
    chan: str
    value: Expr
    cont: "Proc"
    span: Span


@dataclass(frozen=True)
class PRecv:
    chan: str
    var: str
    cont: "Proc"
    span: Span


@dataclass(frozen=True)
class PSum:
    left: "Proc"
    right: "Proc"
    span: Span


@dataclass(frozen=True)
class PPar:
    left: "Proc"
    right: "Proc"
    span: Span


@dataclass(frozen=True)
class PRep:
    proc: "Proc"
    span: Span


@dataclass(frozen=True)
class PRestrict:
    proc: "Proc"
    chan: str
    span: Span


Proc = Union[PNil, PSend, PRecv, PSum, PPar, PRep, PRestrict]


# -- parsing ---------------------------------------------------------------


class _Parser:
    def __init__(self, src: str):
        self.toks = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def fail(self, expected):
        t = self.tok
        raise CcsSyntaxError(t.line, t.column, expected, t.describe())

    def expect(self, kind: str, label: str | None = None) -> Token:
        t = self.tok
        if t.kind != kind:
            self.fail({label or repr(kind)})
        self.i += 1
        return t

    def span_from(self, start: Token) -> Span:
        last = self.toks[self.i - 1]
        return Span(start.line, start.column, last.line, last.column + len(last.text))

    def process(self) -> Proc:
        start = self.tok
        p = self.parallel()
        while self.tok.kind == "\\":
            self.i += 1
            chan = self.expect("ident", "channel name").text
            p = PRestrict(p, chan, self.span_from(start))
        return p

    def parallel(self) -> Proc:
        start = self.tok
        p = self.sum()
        while self.tok.kind == "|":
            self.i += 1
            p = PPar(p, self.sum(), self.span_from(start))
        return p

    def sum(self) -> Proc:
        start = self.tok
        p = self.prefix()
        while self.tok.kind == "+":
            self.i += 1
            p = PSum(p, self.prefix(), self.span_from(start))
        return p

    def prefix(self) -> Proc:
        start = t = self.tok
        if t.kind == "nat":
            if t.text != "0":
                self.fail({"'0'", "a prefix", "'rep'", "'('"})
            self.i += 1
            return PNil(self.span_from(start))
        if t.kind == "(":
            self.i += 1
            p = self.process()
            self.expect(")")
            return p
        if t.kind == "ident":
            if t.text == "rep" and self.peek().kind == "(":
                self.i += 2
                p = self.process()
                self.expect(")")
                return PRep(p, self.span_from(start))
            self.i += 1
            if self.tok.kind == "!":
                self.i += 1
                self.expect("(")
                e = self.expr()
                self.expect(")")
                self.expect(".")
                return PSend(t.text, e, self.prefix(), self.span_from(start))
            if self.tok.kind == "?":
                self.i += 1
                self.expect("(")
                var = self.expect("ident", "variable name").text
                self.expect(")")
                self.expect(".")
                return PRecv(t.text, var, self.prefix(), self.span_from(start))
            self.fail({"'!'", "'?'"})
        self.fail({"'0'", "a prefix", "'rep'", "'('"})

    def expr(self) -> Expr:
        start = self.tok
        e = self.mul()
        while self.tok.kind == "+":
            self.i += 1
            e = EAdd(e, self.mul(), self.span_from(start))
        return e

    def mul(self) -> Expr:
        start = self.tok
        e = self.atom()
        while self.tok.kind == "*":
            self.i += 1
            e = EMul(e, self.atom(), self.span_from(start))
        return e

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "nat":
            self.i += 1
            return ELit(int(t.text), self.span_from(t))
        if t.kind == "ident":
            self.i += 1
            return EVar(t.text, self.span_from(t))
        if t.kind == "(":
            self.i += 1
            e = self.expr()
            self.expect(")")
            return e
        self.fail({"a number", "a variable", "'('"})


def parse(src: str) -> Proc:
    """Parse a whole process; trailing input is an error."""
    p = _Parser(src)
    proc = p.process()
    if p.tok.kind != "eof":
        p.fail({"'|'", "'+'", "'\\'", "end of input"})
    return proc


# -- elaboration -----------------------------------------------------------


def _check_scope(node, bound: frozenset):
    match node:
        case EVar(name, span):
            if name not in bound:
                raise UnboundVariable(name, span.line, span.column)
        case ELit():
            pass
        case EAdd(l, r, _) | EMul(l, r, _):
            _check_scope(l, bound)
            _check_scope(r, bound)
        case PNil():
            pass
        case PSend(_, e, k, _):
            _check_scope(e, bound)
            _check_scope(k, bound)
        case PRecv(_, var, k, _):
            _check_scope(k, bound | {var})
        case PSum(l, r, _) | PPar(l, r, _):
            _check_scope(l, bound)
            _check_scope(r, bound)
        case PRep(p, _) | PRestrict(p, _, _):
            _check_scope(p, bound)


def eval_expr(e: Expr, env: Mapping[str, int]) -> int:
    match e:
        case ELit(v, _):
            return v
        case EVar(name, span):
            try:
                return env[name]
            except KeyError:
                raise UnboundVariable(name, span.line, span.column) from None
        case EAdd(l, r, _):
            return eval_expr(l, env) + eval_expr(r, env)
        case EMul(l, r, _):
            return eval_expr(l, env) * eval_expr(r, env)
    raise TypeError(f"not an expression: {e!r}")


def _build(p: Proc, env: Mapping[str, int]) -> Term:
    match p:
        case PNil():
            return ccs.nil()
        case PSend(c, e, k, _):
            return ccs.send(c, eval_expr(e, env), _build(k, env))
        case PRecv(c, var, k, _):
            return ccs.recv(c, lambda v: _build(k, {**env, var: v}))
        case PSum(l, r, _):
            return ccs.csum(_build(l, env), _build(r, env))
        case PPar(l, r, _):
            return ccs.par(_build(l, env), _build(r, env))
        case PRep(q, _):
            return ccs.rep(_build(q, env))
        case PRestrict(q, c, _):
            return ccs.res(c, _build(q, env))
    raise TypeError(f"not a process: {p!r}")


def elaborate(ast: Proc, env: Mapping[str, int] | None = None) -> Term:
    """Turn a parsed process into a CCS term.

    Scoping is checked up front.  Receive bodies are rebuilt, under the
    extended environment, each time a continuation is applied.
    """
    env = dict(env or {})
    _check_scope(ast, frozenset(env))
    return _build(ast, env)


def load(src: str) -> Term:
    return elaborate(parse(src))


# -- printing --------------------------------------------------------------

_RESTRICT, _PAR, _SUM, _PREFIX = range(4)


def _paren(text: str, needed: bool) -> str:
    return f"({text})" if needed else text


def pretty_expr(e: Expr, level: int = 0) -> str:
    match e:
        case ELit(v, _):
            return str(v)
        case EVar(name, _):
            return name
        case EAdd(l, r, _):
            return _paren(f"{pretty_expr(l, 0)} + {pretty_expr(r, 1)}", level > 0)
        case EMul(l, r, _):
            return _paren(f"{pretty_expr(l, 1)} * {pretty_expr(r, 2)}", level > 1)
    raise TypeError(f"not an expression: {e!r}")


def pretty(p: Proc, level: int = _RESTRICT) -> str:
    """Print with the fewest parentheses that parse back to the same tree."""
    match p:
        case PNil():
            return "0"
        case PSend(c, e, k, _):
            return f"{c}!({pretty_expr(e)}).{pretty(k, _PREFIX)}"
        case PRecv(c, var, k, _):
            return f"{c}?({var}).{pretty(k, _PREFIX)}"
        case PRep(q, _):
            return f"rep({pretty(q)})"
        case PSum(l, r, _):
            return _paren(f"{pretty(l, _SUM)} + {pretty(r, _PREFIX)}", level > _SUM)
        case PPar(l, r, _):
            return _paren(f"{pretty(l, _PAR)} | {pretty(r, _SUM)}", level > _PAR)
        case PRestrict(q, c, _):
            return _paren(f"{pretty(q, _RESTRICT)} \\ {c}", level > _RESTRICT)
    raise TypeError(f"not a process: {p!r}")


# -- arithmetic terms ------------------------------------------------------

_ARITH_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+|--[^\n]*)|(?P<ident>[A-Za-z]+)|(?P<nat>[0-9]+)|(?P<sym>[(),+])"
)


def _arith_tokens(src: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(src):
        m = _ARITH_TOKEN.match(src, pos)
        if m is None:
            raise CcsSyntaxError(line, pos - line_start + 1, {"a token"}, repr(src[pos]))
        text = m.group()
        if m.lastgroup != "ws":
            kind = text if m.lastgroup == "sym" else m.lastgroup
            tokens.append(Token(kind, text, line, pos - line_start + 1))
        if "\n" in text:
            line += text.count("\n")
            line_start = pos + text.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _ArithParser(_Parser):
    def __init__(self, src: str, allow_amb: bool):
        self.toks = _arith_tokens(src)
        self.i = 0
        self.allow_amb = allow_amb

    def term(self) -> Term:
        t = self.tok
        words = {"'val'", "'add'", "a number", "'('"} | ({"'amb'"} if self.allow_amb else set())
        if t.kind == "nat":
            self.i += 1
            return val(int(t.text))
        if t.kind == "(":
            self.i += 1
            inner = self.term()
            self.expect(")")
            return inner
        if t.kind == "ident" and t.text == "val":
            self.i += 1
            parens = self.tok.kind == "("
            if parens:
                self.i += 1
            n = int(self.expect("nat", "a number").text)
            if parens:
                self.expect(")")
            return val(n)
        if t.kind == "ident" and (t.text == "add" or (t.text == "amb" and self.allow_amb)):
            self.i += 1
            self.expect("(")
            left = self.term()
            self.expect(",")
            right = self.term()
            self.expect(")")
            return (add if t.text == "add" else amb)(left, right)
        self.fail(words)


def parse_arith(src: str, allow_amb: bool = True) -> Term:
    """Parse ``val(1)``, ``val 1``, ``1``, ``add(x, y)`` and (optionally) ``amb(x, y)``."""
    p = _ArithParser(src, allow_amb)
    t = p.term()
    if p.tok.kind != "eof":
        p.fail({"end of input"})
    return t
