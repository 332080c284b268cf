"""Tokenizer, AST and recursive-descent parser for the set expression language.

Grammar::

    statement := "let" ident "=" expr | verb arg* | expr
    expr      := "{" [expr {"," expr}] "}"
               | "ord" "(" nat ")" | "pair" "(" expr "," expr ")"
               | "pow" "(" expr ")" | "union" "(" expr ")"
               | "im" "(" "fun" ident "->" expr "," expr ")"
               | "order" "(" expr [";" [pair {"," pair}]] ")"
               | "#" word "." nat | ident
    pair      := "(" expr "," expr ")"

A ``#`` that does not start a tag literal (``#`` word ``.`` digits)
starts a comment running to the end of the line.
"""
from __future__ import annotations

import dataclasses
import re
import typing
from typing import Optional

from hfset.errors import ParseError

KEYWORDS = {"ord", "pair", "pow", "union", "im", "fun", "let", "order"}
VERBS = {"card", "ordinal?", "woord", "bcs", "zorn", "chain", "show", "help"}


@dataclasses.dataclass(frozen=True)
class SetLit:
    items: tuple


@dataclasses.dataclass(frozen=True)
class Ord:
    n: int


@dataclasses.dataclass(frozen=True)
class Pair:
    left: "Expr"
    right: "Expr"


@dataclasses.dataclass(frozen=True)
class Pow:
    arg: "Expr"


@dataclasses.dataclass(frozen=True)
class Union:
    arg: "Expr"


@dataclasses.dataclass(frozen=True)
class Lambda:
    param: str
    body: "Expr"


@dataclasses.dataclass(frozen=True)
class Im:
    fn: Lambda
    arg: "Expr"


@dataclasses.dataclass(frozen=True)
class TagLit:
    word: str
    arity: int


@dataclasses.dataclass(frozen=True)
class Ident:
    name: str


@dataclasses.dataclass(frozen=True)
class OrderLit:
    carrier: "Expr"
    pairs: tuple


@dataclasses.dataclass(frozen=True)
class Let:
    name: str
    expr: "Expr"


@dataclasses.dataclass(frozen=True)
class StepName:
    name: str
    arg: Optional["Expr"] = None


@dataclasses.dataclass(frozen=True)
class Verb:
    name: str
    args: tuple


Expr = typing.Union[SetLit, Ord, Pair, Pow, Union, Im, TagLit, Ident, OrderLit]
Statement = typing.Union[Let, Verb, SetLit, Ord, Pair, Pow, Union, Im, TagLit, Ident, OrderLit]


@dataclasses.dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<tag>\#[a-z]+\.[0-9]+)
  | (?P<comment>\#[^\n]*)
  | (?P<arrow>->)
  | (?P<nat>[0-9]+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*\??)
  | (?P<punct>[{}(),;=])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list:
    tokens = []
    line, line_start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind == "ident" and chunk.endswith("?") and chunk not in VERBS:
            raise ParseError("unexpected character '?'", line, col + len(chunk) - 1)
        if kind == "punct":
            kind = chunk
        elif kind == "arrow":
            kind = "->"
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, chunk, line, col))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    col = pos - line_start + 1
    tokens.append(Token("eof", "", line, col))
    return tokens


_EXPR_START = ("'{'", "'ord'", "'pair'", "'pow'", "'union'", "'im'", "'order'", "tag", "identifier")


class Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def _fail(self, expected) -> ParseError:
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        return ParseError(f"unexpected {found}", t.line, t.column, expected)

    def _take(self, kind: str, shown: Optional[str] = None) -> Token:
        t = self.tok
        if t.kind != kind:
            raise self._fail([shown or f"'{kind}'"])
        self.i += 1
        return t

    def _keyword(self, word: str) -> None:
        t = self.tok
        if t.kind != "ident" or t.text != word:
            raise self._fail([f"'{word}'"])
        self.i += 1

    def _nat(self) -> int:
        return int(self._take("nat", "natural number").text)

    def _ident(self) -> str:
        t = self.tok
        if t.kind != "ident" or t.text in KEYWORDS or t.text in VERBS:
            raise self._fail(["identifier"])
        self.i += 1
        return t.text

    def end(self) -> None:
        if self.tok.kind != "eof":
            raise self._fail(["end of input"])

    def expr(self) -> Expr:
        t = self.tok
        if t.kind == "{":
            self.i += 1
            items = []
            if self.tok.kind != "}":
                items.append(self._expr_or(["'}'"]))
                while self.tok.kind == ",":
                    self.i += 1
                    items.append(self.expr())
            if self.tok.kind != "}":
                raise self._fail(["','", "'}'"])
            self.i += 1
            return SetLit(tuple(items))
        if t.kind == "tag":
            word, arity = t.text[1:].split(".")
            self.i += 1
            return TagLit(word, int(arity))
        if t.kind == "ident":
            name = t.text
            if name == "ord":
                self.i += 1
                self._take("(")
                n = self._nat()
                self._take(")")
                return Ord(n)
            if name == "pair":
                self.i += 1
                self._take("(")
                left = self.expr()
                self._take(",")
                right = self.expr()
                self._take(")")
                return Pair(left, right)
            if name in ("pow", "union"):
                self.i += 1
                self._take("(")
                arg = self.expr()
                self._take(")")
                return Pow(arg) if name == "pow" else Union(arg)
            if name == "im":
                self.i += 1
                self._take("(")
                self._keyword("fun")
                param = self._ident()
                self._take("->")
                body = self.expr()
                self._take(",")
                arg = self.expr()
                self._take(")")
                return Im(Lambda(param, body), arg)
            if name == "order":
                self.i += 1
                self._take("(")
                carrier = self.expr()
                pairs = []
                if self.tok.kind == ";":
                    self.i += 1
                    if self.tok.kind == "(":
                        pairs.append(self._order_pair())
                        while self.tok.kind == ",":
                            self.i += 1
                            pairs.append(self._order_pair())
                if self.tok.kind != ")":
                    raise self._fail(["';'", "')'"] if not pairs else ["','", "')'"])
                self.i += 1
                return OrderLit(carrier, tuple(pairs))
            if name not in KEYWORDS and name not in VERBS:
                self.i += 1
                return Ident(name)
        raise self._fail(_EXPR_START)

    def _expr_or(self, extra) -> Expr:
        try:
            return self.expr()
        except ParseError as err:
            if err.line == self.tok.line and err.column == self.tok.column:
                raise ParseError(err.message, err.line, err.column, err.expected + tuple(extra))
            raise

    def _order_pair(self) -> tuple:
        self._take("(")
        left = self.expr()
        self._take(",")
        right = self.expr()
        self._take(")")
        return (left, right)

    def statement(self) -> Statement:
        t = self.tok
        if t.kind == "ident" and t.text == "let":
            self.i += 1
            name = self._ident()
            self._take("=")
            return Let(name, self.expr())
        if t.kind == "ident" and t.text in VERBS:
            self.i += 1
            if t.text == "chain":
                step = self._step_name()
                return Verb("chain", (step, self._nat()))
            args = []
            while self.tok.kind != "eof":
                args.append(self.expr())
            return Verb(t.text, tuple(args))
        return self.expr()

    def _step_name(self) -> StepName:
        t = self.tok
        if t.kind == "ident" and t.text in ("id", "succ"):
            self.i += 1
            return StepName(t.text)
        if t.kind == "ident" and t.text == "const":
            self.i += 1
            self._take("(")
            arg = self.expr()
            self._take(")")
            return StepName("const", arg)
        raise self._fail(["'id'", "'succ'", "'const'"])


def parse(text: str) -> Expr:
    p = Parser(text)
    e = p.expr()
    p.end()
    return e


def parse_statement(text: str) -> Optional[Statement]:
    """Parse one line; ``None`` for a blank or comment-only line."""
    p = Parser(text)
    if p.tok.kind == "eof":
        return None
    s = p.statement()
    p.end()
    return s
