"""ASCII expression syntax: tokenizer, AST, recursive-descent parser and printer.

Binding, loosest first::

    expr     := product (('+' | '-') product)*
    product  := tensor (('*' | '|-' | '-|' | '|-s' | '-|s') tensor)*
    tensor   := coeff ('@' coeff)*
    coeff    := unary (('^' | '.') unary)*
    unary    := '-' unary | NUMBER [primary] | primary
    primary  := NAME | 'h' | 'h^' INT | '(' expr ')'
              | '{' expr ',' expr '}' | '[' expr ',' expr ']'

``@`` is ⊗, ``^`` the wedge, ``.`` the coefficient product, ``|-``/``-|`` the
dialgebra products (``s`` suffix for the star versions), ``{,}`` the
space's bracket and ``[,]`` the Loday bracket of the base algebra.  All
binary operators associate to the left.  Numbers are ``p`` or ``p/q``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .linear import as_rational, format_rational


class ExpressionSyntaxError(SyntaxError):
    """Position is a 0-based character offset into the source."""

    def __init__(self, message: str, position: int, source: str = ""):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position
        self.source = source


class ArityError(ExpressionSyntaxError):
    pass


# -- AST ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Generator:
    name: str


@dataclass(frozen=True)
class Number:
    value: Fraction


@dataclass(frozen=True)
class HbarSymbol:
    power: int = 1


@dataclass(frozen=True)
class Tensor:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Bracket:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class LodayBracket:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class PermStar:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Wedge:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Dot:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class DialRight:
    left: "Node"
    right: "Node"
    star: bool = False


@dataclass(frozen=True)
class DialLeft:
    left: "Node"
    right: "Node"
    star: bool = False


@dataclass(frozen=True)
class ScalarMul:
    coeff: Fraction
    operand: "Node"


@dataclass(frozen=True)
class Sum:
    terms: tuple  # ((+1 | -1, Node), ...)


Node = Union[Generator, Number, HbarSymbol, Tensor, Bracket, LodayBracket, PermStar,
             Wedge, Dot, DialRight, DialLeft, ScalarMul, Sum]


# -- tokenizer ---------------------------------------------------------------------

TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<hpow>h\^(?P<hexp>\d+)(?![A-Za-z0-9_]))
  | (?P<number>\d+(?:/\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>\|-s|-\|s|\|-|-\||[-+*@^.,(){}\[\]])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str   # number, name, hbar, op, end
    text: str
    pos: int
    value: object = None


def tokenize(source: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(source):
        m = TOKEN.match(source, pos)
        if not m:
            raise ExpressionSyntaxError(f"unexpected character {source[pos]!r}", pos, source)
        kind = m.lastgroup
        text = m.group()
        if kind == "hexp":
            kind = "hpow"
        if kind == "hpow":
            out.append(Token("hbar", text, pos, int(m.group("hexp"))))
        elif kind == "number":
            try:
                out.append(Token("number", text, pos, as_rational(text)))
            except ZeroDivisionError:
                raise ExpressionSyntaxError("zero denominator", pos, source) from None
        elif kind == "name":
            if text == "h":
                out.append(Token("hbar", text, pos, 1))
            else:
                out.append(Token("name", text, pos))
        elif kind == "op":
            out.append(Token("op", text, pos))
        pos = m.end()
    out.append(Token("end", "", len(source)))
    return out


# -- parser ------------------------------------------------------------------------

PRODUCT_OPS = {"*", "|-", "-|", "|-s", "-|s"}
CLOSERS = {"(": ")", "{": "}", "[": "]"}


class Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = tokenize(source)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, message: str, tok: Token | None = None, cls=ExpressionSyntaxError):
        tok = tok or self.tok
        return cls(message, tok.pos, self.source)

    def at_op(self, *ops) -> bool:
        return self.tok.kind == "op" and self.tok.text in ops

    def parse(self) -> Node:
        if self.tok.kind == "end":
            raise self.error("empty expression")
        node = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self) -> Node:
        terms = [(1, self.product())]
        while self.at_op("+", "-"):
            sign = 1 if self.advance().text == "+" else -1
            terms.append((sign, self.product()))
        return terms[0][1] if len(terms) == 1 else Sum(tuple(terms))

    def product(self) -> Node:
        node = self.tensor()
        while self.tok.kind == "op" and self.tok.text in PRODUCT_OPS:
            op = self.advance().text
            right = self.tensor()
            if op == "*":
                node = PermStar(node, right)
            elif op.startswith("|-"):
                node = DialRight(node, right, op.endswith("s"))
            else:
                node = DialLeft(node, right, op.endswith("s"))
        return node

    def tensor(self) -> Node:
        node = self.coeff()
        while self.at_op("@"):
            self.advance()
            node = Tensor(node, self.coeff())
        return node

    def coeff(self) -> Node:
        node = self.unary()
        while self.at_op("^", "."):
            op = self.advance().text
            right = self.unary()
            node = Wedge(node, right) if op == "^" else Dot(node, right)
        return node

    def unary(self) -> Node:
        if self.at_op("-"):
            self.advance()
            return ScalarMul(Fraction(-1), self.unary())
        if self.tok.kind == "number":
            value = Fraction(self.advance().value)
            if self.starts_primary():
                return ScalarMul(value, self.primary())
            return Number(value)
        return self.primary()

    def starts_primary(self) -> bool:
        t = self.tok
        return t.kind in ("name", "hbar") or (t.kind == "op" and t.text in CLOSERS)

    def primary(self) -> Node:
        t = self.tok
        if t.kind == "name":
            self.advance()
            return Generator(t.text)
        if t.kind == "hbar":
            self.advance()
            return HbarSymbol(t.value)
        if t.kind == "op" and t.text == "(":
            self.advance()
            inner = self.expr()
            self.expect(")", t)
            return inner
        if t.kind == "op" and t.text in ("{", "["):
            self.advance()
            left = self.expr()
            if not self.at_op(","):
                if self.at_op(CLOSERS[t.text]):
                    raise self.error(f"{t.text}{CLOSERS[t.text]} takes two arguments", t, ArityError)
                self.expect(",", t)
            self.advance()
            right = self.expr()
            if self.at_op(","):
                raise self.error(f"{t.text}{CLOSERS[t.text]} takes two arguments", t, ArityError)
            self.expect(CLOSERS[t.text], t)
            return Bracket(left, right) if t.text == "{" else LodayBracket(left, right)
        if t.kind == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {t.text!r}")

    def expect(self, text: str, opener: Token) -> None:
        if self.at_op(text):
            self.advance()
            return
        if self.tok.kind == "end":
            raise self.error(f"unclosed {opener.text!r} opened at position {opener.pos}")
        raise self.error(f"expected {text!r}, found {self.tok.text!r}")


def parse_expression(source: str) -> Node:
    return Parser(source).parse()


def generator_names(node: Node) -> set[str]:
    """Every generator name occurring in ``node``."""
    if isinstance(node, Generator):
        return {node.name}
    out: set[str] = set()
    for child in children(node):
        out |= generator_names(child)
    return out


def children(node: Node) -> Iterable[Node]:
    if isinstance(node, Sum):
        return [t for _, t in node.terms]
    if isinstance(node, ScalarMul):
        return [node.operand]
    if hasattr(node, "left"):
        return [node.left, node.right]
    return []


# -- printer -----------------------------------------------------------------------

BINARY = {Tensor: "@", PermStar: "*", Wedge: "^", Dot: "."}


def to_source(node: Node) -> str:
    """Fully parenthesised source text; ``parse_expression`` inverts it."""
    if isinstance(node, Generator):
        return node.name
    if isinstance(node, Number):
        return format_rational(node.value)
    if isinstance(node, HbarSymbol):
        return "h" if node.power == 1 else f"h^{node.power}"
    if isinstance(node, ScalarMul):
        if node.coeff == -1:
            return f"-({to_source(node.operand)})"
        if node.coeff < 0:
            return f"-({format_rational(-node.coeff)} ({to_source(node.operand)}))"
        return f"{format_rational(node.coeff)} ({to_source(node.operand)})"
    if isinstance(node, Sum):
        parts = []
        for k, (sign, term) in enumerate(node.terms):
            text = to_source(term)
            if text.startswith("-"):
                text = f"({text})"
            if k == 0:
                parts.append(text if sign > 0 else f"-({text})")
            else:
                parts.append(("+ " if sign > 0 else "- ") + text)
        return "(" + " ".join(parts) + ")" if len(node.terms) > 1 else parts[0]
    if isinstance(node, Bracket):
        return "{" + to_source(node.left) + ", " + to_source(node.right) + "}"
    if isinstance(node, LodayBracket):
        return "[" + to_source(node.left) + ", " + to_source(node.right) + "]"
    if isinstance(node, (DialRight, DialLeft)):
        op = ("|-" if isinstance(node, DialRight) else "-|") + ("s" if node.star else "")
        return f"({to_source(node.left)} {op} {to_source(node.right)})"
    op = BINARY[type(node)]
    return f"({to_source(node.left)} {op} {to_source(node.right)})"
