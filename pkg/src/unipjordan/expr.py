"""Module expressions: AST, parser and renderer.

Grammar (whitespace insignificant)::

    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := atom suffix*
    atom   := ('L'|'V'|'T') '(' nat ')' | '(' expr ')'
    suffix := '^*' | '[' nat ']'        (twist exponent >= 1)

'+' is direct sum, '*' is tensor product, '^*' is the dual and '[k]' the
k-th Frobenius twist; both suffixes bind tighter than '*'.  '+' and '*'
associate to the left.  Rendering is the inverse of parsing on ASTs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import DomainError

ATOM_KINDS = ("L", "V", "T")


@dataclass(frozen=True)
class Atom:
    kind: str  # 'L' irreducible, 'V' Weyl, 'T' tilting
    weight: int

    def __post_init__(self):
        if self.kind not in ATOM_KINDS:
            raise DomainError(f"unknown atom kind {self.kind!r}")
        if self.weight < 0:
            raise DomainError(f"weights must be non-negative, got {self.weight}")


@dataclass(frozen=True)
class Sum:
    left: "ModuleExpr"
    right: "ModuleExpr"


@dataclass(frozen=True)
class Tensor:
    left: "ModuleExpr"
    right: "ModuleExpr"


@dataclass(frozen=True)
class Dual:
    inner: "ModuleExpr"


@dataclass(frozen=True)
class Twist:
    inner: "ModuleExpr"
    l: int

    def __post_init__(self):
        if self.l < 1:
            raise DomainError(f"twist exponent must be >= 1, got {self.l}")


ModuleExpr = Union[Atom, Sum, Tensor, Dual, Twist]


class ParseError(DomainError):
    """Syntax error with the offending position in the source string."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected a number", start)
        return int(self.text[start:self.pos])

    def expr(self) -> ModuleExpr:
        node = self.term()
        while self.peek() == "+":
            self.pos += 1
            node = Sum(node, self.term())
        return node

    def term(self) -> ModuleExpr:
        node = self.factor()
        while self.peek() == "*":
            self.pos += 1
            node = Tensor(node, self.factor())
        return node

    def factor(self) -> ModuleExpr:
        node = self.atom()
        while True:
            ch = self.peek()
            if ch == "^":
                at = self.pos
                self.pos += 1
                if self.pos >= len(self.text) or self.text[self.pos] != "*":
                    raise ParseError("expected '*' after '^'", at)
                self.pos += 1
                node = Dual(node)
            elif ch == "[":
                at = self.pos
                self.pos += 1
                k = self.nat()
                self.expect("]")
                if k < 1:
                    raise ParseError("twist exponent must be >= 1", at)
                node = Twist(node, k)
            else:
                return node

    def atom(self) -> ModuleExpr:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        if ch in ATOM_KINDS:
            self.pos += 1
            self.expect("(")
            w = self.nat()
            self.expect(")")
            return Atom(ch, w)
        raise ParseError("expected 'L', 'V', 'T' or '('", self.pos)


def parse_expr(text: str) -> ModuleExpr:
    """Parse a module expression, raising ParseError on bad syntax."""
    p = _Parser(text)
    node = p.expr()
    p.skip_ws()
    if p.pos != len(text):
        raise ParseError("trailing input", p.pos)
    return node


def render_expr(e: ModuleExpr) -> str:
    """Render an AST back to a string; parse(render(e)) == e."""
    if isinstance(e, Atom):
        return f"{e.kind}({e.weight})"
    if isinstance(e, Sum):
        left = render_expr(e.left)
        right = render_expr(e.right)
        if isinstance(e.right, Sum):  # keep right-nested sums explicit
            right = f"({right})"
        return f"{left}+{right}"
    if isinstance(e, Tensor):
        left = render_expr(e.left)
        if isinstance(e.left, Sum):
            left = f"({left})"
        right = render_expr(e.right)
        if isinstance(e.right, (Sum, Tensor)):
            right = f"({right})"
        return f"{left}*{right}"
    if isinstance(e, Dual):
        inner = render_expr(e.inner)
        if isinstance(e.inner, (Sum, Tensor)):
            inner = f"({inner})"
        return f"{inner}^*"
    if isinstance(e, Twist):
        inner = render_expr(e.inner)
        if isinstance(e.inner, (Sum, Tensor)):
            inner = f"({inner})"
        return f"{inner}[{e.l}]"
    raise TypeError(f"not a module expression: {e!r}")


def atoms_of(e: ModuleExpr):
    """Yield every Atom in the tree."""
    stack = [e]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            yield node
        elif isinstance(node, (Sum, Tensor)):
            stack.append(node.left)
            stack.append(node.right)
        elif isinstance(node, (Dual, Twist)):
            stack.append(node.inner)
