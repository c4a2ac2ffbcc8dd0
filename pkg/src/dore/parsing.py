"""Recursive-descent parsers for polynomial expressions and words.

Polynomial grammar::

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)?
    atom   := name | integer | integer '/' integer | '(' expr ')'

Whitespace is ignored.  A fraction is a single scalar atom, so
``1/2*x`` means (1/2)*x while ``x/2`` is a syntax error.  Parsing is
total on the grammar and the result is canonical.
"""

from __future__ import annotations

from .errors import DivisorNotInvertible, ParseError, UnknownGenerator
from .fields import Field, Scalar
from .poly import Context, Polynomial

_OPS = set("+-*^/()")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            tokens.append(("op", ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: Context):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.ctx = ctx

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, text, at = self.take()
        if kind != "op" or text != op:
            raise ParseError(f"expected {op!r}, found {text or 'end of input'!r}", at)

    def parse_expr(self) -> Polynomial:
        kind, text, _ = self.peek()
        negate = kind == "op" and text == "-"
        if negate:
            self.take()
        result = self.parse_term()
        if negate:
            result = -result
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.take()
                term = self.parse_term()
                result = result + term if text == "+" else result - term
            else:
                return result

    def parse_term(self) -> Polynomial:
        result = self.parse_factor()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text == "*":
                self.take()
                result = result * self.parse_factor()
            else:
                return result

    def parse_factor(self) -> Polynomial:
        atom = self.parse_atom()
        kind, text, _ = self.peek()
        if kind == "op" and text == "^":
            self.take()
            nkind, ntext, nat = self.take()
            if nkind != "int":
                raise ParseError("exponent must be a nonnegative integer", nat)
            return atom ** int(ntext)
        return atom

    def parse_atom(self) -> Polynomial:
        kind, text, at = self.take()
        if kind == "name":
            return Polynomial.gen(self.ctx, text)
        if kind == "int":
            num = int(text)
            kind2, text2, _ = self.peek()
            if kind2 == "op" and text2 == "/":
                self.take()
                dkind, dtext, dat = self.take()
                if dkind != "int":
                    raise ParseError("fraction denominator must be an integer", dat)
                return Polynomial.const(self.ctx, self.ctx.field.frac(num, int(dtext)))
            return Polynomial.const(self.ctx, num)
        if kind == "op" and text == "(":
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"expected a name, number or '(', found {text or 'end of input'!r}", at)


def parse_poly(text: str, ctx: Context) -> Polynomial:
    """Parse a polynomial expression in the given context."""
    parser = _Parser(text, ctx)
    result = parser.parse_expr()
    kind, text_, at = parser.peek()
    if kind != "end":
        raise ParseError(f"trailing input {text_!r}", at)
    return result


def parse_scalar(text: str, field: Field) -> Scalar:
    """Parse a field constant such as ``-1`` or ``1/2``."""
    poly = parse_poly(str(text), Context(field, ()))
    return poly.constant_value()


def parse_word(text: str, letters) -> tuple[str, ...]:
    """Parse a product of named letters with optional powers into a flat word.

    Grammar: ``word := part ('*' part)*; part := name ('^' nat)?``.
    Every name must come from ``letters``.
    """
    allowed = set(letters)
    tokens = _tokenize(text)
    word: list[str] = []
    pos = 0

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    while True:
        kind, name, at = take()
        if kind != "name":
            raise ParseError(f"expected a letter name, found {name or 'end of input'!r}", at)
        if name not in allowed:
            raise UnknownGenerator(f"{name!r} is not a letter of this extension")
        power = 1
        kind, text_, _ = tokens[pos]
        if kind == "op" and text_ == "^":
            take()
            nkind, ntext, nat = take()
            if nkind != "int":
                raise ParseError("exponent must be a nonnegative integer", nat)
            power = int(ntext)
        word.extend([name] * power)
        kind, text_, at = tokens[pos]
        if kind == "end":
            return tuple(word)
        if kind == "op" and text_ == "*":
            take()
            continue
        raise ParseError(f"expected '*' between letters, found {text_!r}", at)
