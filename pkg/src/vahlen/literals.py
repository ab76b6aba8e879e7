"""Recursive-descent parser for ring, Clifford element and matrix literals.

Grammar (whitespace-insensitive)::

    expr   := term (('+' | '-') term)*
    term   := ('+' | '-')* factor ('*' factor)*
    factor := NUMBER | 't' ['^' ['-'] NUMBER] | BLADE | '(' expr ')'
    BLADE  := ('e' NUMBER)+            strictly increasing indices, 1-based

Products of blades are evaluated in the Clifford algebra, so ``e2*e1`` is
accepted and reduced; a single BLADE token must list its indices in
increasing order.  Matrix literals are four element literals separated by
``;`` in row-major order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .ring import LaurentPolynomials, Ring, RingElement

__all__ = ["parse_ring_literal", "parse_element", "parse_matrix", "format_matrix"]


@dataclass
class _Token:
    kind: str  # num, t, blade, op, end
    text: str
    pos: int
    value: object = None


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("num", text[i:j], i, int(text[i:j])))
            i = j
        elif ch == "e":
            start = i
            indices = []
            while i < n and text[i] == "e":
                j = i + 1
                k = j
                while k < n and text[k].isdigit():
                    k += 1
                if k == j:
                    raise ParseError("expected a basis index after 'e'", text, j)
                idx = int(text[j:k])
                if idx < 1:
                    raise ParseError("basis indices start at 1", text, j)
                if indices and idx <= indices[-1]:
                    raise ParseError("blade indices must be strictly increasing", text, i)
                indices.append(idx)
                i = k
            tokens.append(_Token("blade", text[start:i], start, indices))
        elif ch == "t":
            tokens.append(_Token("t", ch, i))
            i += 1
        elif ch in "+-*^()":
            tokens.append(_Token("op", ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", text, i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring, space=None):
        self.text = text
        self.ring = ring
        self.space = space
        self.tokens = _tokenize(text)
        self.i = 0

    def error(self, message: str, tok: _Token | None = None):
        tok = tok or self.tokens[self.i]
        return ParseError(message, self.text, tok.pos)

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at_op(self, ch: str) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.text == ch

    def scalar(self, raw):
        if self.space is None:
            return self.ring.wrap(raw)
        from .clifford import CliffordElement

        return CliffordElement._make(self.space, {0: raw} if not self.ring.is_zero(raw) else {})

    def parse(self):
        if self.peek().kind == "end":
            raise self.error("empty literal")
        value = self.expr()
        if self.peek().kind != "end":
            raise self.error(f"unexpected {self.peek().text!r}")
        return value

    def expr(self):
        value = self.term()
        while self.at_op("+") or self.at_op("-"):
            op = self.take().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        negate = False
        while self.at_op("+") or self.at_op("-"):
            if self.take().text == "-":
                negate = not negate
        value = self.factor()
        while self.at_op("*"):
            self.take()
            value = value * self.factor()
        return -value if negate else value

    def factor(self):
        tok = self.peek()
        if tok.kind == "num":
            self.take()
            return self.scalar(self.ring.from_int(tok.value))
        if tok.kind == "t":
            self.take()
            if not isinstance(self.ring, LaurentPolynomials):
                raise self.error(f"'t' is only meaningful in a Laurent ring, not {self.ring}", tok)
            exp = 1
            if self.at_op("^"):
                self.take()
                sign = 1
                if self.at_op("-"):
                    self.take()
                    sign = -1
                num = self.peek()
                if num.kind != "num":
                    raise self.error("expected an integer exponent")
                self.take()
                exp = sign * num.value
            return self.scalar(self.ring.monomial(1, exp))
        if tok.kind == "blade":
            self.take()
            if self.space is None:
                raise self.error("basis blades are not allowed in a ring literal", tok)
            mask = 0
            for idx in tok.value:
                if idx > self.space.rank:
                    raise self.error(f"e{idx} is outside the rank-{self.space.rank} space", tok)
                mask |= 1 << (idx - 1)
            from .clifford import CliffordElement

            return CliffordElement._make(self.space, {mask: self.ring.one})
        if self.at_op("("):
            self.take()
            value = self.expr()
            if not self.at_op(")"):
                raise self.error("expected ')'")
            self.take()
            return value
        if tok.kind == "end":
            raise self.error("unexpected end of literal")
        raise self.error(f"unexpected {tok.text!r}")


def parse_ring_literal(ring: Ring, text: str) -> RingElement:
    """``-3``, ``2`` (reduced mod n) or ``1*t^-1 + 1 + 1*t^2``."""
    return _Parser(text, ring).parse()


def parse_element(space, text: str):
    """Parse a Clifford element literal such as ``2*e1e3 + 1*e2 + 2``."""
    return _Parser(text, space.ring, space).parse()


def _split_matrix(text: str) -> list[tuple[str, int]]:
    parts = []
    start = 0
    for i, ch in enumerate(text):
        if ch == ";":
            parts.append((text[start:i], start))
            start = i + 1
    parts.append((text[start:], start))
    return parts


def parse_matrix(space, text: str):
    """Four element literals separated by ``;`` (row-major)."""
    from .matrix import CliffordMatrix2

    parts = _split_matrix(text)
    if len(parts) != 4:
        raise ParseError(f"a matrix literal needs 4 entries separated by ';', found {len(parts)}", text, len(text))
    entries = []
    for chunk, offset in parts:
        try:
            entries.append(parse_element(space, chunk))
        except ParseError as exc:
            raise ParseError(exc.reason, text, offset + exc.position) from None
    return CliffordMatrix2(*entries)


def format_matrix(g) -> str:
    return "; ".join(str(x) for x in (g.alpha, g.beta, g.gamma, g.delta))


def is_matrix_literal(text: str) -> bool:
    return ";" in text


def parse_any(space, text: str):
    """Element or matrix depending on whether the literal contains ';'."""
    if is_matrix_literal(text):
        return parse_matrix(space, text)
    return parse_element(space, text)
