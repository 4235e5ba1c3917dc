"""Text form of univariate polynomials in ``x``.

Grammar (whitespace separates tokens and is otherwise ignored)::

    expr  := sign? term (('+' | '-') term)*
    term  := coeff | coeff? '*'? 'x' ('^' int)?
    coeff := int | int '/' posint

Like terms accumulate, so ``"1/2 x^2 + x^2"`` is ``3/2 x^2``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .polycore import Poly

DEFAULT_MAX_EXPONENT = 64

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))?", re.S)


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m.group(1) is None and m.group(2) is None:
                break  # trailing whitespace
            start = m.start(1) if m.group(1) is not None else m.start(2)
            kind = "int" if m.group(1) is not None else m.group(2)
            self.tokens.append((kind, m.group(1) or m.group(2), len(text[:start].encode())))
            pos = m.end()
        self.end = len(text.encode())
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def offset(self) -> int:
        return self.tokens[self.i][2] if self.i < len(self.tokens) else self.end

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> tuple[str, str, int]:
        if self.peek() != kind:
            found = "end of input" if self.peek() is None else repr(self.tokens[self.i][1])
            raise ParseError(f"expected {what}, found {found}", self.offset())
        return self.take()


def _coeff(lx: _Lexer) -> Fraction:
    num = int(lx.take()[1])
    if lx.peek() == "/":
        lx.take()
        _, den, off = lx.expect("int", "a denominator")
        if int(den) == 0:
            raise ParseError("zero denominator", off)
        return Fraction(num, int(den))
    return Fraction(num)


def _term(lx: _Lexer, max_exponent: int) -> tuple[int, Fraction]:
    coeff = None
    if lx.peek() == "int":
        coeff = _coeff(lx)
        if lx.peek() == "*":
            lx.take()
            if lx.peek() != "x":
                raise ParseError("expected 'x' after '*'", lx.offset())
    if lx.peek() != "x":
        if coeff is None:
            found = "end of input" if lx.peek() is None else repr(lx.tokens[lx.i][1])
            raise ParseError(f"expected a term, found {found}", lx.offset())
        return 0, coeff
    lx.take()
    exp = 1
    if lx.peek() == "^":
        lx.take()
        _, digits, off = lx.expect("int", "an exponent")
        exp = int(digits)
        if exp > max_exponent:
            raise ParseError(f"exponent {exp} exceeds the cap {max_exponent}", off)
    return exp, Fraction(1) if coeff is None else coeff


def parse_polynomial(text: str, max_exponent: int = DEFAULT_MAX_EXPONENT) -> Poly:
    lx = _Lexer(text)
    if lx.peek() is None:
        raise ParseError("empty expression", 0)
    acc: dict[int, Fraction] = {}
    sign = 1
    if lx.peek() in ("+", "-"):
        sign = -1 if lx.take()[0] == "-" else 1
    while True:
        exp, coeff = _term(lx, max_exponent)
        acc[exp] = acc.get(exp, Fraction(0)) + sign * coeff
        nxt = lx.peek()
        if nxt is None:
            break
        if nxt not in ("+", "-"):
            raise ParseError(f"unexpected {lx.tokens[lx.i][1]!r}", lx.offset())
        sign = -1 if lx.take()[0] == "-" else 1
    top = max(acc)
    return Poly(acc.get(i, Fraction(0)) for i in range(top + 1))


def format_polynomial(f: Poly) -> str:
    """Render ``f`` highest degree first in the grammar accepted by :func:`parse_polynomial`."""
    if f.is_zero():
        return "0"
    parts = []
    for i in range(f.degree, -1, -1):
        c = f[i]
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            lead = "" if mag == 1 else str(mag) + (" " if mag.denominator != 1 else "")
            body = lead + ("x" if i == 1 else f"x^{i}")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
