"""Parser for Laurent polynomials such as ``2*x1^2*x2^-1 - x2 + 1``.

Grammar::

    poly   := sign? term (sign term)*
    term   := coeff | coeff '*' mon | mon
    mon    := factor ('*' factor)*
    factor := 'x' INT ('^' '-'? INT)?
    coeff  := INT ('/' INT)?

Whitespace is ignored between tokens.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .polytope import LaurentPolynomial

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x\d+)|(?P<op>[-+*/^]))")


class PolynomialSyntaxError(ValueError):
    def __init__(self, text: str, pos: int, expected: str):
        self.text, self.pos, self.expected = text, pos, expected
        super().__init__(f"at position {pos}: expected {expected}\n  {text}\n  {' ' * pos}^")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                start = len(text) - len(text[pos:].lstrip())
                raise PolynomialSyntaxError(text, start, "a number, a variable x<i>, or one of + - * / ^")
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, kind: str, value: str | None, what: str):
        tok = self.peek()
        if tok[0] != kind or (value is not None and tok[1] != value):
            raise PolynomialSyntaxError(self.text, tok[2], what)
        return self.take()

    def poly(self) -> list[tuple[dict[int, int], Fraction]]:
        terms = []
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        terms.append(self.term(sign))
        while True:
            tok = self.peek()
            if tok[0] == "end":
                return terms
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                terms.append(self.term(-1 if tok[1] == "-" else 1))
            else:
                raise PolynomialSyntaxError(self.text, tok[2], "'+', '-' or end of input")

    def term(self, sign: int) -> tuple[dict[int, int], Fraction]:
        tok = self.peek()
        coeff = Fraction(sign)
        exps: dict[int, int] = {}
        if tok[0] == "num":
            coeff *= self.coeff()
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "*":
                self.take()
                self.monomial(exps)
        elif tok[0] == "var":
            self.monomial(exps)
        else:
            raise PolynomialSyntaxError(self.text, tok[2], "a coefficient or a variable x<i>")
        return exps, coeff

    def coeff(self) -> Fraction:
        num = int(self.take()[1])
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "/":
            self.take()
            den = int(self.expect("num", None, "a denominator")[1])
            if den == 0:
                raise PolynomialSyntaxError(self.text, tok[2], "a nonzero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def monomial(self, exps: dict[int, int]) -> None:
        while True:
            _, name, pos = self.expect("var", None, "a variable x<i>")
            idx = int(name[1:])
            if idx < 1:
                raise PolynomialSyntaxError(self.text, pos, "a variable index >= 1")
            e = 1
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "^":
                self.take()
                neg = self.peek()
                s = 1
                if neg[0] == "op" and neg[1] == "-":
                    self.take()
                    s = -1
                e = s * int(self.expect("num", None, "an integer exponent")[1])
            exps[idx] = exps.get(idx, 0) + e
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                continue
            return


def parse_polynomial(text: str, nvars: int | None = None) -> LaurentPolynomial:
    """Parse ``text``; the number of variables is the largest index used unless given."""
    if not text.strip():
        raise PolynomialSyntaxError(text, 0, "a polynomial")
    terms = _Parser(text).poly()
    used = max((i for exps, _ in terms for i in exps), default=1)
    if nvars is None:
        nvars = used
    elif used > nvars:
        raise ValueError(f"variable x{used} used but only {nvars} variables declared")
    vecs = [(tuple(exps.get(i, 0) for i in range(1, nvars + 1)), c) for exps, c in terms]
    try:
        return LaurentPolynomial(vecs)
    except ValueError as exc:
        raise ValueError(f"{text!r}: {exc}") from None
