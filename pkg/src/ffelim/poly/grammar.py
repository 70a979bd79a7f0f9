"""Text grammar for polynomials.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' uint)?
    atom   := uint | var | '(' expr ')'
    var    := 'x' uint | 't' | 'x'

``t`` names x0 and a bare ``x`` names x1 in arity-2 contexts; with arity 1
a bare ``x`` names x0. Whitespace is insignificant.
"""

import math
import re
from dataclasses import dataclass
from typing import List, Optional

from ..config import MAX_EXPANDED_TERMS, MAX_EXPONENT
from ..errors import ExponentOverflow, PolySyntaxError, UnknownVariable
from ..field.prime import PrimeModulus
from .mpoly import MultiPoly, m_render

__all__ = ["m_parse", "m_render"]

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x\d*|t)|(?P<op>[-+*^()]))")


@dataclass(frozen=True)
class _Token:
    kind: str  # "num", "var", "op" or "end"
    text: str
    position: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            offending = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolySyntaxError(
                f"Unexpected character {text[offending]!r}", offending, text
            )
        kind = match.lastgroup
        tokens.append(_Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, arity: int, modulus: PrimeModulus):
        self.text = text
        self.arity = arity
        self.modulus = modulus
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def _advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _accept(self, op: str) -> Optional[_Token]:
        token = self.current
        if token.kind == "op" and token.text == op:
            return self._advance()
        return None

    def _fail(self, message: str) -> PolySyntaxError:
        token = self.current
        found = "end of input" if token.kind == "end" else repr(token.text)
        return PolySyntaxError(f"{message}, found {found}", token.position, self.text)

    def parse(self) -> MultiPoly:
        result = self._expr()
        if self.current.kind != "end":
            raise self._fail("Expected '+', '-', '*' or end of input")
        return result

    def _expr(self) -> MultiPoly:
        negate = False
        if self._accept("-"):
            negate = True
        else:
            self._accept("+")
        result = self._term()
        if negate:
            result = -result
        while True:
            if self._accept("+"):
                result = result + self._term()
            elif self._accept("-"):
                result = result - self._term()
            else:
                return result

    def _term(self) -> MultiPoly:
        result = self._factor()
        while self._accept("*"):
            result = result * self._factor()
        return result

    def _factor(self) -> MultiPoly:
        base = self._atom()
        if self._accept("^"):
            token = self.current
            if token.kind != "num":
                raise self._fail("Expected exponent")
            self._advance()
            e = int(token.text)
            if e > MAX_EXPONENT:
                raise ExponentOverflow(
                    f"Exponent {e} exceeds 2^31-1 at position {token.position}"
                )
            # Multinomial bound on the expanded term count
            if len(base) > 1 and math.comb(e + len(base) - 1, len(base) - 1) > MAX_EXPANDED_TERMS:
                raise ExponentOverflow(
                    f"Expanding a {len(base)}-term base to the power {e} exceeds "
                    f"{MAX_EXPANDED_TERMS} terms at position {token.position}"
                )
            base = base ** e
        return base

    def _atom(self) -> MultiPoly:
        token = self.current
        if token.kind == "num":
            self._advance()
            return MultiPoly.constant(int(token.text), self.arity, self.modulus)
        if token.kind == "var":
            self._advance()
            return MultiPoly.var(self._resolve(token), self.arity, self.modulus)
        if self._accept("("):
            inner = self._expr()
            if not self._accept(")"):
                raise self._fail("Expected ')'")
            return inner
        raise self._fail("Expected number, variable or '('")

    def _resolve(self, token: _Token) -> int:
        name = token.text
        if name == "t":
            if self.arity != 2:
                raise UnknownVariable(
                    f"Alias 't' needs arity 2, got {self.arity} (position {token.position})"
                )
            return 0
        if name == "x":
            if self.arity == 2:
                return 1
            if self.arity == 1:
                return 0
            raise UnknownVariable(
                f"Bare 'x' is ambiguous with arity {self.arity} (position {token.position})"
            )
        index = int(name[1:])
        if index >= self.arity:
            raise UnknownVariable(
                f"Variable {name} outside arity {self.arity} (position {token.position})"
            )
        return index


def m_parse(text: str, arity: int, modulus: PrimeModulus) -> MultiPoly:
    """Parse polynomial text into a MultiPoly with coefficients reduced mod p.

    Raises:
        PolySyntaxError: If the text does not match the grammar
        UnknownVariable: If a variable lies outside the arity
        ExponentOverflow: If an exponent exceeds 2^31-1
    """
    return _Parser(text, arity, modulus).parse()
