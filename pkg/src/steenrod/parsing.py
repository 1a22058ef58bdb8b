"""Parsers for the two surface syntaxes.

Sq expressions::

    expr := term ('+' term)*
    term := '1' | ('Sq' nat)+          (nat >= 1; Sq0 is rejected)

Polynomials::

    poly   := mono ('+' mono)*
    mono   := '1' | factor ('*' factor)*
    factor := 't' idx ('^' nat)?       (idx >= 1)

Whitespace is free around tokens.  As an extension, the single token
``0`` denotes the zero element in both grammars, so printing and
parsing round-trip on every element.  Errors carry the offending
position.
"""

from __future__ import annotations

import re

from .adem import AdemElement, Word
from .poly import Monomial, PolyElement


class ParseError(ValueError):
    """A syntax error with the position (0-based column) it occurred at."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at column {position})")
        self.message = message
        self.position = position


_WS_RE = re.compile(r"\s*")
_SQ_RE = re.compile(r"Sq(\d+)")
_VAR_RE = re.compile(r"t(\d+)")
_NAT_RE = re.compile(r"\d+")


class _Scanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        self.pos = _WS_RE.match(self.text, self.pos).end()

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def take(self, literal: str) -> bool:
        self.skip_ws()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def match(self, pattern: re.Pattern) -> re.Match | None:
        self.skip_ws()
        m = pattern.match(self.text, self.pos)
        if m:
            self.pos = m.end()
        return m

    def error(self, message: str) -> ParseError:
        self.skip_ws()
        return ParseError(message, self.pos)


def parse_sq(text: str) -> AdemElement:
    """Parse a Sq expression; duplicate terms cancel mod 2."""
    if text.strip() == "0":
        return AdemElement.zero()
    scanner = _Scanner(text)
    words: frozenset[Word] = frozenset()
    while True:
        words ^= {_parse_sq_term(scanner)}
        if scanner.at_end():
            return AdemElement(words)
        if not scanner.take("+"):
            raise scanner.error("expected '+' or end of expression")


def _parse_sq_term(scanner: _Scanner) -> Word:
    if scanner.take("1"):
        return ()
    exponents: list[int] = []
    while True:
        scanner.skip_ws()
        start = scanner.pos
        m = scanner.match(_SQ_RE)
        if not m:
            break
        value = int(m.group(1))
        if value == 0:
            raise ParseError("Sq0 is not allowed; write 1 for the identity", start)
        exponents.append(value)
    if not exponents:
        raise scanner.error("expected a term: '1' or a sequence of SqN factors")
    return tuple(exponents)


def parse_poly(text: str) -> PolyElement:
    """Parse a polynomial over F2[t1..tk]; duplicate monomials cancel."""
    if text.strip() == "0":
        return PolyElement.zero()
    scanner = _Scanner(text)
    monomials: frozenset[Monomial] = frozenset()
    while True:
        monomials ^= {_parse_poly_mono(scanner)}
        if scanner.at_end():
            return PolyElement(monomials)
        if not scanner.take("+"):
            raise scanner.error("expected '+' or end of polynomial")


def _parse_poly_mono(scanner: _Scanner) -> Monomial:
    if scanner.take("1"):
        return ()
    exponents: dict[int, int] = {}
    while True:
        scanner.skip_ws()
        start = scanner.pos
        m = scanner.match(_VAR_RE)
        if not m:
            raise scanner.error("expected a factor like t1 or t2^3")
        index = int(m.group(1))
        if index == 0:
            raise ParseError("variables are numbered from t1", start)
        exp = 1
        if scanner.take("^"):
            e = scanner.match(_NAT_RE)
            if not e:
                raise scanner.error("expected an exponent after '^'")
            exp = int(e.group(0))
        if exp:
            exponents[index] = exponents.get(index, 0) + exp
        if not scanner.take("*"):
            break
    return tuple(sorted(exponents.items()))
