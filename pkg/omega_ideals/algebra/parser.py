"""Text grammar for monomial ideals.

    ideal  ::= term ("," term)*  |  "0"
    term   ::= factor ("*" factor)*
    factor ::= var ("^" int)? | "1"
"""
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from omega_ideals.algebra.monomial import Monomial, MonomialIdeal, Ring, minimalize
from omega_ideals.errors import IdealParseError, UnknownVariableError

_INDEXED = re.compile(r"x(\d+)$")
_DEFAULT = ("x", "y", "z")


@dataclass(frozen=True)
class _Factor:
    name: Optional[str]
    exponent: int
    position: int


class _Scanner:

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_spaces(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_spaces()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_end(self) -> bool:
        return self.peek() == ""

    def error(self, message: str, position: Optional[int] = None) -> IdealParseError:
        return IdealParseError(message, self.text, self.pos if position is None else position)

    def expect(self, char: str) -> None:
        if self.peek() != char:
            found = self.peek() or "end of input"
            raise self.error(f"expected '{char}', found '{found}'")
        self.pos += 1

    def integer(self) -> int:
        start = self.pos
        if self.peek() == "-":
            raise self.error("negative exponent")
        self.skip_spaces()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer exponent")
        return int(self.text[start:self.pos])

    def identifier(self) -> tuple[str, int]:
        self.skip_spaces()
        start = self.pos
        if self.pos < len(self.text) and (self.text[self.pos].isalpha() or self.text[self.pos] == "_"):
            self.pos += 1
            while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
                self.pos += 1
            return self.text[start:self.pos], start
        raise self.error(f"expected a variable or '1', found '{self.peek() or 'end of input'}'")


def _parse_factor(scanner: _Scanner) -> _Factor:
    char = scanner.peek()
    position = scanner.pos
    if char.isdigit():
        value = scanner.integer()
        if value != 1:
            raise scanner.error(f"only the constant 1 may appear as a factor, found {value}", position)
        return _Factor(None, 0, position)
    name, position = scanner.identifier()
    exponent = 1
    if scanner.peek() == "^":
        scanner.pos += 1
        exponent = scanner.integer()
    return _Factor(name, exponent, position)


def _parse_terms(text: str) -> list[list[_Factor]]:
    scanner = _Scanner(text)
    if scanner.at_end():
        raise scanner.error("empty ideal description")
    if text.strip() == "0":
        return []
    terms = []
    while True:
        term = [_parse_factor(scanner)]
        while scanner.peek() == "*":
            scanner.pos += 1
            term.append(_parse_factor(scanner))
        terms.append(term)
        if scanner.at_end():
            return terms
        scanner.expect(",")


def infer_ring(names: Iterable[str]) -> Ring:
    """x,y,z when only those letters appear, x1..xn for indexed names."""
    names = set(names)
    if names <= set(_DEFAULT):
        return Ring(_DEFAULT)
    indices = [_INDEXED.match(name) for name in names]
    if all(indices):
        top = max(int(match.group(1)) for match in indices)
        if top >= 1 and all(int(match.group(1)) >= 1 for match in indices):
            return Ring(tuple(f"x{i}" for i in range(1, top + 1)))
    unknown = sorted(names - set(_DEFAULT))
    raise UnknownVariableError(f"cannot infer a ring for variables {unknown}; declare them with --vars")


def parse_ring(spec: str) -> Ring:
    """Comma-separated variable names; an empty list or a repeated name is a parse error."""
    names: list[str] = []
    offset = 0
    for piece in spec.split(","):
        name = piece.strip()
        if name in names:
            raise IdealParseError(f"variable '{name}' is declared twice", spec, offset + piece.index(name))
        if name:
            names.append(name)
        offset += len(piece) + 1
    if not names:
        raise IdealParseError("no variable names declared", spec)
    return Ring(tuple(names))


def _to_monomial(ring: Ring, term: Sequence[_Factor], text: str) -> Monomial:
    exps = [0] * ring.n
    for factor in term:
        if factor.name is None:
            continue
        if factor.name not in ring.names:
            raise UnknownVariableError(f"unknown variable '{factor.name}'", text, factor.position)
        exps[ring.index(factor.name)] += factor.exponent
    return Monomial(ring, tuple(exps))


def parse_ideal(text: str, ring: Optional[Ring] = None) -> MonomialIdeal:
    terms = _parse_terms(text)
    if ring is None:
        ring = infer_ring(f.name for term in terms for f in term if f.name is not None)
    if not terms:
        return ring.zero_ideal()
    return minimalize((_to_monomial(ring, term, text) for term in terms), ring)


def parse_monomial(text: str, ring: Ring) -> Monomial:
    terms = _parse_terms(text)
    if len(terms) != 1:
        raise IdealParseError("expected a single monomial", text, 0)
    return _to_monomial(ring, terms[0], text)
