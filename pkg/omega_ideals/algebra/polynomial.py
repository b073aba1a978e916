"""Sparse polynomials with exact rational coefficients.

They exist to carry absorbing witnesses: a polynomial lies in a monomial ideal iff its
whole support does, so coefficients only matter through cancellation.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from omega_ideals.algebra.monomial import (
    Exponents,
    Monomial,
    MonomialIdeal,
    Ring,
    _canonical_key,
    _check_ring,
    _render_exponents,
)

Coefficient = Union[int, Fraction]


def _clean(terms: Mapping[Exponents, Coefficient]) -> tuple[tuple[Exponents, Coefficient], ...]:
    return tuple(sorted(((e, c) for e, c in terms.items() if c != 0), key=lambda t: _canonical_key(t[0])))


@dataclass(frozen=True, slots=True)
class SparsePolynomial:
    ring: Ring
    terms: tuple[tuple[Exponents, Coefficient], ...]

    @classmethod
    def from_terms(cls, ring: Ring, terms: Mapping[Exponents, Coefficient]) -> "SparsePolynomial":
        return cls(ring, _clean(terms))

    @classmethod
    def from_monomial(cls, f: Monomial, coefficient: Coefficient = 1) -> "SparsePolynomial":
        return cls.from_terms(f.ring, {f.exps: coefficient})

    @classmethod
    def one(cls, ring: Ring) -> "SparsePolynomial":
        return cls.from_monomial(ring.unit())

    @classmethod
    def variable(cls, ring: Ring, i: int) -> "SparsePolynomial":
        return cls.from_monomial(ring.variable(i))

    @classmethod
    def linear_form(cls, ring: Ring, indices: Iterable[int]) -> "SparsePolynomial":
        """x_{i_1} + ... + x_{i_l}."""
        return cls.from_terms(ring, {ring.variable(i).exps: 1 for i in indices})

    @classmethod
    def sum_of_monomials(cls, monomials: Sequence[Monomial]) -> "SparsePolynomial":
        ring = monomials[0].ring
        terms: dict[Exponents, Coefficient] = {}
        for m in monomials:
            _check_ring(ring, m.ring)
            terms[m.exps] = terms.get(m.exps, 0) + 1
        return cls.from_terms(ring, terms)

    def as_dict(self) -> dict[Exponents, Coefficient]:
        return dict(self.terms)

    def support(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(self.ring, e) for e, _ in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=0)

    def as_monomial(self) -> Monomial | None:
        """The monomial itself when this is a single term with coefficient one."""
        if len(self.terms) == 1 and self.terms[0][1] == 1:
            return Monomial(self.ring, self.terms[0][0])
        return None

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        _check_ring(self.ring, other.ring)
        terms = self.as_dict()
        for e, c in other.terms:
            terms[e] = terms.get(e, 0) + c
        return SparsePolynomial.from_terms(self.ring, terms)

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        _check_ring(self.ring, other.ring)
        return SparsePolynomial.from_terms(self.ring, _multiply(self.as_dict(), other.terms))

    def __pow__(self, m: int) -> "SparsePolynomial":
        result = SparsePolynomial.one(self.ring)
        for _ in range(m):
            result = result * self
        return result

    def normal_form(self, ideal: MonomialIdeal) -> "SparsePolynomial":
        """Drop every term lying in the ideal; zero iff the polynomial belongs to it."""
        _check_ring(self.ring, ideal.ring)
        return SparsePolynomial(self.ring, tuple((e, c) for e, c in self.terms if not ideal.contains_exponents(e)))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.terms:
            body = _render_exponents(self.ring, e)
            if c == 1:
                pieces.append(body)
            elif c == -1:
                pieces.append(f"-{body}")
            elif body == "1":
                pieces.append(str(c))
            else:
                pieces.append(f"{c}*{body}")
        return " + ".join(pieces).replace("+ -", "- ")


def _multiply(left: Mapping[Exponents, Coefficient],
              right: Iterable[tuple[Exponents, Coefficient]]) -> dict[Exponents, Coefficient]:
    result: dict[Exponents, Coefficient] = {}
    right = tuple(right)
    for e1, c1 in left.items():
        for e2, c2 in right:
            e = tuple(a + b for a, b in zip(e1, e2))
            result[e] = result.get(e, 0) + c1 * c2
    return result


def reduced_product(factors: Sequence[SparsePolynomial], ideal: MonomialIdeal) -> SparsePolynomial:
    """Normal form of the product of factors modulo a monomial ideal.

    Terms in the ideal are dropped after every multiplication; reduction modulo a
    monomial ideal is a ring map, so this equals the normal form of the full product.
    """
    ring = ideal.ring
    membership: dict[Exponents, bool] = {}

    def outside(e: Exponents) -> bool:
        if e not in membership:
            membership[e] = ideal.contains_exponents(e)
        return not membership[e]

    acc: dict[Exponents, Coefficient] = {(0,) * ring.n: 1}
    acc = {e: c for e, c in acc.items() if outside(e)}
    for f in factors:
        if not acc:
            break
        _check_ring(ring, f.ring)
        acc = {e: c for e, c in _multiply(acc, f.terms).items() if c != 0 and outside(e)}
    return SparsePolynomial.from_terms(ring, acc)


def contains_poly(ideal: MonomialIdeal, f: SparsePolynomial) -> bool:
    _check_ring(ideal.ring, f.ring)
    return all(ideal.contains_exponents(e) for e, _ in f.terms)


def product_in(factors: Sequence[SparsePolynomial], ideal: MonomialIdeal) -> bool:
    return reduced_product(factors, ideal).is_zero
