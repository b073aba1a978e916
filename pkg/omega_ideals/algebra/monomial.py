"""Exact monomial and monomial-ideal arithmetic.

Every ideal is stored through its minimal generating set G(I), kept in one canonical
order: ascending total degree, ties broken lexicographically with x_1 heaviest first.
Membership is purely combinatorial: a monomial lies in I iff some generator divides it.
"""
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional, Sequence

from omega_ideals.errors import PreconditionError, RingMismatchError

Exponents = tuple[int, ...]

_DEFAULT_NAMES = ("x", "y", "z")


def _canonical_key(exps: Exponents) -> tuple[int, tuple[int, ...]]:
    return sum(exps), tuple(-e for e in exps)


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimal_exponents(exponents: Iterable[Exponents]) -> tuple[Exponents, ...]:
    kept: list[Exponents] = []
    # ascending degree puts every divisor before its multiples
    for exps in sorted(set(exponents), key=_canonical_key):
        if not any(_divides(k, exps) for k in kept):
            kept.append(exps)
    return tuple(kept)


@dataclass(frozen=True, slots=True)
class Ring:
    """k[x_1, ..., x_n]; the coefficient field never enters any computation."""
    names: tuple[str, ...]

    def __post_init__(self):
        if len(self.names) < 1:
            raise PreconditionError("A ring needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise PreconditionError(f"Variable names must be distinct: {self.names}")

    @classmethod
    def default(cls, n: int) -> "Ring":
        if n <= len(_DEFAULT_NAMES):
            return cls(_DEFAULT_NAMES[:n])
        return cls(tuple(f"x{i}" for i in range(1, n + 1)))

    @classmethod
    def of(cls, *names: str) -> "Ring":
        return cls(tuple(names))

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def monomial(self, exps: Sequence[int]) -> "Monomial":
        return Monomial(self, tuple(exps))

    def unit(self) -> "Monomial":
        return Monomial(self, (0,) * self.n)

    def variable(self, i: int) -> "Monomial":
        return Monomial(self, tuple(1 if j == i else 0 for j in range(self.n)))

    def ideal(self, exponents: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return MonomialIdeal.from_exponents(self, exponents)

    def zero_ideal(self) -> "MonomialIdeal":
        return MonomialIdeal._canonical(self, ())

    def unit_ideal(self) -> "MonomialIdeal":
        return MonomialIdeal._canonical(self, ((0,) * self.n,))

    def prime(self, indices: Iterable[int]) -> "MonomialIdeal":
        """The monomial prime generated by the listed variables."""
        return self.ideal(self.variable(i).exps for i in sorted(set(indices)))

    def maximal_ideal(self) -> "MonomialIdeal":
        return self.prime(range(self.n))

    def __str__(self) -> str:
        return f"k[{','.join(self.names)}]"


@dataclass(frozen=True, slots=True)
class Monomial:
    ring: Ring
    exps: Exponents

    def __post_init__(self):
        if len(self.exps) != self.ring.n:
            raise PreconditionError(f"Exponent vector {self.exps} does not fit {self.ring}")
        if any(e < 0 for e in self.exps):
            raise PreconditionError(f"Negative exponent in {self.exps}")

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exps) if e > 0)

    @property
    def is_unit(self) -> bool:
        return not any(self.exps)

    def divides(self, other: "Monomial") -> bool:
        return divides(self, other)

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_ring(self.ring, other.ring)
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, m: int) -> "Monomial":
        return Monomial(self.ring, tuple(m * e for e in self.exps))

    def __str__(self) -> str:
        return render_monomial(self)


@dataclass(frozen=True, slots=True)
class MonomialIdeal:
    """A monomial ideal held as its canonical minimal generating set G(I).

    The zero ideal has no generators, the unit ideal is generated by the unit monomial.
    """
    ring: Ring
    exponents: tuple[Exponents, ...]

    def __post_init__(self):
        for exps in self.exponents:
            if len(exps) != self.ring.n or any(e < 0 for e in exps):
                raise PreconditionError(f"Exponent vector {exps} does not fit {self.ring}")
        object.__setattr__(self, "exponents", _minimal_exponents(tuple(e) for e in self.exponents))

    @classmethod
    def _canonical(cls, ring: Ring, exponents: tuple[Exponents, ...]) -> "MonomialIdeal":
        # callers guarantee exponents are already minimal and sorted
        ideal = object.__new__(cls)
        object.__setattr__(ideal, "ring", ring)
        object.__setattr__(ideal, "exponents", exponents)
        return ideal

    @classmethod
    def from_exponents(cls, ring: Ring, exponents: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return cls(ring, tuple(tuple(e) for e in exponents))

    @property
    def gens(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(self.ring, e) for e in self.exponents)

    @property
    def is_zero(self) -> bool:
        return not self.exponents

    @property
    def is_unit(self) -> bool:
        return len(self.exponents) == 1 and not any(self.exponents[0])

    @property
    def is_proper(self) -> bool:
        return not self.is_zero and not self.is_unit

    @property
    def is_principal(self) -> bool:
        return len(self.exponents) == 1

    @property
    def max_degree(self) -> int:
        return max((sum(e) for e in self.exponents), default=0)

    def contains_exponents(self, exps: Exponents) -> bool:
        return any(_divides(g, exps) for g in self.exponents)

    def __contains__(self, item: Monomial) -> bool:
        return contains_monomial(self, item)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)

    def __pow__(self, m: int) -> "MonomialIdeal":
        return power(self, m)

    def issubset(self, other: "MonomialIdeal") -> bool:
        return is_subideal(self, other)

    def __str__(self) -> str:
        return f"({render_ideal(self)})"


def _check_ring(left: Ring, right: Ring) -> None:
    if left != right:
        raise RingMismatchError(left, right)


def divides(a: Monomial, b: Monomial) -> bool:
    _check_ring(a.ring, b.ring)
    return _divides(a.exps, b.exps)


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_ring(a.ring, b.ring)
    return Monomial(a.ring, tuple(max(x, y) for x, y in zip(a.exps, b.exps)))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_ring(a.ring, b.ring)
    return Monomial(a.ring, tuple(min(x, y) for x, y in zip(a.exps, b.exps)))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """Exact division a / b."""
    if not divides(b, a):
        raise PreconditionError(f"{render_monomial(b)} does not divide {render_monomial(a)}")
    return Monomial(a.ring, tuple(x - y for x, y in zip(a.exps, b.exps)))


def minimalize(gens: Iterable[Monomial], ring: Optional[Ring] = None) -> MonomialIdeal:
    gens = list(gens)
    if ring is None:
        if not gens:
            raise PreconditionError("An empty generator list needs an explicit ring")
        ring = gens[0].ring
    for g in gens:
        _check_ring(ring, g.ring)
    return MonomialIdeal._canonical(ring, _minimal_exponents(g.exps for g in gens))


def contains_monomial(ideal: MonomialIdeal, f: Monomial) -> bool:
    _check_ring(ideal.ring, f.ring)
    return ideal.contains_exponents(f.exps)


def is_subideal(i: MonomialIdeal, j: MonomialIdeal) -> bool:
    """I is contained in J, tested generator by generator."""
    _check_ring(i.ring, j.ring)
    return all(j.contains_exponents(e) for e in i.exponents)


def ideal_sum(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _check_ring(i.ring, j.ring)
    return MonomialIdeal._canonical(i.ring, _minimal_exponents(i.exponents + j.exponents))


def product(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _check_ring(i.ring, j.ring)
    return MonomialIdeal._canonical(i.ring, _minimal_exponents(
        tuple(a + b for a, b in zip(u, v)) for u in i.exponents for v in j.exponents
    ))


def power(ideal: MonomialIdeal, m: int) -> MonomialIdeal:
    if m < 1:
        raise PreconditionError(f"Ideal powers need m >= 1, got {m}")
    result = ideal
    for _ in range(m - 1):
        result = product(result, ideal)
    return result


def intersect(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _check_ring(i.ring, j.ring)
    return MonomialIdeal._canonical(i.ring, _minimal_exponents(
        tuple(max(a, b) for a, b in zip(u, v)) for u in i.exponents for v in j.exponents
    ))


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    if not ideals:
        raise PreconditionError("The empty intersection needs an explicit ring")
    return reduce(intersect, ideals)


def colon(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    """I : J, the intersection of I : v over v in G(J)."""
    _check_ring(i.ring, j.ring)
    if j.is_zero:
        raise PreconditionError("Colon by the zero ideal is undefined here")
    quotients = [
        MonomialIdeal._canonical(i.ring, _minimal_exponents(
            tuple(max(a - b, 0) for a, b in zip(u, v)) for u in i.exponents
        ))
        for v in j.exponents
    ]
    return intersect_all(quotients)


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal._canonical(ideal.ring, _minimal_exponents(
        tuple(min(e, 1) for e in exps) for exps in ideal.exponents
    ))


def factor_out_gcd(ideal: MonomialIdeal) -> tuple[Monomial, MonomialIdeal]:
    """Write I = h * J with h the gcd of G(I), so the gcd of G(J) is the unit."""
    if ideal.is_zero:
        raise PreconditionError("The zero ideal has no generator gcd")
    h = tuple(min(column) for column in zip(*ideal.exponents))
    rest = tuple(tuple(a - b for a, b in zip(u, h)) for u in ideal.exponents)
    # dividing every generator by the same monomial keeps the order and minimality
    return Monomial(ideal.ring, h), MonomialIdeal._canonical(ideal.ring, _minimal_exponents(rest))


def support_variables(ideal: MonomialIdeal) -> frozenset[int]:
    return frozenset(i for exps in ideal.exponents for i, e in enumerate(exps) if e > 0)


def is_primary(ideal: MonomialIdeal) -> bool:
    """Primary iff every variable appearing in G(I) also appears as a pure power in G(I)."""
    if ideal.is_unit:
        return False
    pure = {exps.index(max(exps)) for exps in ideal.exponents if sum(1 for e in exps if e > 0) == 1}
    return support_variables(ideal) <= pure


def is_squarefree(ideal: MonomialIdeal) -> bool:
    return all(e <= 1 for exps in ideal.exponents for e in exps)


def render_monomial(f: Monomial) -> str:
    return _render_exponents(f.ring, f.exps)


def _render_exponents(ring: Ring, exps: Exponents) -> str:
    factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(ring.names, exps) if e > 0]
    return "*".join(factors) if factors else "1"


def render_ideal(ideal: MonomialIdeal) -> str:
    if ideal.is_zero:
        return "0"
    return ", ".join(_render_exponents(ideal.ring, e) for e in ideal.exponents)
