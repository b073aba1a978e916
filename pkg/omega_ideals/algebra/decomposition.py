"""Standard and canonical primary decompositions of monomial ideals.

A standard component is stored as a length-n tuple of pure-power exponents, 0 meaning
the variable does not occur. Grouping standard components by radical and intersecting
each group gives the canonical primary decomposition.
"""
from dataclasses import dataclass
from omega_ideals._compat import StrEnum
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence, Union

from omega_ideals.algebra.monomial import (
    Exponents,
    MonomialIdeal,
    Ring,
    _canonical_key,
    intersect_all,
    is_primary,
    radical,
    support_variables,
)
from omega_ideals.errors import PreconditionError
from omega_ideals.logging_config import get_logger

logger = get_logger(__name__)


class ComponentKind(StrEnum):
    IRREDUCIBLE = "irreducible"
    PRIMARY = "primary"


class PosetShape(StrEnum):
    SINGLETON = "singleton"
    ANTICHAIN = "antichain"
    CHAIN = "chain"
    HAS_UNIQUE_TOP = "has_unique_top"
    GENERAL = "general"


def _prime_key(prime: frozenset[int]) -> tuple[int, tuple[int, ...]]:
    return len(prime), tuple(sorted(prime))


@dataclass(frozen=True, slots=True)
class IrreducibleComponent:
    """(x_{i_1}^{d_1}, ..., x_{i_m}^{d_m}) with distinct variables."""
    ring: Ring
    powers: Exponents

    def __post_init__(self):
        if len(self.powers) != self.ring.n or any(d < 0 for d in self.powers):
            raise PreconditionError(f"Pure-power vector {self.powers} does not fit {self.ring}")
        if not any(self.powers):
            raise PreconditionError("An irreducible component needs at least one pure power")

    @classmethod
    def from_ideal(cls, ideal: MonomialIdeal) -> "IrreducibleComponent":
        powers = [0] * ideal.ring.n
        for exps in ideal.exponents:
            support = [i for i, e in enumerate(exps) if e > 0]
            if len(support) != 1 or powers[support[0]]:
                raise PreconditionError(f"({ideal}) is not generated by pure powers of distinct variables")
            powers[support[0]] = exps[support[0]]
        return cls(ideal.ring, tuple(powers))

    @property
    def ideal(self) -> MonomialIdeal:
        return self.ring.ideal(
            tuple(d if j == i else 0 for j in range(self.ring.n)) for i, d in enumerate(self.powers) if d
        )

    @property
    def prime(self) -> frozenset[int]:
        return frozenset(i for i, d in enumerate(self.powers) if d)

    @property
    def exponents(self) -> tuple[int, ...]:
        """d_1, ..., d_m in variable order."""
        return tuple(d for d in self.powers if d)

    @property
    def kind(self) -> ComponentKind:
        return ComponentKind.IRREDUCIBLE

    def __str__(self) -> str:
        return str(self.ideal)


@dataclass(frozen=True, slots=True)
class PrimaryComponent:
    ideal: MonomialIdeal
    prime: frozenset[int]

    def __post_init__(self):
        if not is_primary(self.ideal) or support_variables(radical(self.ideal)) != self.prime:
            raise PreconditionError(f"{self.ideal} is not primary to the prime on {sorted(self.prime)}")

    @classmethod
    def from_ideal(cls, ideal: MonomialIdeal) -> "PrimaryComponent":
        return cls(ideal, support_variables(radical(ideal)))

    @property
    def kind(self) -> ComponentKind:
        return ComponentKind.PRIMARY

    def __str__(self) -> str:
        return str(self.ideal)


Component = Union[IrreducibleComponent, PrimaryComponent]


def _component_key(component: Component):
    return _prime_key(component.prime), tuple(_canonical_key(e) for e in component.ideal.exponents)


@dataclass(frozen=True, slots=True)
class Decomposition:
    ring: Ring
    components: tuple[Component, ...]
    irredundant: bool = True

    def __iter__(self) -> Iterator[Component]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    @property
    def primes(self) -> tuple[frozenset[int], ...]:
        return tuple(sorted({c.prime for c in self.components}, key=_prime_key))

    def intersection(self) -> MonomialIdeal:
        return intersect_all([c.ideal for c in self.components])

    def __str__(self) -> str:
        return " ∩ ".join(str(c) for c in self.components)


def _require_proper(ideal: MonomialIdeal) -> None:
    if not ideal.is_proper:
        raise PreconditionError(f"Decompositions need a proper nonzero ideal, got {ideal}")


def _contains(powers: Exponents, exps: Exponents) -> bool:
    return any(d and e >= d for d, e in zip(powers, exps))


def _is_subcomponent(small: Exponents, big: Exponents) -> bool:
    """The irreducible ideal of `small` lies inside the one of `big`."""
    return all(not d or (c and c <= d) for d, c in zip(small, big))


def _prune(components: set[Exponents]) -> set[Exponents]:
    return {c for c in components if not any(d != c and _is_subcomponent(d, c) for d in components)}


@lru_cache(maxsize=4096)
def _standard_powers(exponents: tuple[Exponents, ...]) -> tuple[Exponents, ...]:
    n = len(exponents[0])
    components: set[Exponents] = {(0,) * n}
    for u in exponents:
        split: set[Exponents] = set()
        for c in components:
            if any(c) and _contains(c, u):
                split.add(c)
                continue
            for v, e in enumerate(u):
                if e:
                    split.add(c[:v] + (e,) + c[v + 1:])
        components = _prune(split)
    return tuple(components)


def standard_decomposition(ideal: MonomialIdeal) -> Decomposition:
    """The unique irredundant decomposition into pure-power ideals.

    Generators are added one at a time: every component C not containing u becomes
    C + x_v^{u_v} for v in supp(u), then components containing another one are dropped.
    """
    _require_proper(ideal)
    components = [IrreducibleComponent(ideal.ring, p) for p in _standard_powers(ideal.exponents)]
    components.sort(key=_component_key)
    logger.debug(f"standard decomposition of {ideal}: {len(components)} components")
    return Decomposition(ideal.ring, tuple(components))


def staircase(ideal: MonomialIdeal) -> tuple[tuple[int, int], ...]:
    """(a_i, b_i) of G(I) in two variables, a_i strictly decreasing and b_i strictly increasing."""
    if ideal.ring.n != 2:
        raise PreconditionError(f"A staircase needs two variables, {ideal.ring} has {ideal.ring.n}")
    if ideal.is_zero:
        raise PreconditionError("The zero ideal has no staircase")
    return tuple((a, b) for a, b in sorted(ideal.exponents, reverse=True))


def staircase_decomposition_2d(ideal: MonomialIdeal) -> Decomposition:
    """x^{a_r}R ∩ y^{b_1}R ∩ (x^{a_1}, y^{b_2}) ∩ ... ∩ (x^{a_{r-1}}, y^{b_r})."""
    _require_proper(ideal)
    steps = staircase(ideal)
    powers = [(steps[i][0], steps[i + 1][1]) for i in range(len(steps) - 1)]
    if steps[-1][0]:
        powers.append((steps[-1][0], 0))
    if steps[0][1]:
        powers.append((0, steps[0][1]))
    components = sorted((IrreducibleComponent(ideal.ring, p) for p in powers), key=_component_key)
    return Decomposition(ideal.ring, tuple(components))


def canonical_primary_decomposition(ideal: MonomialIdeal) -> Decomposition:
    """Standard components grouped by radical, each group intersected."""
    groups: dict[frozenset[int], list[MonomialIdeal]] = {}
    for component in standard_decomposition(ideal):
        groups.setdefault(component.prime, []).append(component.ideal)
    components = sorted(
        (PrimaryComponent(intersect_all(members), prime) for prime, members in groups.items()),
        key=_component_key,
    )
    return Decomposition(ideal.ring, tuple(components))


def primary_components(decomposition: Decomposition) -> tuple[PrimaryComponent, ...]:
    return tuple(c if isinstance(c, PrimaryComponent) else PrimaryComponent(c.ideal, c.prime)
                 for c in decomposition)



def associated_primes(ideal: MonomialIdeal) -> tuple[frozenset[int], ...]:
    return canonical_primary_decomposition(ideal).primes


def poset_shape(primes: Sequence[frozenset[int]]) -> PosetShape:
    if len(primes) == 1:
        return PosetShape.SINGLETON
    comparable = [p <= q or q <= p for p, q in combinations(primes, 2)]
    if not any(comparable):
        return PosetShape.ANTICHAIN
    if all(comparable):
        return PosetShape.CHAIN
    if unique_top(primes) is not None:
        return PosetShape.HAS_UNIQUE_TOP
    return PosetShape.GENERAL


def unique_top(primes: Sequence[frozenset[int]]) -> frozenset[int] | None:
    """The prime containing every other one, if there is one."""
    for p in primes:
        if all(q <= p for q in primes):
            return p
    return None


def ass_poset_shape(ideal: MonomialIdeal) -> PosetShape:
    return poset_shape(associated_primes(ideal))


def dim_quotient(ideal: MonomialIdeal) -> int:
    """n minus the least height among the associated primes."""
    return ideal.ring.n - min(len(p) for p in associated_primes(ideal))
