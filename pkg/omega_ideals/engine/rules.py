"""Exact rules and the bounds fallback the coordinator routes a gcd-free ideal to.

Every rule receives the same RuleContext and answers with an OmegaResult for J.
"""
from dataclasses import dataclass
from typing import Callable

import networkx as nx

from omega_ideals.algebra.decomposition import (
    Decomposition,
    IrreducibleComponent,
    PrimaryComponent,
    canonical_primary_decomposition,
    poset_shape,
    PosetShape,
    staircase,
    standard_decomposition,
    unique_top,
)
from omega_ideals.algebra.monomial import MonomialIdeal, intersect_all
from omega_ideals.engine.noether import best_irreducible, noether_exponent, noether_exponent_irreducible
from omega_ideals.engine.result import Bounds, OmegaResult, Rule, WitnessCertificate, exact
from omega_ideals.engine.witness import lemma_l_witness, lemma_upper_witness, top_degree_witness
from omega_ideals.logging_config import get_logger

logger = get_logger(__name__)

OmegaFunction = Callable[[MonomialIdeal], OmegaResult]


@dataclass(frozen=True)
class RuleContext:
    ideal: MonomialIdeal
    standard: Decomposition
    components: tuple[PrimaryComponent, ...]
    tops: dict[frozenset[int], IrreducibleComponent]

    @classmethod
    def of(cls, ideal: MonomialIdeal) -> "RuleContext":
        standard = standard_decomposition(ideal)
        groups: dict[frozenset[int], list[IrreducibleComponent]] = {}
        for t in standard:
            groups.setdefault(t.prime, []).append(t)
        canonical = canonical_primary_decomposition(ideal)
        return cls(
            ideal=ideal,
            standard=standard,
            components=tuple(canonical),
            tops={prime: best_irreducible(members) for prime, members in groups.items()},
        )

    @property
    def primes(self) -> tuple[frozenset[int], ...]:
        return tuple(c.prime for c in self.components)

    @property
    def shape(self) -> PosetShape:
        return poset_shape(self.primes)

    @property
    def dimension(self) -> int:
        return self.ideal.ring.n - min(len(p) for p in self.primes)

    def e(self, component: PrimaryComponent) -> int:
        return noether_exponent_irreducible(self.tops[component.prime])

    def others(self, component: PrimaryComponent) -> tuple[PrimaryComponent, ...]:
        return tuple(c for c in self.components if c is not component)


def two_variable_omega(ideal: MonomialIdeal) -> int:
    """a_1 + b_1 for one generator, max_i {a_i + b_{i+1}} - 1 otherwise."""
    steps = staircase(ideal)
    if len(steps) == 1:
        return sum(steps[0])
    return max(steps[i][0] + steps[i + 1][1] for i in range(len(steps) - 1)) - 1


class PrimaryRule:

    def resolve(self, context: RuleContext) -> OmegaResult:
        component = context.components[0]
        top = context.tops[component.prime]
        return exact(context.e(component), [Rule.PRIMARY], lemma_l_witness(context.ideal, top))


class AntichainRule:

    def resolve(self, context: RuleContext) -> OmegaResult:
        value = sum(context.e(c) for c in context.components)
        return exact(value, [Rule.ANTICHAIN], lemma_upper_witness(context.ideal, context.components))


class Dim1Rule:
    """dim R/J = 1: max{e(Q_k), sum of the others} when Q_k is m-primary, sum of all otherwise."""

    def resolve(self, context: RuleContext) -> OmegaResult:
        n = context.ideal.ring.n
        maximal = [c for c in context.components if len(c.prime) == n]
        if not maximal:
            value = sum(context.e(c) for c in context.components)
            return exact(value, [Rule.DIM1], lemma_upper_witness(context.ideal, context.components))
        top = maximal[0]
        rest = context.others(top)
        e_top = context.e(top)
        e_rest = sum(context.e(c) for c in rest)
        if e_top >= e_rest:
            certificate = lemma_l_witness(context.ideal, context.tops[top.prime],
                                          intersect_all([c.ideal for c in rest]))
        else:
            certificate = lemma_upper_witness(context.ideal, rest)
        return exact(max(e_top, e_rest), [Rule.DIM1], certificate)


class UniqueTopRule:
    """omega(J) = max{e(Q_k), omega(intersection of the other components)} for a top prime P_k."""

    def __init__(self, omega: OmegaFunction):
        self.omega = omega

    def resolve(self, context: RuleContext) -> OmegaResult:
        top_prime = unique_top(context.primes)
        top = next(c for c in context.components if c.prime == top_prime)
        rest = intersect_all([c.ideal for c in context.others(top)])
        e_top = context.e(top)
        sub = self.omega(rest)
        logger.debug(f"top {top} with e = {e_top}, remaining intersection {rest} gives {sub}")
        certificate = self.__certificate(context, top, rest, e_top, sub)
        method = (Rule.UNIQUE_TOP_RECURSION,) + sub.method
        if sub.is_exact:
            return exact(max(e_top, sub.exact), method, certificate)
        ideal = context.ideal
        lo = max(e_top, sub.lo, noether_exponent(ideal), ideal.max_degree)
        if ideal.max_degree > len(certificate):
            certificate = top_degree_witness(ideal)
        value = Bounds(lo, max(e_top, sub.hi), sub.value.reasons)
        return OmegaResult(value, method, certificate)

    @staticmethod
    def __certificate(context: RuleContext,
                      top: PrimaryComponent,
                      rest: MonomialIdeal,
                      e_top: int,
                      sub: OmegaResult) -> WitnessCertificate:
        # factors of the remaining certificate all lie in the top prime
        if sub.certificate is not None and len(sub.certificate) > e_top:
            return sub.certificate.retarget(context.ideal)
        return lemma_l_witness(context.ideal, context.tops[top.prime], rest)


class FallbackRule:
    """Bounds for posets without an exact rule.

    lo = max(e(J), max deg G(J)). hi sums over connected pieces of the comparability graph
    of the primes: a piece with a top prime is resolved recursively, any other piece adds
    its Noether exponents.
    """

    def __init__(self, omega: OmegaFunction):
        self.omega = omega

    def resolve(self, context: RuleContext) -> OmegaResult:
        comparability = nx.Graph()
        comparability.add_nodes_from(range(len(context.components)))
        for i, p in enumerate(context.components):
            for j in range(i + 1, len(context.components)):
                q = context.components[j]
                if p.prime <= q.prime or q.prime <= p.prime:
                    comparability.add_edge(i, j)

        hi = 0
        reasons = []
        for piece in sorted(nx.connected_components(comparability), key=min):
            members = [context.components[i] for i in sorted(piece)]
            if len(members) > 1 and unique_top([c.prime for c in members]) is not None:
                sub = self.omega(intersect_all([c.ideal for c in members]))
                hi += sub.hi
                reasons.append(f"{len(members)} components under one top prime contribute {sub.hi}")
            else:
                contribution = sum(context.e(c) for c in members)
                hi += contribution
                reasons.append(f"{len(members)} components contribute Noether exponents {contribution}")

        e = noether_exponent(context.ideal)
        lo = max(e, context.ideal.max_degree)
        reasons.insert(0, f"lower bound max(e = {e}, max deg = {context.ideal.max_degree})")
        logger.info(f"No exact rule for {context.ideal}, bounds [{lo}, {hi}]")
        return OmegaResult(Bounds(lo, hi, tuple(reasons)), (Rule.FALLBACK_BOUNDS,), top_degree_witness(context.ideal))
