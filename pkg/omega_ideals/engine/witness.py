"""Constructions of absorbing witnesses.

Each function returns factors f_1, ..., f_t with f_1...f_t in the target ideal and every
product with one factor left out outside of it, so the target is not (t-1)-absorbing.
"""
from itertools import combinations
from typing import Optional, Sequence

from omega_ideals.algebra.decomposition import IrreducibleComponent, PrimaryComponent, standard_decomposition
from omega_ideals.algebra.monomial import Monomial, MonomialIdeal, _check_ring
from omega_ideals.algebra.polynomial import SparsePolynomial
from omega_ideals.engine.noether import best_irreducible
from omega_ideals.engine.result import WitnessCertificate
from omega_ideals.errors import IncomparablePrimesError, NoQualifyingMonomialError, PreconditionError
from omega_ideals.logging_config import get_logger

logger = get_logger(__name__)


def _variables_of(f: Monomial) -> tuple[SparsePolynomial, ...]:
    return tuple(SparsePolynomial.variable(f.ring, i) for i, e in enumerate(f.exps) for _ in range(e))


def monomial_witness(ideal: MonomialIdeal, generator: Monomial) -> WitnessCertificate:
    """A minimal generator split into its variables."""
    if generator.is_unit:
        raise PreconditionError("The unit monomial has no variables to split")
    return WitnessCertificate(_variables_of(generator), ideal)


def top_degree_witness(ideal: MonomialIdeal) -> WitnessCertificate:
    """A generator of maximal degree split into its variables; certifies omega >= max deg G(I)."""
    if not ideal.is_proper:
        raise PreconditionError(f"{ideal} has no proper minimal generators")
    top = max(ideal.gens, key=lambda g: g.degree)
    return monomial_witness(ideal, top)


def qualifying_monomial(top: IrreducibleComponent, others: Optional[MonomialIdeal]) -> Monomial:
    """The least generator of `others` dividing prod x_{i_j}^{a_j - 1} over the variables of top."""
    ring = top.ring
    corner = ring.monomial(tuple(d - 1 if d else 0 for d in top.powers))
    if others is None or others.is_unit:
        return ring.unit()
    _check_ring(ring, others.ring)
    for g in others.gens:
        if g.divides(corner):
            return g
    raise NoQualifyingMonomialError(f"No generator of {others} lies below {top} (corner {corner})")


def lemma_l_witness(ideal: MonomialIdeal,
                    top: IrreducibleComponent,
                    others: Optional[MonomialIdeal] = None) -> WitnessCertificate:
    """x_{i_1}^{a_1-1} ... x_{i_l}^{a_l-1} (x_{i_1} + ... + x_{i_l}) as e(top) factors.

    `others` is the intersection of the remaining primary components; all their primes must
    lie inside the radical of `top`. None stands for no remaining components.
    """
    _check_ring(ideal.ring, top.ring)
    g = qualifying_monomial(top, others)
    logger.debug(f"top component {top} with g = {g}")
    ring = top.ring
    factors = [SparsePolynomial.variable(ring, i) for i, d in enumerate(top.powers) for _ in range(max(d - 1, 0))]
    factors.append(SparsePolynomial.linear_form(ring, sorted(top.prime)))
    return WitnessCertificate(tuple(factors), ideal)


def _upper_factors(component: IrreducibleComponent) -> list[SparsePolynomial]:
    ring = component.ring
    variables = sorted(component.prime)
    factors = [SparsePolynomial.linear_form(ring, variables)]
    for j in variables:
        terms = {ring.variable(j).exps: 1}
        for t in variables:
            if t != j:
                terms[(ring.variable(t) ** 2).exps] = 1
        f = SparsePolynomial.from_terms(ring, terms)
        factors.extend([f] * (component.powers[j] - 1))
    return factors


def lemma_upper_witness(ideal: MonomialIdeal, components: Sequence[PrimaryComponent]) -> WitnessCertificate:
    """Sum of e(Q_i) factors for components with pairwise incomparable primes.

    Per component: the linear form of its prime and f_{i,j} = x_{i_j} + sum_{t != j} x_{i_t}^2
    repeated a_j - 1 times, read off a standard component T_i with e(T_i) = e(Q_i).
    """
    for p, q in combinations(components, 2):
        if p.prime <= q.prime or q.prime <= p.prime:
            raise IncomparablePrimesError(f"Primes of {p} and {q} are comparable")
    factors: list[SparsePolynomial] = []
    for component in components:
        _check_ring(ideal.ring, component.ideal.ring)
        factors.extend(_upper_factors(best_irreducible(standard_decomposition(component.ideal))))
    return WitnessCertificate(tuple(factors), ideal)
