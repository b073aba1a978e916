"""Slow, independent checkers for the closed-form rules.

Nothing here is on a default command path: each function searches or expands literally
and is meant to be compared against the engine on small inputs.
"""
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian
from typing import Iterator, Optional, Sequence

from omega_ideals.algebra.decomposition import IrreducibleComponent, canonical_primary_decomposition
from omega_ideals.algebra.monomial import (
    Exponents,
    Monomial,
    MonomialIdeal,
    Ring,
    _canonical_key,
    contains_monomial,
    intersect_all,
    minimalize,
    power,
    radical,
)
from omega_ideals.algebra.polynomial import SparsePolynomial, contains_poly, reduced_product
from omega_ideals.engine.dispatcher import omega
from omega_ideals.engine.noether import noether_exponent, noether_exponent_primary
from omega_ideals.engine.result import WitnessCertificate
from omega_ideals.errors import PreconditionError
from omega_ideals.logging_config import get_logger
from omega_ideals.models import SweepReport

logger = get_logger(__name__)


def brute_noether(ideal: MonomialIdeal) -> int:
    """Least mu with (sqrt I)^mu inside I, by literal search."""
    if not ideal.is_proper:
        raise PreconditionError(f"The Noether exponent search needs a proper nonzero ideal, got {ideal}")
    root = radical(ideal)
    mu = 1
    while not all(contains_monomial(ideal, g) for g in power(root, mu).gens):
        mu += 1
    return mu


def verify_certificate(certificate: WitnessCertificate) -> bool:
    """Product in the target, every product with one factor left out outside of it.

    Membership is contains_poly on the product reduced modulo the target as it is formed;
    the reduction only drops terms lying in the target, so it never changes the answer.
    Equal factors give equal deletions, so each distinct factor is checked once.
    """
    factors = certificate.factors
    target = certificate.target
    if not factors:
        return False

    def in_target(chosen: Sequence[SparsePolynomial]) -> bool:
        return contains_poly(target, reduced_product(chosen, target))

    if not in_target(factors):
        return False
    seen = set()
    for k, f in enumerate(factors):
        if f in seen:
            continue
        seen.add(f)
        rest = factors[:k] + factors[k + 1:]
        if in_target(rest):
            return False
    return True


@dataclass(frozen=True)
class AbsorbingSearch:
    """Best violation found; `exhausted` means every candidate within the caps was examined."""
    t: int
    certificate: Optional[WitnessCertificate]
    exhausted: bool


def _monomials_up_to(n: int, degree: int) -> Iterator[Exponents]:
    for exps in cartesian(range(degree + 1), repeat=n):
        if sum(exps) <= degree:
            yield exps


def _longest_split(target: MonomialIdeal, total: Exponents, deg_cap: int) -> tuple[Exponents, ...]:
    """Most parts q | P with deg q <= deg_cap and P/q outside I that sum exactly to P."""
    allowed = [
        q for q in _monomials_up_to(len(total), deg_cap)
        if any(q) and all(a <= b for a, b in zip(q, total))
        and not target.contains_exponents(tuple(b - a for a, b in zip(q, total)))
    ]
    allowed.sort(key=_canonical_key)

    @lru_cache(maxsize=None)
    def best(rest: Exponents) -> Optional[tuple[Exponents, ...]]:
        if not any(rest):
            return ()
        found: Optional[tuple[Exponents, ...]] = None
        for q in allowed:
            if all(a <= b for a, b in zip(q, rest)):
                tail = best(tuple(b - a for a, b in zip(q, rest)))
                if tail is not None and (found is None or len(tail) + 1 > len(found)):
                    found = (q,) + tail
        return found

    return best(total) or ()


def monomial_absorbing_lower_bound(ideal: MonomialIdeal, t_max: int, deg_cap: Optional[int] = None) -> AbsorbingSearch:
    """Largest t <= t_max with a t-factor violation made of monomials of degree <= deg_cap.

    Products range over monomials of I up to degree max deg G(I) + deg_cap. The answer is a
    lower bound for omega(I) and never claimed equal to it.
    """
    if t_max < 1:
        raise PreconditionError(f"t_max must be positive, got {t_max}")
    if not ideal.is_proper:
        raise PreconditionError(f"The absorbing search needs a proper nonzero ideal, got {ideal}")
    deg_cap = deg_cap if deg_cap is not None else ideal.max_degree + 1
    ring = ideal.ring
    best: tuple[Exponents, ...] = ()
    candidates = sorted(
        (e for e in _monomials_up_to(ring.n, ideal.max_degree + deg_cap) if ideal.contains_exponents(e)),
        key=_canonical_key,
    )
    for total in candidates:
        split = _longest_split(ideal, total, deg_cap)
        if len(split) > len(best):
            best = split
        if len(best) >= t_max:
            # merging parts keeps a violation a violation
            merged = tuple(map(sum, zip(*best[t_max - 1:])))
            best = best[:t_max - 1] + (merged,)
            return AbsorbingSearch(t_max, _monomial_certificate(ring, ideal, best), False)
    return AbsorbingSearch(len(best), _monomial_certificate(ring, ideal, best), True)


def _monomial_certificate(ring: Ring, ideal: MonomialIdeal, parts: Sequence[Exponents]) -> Optional[WitnessCertificate]:
    if not parts:
        return None
    return WitnessCertificate(tuple(SparsePolynomial.from_monomial(ring.monomial(q)) for q in parts), ideal)


def _factor_pool(ring: Ring, deg_cap: int) -> list[SparsePolynomial]:
    monomials = sorted((e for e in _monomials_up_to(ring.n, deg_cap) if any(e)), key=_canonical_key)
    pool = [SparsePolynomial.from_terms(ring, {e: 1}) for e in monomials]
    for i, u in enumerate(monomials):
        for v in monomials[i + 1:]:
            if all(not (a and b) for a, b in zip(u, v)):
                pool.append(SparsePolynomial.from_terms(ring, {u: 1, v: 1}))
    return pool


def binomial_absorbing_search(ideal: MonomialIdeal, t: int, deg_cap: int = 2) -> Optional[WitnessCertificate]:
    """A verified t-factor violation drawn from monomials and coprime binomials, or None.

    Partial products already in I are pruned: a longer product containing them would stay in
    I after deleting a later factor. A None answer proves nothing.
    """
    if t < 1:
        raise PreconditionError(f"t must be positive, got {t}")
    if not ideal.is_proper:
        return None
    if t == 1:
        return WitnessCertificate((SparsePolynomial.from_monomial(ideal.gens[0]),), ideal)
    pool = _factor_pool(ideal.ring, deg_cap)

    def extend(chosen: list[SparsePolynomial], start: int) -> Optional[WitnessCertificate]:
        if len(chosen) == t:
            candidate = WitnessCertificate(tuple(chosen), ideal)
            return candidate if verify_certificate(candidate) else None
        for k in range(start, len(pool)):
            chosen.append(pool[k])
            if len(chosen) == t or not reduced_product(chosen, ideal).is_zero:
                found = extend(chosen, k)
                if found is not None:
                    return found
            chosen.pop()
        return None

    return extend([], 0)


def brute_power_decomposition_check(component: IrreducibleComponent, m: int) -> bool:
    """T^m equals the intersection of (x_{i_1}^{k_1 a_1}, ...) over k with sum k_j = m + r - 1, k_j >= 1."""
    if m < 1:
        raise PreconditionError(f"m must be positive, got {m}")
    ring = component.ring
    variables = sorted(component.prime)
    r = len(variables)
    pieces = []
    for ks in cartesian(range(1, m + 1), repeat=r):
        if sum(ks) != m + r - 1:
            continue
        powers = [0] * ring.n
        for i, k in zip(variables, ks):
            powers[i] = k * component.powers[i]
        pieces.append(IrreducibleComponent(ring, tuple(powers)).ideal)
    return intersect_all(pieces) == power(component.ideal, m)


def brute_closure_membership(ideal: MonomialIdeal, u: Monomial, k_max: int = 4) -> bool:
    """u lies in the integral closure iff u^k lies in I^k for some k; searched up to k_max."""
    return any(contains_monomial(power(ideal, k), u ** k) for k in range(1, k_max + 1))


def random_corpus(variables: int,
                  max_exponent: int,
                  max_generators: int,
                  count: int,
                  seed: int = 0) -> list[MonomialIdeal]:
    """Distinct proper nonzero ideals from a seeded generator."""
    rng = random.Random(seed)
    ring = Ring.default(variables)
    seen: dict[tuple[Exponents, ...], MonomialIdeal] = {}
    attempts = 0
    while len(seen) < count and attempts < 50 * count:
        attempts += 1
        gens = []
        for _ in range(rng.randint(1, max_generators)):
            exps = tuple(rng.randint(0, max_exponent) for _ in range(variables))
            if any(exps):
                gens.append(ring.monomial(exps))
        if not gens:
            continue
        ideal = minimalize(gens, ring)
        seen.setdefault(ideal.exponents, ideal)
    logger.info(f"corpus of {len(seen)} ideals after {attempts} draws")
    return list(seen.values())


def sweep(corpus: Sequence[MonomialIdeal]) -> SweepReport:
    """noether_exponent against brute_noether, the sandwich bound, and certificate soundness."""
    report = SweepReport(checked=0, exact=0, bounds=0)
    for ideal in corpus:
        report.checked += 1
        e = noether_exponent(ideal)
        if e != brute_noether(ideal):
            report.noether_mismatches.append(str(ideal))
        result = omega(ideal)
        upper = sum(noether_exponent_primary(q) for q in canonical_primary_decomposition(ideal))
        if result.is_exact:
            report.exact += 1
        else:
            report.bounds += 1
        if result.lo < max(e, ideal.max_degree) or result.hi > upper:
            report.sandwich_violations.append(str(ideal))
        if result.certificate is not None and not verify_certificate(result.certificate):
            report.certificate_failures.append(str(ideal))
    return report
