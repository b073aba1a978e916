from functools import lru_cache
from typing import Optional

from omega_ideals.algebra.decomposition import PosetShape
from omega_ideals.algebra.monomial import (
    MonomialIdeal,
    _check_ring,
    colon,
    factor_out_gcd,
    ideal_sum,
    intersect,
    is_primary,
    product,
    radical,
    support_variables,
)
from omega_ideals.engine.result import Exact, OmegaResult, Rule, exact, shift_by_monomial
from omega_ideals.engine.rules import (
    AntichainRule,
    Dim1Rule,
    FallbackRule,
    PrimaryRule,
    RuleContext,
    UniqueTopRule,
    two_variable_omega,
)
from omega_ideals.engine.witness import monomial_witness
from omega_ideals.errors import PreconditionError
from omega_ideals.logging_config import get_logger
from omega_ideals.models import PairReport, ValueView

logger = get_logger(__name__)


class OmegaCoordinator:
    """Routes an ideal to the rule that applies to the shape of its associated primes."""

    def __init__(self, force_generic: bool = False):
        self.force_generic = force_generic

    def handle(self, ideal: MonomialIdeal) -> OmegaResult:
        if ideal.is_unit:
            return exact(0, [Rule.PRINCIPAL])
        if ideal.is_zero:
            # the zero ideal is prime
            return exact(1, [Rule.PRIMARY])
        if ideal.ring.n == 2 and not self.force_generic:
            return self.__two_variables(ideal)

        h, gcd_free = factor_out_gcd(ideal)
        if gcd_free.is_unit:
            return exact(h.degree, [Rule.PRINCIPAL], monomial_witness(ideal, h))

        context = RuleContext.of(gcd_free)
        result = self.__route(context)
        logger.debug(f"omega({gcd_free}) = {result} via {', '.join(result.method)}")
        return shift_by_monomial(h, result, ideal)

    def __two_variables(self, ideal: MonomialIdeal) -> OmegaResult:
        value = two_variable_omega(ideal)
        generic = omega(ideal, force_generic=True)
        if generic.value != Exact(value):
            logger.error(f"Staircase formula gives {value} for {ideal}, decomposition path gives {generic}")
        return OmegaResult(Exact(value), (Rule.TWO_VARS,) + generic.method, generic.certificate)

    def __route(self, context: RuleContext) -> OmegaResult:
        shape = context.shape
        tags: tuple[Rule, ...] = ()
        if shape is PosetShape.SINGLETON:
            rule = PrimaryRule()
        elif context.dimension == 1:
            rule = Dim1Rule()
        elif shape is PosetShape.ANTICHAIN:
            rule = AntichainRule()
        elif shape is PosetShape.CHAIN:
            rule = UniqueTopRule(omega)
            tags = (Rule.CHAIN,)
        elif shape is PosetShape.HAS_UNIQUE_TOP:
            rule = UniqueTopRule(omega)
        elif shape is PosetShape.GENERAL:
            rule = FallbackRule(omega)
        else:
            raise ValueError(f"Unknown poset shape {shape}")
        return rule.resolve(context).with_rules(*tags)


@lru_cache(maxsize=8192)
def omega(ideal: MonomialIdeal, force_generic: bool = False) -> OmegaResult:
    """Absorbing degree of a monomial ideal, exact where a rule applies, bounds otherwise.

    force_generic skips the two-variable staircase formula and always takes the decomposition path.
    """
    return OmegaCoordinator(force_generic=force_generic).handle(ideal)


def omega_value(ideal: MonomialIdeal) -> int:
    return omega(ideal).exact


def _same_prime(i: MonomialIdeal, j: MonomialIdeal) -> Optional[list[int]]:
    if not (i.is_proper and j.is_proper and is_primary(i) and is_primary(j)):
        return None
    if radical(i) != radical(j):
        return None
    return sorted(support_variables(radical(i)))


def primary_pair_report(i: MonomialIdeal, j: MonomialIdeal) -> PairReport:
    """omega of I, J, I+J, I∩J, IJ and I:J; for P-primary I, J with one P also the inequality chain

    omega(I+J) <= min <= max = omega(I∩J) <= omega(IJ) <= omega(I) + omega(J), omega(I:J) >= omega(I) - omega(J).
    """
    _check_ring(i.ring, j.ring)
    if j.is_zero:
        raise PreconditionError("The pair report needs a nonzero second ideal for the colon")
    results = {
        "i": omega(i),
        "j": omega(j),
        "sum": omega(ideal_sum(i, j)),
        "intersection": omega(intersect(i, j)),
        "product": omega(product(i, j)),
        "colon": omega(colon(i, j)),
    }
    prime = _same_prime(i, j)
    checks: dict[str, bool] = {}
    if prime is not None and all(r.is_exact for r in results.values()):
        w = {key: r.exact for key, r in results.items()}
        checks = {
            "sum_le_min": w["sum"] <= min(w["i"], w["j"]),
            "max_eq_intersection": max(w["i"], w["j"]) == w["intersection"],
            "intersection_le_product": w["intersection"] <= w["product"],
            "product_le_sum": w["product"] <= w["i"] + w["j"],
            "colon_ge_difference": w["colon"] >= w["i"] - w["j"],
        }
    return PairReport(
        first=str(i),
        second=str(j),
        omega_first=ValueView.of(results["i"]),
        omega_second=ValueView.of(results["j"]),
        omega_sum=ValueView.of(results["sum"]),
        omega_intersection=ValueView.of(results["intersection"]),
        omega_product=ValueView.of(results["product"]),
        omega_colon=ValueView.of(results["colon"]),
        common_prime=prime,
        inequalities=checks,
    )
